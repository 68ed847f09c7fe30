#include "toric/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

namespace toric {

std::string WeylGroup::pack(const IntMatrix& g) {
    std::string s(static_cast<size_t>(g.rows()) * g.cols(), '\0');
    size_t k = 0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            i64 v = g.at(i, j);
            if (v < -128 || v > 127)
                throw OverflowError("group element entry out of packed range");
            s[k++] = static_cast<char>(static_cast<signed char>(v));
        }
    return s;
}

IntMatrix WeylGroup::unpack(const std::string& s, int rank) {
    IntMatrix g(rank, rank);
    size_t k = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) g.at(i, j) = static_cast<signed char>(s[k++]);
    return g;
}

IntMatrix WeylGroup::element(i64 idx) const { return unpack(elems[idx], rank); }

i64 WeylGroup::index_of(const IntMatrix& g) const {
    std::string key = pack(g);
    auto it = std::lower_bound(elems.begin(), elems.end(), key);
    if (it == elems.end() || *it != key) return -1;
    return it - elems.begin();
}

WeylGroup enumerate_group(const RootSystem& rs, const GroupBudget& budget) {
    if (!rs.has_weyl()) throw SchemaError("custom arrangements have no Weyl group");

    // The classified order is known up front; refuse early rather than after
    // swallowing the memory.
    i64 order = classified_group_order(rs.type, rs.rank);
    i64 per_elem = static_cast<i64>(rs.rank) * rs.rank + 64; // payload + container overhead
    if (chk::mul(order, per_elem) > budget.max_bytes)
        throw BudgetError("group " + rs.name() + " (order " + std::to_string(order) +
                          ") exceeds the memory budget; raise it to enumerate at this scale");

    std::vector<IntMatrix> gens = simple_reflections(rs);
    std::unordered_set<std::string> seen;
    std::deque<std::string> frontier;
    std::string id = WeylGroup::pack(IntMatrix::identity(rs.rank));
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        IntMatrix g = WeylGroup::unpack(frontier.front(), rs.rank);
        frontier.pop_front();
        for (const auto& s : gens) {
            std::string key = WeylGroup::pack(g.mul(s));
            if (seen.insert(key).second) frontier.push_back(std::move(key));
        }
    }

    WeylGroup w;
    w.rank = rs.rank;
    w.elems.assign(seen.begin(), seen.end());
    std::sort(w.elems.begin(), w.elems.end());
    if (w.size() != order)
        throw IntegrityError("enumerated " + std::to_string(w.size()) + " elements for " +
                             rs.name() + ", classification says " + std::to_string(order));
    return w;
}

i64 element_order(const IntMatrix& g) {
    IntMatrix p = g;
    for (i64 o = 1; o <= 1000; ++o) {
        if (p.is_identity()) return o;
        p = p.mul(g);
    }
    throw IntegrityError("element order exceeds 1000; not a finite reflection group element?");
}

std::vector<int> line_cycle_type(const IntMatrix& g, const RootSystem& rs) {
    const int p = rs.positive_count();
    std::vector<int> image(p);
    for (int i = 0; i < p; ++i) {
        int idx = rs.root_index(g.apply(rs.positive_roots[i]));
        if (idx < 0) throw NotStableError("operator does not permute the roots");
        image[i] = idx % p;
    }
    std::vector<int> lens;
    std::vector<bool> visited(p, false);
    for (int i = 0; i < p; ++i) {
        if (visited[i]) continue;
        int len = 0, j = i;
        while (!visited[j]) {
            visited[j] = true;
            j = image[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

int fixed_line_count(const IntMatrix& g, const RootSystem& rs) {
    const int p = rs.positive_count();
    int count = 0;
    for (int i = 0; i < p; ++i) {
        int idx = rs.root_index(g.apply(rs.positive_roots[i]));
        if (idx < 0) throw NotStableError("operator does not permute the roots");
        if (idx % p == i) ++count;
    }
    return count;
}

namespace {

std::string base_label(const std::vector<i64>& ext, const std::vector<int>& cycles) {
    std::ostringstream os;
    os << "e=[";
    for (size_t i = 1; i < ext.size(); ++i) os << (i > 1 ? "," : "") << ext[i];
    os << "];lines=[";
    int i = 0, n = static_cast<int>(cycles.size());
    bool first = true;
    while (i < n) {
        int j = i;
        while (j < n && cycles[j] == cycles[i]) ++j;
        os << (first ? "" : ",") << cycles[i] << "^" << (j - i);
        first = false;
        i = j;
    }
    os << "]";
    return os.str();
}

std::vector<i64> char_poly_of(const IntMatrix& g) {
    const int n = g.rows();
    std::vector<i64> p(n);
    IntMatrix pw = g;
    for (int k = 1; k <= n; ++k) {
        p[k - 1] = pw.trace();
        if (k < n) pw = pw.mul(g);
    }
    return exterior_traces(p, n);
}

struct Dsu {
    std::vector<std::int32_t> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::string class_label_of(const IntMatrix& g, const RootSystem& rs) {
    return base_label(char_poly_of(g), line_cycle_type(g, rs));
}

ConjugacyClasses conjugacy_classes(const WeylGroup& w, const RootSystem& rs) {
    const i64 n = w.size();
    std::vector<IntMatrix> gens = simple_reflections(rs);

    // Conjugating by the generators is enough to connect each full class.
    Dsu dsu(n);
    for (i64 idx = 0; idx < n; ++idx) {
        IntMatrix g = w.element(idx);
        for (const auto& s : gens) {
            i64 j = w.index_of(s.mul(g).mul(s));
            if (j < 0) throw IntegrityError("conjugate escaped the enumerated group");
            dsu.unite(static_cast<std::int32_t>(idx), static_cast<std::int32_t>(j));
        }
    }

    std::map<std::int32_t, std::vector<i64>> groups;
    for (i64 idx = 0; idx < n; ++idx)
        groups[dsu.find(static_cast<std::int32_t>(idx))].push_back(idx);

    struct Raw {
        i64 min_idx;
        i64 size;
        std::string base;
        std::vector<i64> cp;
        std::vector<int> cycles;
    };
    std::vector<Raw> raw;
    raw.reserve(groups.size());
    for (auto& [root, members] : groups) {
        Raw r;
        r.min_idx = members.front(); // members ascend; elems are sorted by key
        r.size = static_cast<i64>(members.size());
        IntMatrix rep = w.element(r.min_idx);
        r.cp = char_poly_of(rep);
        r.cycles = line_cycle_type(rep, rs);
        r.base = base_label(r.cp, r.cycles);
        raw.push_back(std::move(r));
    }

    std::sort(raw.begin(), raw.end(), [&](const Raw& a, const Raw& b) {
        bool ida = w.element(a.min_idx).is_identity();
        bool idb = w.element(b.min_idx).is_identity();
        if (ida != idb) return ida;
        if (a.size != b.size) return a.size < b.size;
        if (a.base != b.base) return a.base < b.base;
        return a.min_idx < b.min_idx;
    });

    // Identical invariants get a deterministic ordinal so labels stay unique.
    std::map<std::string, int> seen_base;
    ConjugacyClasses out;
    for (auto& r : raw) {
        int times = seen_base[r.base]++;
        std::string label = r.base;
        if (times > 0) label += ";v" + std::to_string(times + 1);
        out.representatives.push_back(w.element(r.min_idx));
        out.sizes.push_back(r.size);
        out.labels.push_back(std::move(label));
        out.char_poly.push_back(std::move(r.cp));
        out.line_cycles.push_back(std::move(r.cycles));
    }
    // Second pass: give the first member of a colliding family its ordinal.
    for (auto& [base, count] : seen_base) {
        if (count < 2) continue;
        for (auto& l : out.labels)
            if (l == base) l += ";v1";
    }

    out.class_index.assign(n, -1);
    std::map<std::string, std::int32_t> key_to_class;
    for (int c = 0; c < out.count(); ++c)
        key_to_class[WeylGroup::pack(out.representatives[c])] = c;
    for (i64 idx = 0; idx < n; ++idx) {
        i64 root_idx = dsu.find(static_cast<std::int32_t>(idx));
        auto it = key_to_class.find(w.elems[root_idx]);
        if (it == key_to_class.end())
            throw IntegrityError("class representative lookup failed");
        out.class_index[idx] = it->second;
    }

    i64 total = 0;
    for (i64 s : out.sizes) total += s;
    if (total != n) throw IntegrityError("class sizes do not sum to the group order");
    return out;
}

int ConjugacyClasses::class_of(const WeylGroup& w, const IntMatrix& g) const {
    i64 idx = w.index_of(g);
    if (idx < 0) throw NotStableError("element does not belong to the enumerated group");
    return class_index[idx];
}

std::vector<std::vector<int>> orbits_on_roots(const IntMatrix& g, const RootSystem& rs) {
    const int total = 2 * rs.positive_count();
    std::vector<std::pair<IntVec, int>> order;
    order.reserve(total);
    for (int i = 0; i < total; ++i) order.emplace_back(rs.root(i), i);
    std::sort(order.begin(), order.end());

    std::vector<bool> visited(total, false);
    std::vector<std::vector<int>> orbits;
    for (const auto& [vec, start] : order) {
        if (visited[start]) continue;
        std::vector<int> orbit;
        int cur = start;
        IntVec v = vec;
        while (!visited[cur]) {
            visited[cur] = true;
            orbit.push_back(cur);
            v = g.apply(v);
            cur = rs.root_index(v);
            if (cur < 0) throw NotStableError("operator does not permute the roots");
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

} // namespace toric
