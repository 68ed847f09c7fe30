#include "toric/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

namespace toric {

std::string type_to_string(Type t, int rank) {
    switch (t) {
    case Type::A: return "A" + std::to_string(rank);
    case Type::B: return "B" + std::to_string(rank);
    case Type::C: return "C" + std::to_string(rank);
    case Type::D: return "D" + std::to_string(rank);
    case Type::E: return "E" + std::to_string(rank);
    case Type::F: return "F" + std::to_string(rank);
    case Type::G: return "G" + std::to_string(rank);
    case Type::Custom: return "custom" + std::to_string(rank);
    }
    return "?";
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw SchemaError(msg);
}

// Integer gram matrices of the simple roots, scaled where needed (F4 by 2)
// so that every entry is an integer. Only length ratios matter downstream.
IntMatrix gram_for(Type t, int n) {
    IntMatrix g(n, n);
    auto chain = [&](int upto) {
        for (int i = 0; i < n; ++i) g.at(i, i) = 2;
        for (int i = 0; i + 1 <= upto; ++i) {
            g.at(i, i + 1) = -1;
            g.at(i + 1, i) = -1;
        }
    };
    switch (t) {
    case Type::A:
        chain(n - 1);
        break;
    case Type::B: // last simple root short
        chain(n - 1);
        g.at(n - 1, n - 1) = 1;
        break;
    case Type::C: // last simple root long
        chain(n - 1);
        g.at(n - 1, n - 1) = 4;
        g.at(n - 2, n - 1) = -2;
        g.at(n - 1, n - 2) = -2;
        break;
    case Type::D:
        chain(n - 2);
        g.at(n - 1, n - 1) = 2;
        g.at(n - 3, n - 1) = -1;
        g.at(n - 1, n - 3) = -1;
        break;
    case Type::E: {
        // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
        for (int i = 0; i < n; ++i) g.at(i, i) = 2;
        std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        if (n >= 7) edges.push_back({5, 6});
        if (n == 8) edges.push_back({6, 7});
        for (auto [a, b] : edges) {
            g.at(a, b) = -1;
            g.at(b, a) = -1;
        }
        break;
    }
    case Type::F: // roots 1,2 long, 3,4 short; standard gram scaled by 2
        g = IntMatrix::from_rows({{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}, 4);
        break;
    case Type::G: // first simple root short
        g = IntMatrix::from_rows({{2, -3}, {-3, 6}}, 2);
        break;
    case Type::Custom:
        throw SchemaError("custom systems have no gram matrix");
    }
    return g;
}

bool positive_sign(const IntVec& v) {
    for (i64 x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    throw SchemaError("zero vector in arrangement");
}

} // namespace

int classified_positive_count(Type t, int rank) {
    switch (t) {
    case Type::A: return rank * (rank + 1) / 2;
    case Type::B:
    case Type::C: return rank * rank;
    case Type::D: return rank * (rank - 1);
    case Type::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case Type::F: return 24;
    case Type::G: return 6;
    case Type::Custom: break;
    }
    throw SchemaError("no classified positive-root count for custom systems");
}

i64 classified_group_order(Type t, int rank) {
    auto fact = [](int n) {
        i64 r = 1;
        for (int i = 2; i <= n; ++i) r = chk::mul(r, i);
        return r;
    };
    switch (t) {
    case Type::A: return fact(rank + 1);
    case Type::B:
    case Type::C: return chk::mul(i64(1) << rank, fact(rank));
    case Type::D: return chk::mul(i64(1) << (rank - 1), fact(rank));
    case Type::E: return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
    case Type::F: return 1152;
    case Type::G: return 12;
    case Type::Custom: break;
    }
    throw SchemaError("no Weyl group for custom systems");
}

RootSystem build_root_system(Type t, int rank) {
    switch (t) {
    case Type::A: require(rank >= 1 && rank <= 8, "type A needs 1 <= rank <= 8"); break;
    case Type::B: require(rank >= 2 && rank <= 8, "type B needs 2 <= rank <= 8"); break;
    case Type::C: require(rank >= 3 && rank <= 8, "type C needs 3 <= rank <= 8"); break;
    case Type::D: require(rank >= 4 && rank <= 8, "type D needs 4 <= rank <= 8"); break;
    case Type::E: require(rank >= 6 && rank <= 8, "type E needs rank 6, 7 or 8"); break;
    case Type::F: require(rank == 4, "type F needs rank 4"); break;
    case Type::G: require(rank == 2, "type G needs rank 2"); break;
    case Type::Custom: throw SchemaError("use custom_system() for custom arrangements");
    }

    RootSystem rs;
    rs.type = t;
    rs.rank = rank;
    rs.gram = gram_for(t, rank);
    rs.cartan = IntMatrix(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            rs.cartan.at(i, j) =
                chk::exact_div(chk::mul(2, rs.gram.at(i, j)), rs.gram.at(j, j), "cartan entry");

    // Close the simple roots under the simple reflections.
    std::vector<IntMatrix> refl = simple_reflections(rs);
    std::set<IntVec> seen;
    std::deque<IntVec> todo;
    for (int i = 0; i < rank; ++i) {
        IntVec e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        IntVec v = todo.front();
        todo.pop_front();
        for (const auto& r : refl) {
            IntVec w = r.apply(v);
            if (seen.insert(w).second) todo.push_back(w);
        }
        if (seen.size() > 1000)
            throw IntegrityError("root closure diverged");
    }
    for (const auto& v : seen)
        if (positive_sign(v)) rs.positive_roots.push_back(v);
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end());

    if (rs.positive_count() != classified_positive_count(t, rank))
        throw IntegrityError("positive root count disagrees with the classification for " + rs.name());
    return rs;
}

RootSystem custom_system(int rank, const std::vector<IntVec>& vectors) {
    require(rank >= 1 && rank <= 8, "custom arrangements need 1 <= rank <= 8");
    RootSystem rs;
    rs.type = Type::Custom;
    rs.rank = rank;
    std::set<IntVec> reps;
    for (IntVec v : vectors) {
        require(static_cast<int>(v.size()) == rank, "arrangement vector length differs from rank");
        if (!positive_sign(v))
            for (auto& x : v) x = chk::neg(x);
        reps.insert(v);
    }
    rs.positive_roots.assign(reps.begin(), reps.end());
    return rs;
}

IntVec RootSystem::root(int index) const {
    const int p = positive_count();
    if (index < p) return positive_roots[index];
    IntVec v = positive_roots[index - p];
    for (auto& x : v) x = chk::neg(x);
    return v;
}

int RootSystem::root_index(const IntVec& v) const {
    auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), v);
    if (it != positive_roots.end() && *it == v)
        return static_cast<int>(it - positive_roots.begin());
    IntVec neg(v.size());
    for (size_t i = 0; i < v.size(); ++i) neg[i] = chk::neg(v[i]);
    it = std::lower_bound(positive_roots.begin(), positive_roots.end(), neg);
    if (it != positive_roots.end() && *it == neg)
        return static_cast<int>(it - positive_roots.begin()) + positive_count();
    return -1;
}

std::vector<IntMatrix> simple_reflections(const RootSystem& rs) {
    if (!rs.has_weyl()) throw SchemaError("custom arrangements have no reflections");
    std::vector<IntMatrix> out;
    out.reserve(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        IntMatrix r = IntMatrix::identity(rs.rank);
        // r_i(e_j) = e_j - <e_j, e_i-check> e_i
        for (int j = 0; j < rs.rank; ++j)
            r.at(i, j) = chk::sub(r.at(i, j), rs.cartan.at(j, i));
        out.push_back(std::move(r));
    }
    return out;
}

i64 root_dot(const RootSystem& rs, const IntVec& a, const IntVec& b) {
    if (!rs.has_weyl()) throw SchemaError("custom arrangements have no inner product");
    chk::Wide acc;
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            acc.add_product(chk::mul(a[i], rs.gram.at(i, j)), b[j]);
    return acc.value("root_dot");
}

IntMatrix reflection_matrix(const RootSystem& rs, const IntVec& alpha) {
    i64 len = root_dot(rs, alpha, alpha);
    IntMatrix r = IntMatrix::identity(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        IntVec ej(rs.rank, 0);
        ej[j] = 1;
        i64 c = chk::exact_div(chk::mul(2, root_dot(rs, alpha, ej)), len, "reflection pairing");
        for (int k = 0; k < rs.rank; ++k)
            r.at(k, j) = chk::sub(r.at(k, j), chk::mul(c, alpha[k]));
    }
    return r;
}

bool reflection_torus_coincides(const RootSystem& rs, const IntVec& alpha) {
    i64 len = root_dot(rs, alpha, alpha);
    i64 g = 0;
    for (int j = 0; j < rs.rank; ++j) {
        IntVec ej(rs.rank, 0);
        ej[j] = 1;
        i64 c = chk::exact_div(chk::mul(2, root_dot(rs, alpha, ej)), len, "reflection pairing");
        g = gcd_nonneg(g, c);
    }
    return g == 1;
}

bool all_lines_primitive(const RootSystem& rs) {
    for (const IntVec& v : rs.positive_roots) {
        i64 g = 0;
        for (i64 x : v) g = gcd_nonneg(g, x);
        if (g != 1) return false;
    }
    return true;
}

} // namespace toric
