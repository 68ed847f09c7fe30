#include "toric/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <utility>

#include "toric/errors.hpp"
#include "toric/parallel.hpp"

namespace toric {

int OrbitBits::count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool OrbitBits::subset_of(const OrbitBits& o) const {
    if (n_ != o.n_) throw DimensionError("comparing orbit sets over different orbit counts");
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool OrbitBits::proper_subset_of(const OrbitBits& o) const {
    return subset_of(o) && !(*this == o);
}

namespace {

// Which orbits lie inside m. Checking one representative per orbit is enough:
// every module seen here is g-stable, so it contains either the whole orbit
// or none of it.
OrbitBits membership_bits(const LatticeModule& m, const RootSystem& rs,
                          const std::vector<std::vector<int>>& orbits) {
    OrbitBits bits(static_cast<int>(orbits.size()));
    for (int o = 0; o < static_cast<int>(orbits.size()); ++o)
        if (module_contains(m, rs.root(orbits[o][0]))) bits.set(o);
    return bits;
}

FixedPoset build_poset(const RootSystem& rs, const IntMatrix& g, const PosetBudget& budget,
                       int threads, bool saturated) {
    FixedPoset ps;
    ps.ambient = rs.rank;
    ps.saturated = saturated;
    ps.orbits = orbits_on_roots(g, rs);
    const int no = static_cast<int>(ps.orbits.size());

    std::vector<std::vector<IntVec>> orbit_rows(no);
    for (int o = 0; o < no; ++o)
        for (int idx : ps.orbits[o]) orbit_rows[o].push_back(rs.root(idx));

    PosetNode bottom;
    bottom.module = canonicalize(std::vector<IntVec>{}, ps.ambient);
    bottom.orbit_set = OrbitBits(no);
    bottom.rank = 0;

    std::map<std::string, int> index_of;
    index_of.emplace(bottom.module.key(), 0);
    ps.nodes.push_back(std::move(bottom));

    // Closure: grow each known module by one full orbit at a time. Every
    // g-stable span of roots is a span of a union of orbits, so this reaches
    // all of them. Layers keep the construction deterministic under threads.
    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::vector<std::pair<int, int>> tasks; // (node index, orbit to add)
        for (int ni : frontier)
            for (int o = 0; o < no; ++o)
                if (!ps.nodes[ni].orbit_set.test(o)) tasks.emplace_back(ni, o);

        std::vector<PosetNode> grown(tasks.size());
        parallel_for(static_cast<i64>(tasks.size()), threads, [&](i64 ti) {
            const auto& [ni, o] = tasks[ti];
            const PosetNode& base = ps.nodes[ni];
            std::vector<IntVec> rows;
            rows.reserve(base.module.rank() + orbit_rows[o].size());
            for (int r = 0; r < base.module.basis.rows(); ++r)
                rows.push_back(base.module.basis.row(r));
            for (const IntVec& v : orbit_rows[o]) rows.push_back(v);

            PosetNode nd;
            nd.module = canonicalize(rows, ps.ambient);
            if (saturated) nd.module = saturate(nd.module);
            nd.rank = nd.module.rank();
            nd.orbit_set = membership_bits(nd.module, rs, ps.orbits);
            if (!nd.orbit_set.test(o) || !base.orbit_set.subset_of(nd.orbit_set))
                throw IntegrityError("orbit membership shrank while growing a poset node");
            grown[ti] = std::move(nd);
        });

        frontier.clear();
        for (auto& nd : grown) {
            auto [it, inserted] = index_of.emplace(nd.module.key(), static_cast<int>(ps.nodes.size()));
            if (!inserted) continue;
            frontier.push_back(it->second);
            ps.nodes.push_back(std::move(nd));
            if (static_cast<i64>(ps.nodes.size()) > budget.max_nodes)
                throw BudgetError("poset for " + rs.name() + " exceeds " +
                                  std::to_string(budget.max_nodes) + " nodes");
        }
    }

    std::sort(ps.nodes.begin(), ps.nodes.end(), [](const PosetNode& a, const PosetNode& b) {
        int ca = a.orbit_set.count(), cb = b.orbit_set.count();
        if (ca != cb) return ca < cb;
        return a.module.basis < b.module.basis;
    });
    return ps;
}

} // namespace

FixedPoset fixed_poset(const RootSystem& rs, const IntMatrix& g, const PosetBudget& budget,
                       int threads) {
    return build_poset(rs, g, budget, threads, false);
}

FixedPoset hyperplane_poset(const RootSystem& rs, const IntMatrix& g, const PosetBudget& budget,
                            int threads) {
    return build_poset(rs, g, budget, threads, true);
}

void compute_mobius(FixedPoset& poset, int threads) {
    const int n = poset.node_count();
    // Nodes are sorted by orbit count; nodes with equal counts are never
    // strictly comparable, so each level only depends on the ones before it.
    int level_start = 0;
    while (level_start < n) {
        int level_end = level_start;
        int c = poset.nodes[level_start].orbit_set.count();
        while (level_end < n && poset.nodes[level_end].orbit_set.count() == c) ++level_end;

        parallel_for(static_cast<i64>(level_end - level_start), threads, [&](i64 k) {
            PosetNode& y = poset.nodes[level_start + static_cast<int>(k)];
            if (y.orbit_set.count() == 0) {
                y.mobius = 1;
                return;
            }
            i64 below = 0;
            for (int z = 0; z < level_start; ++z)
                if (poset.nodes[z].orbit_set.subset_of(y.orbit_set))
                    below = chk::add(below, poset.nodes[z].mobius);
            y.mobius = chk::neg(below);
        });
        level_start = level_end;
    }
    poset.mobius_ready = true;
}

bool tau_is_isomorphism(const RootSystem& rs, const IntMatrix& g, const PosetBudget& budget,
                        int threads) {
    FixedPoset ps = fixed_poset(rs, g, budget, threads);
    for (const auto& node : ps.nodes)
        if (saturate(node.module) != node.module) return false;
    return true;
}

} // namespace toric
