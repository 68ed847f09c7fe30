#ifndef TORIC_POSET_HPP
#define TORIC_POSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/root_system.hpp"
#include "toric/weyl.hpp"

namespace toric {

// Small dynamic bitset keyed by orbit index.
class OrbitBits {
public:
    OrbitBits() = default;
    explicit OrbitBits(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    void set(int i) { w_[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const;
    bool subset_of(const OrbitBits& o) const;       // this as a set is contained in o
    bool proper_subset_of(const OrbitBits& o) const;

    bool operator==(const OrbitBits& o) const = default;
    int size() const { return n_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// One layer of the arrangement: the span (saturated span, for the hyperplane
// variant) of a union of g-orbits of roots. orbit_set records every orbit the
// module absorbs, which realizes reverse inclusion of modules as bitset
// containment.
struct PosetNode {
    LatticeModule module;
    OrbitBits orbit_set;
    int rank = 0;
    i64 mobius = 0;
};

struct FixedPoset {
    int ambient = 0;
    bool saturated = false; // hyperplane variant?
    std::vector<std::vector<int>> orbits; // root indices, as in orbits_on_roots
    std::vector<PosetNode> nodes;         // sorted by (orbit count, module key); nodes[0] is the bottom
    bool mobius_ready = false;

    int node_count() const { return static_cast<int>(nodes.size()); }
};

struct PosetBudget {
    i64 max_nodes = 1000000;
};

// Poset of g-stable layers, generated by a worklist that adds one orbit at a
// time; every module fixed by g arises this way because its root set is a
// union of orbits that spans it.
FixedPoset fixed_poset(const RootSystem& rs, const IntMatrix& g, const PosetBudget& budget = {},
                       int threads = 1);

// Same closure but saturating at every step: the poset of the linearized
// (hyperplane) arrangement.
FixedPoset hyperplane_poset(const RootSystem& rs, const IntMatrix& g, const PosetBudget& budget = {},
                            int threads = 1);

// Mobius function against the bottom node (the zero module): mu(bottom) = 1
// and mu(Y) = -sum of mu over every node strictly below Y.
void compute_mobius(FixedPoset& poset, int threads = 1);

// True when the toric poset already consists of saturated modules only, i.e.
// collapsing to the hyperplane picture loses nothing.
bool tau_is_isomorphism(const RootSystem& rs, const IntMatrix& g, const PosetBudget& budget = {},
                        int threads = 1);

} // namespace toric

#endif
