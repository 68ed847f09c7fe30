#ifndef TORIC_WEYL_HPP
#define TORIC_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toric/int_matrix.hpp"
#include "toric/root_system.hpp"

namespace toric {

// Default cap sized so that the rank <= 6 groups enumerate freely while the
// E7/E8 scale (millions of elements) requires an explicit opt-in.
struct GroupBudget {
    i64 max_bytes = i64(1) << 28;
};

// The full Weyl group as packed matrices (one signed byte per entry; matrix
// entries of any rank <= 8 Weyl element are far smaller). Elements are kept
// sorted by packed key, so indices are stable and lookup is a binary search.
class WeylGroup {
public:
    int rank = 0;
    std::vector<std::string> elems;

    i64 size() const { return static_cast<i64>(elems.size()); }
    IntMatrix element(i64 idx) const;
    i64 index_of(const IntMatrix& g) const; // -1 if not in the group

    static std::string pack(const IntMatrix& g);
    static IntMatrix unpack(const std::string& s, int rank);
};

WeylGroup enumerate_group(const RootSystem& rs, const GroupBudget& budget = {});

// Conjugacy classes with deterministic order and human-readable invariant
// labels (characteristic polynomial as exterior traces + cycle type on the
// positive-root lines, plus an ordinal when those collide). The identity
// class always comes first.
struct ConjugacyClasses {
    std::vector<IntMatrix> representatives;
    std::vector<i64> sizes;
    std::vector<std::string> labels;
    std::vector<std::vector<i64>> char_poly;    // exterior traces e_0..e_n of a representative
    std::vector<std::vector<int>> line_cycles;  // ascending cycle lengths on lines
    std::vector<std::int32_t> class_index;      // parallel to WeylGroup::elems

    int count() const { return static_cast<int>(representatives.size()); }
    int class_of(const WeylGroup& w, const IntMatrix& g) const;
};

ConjugacyClasses conjugacy_classes(const WeylGroup& w, const RootSystem& rs);

// Orbits of the cyclic group <g> on all 2P roots, as index lists into
// RootSystem::root(). Each orbit starts at its lexicographically smallest
// vector; orbits are ordered by those representatives.
std::vector<std::vector<int>> orbits_on_roots(const IntMatrix& g, const RootSystem& rs);

// Permutation data of g on the P positive-root lines {+a, -a}.
std::vector<int> line_cycle_type(const IntMatrix& g, const RootSystem& rs);
int fixed_line_count(const IntMatrix& g, const RootSystem& rs);

i64 element_order(const IntMatrix& g);

// Invariant label of a single element (used to align external tables).
std::string class_label_of(const IntMatrix& g, const RootSystem& rs);

} // namespace toric

#endif
