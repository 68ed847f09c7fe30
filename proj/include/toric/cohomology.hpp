#ifndef TORIC_COHOMOLOGY_HPP
#define TORIC_COHOMOLOGY_HPP

#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/poset.hpp"
#include "toric/root_system.hpp"
#include "toric/weyl.hpp"

namespace toric {

// Integer polynomial in t, coefficients ascending, trailing zeros trimmed.
struct Polynomial {
    std::vector<i64> c;

    i64 coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : 0;
    }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    i64 eval(i64 x) const;

    bool operator==(const Polynomial& o) const = default;
};

Polynomial poly_from(std::vector<i64> coeffs);
std::string to_string(const Polynomial& p);

struct CohomologyOptions {
    PosetBudget poset_budget{};
    int threads = 1;
    i64 torsion_enumeration_threshold = 1000000;
};

// Trace generating function of g on the cohomology of one intersection layer:
// the number of g-fixed components times the exterior-power traces of g on
// the component torus. g must stabilize n.
Polynomial intersection_poincare(const IntMatrix& g, const LatticeModule& n,
                                 i64 torsion_enumeration_threshold = 1000000);

// Trace generating function of g on the cohomology of the arrangement
// complement, via inclusion-exclusion over the fixed poset. The poset must
// have its Mobius function computed and must be the unsaturated variant.
Polynomial poincare_from_poset(const FixedPoset& poset, const IntMatrix& g,
                               i64 torsion_enumeration_threshold = 1000000, int threads = 1);

// Convenience wrapper: build the poset for g and sum it up. Checks that the
// constant coefficient is 1 and that the t coefficient equals
// tr(g) + #fixed root lines, which the theory forces.
Polynomial complement_poincare(const RootSystem& rs, const IntMatrix& g,
                               const CohomologyOptions& opts = {});

// Same inclusion-exclusion for the linearized arrangement: layers are
// subspaces, so each contributes just mu * (-t)^rank.
Polynomial hyperplane_poincare(const RootSystem& rs, const IntMatrix& g,
                               const CohomologyOptions& opts = {});

// Poincare duality flip for a smooth n-dimensional variety: coefficient k
// moves to degree 2n - k. Rejects polynomials of degree above n.
Polynomial compactly_supported(const Polynomial& p, int n);

// One Poincare polynomial per conjugacy class, classes in table order.
struct EquivariantTable {
    std::string system;
    int ambient = 0;
    std::vector<std::string> labels;
    std::vector<i64> sizes;
    std::vector<Polynomial> rows;

    int class_count() const { return static_cast<int>(rows.size()); }
};

EquivariantTable equivariant_table(const RootSystem& rs, const WeylGroup& w,
                                   const ConjugacyClasses& cc, const CohomologyOptions& opts = {});

} // namespace toric

#endif
