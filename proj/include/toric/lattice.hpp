#ifndef TORIC_LATTICE_HPP
#define TORIC_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

// A finitely generated subgroup N of Z^n, stored as the unique row-style
// Hermite normal form of any generating set: pivots positive, zero entries
// below each pivot, entries above each pivot reduced into [0, pivot), zero
// rows dropped. Equal subgroups therefore compare byte-equal via key().
struct LatticeModule {
    int ambient = 0;
    IntMatrix basis; // rank x ambient

    int rank() const { return basis.rows(); }
    std::string key() const { return basis.key(); }
    bool operator==(const LatticeModule& o) const = default;
};

// Hermite normal form of arbitrary generating rows.
LatticeModule canonicalize(const IntMatrix& rows, int ambient);
LatticeModule canonicalize(const std::vector<IntVec>& rows, int ambient);

// Row HNF keeping the full unimodular transform: U * input = [H; 0] with H
// the canonical form. Rows of U below `rank` span the left kernel of input.
struct HermiteTransform {
    IntMatrix h; // rank x cols, canonical
    IntMatrix u; // rows x rows, unimodular
    int rank = 0;
};
HermiteTransform hermite_with_transform(const IntMatrix& input);

// Basis (as rows) of { x in Z^n : m * x = 0 } for an r x n matrix m.
IntMatrix kernel_columns(const IntMatrix& m);

// Smallest saturated module containing N: (N tensor Q) intersected with Z^n.
LatticeModule saturate(const LatticeModule& n);

// Does v lie in N?  If so, the coefficient vector against N's basis rows.
std::optional<IntVec> solve_in_basis(const IntMatrix& hnf_basis, const IntVec& v);
bool module_contains(const LatticeModule& n, const IntVec& v);

// g maps N into (hence onto) itself. g acts on column vectors.
bool module_stable_under(const LatticeModule& n, const IntMatrix& g);

// Structure of the finite-plus-free quotient Z^n / N.
//
// A unimodular change of coordinates V turns N into the span of d_i * e_i, so
// Z^n / N = (+) Z/d_i (+) Z^f. Torsion coordinates keep only the d_i >= 2.
// For a row vector m the Smith coordinates are y = m * V (apply() with V^T);
// lift rows map Smith generators back to Z^n.
struct QuotientStructure {
    int ambient = 0;
    int nrank = 0;                 // rank of N; free_rank + nrank == ambient
    int free_rank = 0;
    std::vector<i64> invariant_factors; // d_1 | d_2 | ..., all >= 2
    i64 torsion_order = 1;              // product of invariant factors
    std::vector<int> torsion_cols;      // Smith coordinates carrying torsion
    IntMatrix v;     // ambient x ambient change of coordinates
    IntMatrix vinv;  // its inverse; row i is the lattice vector behind e_i

    // Smith coordinates of a lattice vector (length = ambient).
    IntVec smith_coords(const IntVec& m) const;
    // Lattice representative of torsion tuple t (one entry per factor).
    IntVec lift_torsion(const IntVec& t) const;
};

QuotientStructure smith_quotient(const LatticeModule& n);

// Trace of g restricted to N (g must stabilize N).
i64 restrict_trace(const IntMatrix& g, const LatticeModule& n);

// Matrix of the action induced by g on the free quotient Z^n / sat(N), in the
// coordinates picked by smith_quotient. Row convention: coordinate row y maps
// to y * F.
IntMatrix free_quotient_action(const IntMatrix& g, const QuotientStructure& q);

// Traces of the exterior powers Lambda^0..Lambda^n from power sums
// p_k = tr(g^k), k = 1..n, via the Newton-Girard recurrence
// k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i. Divisions must be exact.
std::vector<i64> exterior_traces(const std::vector<i64>& power_sums, int n);

// Number of elements of the torsion part of Z^n / N fixed by g. Enumerates
// the torsion group while its order stays within `enumeration_threshold`;
// beyond that, counts solutions of (g - 1) x = 0 in (+) Z/d_i through an
// integer lattice index, which is exact at any size.
i64 torsion_fixed_count(const IntMatrix& g, const QuotientStructure& q, const LatticeModule& n,
                        i64 enumeration_threshold = 1000000);

} // namespace toric

#endif
