#ifndef TORIC_ROOT_SYSTEM_HPP
#define TORIC_ROOT_SYSTEM_HPP

#include <string>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

enum class Type { A, B, C, D, E, F, G, Custom };

std::string type_to_string(Type t, int rank);

// A crystallographic root system in simple-root coordinates: the lattice is
// Z^rank with basis the simple roots, and every root is an integer vector in
// that basis. The inner product is carried by `gram`, scaled so that all of
// its entries are integers.
//
// Custom "systems" are bare arrangements: a finite list of integer vectors
// closed under negation, no gram matrix and no Weyl group. They feed the same
// poset and cohomology machinery with the identity as the only operator.
struct RootSystem {
    Type type = Type::Custom;
    int rank = 0;
    IntMatrix gram;   // empty for Custom
    IntMatrix cartan; // cartan(i,j) = 2 gram(i,j) / gram(j,j); empty for Custom
    std::vector<IntVec> positive_roots; // lex-sorted; for Custom, one vector per +/- pair

    bool has_weyl() const { return type != Type::Custom; }
    std::string name() const { return type_to_string(type, rank); }

    int positive_count() const { return static_cast<int>(positive_roots.size()); }
    // Index i < positive_count() is positive_roots[i]; index i + positive_count()
    // is its negative. Lines through the origin are indexed by 0..positive_count().
    IntVec root(int index) const;
    int root_index(const IntVec& v) const; // -1 if not a root
};

// Supported: A(n>=1), B(n>=2), C(n>=3), D(n>=4), E(6..8), F(4), G(2).
RootSystem build_root_system(Type t, int rank);

// Arrangement from explicit vectors. Zero vectors are rejected; v and -v are
// collapsed onto one representative.
RootSystem custom_system(int rank, const std::vector<IntVec>& vectors);

// Matrices of the simple reflections acting on column vectors in simple-root
// coordinates.
std::vector<IntMatrix> simple_reflections(const RootSystem& rs);

// Reflection matrix for an arbitrary root alpha.
IntMatrix reflection_matrix(const RootSystem& rs, const IntVec& alpha);

// gram-pairing of two coordinate vectors.
i64 root_dot(const RootSystem& rs, const IntVec& a, const IntVec& b);

// Whether the fixed subtorus of the reflection in alpha coincides with the
// kernel subtorus of alpha itself: true exactly when the pairing values
// 2 (alpha, basis_j) / (alpha, alpha) over all j have gcd 1.
bool reflection_torus_coincides(const RootSystem& rs, const IntVec& alpha);

// Every line of the arrangement is a primitive vector. Roots always are;
// custom arrangements may not be, and then some kernel hypersurfaces are
// disconnected and the first-degree trace identity stops applying.
bool all_lines_primitive(const RootSystem& rs);

// Classification data used for sanity checks and budget decisions.
int classified_positive_count(Type t, int rank);
i64 classified_group_order(Type t, int rank);

} // namespace toric

#endif
