#ifndef TORIC_CHARACTERS_HPP
#define TORIC_CHARACTERS_HPP

#include <string>
#include <vector>

#include "toric/root_system.hpp"
#include "toric/weyl.hpp"

namespace toric {

// Exact integer character table. Rows are irreducible characters, columns are
// conjugacy classes in the same order as the ConjugacyClasses that produced
// the table. class_tags carries an optional human-readable synonym per class
// (cycle types for symmetric groups, empty otherwise).
struct CharacterTable {
    std::string group;
    i64 order = 0;
    std::vector<std::string> class_labels;
    std::vector<i64> class_sizes;
    std::vector<std::string> class_tags;
    std::vector<std::string> names;
    std::vector<std::vector<i64>> values;

    int class_count() const { return static_cast<int>(class_labels.size()); }
    int irr_count() const { return static_cast<int>(values.size()); }
};

// Character table over the integers through the class-sum algebra modulo a
// deterministic prime, eigenvector splitting, and symmetric lifting. The
// result is verified exactly (orthogonality, mass) before being returned;
// a handful of successive primes are tried before giving up.
CharacterTable dixon_table(const WeylGroup& w, const ConjugacyClasses& cc, const RootSystem& rs);

// Type A only: the symmetric group table on rank+1 letters computed by the
// border-strip recurrence. Rows are named by partitions, and each computed
// class is matched to its cycle type through fixed-point counts of powers.
CharacterTable symmetric_group_table(const RootSystem& rs, const WeylGroup& w,
                                     const ConjugacyClasses& cc);

// Smallest e with <Sym^e(reflection), chi> > 0.
int first_symmetric_power(const CharacterTable& table, const ConjugacyClasses& cc, int irr);

// Rename rows to phi{d}^{e} (degree, first symmetric power); characters
// sharing both numbers become phi{d},1^{e} and phi{d},2^{e} in the standard
// primed / double-primed order.
void apply_phi_names(CharacterTable& table, const ConjugacyClasses& cc);

// Multiplicity of each irreducible in the class function f (one value per
// class, in table column order). Throws IntegrityError unless every
// multiplicity is a nonnegative integer.
std::vector<i64> decompose(const CharacterTable& table, const std::vector<i64>& f);

// First and second orthogonality relations over the integers.
void orthogonality_check(const CharacterTable& table);

void save_table(const CharacterTable& table, const std::string& path);

// Load and align the stored columns to cc by class label; validates
// orthogonality and sizes before returning.
CharacterTable load_table(const std::string& path, const ConjugacyClasses& cc);

// Index of the class holding the first simple reflection.
int reflection_class(const RootSystem& rs, const WeylGroup& w, const ConjugacyClasses& cc);

// Closed forms for type A on the computed class order: the total cohomology
// character ((n+2)!/2 on the identity, n! on reflections, 0 elsewhere) and
// the character induced from the trivial one on a reflection's 2-element
// subgroup ((n+1)!/2, (n-1)!, 0).
std::vector<i64> a_type_total_character(const RootSystem& rs, const WeylGroup& w,
                                        const ConjugacyClasses& cc);
std::vector<i64> a_type_induced_character(const RootSystem& rs, const WeylGroup& w,
                                          const ConjugacyClasses& cc);

} // namespace toric

#endif
