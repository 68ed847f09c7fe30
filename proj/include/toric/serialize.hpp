#ifndef TORIC_SERIALIZE_HPP
#define TORIC_SERIALIZE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/characters.hpp"
#include "toric/cohomology.hpp"
#include "toric/poset.hpp"

namespace toric {

// Full poset dump: ambient, variant, orbits, and per node the canonical
// basis, rank, absorbed orbits, and Mobius value; cover relations optional
// (they are derived data and cost extra to compute).
std::string poset_to_json(const FixedPoset& poset, const std::string& system,
                          const std::string& class_label, bool with_covers);

// Inverse of poset_to_json. Validates shapes, canonical bases, ranks, and
// orbit indices; throws SchemaError on anything suspicious.
FixedPoset poset_from_json(const std::string& text);

// Transitive reduction of the containment order, as (lower, upper) pairs.
std::vector<std::pair<int, int>> cover_relations(const FixedPoset& poset);

// Multiplicities of the irreducibles in each cohomology degree.
struct DecompositionTable {
    EquivariantTable cohomology;
    std::vector<std::string> names;
    std::vector<std::vector<i64>> multiplicities; // [degree][irreducible]
};

DecompositionTable decompose_cohomology(const EquivariantTable& coh, const CharacterTable& chars);

// Single-row table for arrangements without a group action.
EquivariantTable custom_identity_table(const RootSystem& rs, const CohomologyOptions& opts = {});

std::string render_poincare_text(const EquivariantTable& t);
std::string render_poincare_json(const EquivariantTable& t);
std::string render_poincare_csv(const EquivariantTable& t);
std::string render_poincare_latex(const EquivariantTable& t);

std::string render_decomposition_text(const DecompositionTable& dt);
std::string render_decomposition_json(const DecompositionTable& dt);
std::string render_decomposition_csv(const DecompositionTable& dt);
std::string render_decomposition_latex(const DecompositionTable& dt); // ten columns per block

std::string render_poset_summary(const FixedPoset& poset);

// Stable content address for one poset: system name, variant
// (toric/hyperplane), and class label, behind a format version.
std::string cache_key(const std::string& system, const std::string& variant,
                      const std::string& class_label);

// File cache of computed posets. Loads are verified: the bottom Mobius value,
// the top one (which pins the sum of all others), and one random node are
// recomputed; any mismatch or parse problem turns the hit into a miss.
struct PosetCache {
    std::string dir; // empty string disables the cache

    std::string path_for(const std::string& key) const;
    std::optional<FixedPoset> load(const std::string& key) const;
    void store(const std::string& key, const FixedPoset& poset, const std::string& system,
               const std::string& class_label) const;
};

// complement_poincare / equivariant_table with the poset step backed by the
// cache; results and integrity checks are identical to the direct versions.
Polynomial cached_complement_poincare(const RootSystem& rs, const IntMatrix& g,
                                      const std::string& class_label, const PosetCache& cache,
                                      const CohomologyOptions& opts = {});
EquivariantTable cached_equivariant_table(const RootSystem& rs, const WeylGroup& w,
                                          const ConjugacyClasses& cc, const PosetCache& cache,
                                          const CohomologyOptions& opts = {});

} // namespace toric

#endif
