#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toric {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signed 64-bit overflow inside an exact computation. Never tolerated: the
// offending operation aborts the whole run with a diagnostic.
struct OverflowError : Error {
    using Error::Error;
};

// Shape mismatch between matrices/vectors.
struct DimensionError : Error {
    using Error::Error;
};

// An operator was asked to act on a module it does not map onto itself.
struct NotStableError : Error {
    using Error::Error;
};

// An exact division left a remainder (bad power sums, duality on inputs of
// too-high degree, and similar misuse).
struct NonIntegralError : Error {
    using Error::Error;
};

// A size/memory/node cap was exceeded before the computation started or while
// it grew. Distinct from input errors so the CLI can report it separately.
struct BudgetError : Error {
    using Error::Error;
};

// Malformed JSON input (arrangement files, character table files).
struct SchemaError : Error {
    using Error::Error;
};

// A character table failed the exact orthogonality relations.
struct OrthogonalityError : Error {
    using Error::Error;
};

// Classes of a loaded table could not be matched to the computed classes.
struct ClassAlignmentError : Error {
    using Error::Error;
};

// A postcondition that should hold for every valid input failed (negative or
// fractional multiplicity, inconsistent traces). Always indicates a bug.
struct IntegrityError : Error {
    using Error::Error;
};

} // namespace toric

#endif
