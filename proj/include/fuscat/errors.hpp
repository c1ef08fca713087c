#pragma once

#include <stdexcept>
#include <string>

namespace fuscat {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data that cannot even be stored or indexed (size mismatch, index
// out of range, mismatched object references).
struct structural_error : error {
  using error::error;
};

// A floating point routine failed its own integrity test: power iteration
// did not converge, a value that must be a nonnegative integer rounded
// outside tolerance, an eigensolver retry budget ran out.
struct numerical_error : error {
  using error::error;
};

// Two independent routes that must agree did not. Always a bug or corrupt
// data, never a user mistake.
struct consistency_error : error {
  using error::error;
};

// An operation precondition does not hold (functor index not 2, map not
// surjective, subgroup set not closed).
struct precondition_error : error {
  using error::error;
};

// The request is well formed but exceeds a hard resource cap.
struct size_error : error {
  using error::error;
};

// Default tolerances. Per-object comparisons (a single dimension, a single
// matrix entry) use kPerObjectTol; aggregated identities (total dimensions,
// index products) use kAggregateTol.
inline constexpr double kPerObjectTol = 1e-9;
inline constexpr double kAggregateTol = 1e-6;

}  // namespace fuscat
