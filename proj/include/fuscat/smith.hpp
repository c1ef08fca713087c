#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace fuscat {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

// U * A * V = D with U, V unimodular and D diagonal with divisibility
// d1 | d2 | ... | dr, di >= 0. diagonal holds min(rows, cols) entries
// (trailing zeros kept so shapes stay obvious).
struct SmithDecomposition {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> diagonal;
  BigMatrix u;  // rows x rows
  BigMatrix v;  // cols x cols
};

// Full decomposition with transform matrices. Intended for desk-scale
// matrices; the invariant-only and solver entry points below avoid storing U.
SmithDecomposition smith_normal_form(const BigMatrix& a);

// Invariant factors only (no transforms), cheap on large sparse-ish inputs.
std::vector<BigInt> smith_invariants(BigMatrix a);

// Exact determinant by fraction-free elimination; used to certify that the
// transforms are unimodular.
BigInt determinant(BigMatrix a);

// One solution x of A x = b (mod m), entries in [0, m), or nullopt when the
// system is unsolvable. Runs the Smith reduction while carrying b and V only.
std::optional<std::vector<BigInt>> solve_mod(const BigMatrix& a,
                                             const std::vector<BigInt>& b,
                                             const BigInt& m);

}  // namespace fuscat
