#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace fuscat {

// A fusion ring on a finite basis: unit element, duality involution and
// nonnegative integer structure constants N(i,j,k) with X_i X_j = sum_k
// N(i,j,k) X_k. Storage is sparse per ordered pair (i,j).
class FusionRing {
 public:
  // quads are (i, j, k, N(i,j,k)) entries; omitted entries are zero.
  // Throws structural_error for data that cannot be stored: bad sizes,
  // indices out of range, negative constants, duplicate quads.
  FusionRing(int rank, std::vector<std::string> labels, int unit,
             std::vector<int> dual, std::vector<std::array<std::int64_t, 4>> quads);

  int rank() const { return rank_; }
  int unit() const { return unit_; }
  int dual(int i) const { return dual_.at(i); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::int64_t n(int i, int j, int k) const;

  // Nonzero terms of X_i X_j as (k, N(i,j,k)), sorted by k.
  const std::vector<std::pair<int, std::int64_t>>& product(int i, int j) const;

  // Left multiplication matrix: M[k][j] = N(i,j,k), so M acts on coordinate
  // columns indexed by the basis.
  std::vector<std::vector<std::int64_t>> mult_matrix(int i) const;

  // All nonzero quads in lexicographic (i,j,k) order; canonical form used by
  // serialization and structural comparison.
  std::vector<std::array<std::int64_t, 4>> quads() const;

  // Structural equality: same rank, unit, dual, labels and constants.
  bool same_as(const FusionRing& other) const;

 private:
  int rank_;
  int unit_;
  std::vector<std::string> labels_;
  std::vector<int> dual_;
  // products_[i * rank_ + j] = sorted sparse row.
  std::vector<std::vector<std::pair<int, std::int64_t>>> products_;
};

using RingPtr = std::shared_ptr<const FusionRing>;

enum class ViolationKind { Structural, Axiom };

struct Violation {
  ViolationKind kind;
  std::string code;     // stable machine tag, e.g. "rigidity"
  std::string message;  // human text with a concrete witness
};

// Checks duality involution, unit row/column, associativity, rigidity
// N(i,j,unit) = [j == dual(i)] and Frobenius reciprocity
// N(i,j,k) = N(dual(i),k,j) = N(k,dual(j),i). Structural findings precede
// axiom findings; an empty result means the ring is valid.
std::vector<Violation> validate(const FusionRing& ring);

struct FPData {
  std::vector<double> dims;  // Perron eigenvalue of each mult_matrix
  double total = 0.0;        // sum of squares of dims
  double tolerance = 0.0;    // convergence tolerance actually used
};

// Frobenius-Perron dimensions by power iteration on M_i + I (the shift makes
// the iteration converge for every nonnegative M_i). Throws numerical_error
// if any entry fails to converge within max_iter.
FPData fpdim(const FusionRing& ring, double tol = 1e-12,
             long max_iter = 1000000);

// Smallest basis subset containing the unit and the seeds that is closed
// under product supports and duality. Throws structural_error on bad seeds.
std::set<int> generated_subring(const FusionRing& ring,
                                const std::set<int>& seeds);

// True when every basis object is invertible. Decided twice: all FP
// dimensions within tol of 1, and all multiplication matrices permutation
// matrices; disagreement throws consistency_error.
bool is_pointed(const FusionRing& ring, const FPData& fp,
                double tol = 1e-9);

}  // namespace fuscat
