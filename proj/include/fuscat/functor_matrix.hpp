#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "fuscat/errors.hpp"
#include "fuscat/fusion_ring.hpp"

namespace fuscat {

// Grothendieck-level data of a tensor functor F: source -> target. Entry
// m[Y][X] is the multiplicity of target simple Y in F(source simple X);
// rows are indexed by the target basis, columns by the source basis.
class FunctorMatrix {
 public:
  // Throws structural_error on null rings, wrong shape, or negative entries.
  FunctorMatrix(RingPtr source, RingPtr target,
                std::vector<std::vector<std::int64_t>> m);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  std::int64_t at(int y, int x) const { return m_.at(y).at(x); }
  const std::vector<std::vector<std::int64_t>>& matrix() const { return m_; }
  // Column of X, i.e. the image class F(X) in the target basis.
  std::vector<std::int64_t> column(int x) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<std::vector<std::int64_t>> m_;
};

// Functor axioms at the K-level: unit column is the target unit basis
// vector, columns multiply like the source ring (F(i)F(j) = F(ij) expanded
// through target fusion rules), duality m[Y][dual X] = m[dual Y][X].
// Any finding is reported with a concrete witness; empty means valid.
std::vector<Violation> validate_functor(const FunctorMatrix& f);

// Every target simple appears in the image of some source simple; for a
// valid functor matrix this is surjectivity of the image support, the
// K-level shadow of dominance.
bool is_dominant(const FunctorMatrix& f);

// Source simples X with F(X) trivial, decided by the dimension criterion
// FPdim X == multiplicity of the target unit in F(X) within tol. The result
// always contains the source unit and is closed under duals.
std::set<int> kernel_simples(const FunctorMatrix& f, const FPData& source_fp,
                             double tol = kPerObjectTol);

// Normality: for every source simple X whose image contains the target unit,
// X is already in the kernel.
bool is_normal(const FunctorMatrix& f, const FPData& source_fp,
               double tol = kPerObjectTol);

// Frobenius-Perron index FPdim(source)/FPdim(target). For dominant functors
// the value is cross-checked within agg_tol against the right adjoint route
// sum_X m[unit][X] FPdim X; disagreement throws consistency_error.
double fp_index(const FunctorMatrix& f, const FPData& source_fp,
                const FPData& target_fp, double agg_tol = kAggregateTol);

// Matrix of the induced monad on the target ring: T = m * m^T, i.e.
// T[Y'][Y] = sum_X m[Y'][X] m[Y][X]. Column Y is the class of T(Y).
std::vector<std::vector<std::int64_t>> monad_matrix(const FunctorMatrix& f);

struct MonadReport {
  bool monad_normal = false;       // T(unit) supported only on the unit
  bool functor_normal = false;     // kernel-criterion normality
  bool agree = false;              // the two flags coincide
  bool dominant = false;
  double index_residual = 0.0;     // |FPdim T(unit) - fp_index|
  double scaling_residual = 0.0;   // max_Y |FPdim T(Y) - FPdim T(1) FPdim Y|
};

// Evaluates the monad-side criteria and their agreement with the direct
// functor checks. index_residual and scaling_residual are only meaningful
// for dominant functors and are reported as computed either way.
MonadReport monad_checks(const FunctorMatrix& f, const FPData& source_fp,
                         const FPData& target_fp);

struct ExactnessReport {
  bool embedding_valid = false;      // i passes validate_functor
  bool functor_valid = false;        // f passes validate_functor
  bool embedding_injective = false;  // distinct unit-vector columns
  bool image_in_kernel = false;
  bool image_equals_kernel = false;
  bool dominant = false;
  bool normal = false;
  double dim_product_residual = 0.0;  // |FPdim C - FPdim C' * FPdim C''|
  double fiber_max_residual = 0.0;    // worst per-simple fiber dimension defect
  bool internal_inconsistency = false;
  bool verdict = false;
};

// Verifies that  C' -i-> C -f-> C''  is exact: i a full embedding onto the
// kernel of f, f dominant and normal, FPdim C = FPdim C' FPdim C'', and for
// every simple Y of C'' the fiber identity
//   FPdim Y = (1/FPdim C') sum_X m[Y][X] FPdim X.
// The last two identities follow from the earlier flags; divergence sets
// internal_inconsistency (and clears the verdict) instead of passing silently.
ExactnessReport verify_exact_sequence(const FunctorMatrix& i,
                                      const FunctorMatrix& f,
                                      double per_tol = kPerObjectTol,
                                      double agg_tol = kAggregateTol);

struct Index2Report {
  int j = -1;                    // the unique nontrivial invertible simple
  bool unique_invertible = false;
  bool j_self_dual = false;
  bool j_squares_to_unit = false;
  bool normal = false;
  bool kernel_is_z2 = false;     // kernel = {unit, j} with Z/2 fusion rules
  bool passed = false;
};

// A dominant functor of FP index 2 is automatically normal, its kernel is
// {1, J} for a unique invertible J with J^2 = 1, and that kernel is the
// image of an index-2 embedding. Throws precondition_error unless f is a
// valid dominant functor with index 2 within agg_tol.
Index2Report index2_check(const FunctorMatrix& f, const FPData& source_fp,
                          const FPData& target_fp,
                          double per_tol = kPerObjectTol,
                          double agg_tol = kAggregateTol);

// Matrix of g after f (source of g must equal the target of f structurally).
FunctorMatrix compose(const FunctorMatrix& g, const FunctorMatrix& f);

}  // namespace fuscat
