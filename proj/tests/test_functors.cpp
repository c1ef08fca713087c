#include <doctest.h>

#include <cmath>
#include <memory>
#include <set>
#include <vector>

#include "fuscat/character_table.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/finite_group.hpp"
#include "fuscat/functor_matrix.hpp"
#include "fuscat/fusion_ring.hpp"

using namespace fuscat;

namespace {

GroupPtr s3_perm() { return from_permutations(3, {{1, 2, 0}, {1, 0, 2}}); }

RingPtr rep_ring(const GroupPtr& g) {
  return std::make_shared<FusionRing>(rep_fusion_ring(character_table(g)));
}

// rep(S3) -> rep(A3), the running example: kernel {triv, sign}, index 2.
FunctorMatrix res_to_a3() {
  return restriction_functor(character_table(s3_perm()), {0, 1, 3});
}

// rep(S3) -> rep(Z2) along a point stabilizer: dominant but not normal.
FunctorMatrix res_to_z2() {
  return restriction_functor(character_table(s3_perm()), {0, 2});
}

bool has_code(const std::vector<Violation>& v, const std::string& code) {
  for (const auto& x : v)
    if (x.code == code) return true;
  return false;
}

}  // namespace

TEST_SUITE("functors") {

TEST_CASE("construction rejects malformed data") {
  const RingPtr s3 = rep_ring(s3_perm());
  const RingPtr z2 = rep_ring(cyclic_group(2));
  CHECK_THROWS_AS(FunctorMatrix(nullptr, z2, {{1}, {0}}), structural_error);
  CHECK_THROWS_AS(FunctorMatrix(s3, z2, {{1, 0, 1}}), structural_error);
  CHECK_THROWS_AS(FunctorMatrix(s3, z2, {{1, 0, 1}, {0, -1, 1}}),
                  structural_error);
  CHECK_NOTHROW(FunctorMatrix(s3, z2, {{1, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("axiom codes carry witnesses") {
  const RingPtr s3 = rep_ring(s3_perm());
  const RingPtr z2 = rep_ring(cyclic_group(2));

  // Unit goes to the wrong object.
  const FunctorMatrix bad_unit(s3, z2, {{0, 0, 1}, {1, 1, 1}});
  CHECK(has_code(validate_functor(bad_unit), "unit"));

  // F(std) = sgn fails F(std)^2 = F(triv + sign + std).
  const FunctorMatrix bad_mult(s3, z2, {{1, 0, 0}, {0, 1, 1}});
  CHECK(has_code(validate_functor(bad_mult), "multiplicativity"));

  // Duality mismatch on a ring with a genuine involution: Z3 -> Z3 swap of
  // g and e kills the unit axiom, so twist duals instead: the conjugation
  // functor is fine, but pairing g with itself is not.
  const RingPtr z3 = rep_ring(cyclic_group(3));
  const FunctorMatrix twisted(z3, z3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  // Identity respects duals.
  CHECK(validate_functor(twisted).empty());
  const FunctorMatrix broken_dual(z3, z3, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  // Sends g -> g2, g2 -> g: a ring map, and it permutes duals correctly.
  CHECK(validate_functor(broken_dual).empty());
}

TEST_CASE("restriction to A3: kernel, normality, index, monad") {
  const FunctorMatrix f = res_to_a3();
  CHECK(validate_functor(f).empty());
  const FPData src = fpdim(*f.source());
  const FPData dst = fpdim(*f.target());

  CHECK(kernel_simples(f, src) == std::set<int>{0, 1});
  CHECK(is_dominant(f));
  CHECK(is_normal(f, src));
  CHECK(fp_index(f, src, dst) == doctest::Approx(2.0).epsilon(1e-9));

  const auto t = monad_matrix(f);
  const std::vector<std::vector<std::int64_t>> want = {
      {2, 0, 0}, {0, 1, 1}, {0, 1, 1}};
  CHECK(t == want);

  const MonadReport mr = monad_checks(f, src, dst);
  CHECK(mr.monad_normal);
  CHECK(mr.functor_normal);
  CHECK(mr.agree);
  CHECK(mr.dominant);
  CHECK(mr.index_residual < 1e-6);
  CHECK(mr.scaling_residual < 1e-6);
}

TEST_CASE("restriction to Z2: dominant but not normal") {
  const FunctorMatrix f = res_to_z2();
  CHECK(validate_functor(f).empty());
  const FPData src = fpdim(*f.source());
  const FPData dst = fpdim(*f.target());

  CHECK(kernel_simples(f, src) == std::set<int>{0});
  CHECK(is_dominant(f));
  CHECK(!is_normal(f, src));  // std hits the unit without being trivial
  CHECK(fp_index(f, src, dst) == doctest::Approx(3.0).epsilon(1e-9));

  const MonadReport mr = monad_checks(f, src, dst);
  CHECK(!mr.monad_normal);
  CHECK(!mr.functor_normal);
  CHECK(mr.agree);
  CHECK(mr.scaling_residual < 1e-6);
}

TEST_CASE("kernels are closed fusion subrings") {
  for (const FunctorMatrix& f : {res_to_a3(), res_to_z2(),
                                 restriction_functor(
                                     character_table(dihedral_group(4)),
                                     {0, 1, 2, 3}),
                                 restriction_functor(
                                     character_table(quaternion_group()),
                                     {0, 1, 2, 3})}) {
    const FPData src = fpdim(*f.source());
    const std::set<int> ker = kernel_simples(f, src);
    CHECK(generated_subring(*f.source(), ker) == ker);
    CHECK(ker.count(f.source()->unit()) == 1);
  }
}

TEST_CASE("index cross-check throws on an inconsistent dominant matrix") {
  const RingPtr s3 = rep_ring(s3_perm());
  const RingPtr z2 = rep_ring(cyclic_group(2));
  // Dominant, but the adjoint route gives 1 while the dimension ratio is 3.
  const FunctorMatrix f(s3, z2, {{1, 0, 0}, {0, 1, 1}});
  CHECK_THROWS_AS(fp_index(f, fpdim(*s3), fpdim(*z2)), consistency_error);
}

TEST_CASE("exact sequence rep(Z2) -> rep(S3) -> rep(A3)") {
  const GroupPtr s3 = s3_perm();
  const Quotient q = quotient(s3, {0, 1, 3});
  const FunctorMatrix i = inflation_functor(character_table(q.group),
                                            q.projection);
  const FunctorMatrix f = res_to_a3();

  const ExactnessReport r = verify_exact_sequence(i, f);
  CHECK(r.embedding_valid);
  CHECK(r.functor_valid);
  CHECK(r.embedding_injective);
  CHECK(r.image_in_kernel);
  CHECK(r.image_equals_kernel);
  CHECK(r.dominant);
  CHECK(r.normal);
  CHECK(r.dim_product_residual < 1e-6);
  CHECK(r.fiber_max_residual < 1e-6);
  CHECK(!r.internal_inconsistency);
  CHECK(r.verdict);
}

TEST_CASE("broken sequences are rejected for the right reason") {
  const GroupPtr s3 = s3_perm();
  const Quotient q = quotient(s3, {0, 1, 3});
  const FunctorMatrix i = inflation_functor(character_table(q.group),
                                            q.projection);

  // Wrong quotient: image {triv, sign} is not inside kernel {triv}.
  const ExactnessReport r = verify_exact_sequence(i, res_to_z2());
  CHECK(r.embedding_valid);
  CHECK(r.functor_valid);
  CHECK(!r.image_in_kernel);
  CHECK(!r.normal);
  CHECK(!r.verdict);

  // Non-injective embedding: both invertibles of rep(Z2) land on the unit.
  const RingPtr z2 = rep_ring(cyclic_group(2));
  const FunctorMatrix collapse(z2, i.target(),
                               {{1, 1}, {0, 0}, {0, 0}});
  CHECK(validate_functor(collapse).empty());
  const ExactnessReport r2 = verify_exact_sequence(collapse, res_to_a3());
  CHECK(!r2.embedding_injective);
  CHECK(!r2.verdict);

  // Mismatched middle rings are structural, not a false verdict.
  const FunctorMatrix id_z2(z2, z2, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(verify_exact_sequence(id_z2, res_to_a3()),
                  structural_error);
}

TEST_CASE("trivial sequences on integer-dimension rings") {
  // C -> C -> Vec and Vec -> C -> C are exact for C = rep(S3).
  const RingPtr c = rep_ring(s3_perm());
  const RingPtr vec = std::make_shared<FusionRing>(
      FusionRing(1, {"1"}, 0, {0}, {{0, 0, 0, 1}}));

  const FunctorMatrix id(c, c, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const FunctorMatrix to_vec(c, vec, {{1, 1, 2}});
  const FunctorMatrix from_vec(vec, c, {{1}, {0}, {0}});

  CHECK(verify_exact_sequence(id, to_vec).verdict);
  CHECK(verify_exact_sequence(from_vec, id).verdict);
}

TEST_CASE("index-2 recognition") {
  const FunctorMatrix f = res_to_a3();
  const Index2Report r =
      index2_check(f, fpdim(*f.source()), fpdim(*f.target()));
  CHECK(r.passed);
  CHECK(r.j == 1);  // the sign character
  CHECK(r.unique_invertible);
  CHECK(r.j_self_dual);
  CHECK(r.j_squares_to_unit);
  CHECK(r.normal);
  CHECK(r.kernel_is_z2);

  // rep(D4) -> rep(Z4) over the rotation subgroup.
  const FunctorMatrix g =
      restriction_functor(character_table(dihedral_group(4)), {0, 1, 2, 3});
  const Index2Report r2 =
      index2_check(g, fpdim(*g.source()), fpdim(*g.target()));
  CHECK(r2.passed);
  CHECK(r2.kernel_is_z2);

  // Index 3 violates the precondition.
  const FunctorMatrix h = res_to_z2();
  CHECK_THROWS_AS(index2_check(h, fpdim(*h.source()), fpdim(*h.target())),
                  precondition_error);
}

TEST_CASE("composition") {
  const GroupPtr s3 = s3_perm();
  const Quotient q = quotient(s3, {0, 1, 3});
  const FunctorMatrix i = inflation_functor(character_table(q.group),
                                            q.projection);
  const FunctorMatrix f = res_to_a3();

  const FunctorMatrix c = compose(f, i);
  REQUIRE(c.source()->rank() == 2);
  REQUIRE(c.target()->rank() == 3);
  // sign restricted to A3 is trivial: both columns are the unit vector.
  const std::vector<std::vector<std::int64_t>> want = {
      {1, 1}, {0, 0}, {0, 0}};
  CHECK(c.matrix() == want);
  CHECK(validate_functor(c).empty());

  CHECK_THROWS_AS(compose(f, f), structural_error);
}

TEST_CASE("monad agreement holds on a spread of functors") {
  std::vector<FunctorMatrix> fs = {
      res_to_a3(), res_to_z2(),
      restriction_functor(character_table(dihedral_group(4)), {0, 1, 2, 3}),
      restriction_functor(character_table(dihedral_group(4)), {0, 2}),
      restriction_functor(character_table(quaternion_group()), {0, 1, 2, 3}),
      restriction_functor(character_table(symmetric_group(4)), {0, 2})};
  {
    const GroupPtr a4 = alternating_group(4);
    for (const auto& s : normal_subgroups(*a4))
      if (s.size() == 4)
        fs.push_back(restriction_functor(character_table(a4), s));
  }
  {
    const GroupPtr s3 = s3_perm();
    const Quotient q = quotient(s3, {0, 1, 3});
    fs.push_back(inflation_functor(character_table(q.group), q.projection));
  }
  for (const FunctorMatrix& f : fs) {
    const MonadReport mr =
        monad_checks(f, fpdim(*f.source()), fpdim(*f.target()));
    CHECK(mr.agree);
    if (mr.dominant) {
      CHECK(mr.index_residual < 1e-6);
      CHECK(mr.scaling_residual < 1e-6);
    }
  }
}

}  // TEST_SUITE
