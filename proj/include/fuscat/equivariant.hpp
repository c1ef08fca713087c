#pragma once

#include <cstdint>
#include <vector>

#include "fuscat/character_table.hpp"
#include "fuscat/finite_group.hpp"
#include "fuscat/fusion_ring.hpp"

namespace fuscat {

// Action of a finite group on a fusion ring by basis permutations.
// perms[g][x] is the image of basis element x under g, with the convention
// perms[g][perms[h][x]] = perms[gh][x].
struct GroupAction {
  GroupPtr group;
  RingPtr ring;
  std::vector<std::vector<int>> perms;

  GroupAction(GroupPtr group, RingPtr ring,
              std::vector<std::vector<int>> perms);
};

// Action axioms: each perms[g] a permutation, identity acts trivially, the
// homomorphism property above, unit fixed, duality equivariant, structure
// constants preserved. Empty result means valid.
std::vector<Violation> validate_action(const GroupAction& a);

// One simple of the equivariantization: an orbit on the basis together with
// an irreducible of the stabilizer of its smallest representative.
struct EquivariantSimple {
  std::vector<int> orbit;   // ascending basis indices
  int irrep = 0;            // row in the stabilizer's character table
  int degree = 1;           // degree of that irreducible
  double dim = 0.0;         // degree * sum of FP dims over the orbit
};

struct EquivariantSimples {
  std::vector<EquivariantSimple> entries;
  double total = 0.0;              // sum of dim^2
  double identity_residual = 0.0;  // |total - |G| * FPdim(ring)|
  int unit_entry = -1;             // (unit orbit, trivial irrep)
};

// Enumerates the simples of C^G in the untwisted model (orbit, stabilizer
// irreducible), orbits ordered by smallest member. The dimension identity
// FPdim(C^G) = |G| * FPdim(C) is asserted within tol (consistency_error).
EquivariantSimples equivariant_simples(const GroupAction& a,
                                       double tol = kAggregateTol);

// K-level matrix of the forgetful functor C^G -> C. Row y (ring basis),
// column e (equivariant simple): degree of the irrep when y lies in the
// orbit, else 0. Not a FunctorMatrix because the fusion rules of C^G are
// not synthesized; the checks that matter for exactness read the matrix and
// the entry dimensions directly.
struct ForgetfulFunctor {
  RingPtr target;
  std::vector<std::vector<std::int64_t>> m;  // [ring basis][entry]
};
ForgetfulFunctor forgetful_functor(const GroupAction& a,
                                   const EquivariantSimples& s);

struct EquivariantSequenceReport {
  bool action_valid = false;
  bool dominant = false;            // every ring basis element hit
  bool normal = false;              // unit-row support == kernel entries
  bool kernel_is_unit_orbit = false;
  bool kernel_matches_rep_g = false;  // degrees biject with Irr(G)
  double dim_identity_residual = 0.0;
  bool verdict = false;
};

// Verifies the K-level shadow of  rep G -> C^G -> C  for the given action:
// kernel of the forgetful functor (dimension criterion) is exactly the
// unit-orbit block, that block matches Irr(G) degree by degree, the functor
// is dominant and normal, and the dimension identity holds within tol.
EquivariantSequenceReport check_equivariant_sequence(
    const GroupAction& a, double tol = kAggregateTol,
    std::uint64_t seed = 0);

}  // namespace fuscat
