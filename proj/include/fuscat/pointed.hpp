#pragma once

#include <optional>

#include "fuscat/cocycle.hpp"
#include "fuscat/functor_matrix.hpp"
#include "fuscat/fusion_ring.hpp"

namespace fuscat {

// Pointed category C(G, alpha): G-graded vector spaces with associativity
// twisted by a 3-cocycle alpha on G. At the K-level only G matters; alpha
// drives the simplicity test. Construction verifies the cocycle condition.
struct PointedCategory {
  GroupPtr group;
  Cocycle3 alpha;

  PointedCategory(GroupPtr group, Cocycle3 alpha);
};

// Group ring of G as a fusion ring: basis G, product from the Cayley table,
// duals are inverses. Labels reuse the group's element names.
FusionRing pointed_fusion_ring(const PointedCategory& c);

struct PointedSequence {
  FunctorMatrix embedding;   // C(G', 1) -> C(G, inflate(alpha))
  FunctorMatrix projection;  // C(G, inflate(alpha)) -> C(G'', alpha)
  Cocycle3 middle_cocycle;   // inflate(alpha) on G
  ExactnessReport report;
};

// From an exact sequence 1 -> G' -i-> G -p-> G'' -> 1 and a cocycle alpha on
// G'', builds the exact sequence of pointed categories
//   C(G', 1) -> C(G, p^* alpha) -> C(G'', alpha).
// Throws precondition_error when the group sequence is not exact or alpha
// lives on the wrong group, and consistency_error if the constructed
// sequence fails its own verification.
PointedSequence build_pointed_exact_sequence(const GroupHom& i,
                                             const GroupHom& p,
                                             const Cocycle3& alpha);

struct SimplePointedResult {
  bool simple = false;
  // When not simple: a proper nontrivial normal subgroup H with trivial
  // restricted cocycle class (parent element indices, sorted).
  std::optional<std::vector<int>> witness;
};

// C(G, alpha) is simple iff it has no proper nontrivial normal subgroup H
// such that alpha restricted to H is cohomologically trivial. The trivial
// group gives vect, which is not simple.
SimplePointedResult is_simple_pointed(const PointedCategory& c);

// Sufficient criterion: |G| prime forces simplicity regardless of alpha.
bool is_simple_eno(const PointedCategory& c);

}  // namespace fuscat
