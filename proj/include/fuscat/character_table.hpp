#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fuscat/finite_group.hpp"
#include "fuscat/functor_matrix.hpp"
#include "fuscat/fusion_ring.hpp"

namespace fuscat {

struct CharacterTable {
  GroupPtr group;
  std::vector<std::vector<int>> classes;  // identity class first
  std::vector<int> class_of;              // element -> class index
  // chi[i][c] = value of irreducible i on class c. Row 0 is the trivial
  // character; later rows sorted by (degree, rounded values).
  std::vector<std::vector<std::complex<double>>> chi;
  std::vector<int> degrees;
};

// Complex character table by the class-algebra method: the common
// eigenvectors of the class sums acting on the centre are found through a
// random linear combination of the class multiplication matrices, and each
// normalized eigenvector carries one irreducible character. Deterministic
// seed sequence starting at seed; integrity (integer degrees, sum of squares
// equal to |G|, orthogonality) is re-verified and failures trigger the next
// seed. Throws numerical_error when the retry budget runs out.
CharacterTable character_table(const GroupPtr& g, std::uint64_t seed = 0);

// Fusion ring of the representation category: N(i,j,k) = <chi_i chi_j,
// chi_k>. Every constant is rounded to an integer and verified within 1e-6;
// duals pair complex-conjugate rows. The result passes validate().
FusionRing rep_fusion_ring(const CharacterTable& t);

// Restriction functor rep(G) -> rep(H) for a subgroup H given by parent
// element indices: m[i][j] = <Res chi_j, psi_i>_H. Source and target rings
// are the rep rings computed from this table and the subgroup's own table.
FunctorMatrix restriction_functor(const CharacterTable& t,
                                  const std::vector<int>& sub_elements);

// Inflation functor rep(G') -> rep(G) along a surjection p: G -> G'. Columns
// are distinct unit vectors (inflation is a full embedding). quot must be
// the table of p.target. Throws precondition_error if p is not surjective.
FunctorMatrix inflation_functor(const CharacterTable& quot, const GroupHom& p);

}  // namespace fuscat
