#pragma once

#include <optional>
#include <vector>

#include "fuscat/finite_group.hpp"

namespace fuscat {

// Normalized 3-cochain on a finite group with values in Z/modulus (additive
// model of roots of unity). values are stored densely in lexicographic
// (g1,g2,g3) order; normalization (zero whenever an argument is the
// identity) is enforced at construction.
struct Cocycle3 {
  GroupPtr group;
  long modulus = 1;
  std::vector<long> values;  // size order^3, entries in [0, modulus)

  Cocycle3(GroupPtr group, long modulus, std::vector<long> values);

  long at(int a, int b, int c) const;
  int order() const { return group->order(); }

  // Pointwise difference (a - b mod modulus); groups and moduli must match.
  Cocycle3 minus(const Cocycle3& other) const;
};

// Cocycle condition d(alpha) = 0:
// a(g2,g3,g4) - a(g1g2,g3,g4) + a(g1,g2g3,g4) - a(g1,g2,g3g4) + a(g1,g2,g3) = 0
// over all non-identity quadruples (identity cases hold by normalization).
bool is_cocycle(const Cocycle3& a);

// Coboundary of a normalized 2-cochain beta (dense lex order, mod modulus):
// (d beta)(g1,g2,g3) = beta(g2,g3) - beta(g1g2,g3) + beta(g1,g2g3) - beta(g1,g2).
Cocycle3 coboundary(const GroupPtr& g, long modulus,
                    const std::vector<long>& beta);

// Standard representative of the class q in H^3(Z/n, Z/n):
// w_q(a,b,c) = q * a * floor((b+c)/n) mod n. Built on cyclic_group(n).
Cocycle3 cyclic_representative(int n, int q);

struct CoboundaryResult {
  bool trivial = false;
  // When trivial: a normalized 2-cochain beta with
  // d(beta) = |G| * alpha (mod witness_modulus), witness_modulus = modulus*|G|.
  std::optional<std::vector<long>> witness;
  long witness_modulus = 0;
};

// Decides triviality of the class of alpha viewed with ambient coefficients:
// alpha is scaled by |G| into Z/(modulus*|G|) and d(beta) = |G|*alpha is
// solved exactly through the Smith normal form of the integer coboundary
// matrix. Throws size_error past the equation-count cap.
CoboundaryResult is_coboundary(const Cocycle3& alpha);

// |H^3(G, Z/modulus)| = |ker d3| / |im d2| computed from the Smith
// invariants of the two coboundary matrices on normalized cochains.
// Requires |G| <= 24 and moderate matrix sizes; throws size_error otherwise.
long h3_order(const FiniteGroup& g, long modulus);

// Pullback along a surjection p: G -> G'' of a cocycle on G''.
Cocycle3 inflate(const Cocycle3& a, const GroupHom& p);

// Restriction to the subgroup of a.group spanned by sub_elements; the result
// lives on the subgroup's own FiniteGroup (ordering as in subgroup()).
Cocycle3 restrict_cocycle(const Cocycle3& a,
                          const std::vector<int>& sub_elements);

}  // namespace fuscat
