#include "fuscat/cocycle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "fuscat/errors.hpp"
#include "fuscat/smith.hpp"

namespace fuscat {

namespace {

long mod_pos(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Cocycle3::Cocycle3(GroupPtr group_in, long modulus_in,
                   std::vector<long> values_in)
    : group(std::move(group_in)), modulus(modulus_in),
      values(std::move(values_in)) {
  if (!group) throw structural_error("cocycle with null group");
  if (modulus < 1) throw structural_error("cocycle modulus must be >= 1");
  const long n = group->order();
  if (static_cast<long>(values.size()) != n * n * n)
    throw structural_error("cocycle value count must be order^3");
  for (long v : values)
    if (v < 0 || v >= modulus)
      throw structural_error("cocycle value out of range [0, modulus)");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (at(0, a, b) != 0 || at(a, 0, b) != 0 || at(a, b, 0) != 0)
        throw structural_error("cocycle is not normalized");
    }
}

long Cocycle3::at(int a, int b, int c) const {
  const long n = group->order();
  return values[(static_cast<long>(a) * n + b) * n + c];
}

Cocycle3 Cocycle3::minus(const Cocycle3& other) const {
  if (!group->same_as(*other.group) || modulus != other.modulus)
    throw structural_error("cocycle difference needs matching group/modulus");
  std::vector<long> v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    v[i] = mod_pos(values[i] - other.values[i], modulus);
  return Cocycle3(group, modulus, std::move(v));
}

bool is_cocycle(const Cocycle3& a) {
  if (a.modulus == 1) return true;
  const auto& g = *a.group;
  const int n = g.order();
  // Normalization settles every quadruple containing the identity.
  for (int g1 = 1; g1 < n; ++g1)
    for (int g2 = 1; g2 < n; ++g2)
      for (int g3 = 1; g3 < n; ++g3)
        for (int g4 = 1; g4 < n; ++g4) {
          const long v = a.at(g2, g3, g4) - a.at(g.mul(g1, g2), g3, g4) +
                         a.at(g1, g.mul(g2, g3), g4) -
                         a.at(g1, g2, g.mul(g3, g4)) + a.at(g1, g2, g3);
          if (mod_pos(v, a.modulus) != 0) return false;
        }
  return true;
}

Cocycle3 coboundary(const GroupPtr& g, long modulus,
                    const std::vector<long>& beta) {
  if (!g) throw structural_error("coboundary with null group");
  const int n = g->order();
  if (static_cast<long>(beta.size()) != static_cast<long>(n) * n)
    throw structural_error("2-cochain value count must be order^2");
  auto b = [&](int x, int y) { return beta[static_cast<long>(x) * n + y]; };
  for (int x = 0; x < n; ++x)
    if (b(0, x) != 0 || b(x, 0) != 0)
      throw structural_error("2-cochain is not normalized");

  std::vector<long> v(static_cast<long>(n) * n * n, 0);
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3)
        v[(static_cast<long>(g1) * n + g2) * n + g3] =
            mod_pos(b(g2, g3) - b(g->mul(g1, g2), g3) +
                        b(g1, g->mul(g2, g3)) - b(g1, g2),
                    modulus);
  return Cocycle3(g, modulus, std::move(v));
}

Cocycle3 cyclic_representative(int n, int q) {
  if (n < 1) throw structural_error("cyclic_representative: n must be >= 1");
  GroupPtr g = cyclic_group(n);
  std::vector<long> v(static_cast<long>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        v[(static_cast<long>(a) * n + b) * n + c] =
            mod_pos(static_cast<long>(q) * a * ((b + c) / n), n);
  Cocycle3 w(std::move(g), n, std::move(v));
  if (!is_cocycle(w))
    throw consistency_error("cyclic_representative failed the cocycle test");
  return w;
}

namespace {

// Index of a non-identity tuple in the packed coordinate space where each
// slot runs over 1..n-1.
long pack2(int a, int b, int n) {
  return static_cast<long>(a - 1) * (n - 1) + (b - 1);
}
long pack3(int a, int b, int c, int n) {
  return (static_cast<long>(a - 1) * (n - 1) + (b - 1)) * (n - 1) + (c - 1);
}

// Matrix of d2: normalized 2-cochains (unknowns indexed by non-identity
// pairs) to normalized 3-cochains (rows indexed by non-identity triples).
// Terms whose argument hits the identity vanish by normalization.
BigMatrix d2_matrix(const FiniteGroup& g) {
  const int n = g.order();
  const long rows = static_cast<long>(n - 1) * (n - 1) * (n - 1);
  const long cols = static_cast<long>(n - 1) * (n - 1);
  BigMatrix a(rows, std::vector<BigInt>(cols, 0));
  for (int g1 = 1; g1 < n; ++g1)
    for (int g2 = 1; g2 < n; ++g2)
      for (int g3 = 1; g3 < n; ++g3) {
        auto& row = a[pack3(g1, g2, g3, n)];
        row[pack2(g2, g3, n)] += 1;
        if (const int p = g.mul(g1, g2); p != 0) row[pack2(p, g3, n)] -= 1;
        if (const int p = g.mul(g2, g3); p != 0) row[pack2(g1, p, n)] += 1;
        row[pack2(g1, g2, n)] -= 1;
      }
  return a;
}

// Matrix of d3 on normalized cochains; rows indexed by non-identity
// quadruples, columns by non-identity triples.
BigMatrix d3_matrix(const FiniteGroup& g) {
  const int n = g.order();
  const long side = n - 1;
  const long rows = side * side * side * side;
  const long cols = side * side * side;
  BigMatrix a(rows, std::vector<BigInt>(cols, 0));
  for (int g1 = 1; g1 < n; ++g1)
    for (int g2 = 1; g2 < n; ++g2)
      for (int g3 = 1; g3 < n; ++g3)
        for (int g4 = 1; g4 < n; ++g4) {
          auto& row = a[((static_cast<long>(g1 - 1) * side + (g2 - 1)) * side +
                         (g3 - 1)) *
                            side +
                        (g4 - 1)];
          row[pack3(g2, g3, g4, n)] += 1;
          if (const int p = g.mul(g1, g2); p != 0)
            row[pack3(p, g3, g4, n)] -= 1;
          if (const int p = g.mul(g2, g3); p != 0)
            row[pack3(g1, p, g4, n)] += 1;
          if (const int p = g.mul(g3, g4); p != 0)
            row[pack3(g1, g2, p, n)] -= 1;
          row[pack3(g1, g2, g3, n)] += 1;
        }
  return a;
}

// Order of the image of (Z/m)^cols under an integer matrix with Smith
// invariants s: product over i of m / gcd(s_i, m).
BigInt image_order(const std::vector<BigInt>& s, long m) {
  BigInt out = 1;
  for (const BigInt& d : s) out *= m / gcd(d, BigInt(m));
  return out;
}

constexpr long kEntryCap = 1L << 26;

}  // namespace

CoboundaryResult is_coboundary(const Cocycle3& alpha) {
  const auto& g = *alpha.group;
  const int n = g.order();
  const long m = alpha.modulus * n;

  CoboundaryResult res;
  res.witness_modulus = m;
  if (alpha.modulus == 1 || n == 1) {
    res.trivial = true;
    res.witness = std::vector<long>(static_cast<long>(n) * n, 0);
    return res;
  }

  const long side = n - 1;
  if (side * side * side * side * side > kEntryCap)
    throw size_error("is_coboundary: coboundary matrix exceeds entry cap");

  const BigMatrix a = d2_matrix(g);
  std::vector<BigInt> b(a.size());
  for (int g1 = 1; g1 < n; ++g1)
    for (int g2 = 1; g2 < n; ++g2)
      for (int g3 = 1; g3 < n; ++g3)
        b[pack3(g1, g2, g3, n)] =
            BigInt(n) * alpha.at(g1, g2, g3);

  const auto x = solve_mod(a, b, BigInt(m));
  if (!x) return res;

  std::vector<long> beta(static_cast<long>(n) * n, 0);
  for (int p = 1; p < n; ++p)
    for (int q = 1; q < n; ++q)
      beta[static_cast<long>(p) * n + q] =
          static_cast<long>((*x)[pack2(p, q, n)]);

  // Replay the witness through the plain coboundary formula.
  const Cocycle3 check = coboundary(alpha.group, m, beta);
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3)
        if (check.at(g1, g2, g3) !=
            mod_pos(static_cast<long>(n) * alpha.at(g1, g2, g3), m))
          throw consistency_error("is_coboundary: witness fails replay");

  res.trivial = true;
  res.witness = std::move(beta);
  return res;
}

long h3_order(const FiniteGroup& g, long modulus) {
  if (modulus < 1) throw structural_error("h3_order: modulus must be >= 1");
  const int n = g.order();
  if (n > 24) throw size_error("h3_order supports groups of order <= 24");
  if (modulus == 1 || n == 1) return 1;

  const long side = n - 1;
  if (side * side * side * side * side * side * side > kEntryCap)
    throw size_error("h3_order: coboundary matrix exceeds entry cap");

  const auto s2 = smith_invariants(d2_matrix(g));
  const auto s3 = smith_invariants(d3_matrix(g));

  const long cochains3 = side * side * side;
  const BigInt im2 = image_order(s2, modulus);
  const BigInt im3 = image_order(s3, modulus);
  const BigInt ker3 = pow(BigInt(modulus), static_cast<unsigned>(cochains3)) / im3;
  if (ker3 % im2 != 0)
    throw consistency_error("h3_order: image does not divide kernel");
  const BigInt h = ker3 / im2;
  if (h > std::numeric_limits<long>::max())
    throw size_error("h3_order result does not fit a long");
  return static_cast<long>(h);
}

Cocycle3 inflate(const Cocycle3& a, const GroupHom& p) {
  if (!a.group->same_as(*p.target))
    throw structural_error("inflate: cocycle lives on the wrong group");
  if (!p.surjective())
    throw precondition_error("inflate: projection not surjective");
  const int n = p.source->order();
  std::vector<long> v(static_cast<long>(n) * n * n);
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3)
        v[(static_cast<long>(g1) * n + g2) * n + g3] =
            a.at(p.map[g1], p.map[g2], p.map[g3]);
  return Cocycle3(p.source, a.modulus, std::move(v));
}

Cocycle3 restrict_cocycle(const Cocycle3& a,
                          const std::vector<int>& sub_elements) {
  Subgroup sg = subgroup(a.group, sub_elements);
  const int m = sg.group->order();
  std::vector<long> v(static_cast<long>(m) * m * m);
  for (int h1 = 0; h1 < m; ++h1)
    for (int h2 = 0; h2 < m; ++h2)
      for (int h3 = 0; h3 < m; ++h3)
        v[(static_cast<long>(h1) * m + h2) * m + h3] =
            a.at(sg.elements[h1], sg.elements[h2], sg.elements[h3]);
  return Cocycle3(sg.group, a.modulus, std::move(v));
}

}  // namespace fuscat
