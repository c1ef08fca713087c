#include "fuscat/smith.hpp"

#include <algorithm>
#include <utility>

#include "fuscat/errors.hpp"

namespace fuscat {

namespace {

// Transform sinks: row operations are mirrored into u (building U such that
// U*A*V = D) or into an augmented right-hand side b; column operations are
// mirrored into v. Any sink may be null.
struct Sinks {
  BigMatrix* u = nullptr;
  std::vector<BigInt>* b = nullptr;
  BigMatrix* v = nullptr;
};

void row_swap(BigMatrix& a, Sinks& s, std::size_t i, std::size_t j) {
  std::swap(a[i], a[j]);
  if (s.u) std::swap((*s.u)[i], (*s.u)[j]);
  if (s.b) std::swap((*s.b)[i], (*s.b)[j]);
}

// row i += q * row j
void row_addmul(BigMatrix& a, Sinks& s, std::size_t i, std::size_t j,
                const BigInt& q) {
  const std::size_t c = a[i].size();
  for (std::size_t k = 0; k < c; ++k) a[i][k] += q * a[j][k];
  if (s.u) {
    auto& u = *s.u;
    for (std::size_t k = 0; k < u[i].size(); ++k) u[i][k] += q * u[j][k];
  }
  if (s.b) (*s.b)[i] += q * (*s.b)[j];
}

void row_negate(BigMatrix& a, Sinks& s, std::size_t i) {
  for (auto& x : a[i]) x = -x;
  if (s.u)
    for (auto& x : (*s.u)[i]) x = -x;
  if (s.b) (*s.b)[i] = -(*s.b)[i];
}

void col_swap(BigMatrix& a, Sinks& s, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
  if (s.v)
    for (auto& row : *s.v) std::swap(row[i], row[j]);
}

// col i += q * col j
void col_addmul(BigMatrix& a, Sinks& s, std::size_t i, std::size_t j,
                const BigInt& q) {
  for (auto& row : a) row[i] += q * row[j];
  if (s.v)
    for (auto& row : *s.v) row[i] += q * row[j];
}

// Reduces a in place to Smith form (diagonal, nonnegative, each entry
// dividing the next), mirroring operations into the sinks.
void snf_reduce(BigMatrix& a, Sinks s) {
  const std::size_t r = a.size();
  const std::size_t c = r ? a[0].size() : 0;
  const std::size_t steps = std::min(r, c);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (a[i][j] == 0) continue;
          if (!found || abs(a[i][j]) < abs(a[pi][pj])) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return;  // all remaining entries zero
      if (pi != t) row_swap(a, s, t, pi);
      if (pj != t) col_swap(a, s, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        row_addmul(a, s, i, t, -(a[i][t] / a[t][t]));
        if (a[i][t] != 0) clean = false;  // remainder survives, pivot shrinks
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        col_addmul(a, s, j, t, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot divides every remaining entry, or absorb one offending row.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_addmul(a, s, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) row_negate(a, s, t);
  }
}

BigMatrix identity(std::size_t n) {
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void check_rect(const BigMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a[0].size())
      throw structural_error("matrix rows have unequal lengths");
}

// Extended gcd: g = gcd(a,b) with g = x*a + y*b.
BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return abs(a);
  }
  BigInt x1, y1;
  BigInt g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

BigInt mod_norm(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

SmithDecomposition smith_normal_form(const BigMatrix& a_in) {
  check_rect(a_in);
  SmithDecomposition d;
  d.rows = a_in.size();
  d.cols = d.rows ? a_in[0].size() : 0;
  BigMatrix a = a_in;
  d.u = identity(d.rows);
  d.v = identity(d.cols);
  Sinks s;
  s.u = &d.u;
  s.v = &d.v;
  snf_reduce(a, s);
  const std::size_t k = std::min(d.rows, d.cols);
  d.diagonal.resize(k);
  for (std::size_t t = 0; t < k; ++t) d.diagonal[t] = a[t][t];
  return d;
}

std::vector<BigInt> smith_invariants(BigMatrix a) {
  check_rect(a);
  const std::size_t k = a.empty() ? 0 : std::min(a.size(), a[0].size());
  snf_reduce(a, Sinks{});
  std::vector<BigInt> d(k);
  for (std::size_t t = 0; t < k; ++t) d[t] = a[t][t];
  return d;
}

BigInt determinant(BigMatrix a) {
  check_rect(a);
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (a[0].size() != n) throw structural_error("determinant needs a square matrix");
  // Bareiss fraction-free elimination; every division is exact.
  BigInt sign = 1, prev = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (a[t][t] == 0) {
      std::size_t p = t + 1;
      while (p < n && a[p][t] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[t], a[p]);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) / prev;
    prev = a[t][t];
  }
  return sign * a[n - 1][n - 1];
}

std::optional<std::vector<BigInt>> solve_mod(const BigMatrix& a_in,
                                             const std::vector<BigInt>& b_in,
                                             const BigInt& m) {
  check_rect(a_in);
  if (m <= 0) throw structural_error("solve_mod modulus must be positive");
  const std::size_t r = a_in.size();
  const std::size_t c = r ? a_in[0].size() : 0;
  if (b_in.size() != r)
    throw structural_error("solve_mod right-hand side has wrong length");

  BigMatrix a = a_in;
  std::vector<BigInt> b = b_in;
  BigMatrix v = identity(c);
  Sinks s;
  s.b = &b;
  s.v = &v;
  snf_reduce(a, s);

  // Diagonal system d_t y_t = b_t (mod m); rows past the diagonal demand
  // b_t = 0 (mod m).
  std::vector<BigInt> y(c, 0);
  const std::size_t k = std::min(r, c);
  for (std::size_t t = 0; t < k; ++t) {
    const BigInt d = a[t][t];
    const BigInt bt = mod_norm(b[t], m);
    if (d == 0) {
      if (bt != 0) return std::nullopt;
      continue;
    }
    BigInt x0, y0;
    const BigInt g = egcd(d, m, x0, y0);
    if (bt % g != 0) return std::nullopt;
    // y_t = (bt/g) * inverse(d/g) modulo m/g
    const BigInt mg = m / g;
    BigInt inv_x, inv_y;
    egcd(d / g, mg, inv_x, inv_y);
    y[t] = mod_norm((bt / g) * mod_norm(inv_x, mg), mg);
  }
  for (std::size_t t = k; t < r; ++t)
    if (mod_norm(b[t], m) != 0) return std::nullopt;

  std::vector<BigInt> x(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < c; ++j) acc += v[i][j] * y[j];
    x[i] = mod_norm(acc, m);
  }
  return x;
}

}  // namespace fuscat
