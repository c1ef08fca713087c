#include <doctest.h>

#include <cstdint>
#include <vector>

#include "fuscat/smith.hpp"

using namespace fuscat;

namespace {

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  BigMatrix out(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_decomposition(const BigMatrix& a) {
  const SmithDecomposition d = smith_normal_form(a);
  REQUIRE(d.rows == a.size());
  REQUIRE(d.cols == (a.empty() ? 0u : a[0].size()));

  const BigInt du = determinant(d.u);
  const BigInt dv = determinant(d.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));

  const BigMatrix uav = multiply(multiply(d.u, a), d.v);
  for (std::size_t i = 0; i < d.rows; ++i)
    for (std::size_t j = 0; j < d.cols; ++j) {
      const BigInt want = (i == j && i < d.diagonal.size()) ? d.diagonal[i] : 0;
      CHECK(uav[i][j] == want);
    }

  for (std::size_t i = 0; i < d.diagonal.size(); ++i) {
    CHECK(d.diagonal[i] >= 0);
    if (i + 1 < d.diagonal.size() && d.diagonal[i] != 0)
      CHECK(d.diagonal[i + 1] % d.diagonal[i] == 0);
    if (d.diagonal[i] == 0 && i + 1 < d.diagonal.size())
      CHECK(d.diagonal[i + 1] == 0);
  }

  CHECK(smith_invariants(a) == d.diagonal);
}

}  // namespace

TEST_SUITE("smith") {

TEST_CASE("known invariant factors") {
  // diag(2,3) has invariant factors (1,6): the gcd/lcm collapse.
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
  CHECK(smith_invariants({{1, 0}, {0, 0}}) == std::vector<BigInt>{1, 0});
  CHECK(smith_invariants({{0}}) == std::vector<BigInt>{0});
  CHECK(smith_invariants({{4, 2}, {2, 4}}) == std::vector<BigInt>{2, 6});
  // Presentation of Z/2 x Z/4 stays (2,4).
  CHECK(smith_invariants({{2, 0}, {0, 4}}) == std::vector<BigInt>{2, 4});
  // Rectangular: a single row.
  CHECK(smith_invariants({{6, 10, 15}}) == std::vector<BigInt>{1});
}

TEST_CASE("decompositions reconstruct the input") {
  check_decomposition({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  check_decomposition({{1, 2}, {3, 4}, {5, 6}});
  check_decomposition({{0, 0}, {0, 0}});
  check_decomposition({{7}});
  check_decomposition({{2, 4, 6, 8}, {10, 12, 14, 16}});
}

TEST_CASE("random matrices satisfy the decomposition contract") {
  std::uint64_t state = 7;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 1 + splitmix(state) % 5;
    const std::size_t cols = 1 + splitmix(state) % 5;
    BigMatrix a(rows, std::vector<BigInt>(cols));
    for (auto& row : a)
      for (auto& x : row)
        x = static_cast<std::int64_t>(splitmix(state) % 41) - 20;
    check_decomposition(a);
  }
}

TEST_CASE("determinant agrees with cofactor expansion on small cases") {
  CHECK(determinant({{3}}) == 3);
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(determinant({{2, 0, 1}, {1, 1, 0}, {0, 3, 4}}) == 11);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("modular solver finds witnesses and certifies failure") {
  // 2x = 4 (mod 6) is solvable.
  auto sol = solve_mod({{2}}, {4}, 6);
  REQUIRE(sol.has_value());
  CHECK((2 * (*sol)[0]) % 6 == 4);

  // 2x = 3 (mod 6) is not.
  CHECK(!solve_mod({{2}}, {3}, 6).has_value());

  // x + y = 1, x - y = 1 (mod 4): x = 1, y = 0 works.
  auto sys = solve_mod({{1, 1}, {1, -1}}, {1, 1}, 4);
  REQUIRE(sys.has_value());
  const BigInt x = (*sys)[0], y = (*sys)[1];
  CHECK((x + y) % 4 == 1);
  CHECK((((x - y) % 4) + 4) % 4 == 1);

  // Inconsistent overdetermined system.
  CHECK(!solve_mod({{1}, {1}}, {0, 1}, 2).has_value());

  // Zero row forces the right-hand side to vanish mod m.
  CHECK(solve_mod({{0}}, {4}, 4).has_value());
  CHECK(!solve_mod({{0}}, {3}, 4).has_value());
}

TEST_CASE("random modular systems round-trip") {
  std::uint64_t state = 99;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + splitmix(state) % 4;
    const std::size_t m = 1 + splitmix(state) % 4;
    const BigInt mod = 2 + static_cast<std::int64_t>(splitmix(state) % 30);
    BigMatrix a(n, std::vector<BigInt>(m));
    for (auto& row : a)
      for (auto& x : row)
        x = static_cast<std::int64_t>(splitmix(state) % 21) - 10;
    // Build b from a planted solution so the system is always solvable.
    std::vector<BigInt> planted(m), b(n, 0);
    for (auto& x : planted) x = static_cast<std::int64_t>(splitmix(state) % 50);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) b[i] += a[i][j] * planted[j];

    const auto sol = solve_mod(a, b, mod);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += a[i][j] * (*sol)[j];
      CHECK(((acc - b[i]) % mod) == 0);
      CHECK((*sol)[i % m] >= 0);
      CHECK((*sol)[i % m] < mod);
    }
  }
}

}  // TEST_SUITE
