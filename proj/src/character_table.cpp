#include "fuscat/character_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fuscat/errors.hpp"

namespace fuscat {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_range(std::uint64_t& state) {
  return 1.0 + static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

using Complex = std::complex<double>;

// One attempt of the class-algebra method with a fixed coefficient vector t.
// Returns false when this t fails any integrity gate (degenerate spectrum,
// non-integer degree, broken orthogonality) and a fresh t should be tried.
bool attempt_table(const FiniteGroup& g,
                   const std::vector<std::vector<int>>& classes,
                   const std::vector<int>& class_of,
                   const std::vector<double>& t, CharacterTable& out) {
  const int r = static_cast<int>(classes.size());
  const int n = g.order();

  // N = sum_i t_i M_i where (M_i)[j][k] counts pairs (x in C_i, y in C_j)
  // with x*y = z_k. Streaming over x avoids storing any M_i: for fixed
  // class rep z_k, x contributes t[class(x)] at row class(inv(x) z_k).
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(r, r);
  for (int k = 0; k < r; ++k) {
    const int zk = classes[k][0];
    for (int x = 0; x < n; ++x)
      big(class_of[g.mul(g.inv(x), zk)], k) += t[class_of[x]];
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(big);
  if (es.info() != Eigen::Success) return false;
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();

  double scale = 1.0;
  for (int i = 0; i < r; ++i) scale = std::max(scale, std::abs(vals[i]));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (std::abs(vals[i] - vals[j]) < 1e-8 * scale) return false;

  // Each eigenvector, normalized at the identity class, is the vector of
  // central character values omega_i = |C_i| chi(g_i) / chi(1).
  std::vector<std::vector<Complex>> chi(r, std::vector<Complex>(r));
  std::vector<int> degrees(r);
  for (int e = 0; e < r; ++e) {
    Eigen::VectorXcd v = vecs.col(e);
    if (std::abs(v(0)) < 1e-10 * v.norm()) return false;
    v /= v(0);
    double s = 0.0;
    for (int k = 0; k < r; ++k)
      s += std::norm(v(k)) / static_cast<double>(classes[k].size());
    const double d = std::sqrt(static_cast<double>(n) / s);
    const long dr = std::lround(d);
    if (dr < 1 || std::abs(d - static_cast<double>(dr)) > 1e-6) return false;
    degrees[e] = static_cast<int>(dr);
    for (int k = 0; k < r; ++k)
      chi[e][k] = static_cast<double>(dr) * v(k) /
                  static_cast<double>(classes[k].size());
  }

  long deg_sq = 0;
  for (int e = 0; e < r; ++e) deg_sq += long(degrees[e]) * degrees[e];
  if (deg_sq != n) return false;

  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Complex acc = 0.0;
      for (int k = 0; k < r; ++k)
        acc += static_cast<double>(classes[k].size()) * chi[a][k] *
               std::conj(chi[b][k]);
      acc /= static_cast<double>(n);
      if (std::abs(acc - (a == b ? 1.0 : 0.0)) > 1e-6) return false;
    }

  // Trivial character to row 0, the rest by (degree, rounded values).
  int triv = -1;
  for (int e = 0; e < r; ++e) {
    bool all_one = true;
    for (int k = 0; k < r; ++k)
      if (std::abs(chi[e][k] - 1.0) > 1e-6) all_one = false;
    if (all_one) {
      triv = e;
      break;
    }
  }
  if (triv < 0) return false;

  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  order.erase(order.begin() + triv);
  auto key = [&](int e) {
    std::vector<long long> k;
    k.reserve(2 * r + 1);
    k.push_back(degrees[e]);
    for (int c = 0; c < r; ++c) {
      k.push_back(std::llround(chi[e][c].real() * 1e6));
      k.push_back(std::llround(chi[e][c].imag() * 1e6));
    }
    return k;
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key(a) < key(b); });
  order.insert(order.begin(), triv);

  out.chi.assign(r, {});
  out.degrees.assign(r, 0);
  for (int e = 0; e < r; ++e) {
    out.chi[e] = chi[order[e]];
    out.degrees[e] = degrees[order[e]];
  }
  return true;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g, std::uint64_t seed) {
  if (!g) throw structural_error("character_table: null group");
  CharacterTable out;
  out.group = g;
  out.classes = conjugacy_classes(*g);
  out.class_of.assign(g->order(), -1);
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (int x : out.classes[c]) out.class_of[x] = static_cast<int>(c);

  const int r = static_cast<int>(out.classes.size());
  std::uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 0x243F6A8885A308D3ULL;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> t(r);
    for (double& x : t) x = unit_range(state);
    if (attempt_table(*g, out.classes, out.class_of, t, out)) return out;
  }
  throw numerical_error(
      "character_table: class-algebra eigenvector search failed after 64 "
      "seeded attempts");
}

namespace {

std::int64_t round_checked(double re, double im, const char* what) {
  if (std::abs(im) > 1e-6)
    throw numerical_error(std::string(what) + ": non-real value");
  const long long r = std::llround(re);
  if (std::abs(re - static_cast<double>(r)) > 1e-6)
    throw numerical_error(std::string(what) + ": non-integer value");
  return r;
}

}  // namespace

FusionRing rep_fusion_ring(const CharacterTable& t) {
  const int r = static_cast<int>(t.chi.size());
  const int n = t.group->order();

  std::vector<int> dual(r, -1);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      bool match = true;
      for (int c = 0; c < r && match; ++c)
        if (std::abs(t.chi[j][c] - std::conj(t.chi[i][c])) > 1e-6)
          match = false;
      if (match) {
        dual[i] = j;
        break;
      }
    }
    if (dual[i] < 0)
      throw numerical_error("rep_fusion_ring: missing conjugate character");
  }

  std::vector<std::array<std::int64_t, 4>> quads;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        Complex acc = 0.0;
        for (int c = 0; c < r; ++c)
          acc += static_cast<double>(t.classes[c].size()) * t.chi[i][c] *
                 t.chi[j][c] * std::conj(t.chi[k][c]);
        acc /= static_cast<double>(n);
        const std::int64_t v =
            round_checked(acc.real(), acc.imag(), "rep_fusion_ring");
        if (v < 0)
          throw numerical_error("rep_fusion_ring: negative multiplicity");
        if (v > 0) quads.push_back({i, j, k, v});
      }

  std::vector<std::string> labels(r);
  for (int i = 0; i < r; ++i) labels[i] = "chi" + std::to_string(i);
  return FusionRing(r, std::move(labels), 0, std::move(dual),
                    std::move(quads));
}

FunctorMatrix restriction_functor(const CharacterTable& t,
                                  const std::vector<int>& sub_elements) {
  Subgroup sg = subgroup(t.group, sub_elements);
  CharacterTable st = character_table(sg.group);
  const int nh = sg.group->order();
  const int rows = static_cast<int>(st.chi.size());
  const int cols = static_cast<int>(t.chi.size());

  std::vector<std::vector<std::int64_t>> m(
      rows, std::vector<std::int64_t>(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Complex acc = 0.0;
      for (int h = 0; h < nh; ++h)
        acc += t.chi[j][t.class_of[sg.elements[h]]] *
               std::conj(st.chi[i][st.class_of[h]]);
      acc /= static_cast<double>(nh);
      m[i][j] = round_checked(acc.real(), acc.imag(), "restriction_functor");
      if (m[i][j] < 0)
        throw numerical_error("restriction_functor: negative multiplicity");
    }

  auto src = std::make_shared<FusionRing>(rep_fusion_ring(t));
  auto dst = std::make_shared<FusionRing>(rep_fusion_ring(st));
  return FunctorMatrix(std::move(src), std::move(dst), std::move(m));
}

FunctorMatrix inflation_functor(const CharacterTable& quot,
                                const GroupHom& p) {
  if (!quot.group->same_as(*p.target))
    throw structural_error(
        "inflation_functor: table group is not the projection target");
  if (!p.surjective())
    throw precondition_error("inflation_functor: projection not surjective");

  CharacterTable gt = character_table(p.source);
  const int n = p.source->order();
  const int rows = static_cast<int>(gt.chi.size());
  const int cols = static_cast<int>(quot.chi.size());

  std::vector<std::vector<std::int64_t>> m(
      rows, std::vector<std::int64_t>(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Complex acc = 0.0;
      for (int x = 0; x < n; ++x)
        acc += quot.chi[j][quot.class_of[p.map[x]]] *
               std::conj(gt.chi[i][gt.class_of[x]]);
      acc /= static_cast<double>(n);
      m[i][j] = round_checked(acc.real(), acc.imag(), "inflation_functor");
      if (m[i][j] < 0 || m[i][j] > 1)
        throw consistency_error(
            "inflation_functor: entry outside {0,1}");
    }
  for (int j = 0; j < cols; ++j) {
    int hits = 0;
    for (int i = 0; i < rows; ++i) hits += static_cast<int>(m[i][j]);
    if (hits != 1)
      throw consistency_error(
          "inflation_functor: column is not a unit vector");
  }

  auto src = std::make_shared<FusionRing>(rep_fusion_ring(quot));
  auto dst = std::make_shared<FusionRing>(rep_fusion_ring(gt));
  return FunctorMatrix(std::move(src), std::move(dst), std::move(m));
}

}  // namespace fuscat
