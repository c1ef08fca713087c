#include "fuscat/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "fuscat/errors.hpp"

namespace fuscat {

namespace {

std::string describe(const FusionRing& r, int i) {
  std::ostringstream os;
  os << r.label(i) << " (#" << i << ")";
  return os.str();
}

}  // namespace

FusionRing::FusionRing(int rank, std::vector<std::string> labels, int unit,
                       std::vector<int> dual,
                       std::vector<std::array<std::int64_t, 4>> quads)
    : rank_(rank), unit_(unit), labels_(std::move(labels)),
      dual_(std::move(dual)) {
  if (rank_ <= 0) throw structural_error("fusion ring rank must be positive");
  if (static_cast<int>(labels_.size()) != rank_)
    throw structural_error("fusion ring label count does not match rank");
  if (static_cast<int>(dual_.size()) != rank_)
    throw structural_error("fusion ring dual list does not match rank");
  if (unit_ < 0 || unit_ >= rank_)
    throw structural_error("fusion ring unit index out of range");
  for (int d : dual_)
    if (d < 0 || d >= rank_)
      throw structural_error("fusion ring dual index out of range");

  std::map<std::array<std::int64_t, 3>, std::int64_t> entries;
  for (const auto& q : quads) {
    for (int t = 0; t < 3; ++t)
      if (q[t] < 0 || q[t] >= rank_)
        throw structural_error("structure constant index out of range");
    if (q[3] < 0)
      throw structural_error("structure constants must be nonnegative");
    if (!entries.emplace(std::array<std::int64_t, 3>{q[0], q[1], q[2]}, q[3])
             .second)
      throw structural_error("duplicate structure constant entry");
  }
  products_.resize(static_cast<std::size_t>(rank_) * rank_);
  for (const auto& [key, n] : entries) {
    if (n == 0) continue;
    products_[key[0] * rank_ + key[1]].emplace_back(static_cast<int>(key[2]),
                                                    n);
  }
  // map iteration is already (i,j,k)-sorted, so each row is sorted by k.
}

std::int64_t FusionRing::n(int i, int j, int k) const {
  for (const auto& [kk, nn] : product(i, j))
    if (kk == k) return nn;
  return 0;
}

const std::vector<std::pair<int, std::int64_t>>& FusionRing::product(
    int i, int j) const {
  return products_.at(static_cast<std::size_t>(i) * rank_ + j);
}

std::vector<std::vector<std::int64_t>> FusionRing::mult_matrix(int i) const {
  std::vector<std::vector<std::int64_t>> m(
      rank_, std::vector<std::int64_t>(rank_, 0));
  for (int j = 0; j < rank_; ++j)
    for (const auto& [k, n] : product(i, j)) m[k][j] = n;
  return m;
}

std::vector<std::array<std::int64_t, 4>> FusionRing::quads() const {
  std::vector<std::array<std::int64_t, 4>> out;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      for (const auto& [k, n] : product(i, j))
        out.push_back({i, j, k, n});
  return out;
}

bool FusionRing::same_as(const FusionRing& other) const {
  return rank_ == other.rank_ && unit_ == other.unit_ &&
         dual_ == other.dual_ && labels_ == other.labels_ &&
         products_ == other.products_;
}

std::vector<Violation> validate(const FusionRing& r) {
  std::vector<Violation> out;
  const int n = r.rank();

  {
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i)
      if (!seen.insert(r.label(i)).second)
        out.push_back({ViolationKind::Structural, "labels",
                       "duplicate label '" + r.label(i) + "'"});
  }
  for (int i = 0; i < n; ++i)
    if (r.dual(r.dual(i)) != i) {
      out.push_back({ViolationKind::Structural, "dual-involution",
                     "dual is not an involution at " + describe(r, i)});
      break;
    }

  if (r.dual(r.unit()) != r.unit())
    out.push_back({ViolationKind::Axiom, "unit-dual",
                   "dual of the unit is not the unit"});

  const int e = r.unit();
  for (int j = 0; j < n; ++j) {
    const bool left_ok =
        r.product(e, j).size() == 1 && r.product(e, j)[0] == std::pair{j, std::int64_t{1}};
    const bool right_ok =
        r.product(j, e).size() == 1 && r.product(j, e)[0] == std::pair{j, std::int64_t{1}};
    if (!left_ok || !right_ok)
      out.push_back({ViolationKind::Axiom, "unit",
                     "unit does not act as identity on " + describe(r, j)});
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::int64_t nije = r.n(i, j, e);
      const std::int64_t expect = (j == r.dual(i)) ? 1 : 0;
      if (nije != expect) {
        std::ostringstream os;
        os << "rigidity: N(" << r.label(i) << "," << r.label(j) << ",unit) = "
           << nije << ", expected " << expect;
        out.push_back({ViolationKind::Axiom, "rigidity", os.str()});
      }
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, nijk] : r.product(i, j)) {
        if (r.n(r.dual(i), k, j) != nijk || r.n(k, r.dual(j), i) != nijk) {
          std::ostringstream os;
          os << "Frobenius reciprocity fails at N(" << r.label(i) << ","
             << r.label(j) << "," << r.label(k) << ")";
          out.push_back({ViolationKind::Axiom, "frobenius", os.str()});
        }
      }
  // The reciprocity scan above only visits nonzero N(i,j,k); a zero entry
  // whose partners are nonzero is caught when the partner is visited.

  std::vector<std::int64_t> lhs(n), rhs(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [m, a] : r.product(i, j))
          for (const auto& [l, b] : r.product(m, k)) lhs[l] += a * b;
        for (const auto& [m, a] : r.product(j, k))
          for (const auto& [l, b] : r.product(i, m)) rhs[l] += a * b;
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails on (" << r.label(i) << "," << r.label(j)
             << "," << r.label(k) << ")";
          out.push_back({ViolationKind::Axiom, "associativity", os.str()});
        }
      }

  std::stable_sort(out.begin(), out.end(),
                   [](const Violation& a, const Violation& b) {
                     return a.kind < b.kind;
                   });
  return out;
}

FPData fpdim(const FusionRing& r, double tol, long max_iter) {
  const int n = r.rank();
  FPData fp;
  fp.dims.resize(n);
  fp.tolerance = tol;
  for (int i = 0; i < n; ++i) {
    // Power iteration on M_i + I; the shift keeps the dominant eigenvalue
    // strictly positive and unique in modulus on every nonnegative matrix.
    const auto m = r.mult_matrix(i);
    std::vector<double> v(n, 1.0 / std::sqrt(double(n))), w(n);
    double lambda = 0.0;
    bool converged = false;
    for (long it = 0; it < max_iter; ++it) {
      for (int k = 0; k < n; ++k) {
        double acc = v[k];
        for (int j = 0; j < n; ++j) acc += double(m[k][j]) * v[j];
        w[k] = acc;
      }
      double nrm = 0.0;
      for (double x : w) nrm += x * x;
      nrm = std::sqrt(nrm);
      if (nrm == 0.0) break;
      double delta = 0.0, ray = 0.0;
      for (int k = 0; k < n; ++k) {
        ray += v[k] * w[k];
        w[k] /= nrm;
        delta = std::max(delta, std::abs(w[k] - v[k]));
      }
      v = w;
      lambda = ray;
      if (delta < tol) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw numerical_error("power iteration did not converge for " +
                            r.label(i));
    fp.dims[i] = lambda - 1.0;
  }
  fp.total = 0.0;
  for (double d : fp.dims) fp.total += d * d;
  return fp;
}

std::set<int> generated_subring(const FusionRing& r,
                                const std::set<int>& seeds) {
  for (int s : seeds)
    if (s < 0 || s >= r.rank())
      throw structural_error("generated_subring: seed index out of range");
  std::set<int> s = seeds;
  s.insert(r.unit());
  for (int x : seeds) s.insert(r.dual(x));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        for (const auto& [k, n] : r.product(a, b)) {
          (void)n;
          if (s.insert(k).second) grew = true;
          if (s.insert(r.dual(k)).second) grew = true;
        }
  }
  return s;
}

bool is_pointed(const FusionRing& r, const FPData& fp, double tol) {
  bool by_dims = true;
  for (double d : fp.dims)
    if (std::abs(d - 1.0) > tol) by_dims = false;

  bool by_matrices = true;
  for (int i = 0; i < r.rank() && by_matrices; ++i) {
    std::vector<int> hit(r.rank(), 0);
    for (int j = 0; j < r.rank(); ++j) {
      const auto& row = r.product(i, j);
      if (row.size() != 1 || row[0].second != 1) {
        by_matrices = false;
        break;
      }
      if (++hit[row[0].first] > 1) {
        by_matrices = false;
        break;
      }
    }
  }

  if (by_dims != by_matrices)
    throw consistency_error(
        "is_pointed: dimension route and permutation route disagree");
  return by_matrices;
}

}  // namespace fuscat
