#include "fuscat/pointed.hpp"

#include <algorithm>

#include "fuscat/errors.hpp"

namespace fuscat {

PointedCategory::PointedCategory(GroupPtr group_in, Cocycle3 alpha_in)
    : group(std::move(group_in)), alpha(std::move(alpha_in)) {
  if (!group) throw structural_error("pointed category with null group");
  if (!group->same_as(*alpha.group))
    throw structural_error(
        "pointed category: cocycle lives on a different group");
  if (!is_cocycle(alpha))
    throw precondition_error(
        "pointed category: associator fails the cocycle condition");
}

FusionRing pointed_fusion_ring(const PointedCategory& c) {
  const auto& g = *c.group;
  const int n = g.order();
  std::vector<int> dual(n);
  std::vector<std::array<std::int64_t, 4>> quads;
  quads.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    dual[i] = g.inv(i);
    for (int j = 0; j < n; ++j) quads.push_back({i, j, g.mul(i, j), 1});
  }
  return FusionRing(n, g.names(), 0, std::move(dual), std::move(quads));
}

PointedSequence build_pointed_exact_sequence(const GroupHom& i,
                                             const GroupHom& p,
                                             const Cocycle3& alpha) {
  if (!check_group_exact(i, p))
    throw precondition_error(
        "build_pointed_exact_sequence: group sequence is not exact");
  if (!alpha.group->same_as(*p.target))
    throw precondition_error(
        "build_pointed_exact_sequence: cocycle must live on the quotient");

  Cocycle3 mid = inflate(alpha, p);
  // The ring only sees the group; the cocycles ride along as associators.
  auto ring_of = [](const GroupPtr& g) {
    const int n = g->order();
    std::vector<int> dual(n);
    std::vector<std::array<std::int64_t, 4>> quads;
    for (int a = 0; a < n; ++a) {
      dual[a] = g->inv(a);
      for (int b = 0; b < n; ++b) quads.push_back({a, b, g->mul(a, b), 1});
    }
    return std::make_shared<FusionRing>(n, g->names(), 0, std::move(dual),
                                        std::move(quads));
  };
  RingPtr sub_ring = ring_of(i.source);
  RingPtr mid_ring = ring_of(i.target);
  RingPtr quot_ring = ring_of(p.target);

  std::vector<std::vector<std::int64_t>> em(
      mid_ring->rank(), std::vector<std::int64_t>(sub_ring->rank(), 0));
  for (int x = 0; x < sub_ring->rank(); ++x) em[i.map[x]][x] = 1;

  std::vector<std::vector<std::int64_t>> pm(
      quot_ring->rank(), std::vector<std::int64_t>(mid_ring->rank(), 0));
  for (int x = 0; x < mid_ring->rank(); ++x) pm[p.map[x]][x] = 1;

  FunctorMatrix embedding(sub_ring, mid_ring, std::move(em));
  FunctorMatrix projection(mid_ring, quot_ring, std::move(pm));
  ExactnessReport report = verify_exact_sequence(embedding, projection);
  if (!report.verdict)
    throw consistency_error(
        "build_pointed_exact_sequence: constructed sequence failed "
        "verification");
  return PointedSequence{std::move(embedding), std::move(projection),
                         std::move(mid), std::move(report)};
}

SimplePointedResult is_simple_pointed(const PointedCategory& c) {
  const int n = c.group->order();
  if (n == 1) return {false, std::nullopt};  // the trivial category

  for (const auto& h : normal_subgroups(*c.group)) {
    const int m = static_cast<int>(h.size());
    if (m == 1 || m == n) continue;
    if (is_coboundary(restrict_cocycle(c.alpha, h)).trivial)
      return {false, h};
  }
  return {true, std::nullopt};
}

bool is_simple_eno(const PointedCategory& c) {
  const int n = c.group->order();
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace fuscat
