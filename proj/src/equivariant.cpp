#include "fuscat/equivariant.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fuscat/errors.hpp"

namespace fuscat {

GroupAction::GroupAction(GroupPtr group_in, RingPtr ring_in,
                         std::vector<std::vector<int>> perms_in)
    : group(std::move(group_in)), ring(std::move(ring_in)),
      perms(std::move(perms_in)) {
  if (!group || !ring) throw structural_error("action with null group/ring");
  if (static_cast<int>(perms.size()) != group->order())
    throw structural_error("action needs one permutation per group element");
  for (const auto& p : perms)
    if (static_cast<int>(p.size()) != ring->rank())
      throw structural_error("action permutation length != ring rank");
}

std::vector<Violation> validate_action(const GroupAction& a) {
  std::vector<Violation> out;
  const int n = a.group->order();
  const int r = a.ring->rank();

  for (int g = 0; g < n; ++g) {
    std::vector<char> seen(r, 0);
    for (int x : a.perms[g])
      if (x < 0 || x >= r || seen[x]++) {
        out.push_back({ViolationKind::Structural, "permutation",
                       "element " + a.group->name(g) +
                           " does not act by a permutation"});
        break;
      }
  }
  if (!out.empty()) return out;  // later checks would index garbage

  for (int x = 0; x < r; ++x)
    if (a.perms[0][x] != x) {
      out.push_back({ViolationKind::Axiom, "identity",
                     "identity element acts nontrivially"});
      break;
    }

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int gh = a.group->mul(g, h);
      for (int x = 0; x < r; ++x)
        if (a.perms[gh][x] != a.perms[g][a.perms[h][x]]) {
          std::ostringstream os;
          os << "action is not a homomorphism at (" << a.group->name(g)
             << "," << a.group->name(h) << ")";
          out.push_back({ViolationKind::Axiom, "homomorphism", os.str()});
          g = h = n;  // one witness is enough
          break;
        }
    }

  for (int g = 0; g < n; ++g)
    if (a.perms[g][a.ring->unit()] != a.ring->unit()) {
      out.push_back({ViolationKind::Axiom, "unit",
                     "action moves the unit object"});
      break;
    }

  for (int g = 0; g < n; ++g) {
    bool bad = false;
    for (int x = 0; x < r && !bad; ++x)
      bad = a.perms[g][a.ring->dual(x)] != a.ring->dual(a.perms[g][x]);
    if (bad) {
      out.push_back({ViolationKind::Axiom, "duality",
                     "action does not commute with duality"});
      break;
    }
  }

  for (int g = 0; g < n; ++g) {
    bool bad = false;
    for (int i = 0; i < r && !bad; ++i)
      for (int j = 0; j < r && !bad; ++j)
        for (const auto& [k, v] : a.ring->product(i, j))
          if (a.ring->n(a.perms[g][i], a.perms[g][j], a.perms[g][k]) != v) {
            std::ostringstream os;
            os << "element " << a.group->name(g)
               << " does not preserve the structure constants";
            out.push_back({ViolationKind::Axiom, "structure-constants",
                           os.str()});
            bad = true;
            break;
          }
    if (bad) break;
  }
  return out;
}

EquivariantSimples equivariant_simples(const GroupAction& a, double tol) {
  if (!validate_action(a).empty())
    throw precondition_error("equivariant_simples: action is not valid");

  const int n = a.group->order();
  const int r = a.ring->rank();
  const FPData fp = fpdim(*a.ring);

  EquivariantSimples out;
  std::vector<char> seen(r, 0);
  for (int x = 0; x < r; ++x) {
    if (seen[x]) continue;
    std::set<int> orbit_set;
    std::vector<int> stab;
    for (int g = 0; g < n; ++g) {
      orbit_set.insert(a.perms[g][x]);
      if (a.perms[g][x] == x) stab.push_back(g);
    }
    std::vector<int> orbit(orbit_set.begin(), orbit_set.end());
    double orbit_dim = 0.0;
    for (int y : orbit) {
      seen[y] = 1;
      orbit_dim += fp.dims[y];
      if (std::abs(fp.dims[y] - fp.dims[x]) > kPerObjectTol)
        throw consistency_error(
            "equivariant_simples: orbit members have unequal dimensions");
    }

    const Subgroup sg = subgroup(a.group, stab);
    const CharacterTable st = character_table(sg.group);
    for (std::size_t row = 0; row < st.degrees.size(); ++row) {
      EquivariantSimple e;
      e.orbit = orbit;
      e.irrep = static_cast<int>(row);
      e.degree = st.degrees[row];
      e.dim = static_cast<double>(e.degree) * orbit_dim;
      if (orbit.size() == 1 && orbit[0] == a.ring->unit() && row == 0)
        out.unit_entry = static_cast<int>(out.entries.size());
      out.entries.push_back(std::move(e));
    }
  }

  out.total = 0.0;
  for (const auto& e : out.entries) out.total += e.dim * e.dim;
  out.identity_residual = std::abs(out.total - double(n) * fp.total);
  if (out.identity_residual > tol)
    throw consistency_error(
        "equivariant_simples: dimension identity FPdim(C^G) = |G| FPdim(C) "
        "failed");
  if (out.unit_entry < 0)
    throw consistency_error("equivariant_simples: missing unit entry");
  return out;
}

ForgetfulFunctor forgetful_functor(const GroupAction& a,
                                   const EquivariantSimples& s) {
  const int r = a.ring->rank();
  ForgetfulFunctor f;
  f.target = a.ring;
  f.m.assign(r, std::vector<std::int64_t>(s.entries.size(), 0));
  for (std::size_t e = 0; e < s.entries.size(); ++e)
    for (int y : s.entries[e].orbit) f.m[y][e] = s.entries[e].degree;
  return f;
}

EquivariantSequenceReport check_equivariant_sequence(const GroupAction& a,
                                                     double tol,
                                                     std::uint64_t seed) {
  EquivariantSequenceReport rep;
  rep.action_valid = validate_action(a).empty();
  if (!rep.action_valid) return rep;

  const EquivariantSimples s = equivariant_simples(a, tol);
  const ForgetfulFunctor f = forgetful_functor(a, s);
  const int unit = a.ring->unit();
  rep.dim_identity_residual = s.identity_residual;

  // Kernel by the dimension criterion: an entry is trivialized by the
  // forgetful functor exactly when its dimension sits over the ring unit.
  std::set<int> kernel, unit_orbit;
  for (std::size_t e = 0; e < s.entries.size(); ++e) {
    if (std::abs(s.entries[e].dim -
                 static_cast<double>(f.m[unit][e])) <= kPerObjectTol)
      kernel.insert(static_cast<int>(e));
    if (s.entries[e].orbit == std::vector<int>{unit})
      unit_orbit.insert(static_cast<int>(e));
  }
  rep.kernel_is_unit_orbit = kernel == unit_orbit;

  // The kernel must be a copy of rep(G): same degree multiset as Irr(G) and
  // total dimension |G|.
  std::vector<int> kernel_degrees;
  double kernel_total = 0.0;
  for (int e : kernel) {
    kernel_degrees.push_back(s.entries[e].degree);
    kernel_total += s.entries[e].dim * s.entries[e].dim;
  }
  std::vector<int> irr_degrees = character_table(a.group, seed).degrees;
  std::sort(kernel_degrees.begin(), kernel_degrees.end());
  std::sort(irr_degrees.begin(), irr_degrees.end());
  rep.kernel_matches_rep_g =
      kernel_degrees == irr_degrees &&
      std::abs(kernel_total - double(a.group->order())) <= tol;

  rep.dominant = true;
  for (int y = 0; y < a.ring->rank(); ++y) {
    bool hit = false;
    for (std::size_t e = 0; e < s.entries.size() && !hit; ++e)
      hit = f.m[y][e] > 0;
    if (!hit) rep.dominant = false;
  }

  rep.normal = true;
  for (std::size_t e = 0; e < s.entries.size(); ++e)
    if (f.m[unit][e] > 0 && !kernel.count(static_cast<int>(e)))
      rep.normal = false;

  rep.verdict = rep.kernel_is_unit_orbit && rep.kernel_matches_rep_g &&
                rep.dominant && rep.normal &&
                rep.dim_identity_residual <= tol;
  return rep;
}

}  // namespace fuscat
