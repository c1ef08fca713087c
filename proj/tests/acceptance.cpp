// Acceptance gate for the fuscat library: one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fuscat/character_table.hpp"
#include "fuscat/cocycle.hpp"
#include "fuscat/equivariant.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/finite_group.hpp"
#include "fuscat/functor_matrix.hpp"
#include "fuscat/fusion_ring.hpp"
#include "fuscat/pointed.hpp"
#include "fuscat/serialization.hpp"
#include "fuscat/smith.hpp"
#include "fuscat/workspace.hpp"

using namespace fuscat;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

const fs::path kCorpus = FUSCAT_CORPUS_DIR;

constexpr double kPerTol = 1e-9;    // per-object comparisons
constexpr double kAggTol = 1e-6;    // aggregate dimension identities
constexpr double kPowerTol = 1e-12; // power-iteration convergence

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<int> normal_subgroup_of_size(const FiniteGroup& g, std::size_t n) {
  for (const auto& s : normal_subgroups(g))
    if (s.size() == n) return s;
  throw structural_error("no normal subgroup of the requested size");
}

// rep(G/N) -> rep(G) -> rep(N) from a group and a normal subgroup.
std::pair<FunctorMatrix, FunctorMatrix> sequence_from_extension(
    const GroupPtr& g, const std::vector<int>& normal) {
  const CharacterTable tg = character_table(g);
  const Quotient q = quotient(g, normal);
  const FunctorMatrix i =
      inflation_functor(character_table(q.group), q.projection);
  const FunctorMatrix f = restriction_functor(tg, normal);
  return {i, f};
}

// Dominant functors exercised by the index and monad criteria.
std::vector<std::pair<std::string, FunctorMatrix>> dominant_samples(
    const Workspace& ws) {
  std::vector<std::pair<std::string, FunctorMatrix>> out;
  out.emplace_back("res_s3_a3", ws.functors.at("res_s3_a3"));
  out.emplace_back("res_s3_z2", ws.functors.at("res_s3_z2"));
  out.emplace_back("res_z4_z2",
                   restriction_functor(character_table(cyclic_group(4)),
                                       {0, 2}));
  out.emplace_back("res_d4_z4",
                   restriction_functor(character_table(dihedral_group(4)),
                                       {0, 1, 2, 3}));
  out.emplace_back("res_q8_z4",
                   restriction_functor(character_table(quaternion_group()),
                                       {0, 1, 2, 3}));
  {
    const GroupPtr a4 = alternating_group(4);
    out.emplace_back("res_a4_v4",
                     restriction_functor(character_table(a4),
                                         normal_subgroup_of_size(*a4, 4)));
  }
  {
    const GroupPtr s4 = symmetric_group(4);
    out.emplace_back("res_s4_a4",
                     restriction_functor(character_table(s4),
                                         normal_subgroup_of_size(*s4, 12)));
  }
  return out;
}

// ---------------------------------------------------------------- criteria

Check criterion_group_sequences() {
  Check c;
  struct Item {
    std::string name;
    GroupPtr g;
    std::size_t normal_size;
  };
  const std::vector<Item> items = {
      {"S3 over A3", symmetric_group(3), 3},
      {"Z4 over Z2", cyclic_group(4), 2},
      {"A4 over V4", alternating_group(4), 4}};
  for (const auto& item : items) {
    const auto t0 = clock_type::now();
    const auto n = normal_subgroup_of_size(*item.g, item.normal_size);
    const auto [i, f] = sequence_from_extension(item.g, n);
    const ExactnessReport r = verify_exact_sequence(i, f, kPerTol, kAggTol);
    const double dt = seconds_since(t0);
    c.expect(r.verdict, item.name + ": verdict false");
    c.expect(!r.internal_inconsistency, item.name + ": inconsistent flags");
    c.expect(r.dim_product_residual < kAggTol,
             item.name + ": dimension product residual too large");
    c.expect(r.fiber_max_residual < kAggTol,
             item.name + ": fiber residual too large");
    c.expect(dt < 5.0, item.name + ": exceeded 5 s");
  }
  return c;
}

Check criterion_normality_dichotomy(const Workspace& ws) {
  Check c;
  const FunctorMatrix& to_a3 = ws.functors.at("res_s3_a3");
  const FPData src = fpdim(*to_a3.source(), kPowerTol);
  c.expect(is_dominant(to_a3), "restriction to A3 not dominant");
  c.expect(is_normal(to_a3, src, kPerTol), "restriction to A3 not normal");
  c.expect(kernel_simples(to_a3, src, kPerTol) == std::set<int>{0, 1},
           "kernel of the A3 restriction is not {triv, sign}");

  const FunctorMatrix& to_z2 = ws.functors.at("res_s3_z2");
  const FPData src2 = fpdim(*to_z2.source(), kPowerTol);
  c.expect(is_dominant(to_z2), "restriction to Z2 not dominant");
  c.expect(!is_normal(to_z2, src2, kPerTol),
           "restriction to Z2 unexpectedly normal");
  // Witness: a two-dimensional simple meets the unit with multiplicity one.
  const int unit = to_z2.target()->unit();
  bool witness = false;
  for (int x = 0; x < to_z2.source()->rank(); ++x)
    if (to_z2.at(unit, x) == 1 && std::abs(src2.dims[x] - 2.0) < kPerTol)
      witness = true;
  c.expect(witness, "no 2-dimensional witness against normality");
  return c;
}

Check criterion_index2(const Workspace& ws) {
  Check c;
  {
    const FunctorMatrix& f = ws.functors.at("res_s3_a3");
    const Index2Report r = index2_check(f, fpdim(*f.source(), kPowerTol),
                                        fpdim(*f.target(), kPowerTol),
                                        kPerTol, kAggTol);
    c.expect(r.passed, "S3/A3 restriction fails the index-2 battery");
    c.expect(r.unique_invertible && r.j_self_dual && r.j_squares_to_unit,
             "S3/A3: invertible structure wrong");
    c.expect(r.normal && r.kernel_is_z2, "S3/A3: kernel not Z2");
  }
  {
    const FunctorMatrix f =
        restriction_functor(character_table(dihedral_group(4)), {0, 1, 2, 3});
    const Index2Report r = index2_check(f, fpdim(*f.source(), kPowerTol),
                                        fpdim(*f.target(), kPowerTol),
                                        kPerTol, kAggTol);
    c.expect(r.passed, "D4/Z4 restriction fails the index-2 battery");
    c.expect(r.kernel_is_z2, "D4/Z4: kernel not Z2");
  }
  return c;
}

Check criterion_fp_index(const Workspace& ws) {
  Check c;
  int used = 0;
  for (const auto& [name, f] : dominant_samples(ws)) {
    if (!is_dominant(f)) continue;
    const FPData src = fpdim(*f.source(), kPowerTol);
    const FPData dst = fpdim(*f.target(), kPowerTol);
    const double ratio = src.total / dst.total;
    double adjoint = 0.0;
    const int unit = f.target()->unit();
    for (int x = 0; x < f.source()->rank(); ++x)
      adjoint += static_cast<double>(f.at(unit, x)) * src.dims[x];
    c.expect(std::abs(ratio - adjoint) < kAggTol,
             name + ": index routes disagree");
    // The guarded entry point must agree with the direct ratio.
    c.expect(std::abs(fp_index(f, src, dst, kAggTol) - ratio) < kAggTol,
             name + ": fp_index diverges from the ratio");
    ++used;
  }
  c.expect(used >= 6, "fewer than 6 dominant functors exercised");
  return c;
}

Check criterion_monad(const Workspace& ws) {
  Check c;
  std::vector<std::pair<std::string, FunctorMatrix>> all =
      dominant_samples(ws);
  all.emplace_back("infl_z2_s3", ws.functors.at("infl_z2_s3"));
  for (const auto& [name, f] : all) {
    const MonadReport r = monad_checks(f, fpdim(*f.source(), kPowerTol),
                                       fpdim(*f.target(), kPowerTol));
    c.expect(r.agree, name + ": monad and kernel normality disagree");
    if (r.dominant) {
      c.expect(r.index_residual < kAggTol,
               name + ": monad unit dimension off the index");
      c.expect(r.scaling_residual < kAggTol,
               name + ": monad scaling identity violated");
    }
  }
  return c;
}

Check criterion_cohomology() {
  Check c;
  const auto t0 = clock_type::now();
  for (int n = 2; n <= 6; ++n)
    c.expect(h3_order(*cyclic_group(n), n) == n,
             "h3 order wrong for the cyclic group of order " +
                 std::to_string(n));

  for (int n = 2; n <= 6; ++n)
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < n; ++p) {
        const Cocycle3 diff =
            cyclic_representative(n, q).minus(cyclic_representative(n, p));
        const bool same = is_coboundary(diff).trivial;
        c.expect(same == (p == q),
                 "class separation failed at n=" + std::to_string(n) +
                     " q=" + std::to_string(q) + " p=" + std::to_string(p));
      }

  {
    const PointedCategory z5 =
        pointed_from_json(load_json_file(kCorpus / "pointed_z5_triv.json"));
    c.expect(is_simple_pointed(z5).simple, "C(Z5, 0) should be simple");

    const PointedCategory s3 =
        pointed_from_json(load_json_file(kCorpus / "pointed_s3_triv.json"));
    const SimplePointedResult rs3 = is_simple_pointed(s3);
    c.expect(!rs3.simple, "C(S3, 0) should not be simple");
    c.expect(rs3.witness.has_value() &&
                 *rs3.witness == std::vector<int>{0, 1, 3},
             "C(S3, 0) witness is not the alternating subgroup");

    const PointedCategory tw =
        pointed_from_json(load_json_file(kCorpus / "pointed_z4_w1.json"));
    c.expect(is_simple_pointed(tw).simple,
             "the twisted C(Z4, w1) should be simple");
  }

  for (int p = 1; p <= 13; ++p) {
    bool prime = p > 1;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    const GroupPtr g = cyclic_group(p);
    const std::size_t n3 = static_cast<std::size_t>(p) * p * p;
    const PointedCategory cat(g, Cocycle3(g, 1, std::vector<long>(n3, 0)));
    c.expect(is_simple_eno(cat) == prime,
             "prime-order criterion wrong at " + std::to_string(p));
  }

  c.expect(seconds_since(t0) < 60.0, "cohomology battery exceeded 60 s");
  return c;
}

Check criterion_equivariant() {
  Check c;
  {
    const GroupAction a =
        action_from_json(load_json_file(kCorpus / "act_triv_z2_vec.json"));
    const EquivariantSimples s = equivariant_simples(a, kAggTol);
    c.expect(s.entries.size() == 2, "trivial Z2 action: wrong simple count");
    for (const auto& e : s.entries)
      c.expect(std::abs(e.dim - 1.0) < kPerTol,
               "trivial Z2 action: non-unit dimension");
  }
  {
    const GroupAction a =
        action_from_json(load_json_file(kCorpus / "act_inv_z3.json"));
    const EquivariantSimples s = equivariant_simples(a, kAggTol);
    std::multiset<long> dims;
    for (const auto& e : s.entries)
      dims.insert(std::lround(e.dim * 1e6));
    c.expect(dims == std::multiset<long>{1000000, 1000000, 2000000},
             "inversion action: dimensions are not (1,1,2)");
    c.expect(std::abs(s.total - 6.0) < kAggTol,
             "inversion action: total is not 6");
  }
  for (const char* name : {"act_triv_z2_vec.json", "act_inv_z3.json",
                           "act_cycle_v4.json", "act_swap_v4.json"}) {
    const GroupAction a = action_from_json(load_json_file(kCorpus / name));
    const EquivariantSimples s = equivariant_simples(a, kAggTol);
    c.expect(s.identity_residual < kAggTol,
             std::string(name) + ": dimension identity violated");
    const EquivariantSequenceReport r =
        check_equivariant_sequence(a, kAggTol);
    c.expect(r.verdict, std::string(name) + ": sequence verdict false");
  }
  return c;
}

Check criterion_character_tables() {
  Check c;
  std::vector<std::pair<std::string, GroupPtr>> groups;
  for (int n = 2; n <= 8; ++n)
    groups.emplace_back("Z" + std::to_string(n), cyclic_group(n));
  groups.emplace_back("S3", symmetric_group(3));
  groups.emplace_back("D4", dihedral_group(4));
  groups.emplace_back("Q8", quaternion_group());
  groups.emplace_back("A4", alternating_group(4));
  groups.emplace_back("D5", dihedral_group(5));
  groups.emplace_back("S4", symmetric_group(4));
  groups.emplace_back("A5", alternating_group(5));

  for (const auto& [name, g] : groups) {
    const CharacterTable t = character_table(g);
    long long sq = 0;
    for (int d : t.degrees) sq += static_cast<long long>(d) * d;
    c.expect(sq == g->order(), name + ": degree squares do not sum to |G|");

    double worst = 0.0;
    for (std::size_t i = 0; i < t.chi.size(); ++i)
      for (std::size_t j = 0; j < t.chi.size(); ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < t.classes.size(); ++k)
          acc += static_cast<double>(t.classes[k].size()) * t.chi[i][k] *
                 std::conj(t.chi[j][k]);
        acc /= static_cast<double>(g->order());
        worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
      }
    c.expect(worst < kAggTol, name + ": row orthogonality above tolerance");

    try {
      const FusionRing r = rep_fusion_ring(t);
      c.expect(validate(r).empty(), name + ": character ring fails axioms");
    } catch (const error& e) {
      c.expect(false, name + ": character ring construction threw: " +
                          std::string(e.what()));
    }
  }
  return c;
}

Check criterion_properties(const Workspace& ws) {
  Check c;

  // Single-entry mutations at reciprocity-breaking or unit slots are
  // always flagged by the validator.
  {
    std::uint64_t state = 42;
    int tested = 0;
    for (const char* name : {"fibonacci.json", "ising.json", "rep_s3.json",
                             "z3_ring.json", "z2z2_ring.json"}) {
      const FusionRing base =
          ring_from_json(load_json_file(kCorpus / name));
      for (int trial = 0; trial < 64; ++trial) {
        const int n = base.rank();
        const int i = static_cast<int>(splitmix(state) % n);
        const int j = static_cast<int>(splitmix(state) % n);
        const int k = static_cast<int>(splitmix(state) % n);
        const bool unit_slot =
            i == base.unit() || j == base.unit() || k == base.unit();
        const bool orbit_nontrivial = !(base.dual(i) == i && j == k) ||
                                      !(base.dual(j) == j && i == k);
        if (!unit_slot && !orbit_nontrivial) continue;
        auto quads = base.quads();
        bool bumped = false;
        for (auto& q : quads)
          if (q[0] == i && q[1] == j && q[2] == k) {
            q[3] += 1;
            bumped = true;
          }
        if (!bumped) quads.push_back({i, j, k, 1});
        std::vector<int> dual(n);
        for (int d = 0; d < n; ++d) dual[d] = base.dual(d);
        const FusionRing mutated(n, base.labels(), base.unit(), dual, quads);
        if (validate(mutated).empty()) {
          c.expect(false, std::string(name) + ": mutation not flagged");
          break;
        }
        ++tested;
      }
    }
    c.expect(tested > 150, "too few effective ring mutations");
  }

  // d after d vanishes: coboundaries of random 2-cochains are cocycles.
  {
    std::uint64_t state = 2024;
    const std::vector<GroupPtr> groups = {
        cyclic_group(2), cyclic_group(3), cyclic_group(4), cyclic_group(5),
        cyclic_group(6), cyclic_group(7), cyclic_group(8),
        from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}),
        symmetric_group(3), dihedral_group(4), quaternion_group()};
    for (const GroupPtr& g : groups) {
      const int n = g->order();
      for (int trial = 0; trial < 200; ++trial) {
        const long m = 2 + static_cast<long>(splitmix(state) % 11);
        std::vector<long> beta(static_cast<std::size_t>(n) * n, 0);
        for (int a = 1; a < n; ++a)
          for (int b = 1; b < n; ++b)
            beta[static_cast<std::size_t>(a) * n + b] = static_cast<long>(
                splitmix(state) % static_cast<std::uint64_t>(m));
        if (!is_cocycle(coboundary(g, m, beta))) {
          c.expect(false, "coboundary fails the cocycle condition on a group"
                          " of order " + std::to_string(n));
          break;
        }
      }
    }
  }

  // Kernels of corpus functors are closed fusion subrings.
  for (const auto& [name, f] : ws.functors) {
    const FPData src = fpdim(*f.source(), kPowerTol);
    const std::set<int> ker = kernel_simples(f, src, kPerTol);
    c.expect(generated_subring(*f.source(), ker) == ker,
             name + ": kernel is not closed");
  }

  // FP dimensions are constant along orbits of corpus actions.
  for (const char* name : {"act_triv_z2_vec.json", "act_inv_z3.json",
                           "act_cycle_v4.json", "act_swap_v4.json"}) {
    const GroupAction a = action_from_json(load_json_file(kCorpus / name));
    const FPData fp = fpdim(*a.ring, kPowerTol);
    for (const auto& perm : a.perms)
      for (int x = 0; x < a.ring->rank(); ++x)
        c.expect(std::abs(fp.dims[perm[x]] - fp.dims[x]) < kPerTol,
                 std::string(name) + ": dimension moved along an orbit");
  }
  return c;
}

}  // namespace

int main() {
  std::cout << "fuscat acceptance battery\n"
            << "tolerances: per-object " << kPerTol << ", aggregate "
            << kAggTol << ", power iteration " << kPowerTol << "\n\n";

  Workspace ws;
  try {
    ws = load_workspace(kCorpus / "s3_pipeline.json");
  } catch (const std::exception& e) {
    std::cout << "FAIL  workspace corpus did not load: " << e.what() << "\n";
    return 9;
  }

  struct Criterion {
    std::string label;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"group-extension sequences verify exactly",
       [] { return criterion_group_sequences(); }},
      {"normality dichotomy of the two S3 restrictions",
       [&] { return criterion_normality_dichotomy(ws); }},
      {"index-2 battery on S3/A3 and D4/Z4",
       [&] { return criterion_index2(ws); }},
      {"index identity across dominant functors",
       [&] { return criterion_fp_index(ws); }},
      {"monad checks agree with kernel criteria",
       [&] { return criterion_monad(ws); }},
      {"cohomology orders, class separation, simplicity",
       [] { return criterion_cohomology(); }},
      {"equivariantization dimensions and sequences",
       [] { return criterion_equivariant(); }},
      {"character-table integrity",
       [] { return criterion_character_tables(); }},
      {"property suites (mutation, d*d=0, closure, invariance)",
       [&] { return criterion_properties(ws); }},
  };

  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Check c;
    const auto t0 = clock_type::now();
    try {
      c = criteria[n].run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    const double dt = seconds_since(t0);
    std::cout << (c.ok ? "PASS" : "FAIL") << "  [" << n + 1 << "/"
              << criteria.size() << "] " << criteria[n].label << " ("
              << dt << " s)";
    if (!c.ok) std::cout << " -- " << c.detail.str();
    std::cout << "\n";
    if (!c.ok) ++failures;
  }

  std::cout << "\n" << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures;
}
