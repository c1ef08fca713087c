#include "fuscat/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "fuscat/character_table.hpp"
#include "fuscat/serialization.hpp"
#include "fuscat/workspace.hpp"

namespace fuscat {

namespace {

struct Tolerances {
  double per = kPerObjectTol;
  double agg = kAggregateTol;
};

Tolerances env_tolerances() {
  Tolerances t;
  if (const char* env = std::getenv("FUSCAT_TOL")) {
    std::istringstream is(env);
    char comma = 0;
    double a = 0, b = 0;
    if ((is >> a >> comma >> b) && comma == ',') {
      t.per = a;
      t.agg = b;
    } else {
      throw structural_error(
          "FUSCAT_TOL must be two comma-separated reals, e.g. 1e-9,1e-6");
    }
  }
  return t;
}

std::string fmt(double v, int prec = 10) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  return os.str();
}

std::string fmt_tol(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(0) << v;
  return os.str();
}

json tol_json(const Tolerances& t) {
  return json{{"per_object", t.per}, {"aggregate", t.agg}};
}

void print_tolerances(const Tolerances& t) {
  std::cout << "tolerances: per_object=" << fmt_tol(t.per)
            << " aggregate=" << fmt_tol(t.agg) << "\n";
}

// Positional arguments name either a workspace entity or a file on disk.
struct Sources {
  std::optional<Workspace> ws;
  const Workspace* ptr() const { return ws ? &*ws : nullptr; }
};

Sources open_sources(const std::string& workspace_path) {
  Sources s;
  if (!workspace_path.empty()) s.ws = load_workspace(workspace_path);
  return s;
}

FusionRing resolve_ring_arg(const std::string& arg, const Sources& s) {
  if (s.ws) {
    const auto it = s.ws->rings.find(arg);
    if (it != s.ws->rings.end()) return *it->second;
  }
  return ring_from_json(load_json_file(arg));
}

GroupPtr resolve_group_arg(const std::string& arg, const Sources& s) {
  if (s.ws) {
    const auto it = s.ws->groups.find(arg);
    if (it != s.ws->groups.end()) return it->second;
  }
  return group_from_json(load_json_file(arg));
}

FunctorMatrix resolve_functor_arg(const std::string& arg, const Sources& s) {
  if (s.ws) {
    const auto it = s.ws->functors.find(arg);
    if (it != s.ws->functors.end()) return it->second;
  }
  return functor_from_json(load_json_file(arg), s.ptr());
}

Cocycle3 resolve_cocycle_arg(const std::string& arg, const Sources& s) {
  if (s.ws) {
    const auto it = s.ws->cocycles.find(arg);
    if (it != s.ws->cocycles.end()) return it->second;
  }
  return cocycle_from_json(load_json_file(arg), s.ptr());
}

GroupAction resolve_action_arg(const std::string& arg, const Sources& s) {
  if (s.ws) {
    const auto it = s.ws->actions.find(arg);
    if (it != s.ws->actions.end()) return it->second;
  }
  return action_from_json(load_json_file(arg), s.ptr());
}

PointedCategory resolve_pointed_arg(const std::string& arg,
                                    const Sources& s) {
  if (s.ws) {
    const auto it = s.ws->pointed.find(arg);
    if (it != s.ws->pointed.end()) return it->second;
  }
  return pointed_from_json(load_json_file(arg), s.ptr());
}

json violations_json(const std::vector<Violation>& v) {
  json out = json::array();
  for (const auto& x : v)
    out.push_back(
        {{"kind", x.kind == ViolationKind::Structural ? "structural" : "axiom"},
         {"code", x.code},
         {"message", x.message}});
  return out;
}

std::string label_set(const FusionRing& r, const std::set<int>& xs) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int x : xs) {
    os << (first ? "" : ", ") << r.label(x);
    first = false;
  }
  os << "}";
  return os.str();
}

int cmd_validate(const std::string& arg, const Sources& s, bool machine,
                 const Tolerances& tol) {
  const FusionRing ring = resolve_ring_arg(arg, s);
  const auto v = validate(ring);
  if (machine) {
    std::cout << canonical_dump(json{{"command", "validate"},
                                     {"valid", v.empty()},
                                     {"violations", violations_json(v)},
                                     {"tolerances", tol_json(tol)}});
  } else {
    print_tolerances(tol);
    if (v.empty()) {
      std::cout << "ring is valid (rank " << ring.rank() << ")\n";
    } else {
      std::cout << "ring is NOT valid; " << v.size() << " violation(s):\n";
      for (const auto& x : v)
        std::cout << "  ["
                  << (x.kind == ViolationKind::Structural ? "structural"
                                                          : "axiom")
                  << "/" << x.code << "] " << x.message << "\n";
    }
  }
  return v.empty() ? 0 : 1;
}

int cmd_fpdim(const std::string& arg, const Sources& s, bool machine,
              const Tolerances& tol) {
  const FusionRing ring = resolve_ring_arg(arg, s);
  const auto v = validate(ring);
  if (!v.empty()) {
    std::cerr << "fpdim: ring fails validation: " << v.front().message
              << "\n";
    return 1;
  }
  const FPData fp = fpdim(ring);
  if (machine) {
    std::cout << canonical_dump(json{{"command", "fpdim"},
                                     {"dims", fp.dims},
                                     {"total", fp.total},
                                     {"tolerances", tol_json(tol)}});
  } else {
    print_tolerances(tol);
    for (int i = 0; i < ring.rank(); ++i)
      std::cout << ring.label(i) << ": " << fmt(fp.dims[i]) << "\n";
    std::cout << "total: " << fmt(fp.total) << "\n";
  }
  return 0;
}

int cmd_functor_check(const std::string& arg, const Sources& s, bool machine,
                      const Tolerances& tol) {
  const FunctorMatrix f = resolve_functor_arg(arg, s);
  const auto v = validate_functor(f);
  const FPData fs = fpdim(*f.source());
  const FPData ft = fpdim(*f.target());
  const bool dom = is_dominant(f);
  const auto ker = kernel_simples(f, fs, tol.per);
  const bool normal = is_normal(f, fs, tol.per);
  const double index = fp_index(f, fs, ft, tol.agg);
  const MonadReport mr = monad_checks(f, fs, ft);

  if (machine) {
    std::cout << canonical_dump(
        json{{"command", "functor-check"},
             {"valid", v.empty()},
             {"violations", violations_json(v)},
             {"dominant", dom},
             {"normal", normal},
             {"kernel", std::vector<int>(ker.begin(), ker.end())},
             {"fp_index", index},
             {"monad",
              {{"normal", mr.monad_normal},
               {"agrees", mr.agree},
               {"index_residual", mr.index_residual},
               {"scaling_residual", mr.scaling_residual}}},
             {"tolerances", tol_json(tol)}});
  } else {
    print_tolerances(tol);
    std::cout << "valid: " << (v.empty() ? "yes" : "no") << "\n";
    for (const auto& x : v) std::cout << "  [" << x.code << "] " << x.message << "\n";
    std::cout << "dominant: " << (dom ? "yes" : "no") << "\n"
              << "normal: " << (normal ? "yes" : "no") << "\n"
              << "kernel: " << label_set(*f.source(), ker) << "\n"
              << "fp index: " << fmt(index) << "\n"
              << "monad normal: " << (mr.monad_normal ? "yes" : "no")
              << " (agrees: " << (mr.agree ? "yes" : "no") << ")\n"
              << "monad index residual: " << fmt(mr.index_residual, 12) << "\n"
              << "monad scaling residual: " << fmt(mr.scaling_residual, 12)
              << "\n";
  }
  return v.empty() ? 0 : 1;
}

int cmd_exact_check(const std::string& embed_arg, const std::string& f_arg,
                    const Sources& s, bool machine, const Tolerances& tol) {
  const FunctorMatrix i = resolve_functor_arg(embed_arg, s);
  const FunctorMatrix f = resolve_functor_arg(f_arg, s);
  const ExactnessReport r = verify_exact_sequence(i, f, tol.per, tol.agg);
  const FPData sub = fpdim(*i.source());
  const FPData mid = fpdim(*f.source());
  const FPData quot = fpdim(*f.target());

  if (machine) {
    std::cout << canonical_dump(
        json{{"command", "exact-check"},
             {"verdict", r.verdict},
             {"embedding_valid", r.embedding_valid},
             {"functor_valid", r.functor_valid},
             {"embedding_injective", r.embedding_injective},
             {"image_equals_kernel", r.image_equals_kernel},
             {"dominant", r.dominant},
             {"normal", r.normal},
             {"dim_product_residual", r.dim_product_residual},
             {"fiber_max_residual", r.fiber_max_residual},
             {"internal_inconsistency", r.internal_inconsistency},
             {"fpdim", {{"sub", sub.total}, {"middle", mid.total}, {"quotient", quot.total}}},
             {"tolerances", tol_json(tol)}});
  } else {
    print_tolerances(tol);
    std::cout << "FPdim: " << fmt(mid.total, 6) << " = " << fmt(sub.total, 6)
              << " x " << fmt(quot.total, 6) << "\n"
              << "embedding valid: " << (r.embedding_valid ? "yes" : "no")
              << ", injective: " << (r.embedding_injective ? "yes" : "no")
              << "\n"
              << "functor valid: " << (r.functor_valid ? "yes" : "no")
              << ", dominant: " << (r.dominant ? "yes" : "no")
              << ", normal: " << (r.normal ? "yes" : "no") << "\n"
              << "image equals kernel: "
              << (r.image_equals_kernel ? "yes" : "no") << "\n"
              << "dim product residual: " << fmt(r.dim_product_residual, 12)
              << "\n"
              << "fiber residual (max): " << fmt(r.fiber_max_residual, 12)
              << "\n";
    if (r.internal_inconsistency)
      std::cout << "WARNING: internal inconsistency between basic and "
                   "derived exactness conditions\n";
    std::cout << "exact: " << (r.verdict ? "yes" : "no") << "\n";
  }
  return r.verdict ? 0 : 1;
}

int cmd_index2_check(const std::string& arg, const Sources& s, bool machine,
                     const Tolerances& tol) {
  const FunctorMatrix f = resolve_functor_arg(arg, s);
  const FPData fs = fpdim(*f.source());
  const FPData ft = fpdim(*f.target());
  const Index2Report r = index2_check(f, fs, ft, tol.per, tol.agg);

  if (machine) {
    std::cout << canonical_dump(json{{"command", "index2-check"},
                                     {"passed", r.passed},
                                     {"j", r.j},
                                     {"unique_invertible", r.unique_invertible},
                                     {"j_self_dual", r.j_self_dual},
                                     {"j_squares_to_unit", r.j_squares_to_unit},
                                     {"normal", r.normal},
                                     {"kernel_is_z2", r.kernel_is_z2},
                                     {"tolerances", tol_json(tol)}});
  } else {
    print_tolerances(tol);
    std::cout << "normal: " << (r.normal ? "yes" : "no") << "\n";
    if (r.j >= 0)
      std::cout << "invertible J: " << f.source()->label(r.j)
                << " (unique: " << (r.unique_invertible ? "yes" : "no")
                << ", self-dual: " << (r.j_self_dual ? "yes" : "no")
                << ", J*J=1: " << (r.j_squares_to_unit ? "yes" : "no")
                << ")\n";
    std::cout << "kernel is Z/2: " << (r.kernel_is_z2 ? "yes" : "no") << "\n"
              << "index-2 theorem: " << (r.passed ? "pass" : "FAIL") << "\n";
  }
  return r.passed ? 0 : 1;
}

int cmd_group(const std::string& arg, const Sources& s, bool machine,
              const Tolerances& tol, const std::string& out) {
  const GroupPtr g = resolve_group_arg(arg, s);
  const auto classes = conjugacy_classes(*g);
  const auto normals = normal_subgroups(*g);
  const bool simple = is_simple(*g);

  if (!out.empty()) {
    std::ofstream of(out);
    of << canonical_dump(group_to_json(*g));
  }
  if (machine) {
    std::cout << canonical_dump(json{{"command", "group"},
                                     {"order", g->order()},
                                     {"classes", classes},
                                     {"normal_subgroups", normals},
                                     {"simple", simple},
                                     {"tolerances", tol_json(tol)}});
  } else {
    print_tolerances(tol);
    std::cout << "order: " << g->order() << "\n"
              << "conjugacy classes: " << classes.size() << "\n";
    for (const auto& c : classes) {
      std::cout << "  size " << c.size() << ":";
      for (int x : c) std::cout << " " << g->name(x);
      std::cout << "\n";
    }
    std::cout << "normal subgroups: " << normals.size() << "\n";
    for (const auto& nsub : normals) {
      std::cout << "  order " << nsub.size() << ":";
      for (int x : nsub) std::cout << " " << g->name(x);
      std::cout << "\n";
    }
    std::cout << "simple: " << (simple ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_pointed(const std::string& arg, const Sources& s, bool machine,
                const Tolerances& tol) {
  const PointedCategory p = resolve_pointed_arg(arg, s);
  const SimplePointedResult r = is_simple_pointed(p);
  const bool eno = is_simple_eno(p);

  if (machine) {
    json rep{{"command", "pointed"},
             {"simple", r.simple},
             {"prime_order", eno},
             {"tolerances", tol_json(tol)}};
    if (r.witness) rep["witness"] = *r.witness;
    std::cout << canonical_dump(rep);
  } else {
    print_tolerances(tol);
    std::cout << "group order: " << p.group->order()
              << ", cocycle modulus: " << p.alpha.modulus << "\n"
              << "simple: " << (r.simple ? "yes" : "no") << "\n";
    if (r.witness) {
      std::cout << "witness normal subgroup (trivial restricted class):";
      for (int x : *r.witness) std::cout << " " << p.group->name(x);
      std::cout << "\n";
    }
    std::cout << "prime-order criterion: " << (eno ? "yes" : "no") << "\n";
  }
  return r.simple ? 0 : 1;
}

int cmd_cocycle(const std::string& arg, const Sources& s, bool machine,
                const Tolerances& tol, bool with_h3, bool with_coboundary) {
  const Cocycle3 c = resolve_cocycle_arg(arg, s);
  const bool ok = is_cocycle(c);

  json rep{{"command", "cocycle"},
           {"cocycle", ok},
           {"modulus", c.modulus},
           {"order", c.order()},
           {"tolerances", tol_json(tol)}};
  std::optional<CoboundaryResult> cb;
  std::optional<long> h3;
  if (ok && with_coboundary) {
    cb = is_coboundary(c);
    rep["coboundary"] = {{"trivial", cb->trivial},
                         {"witness_modulus", cb->witness_modulus}};
    if (cb->witness) rep["coboundary"]["witness"] = *cb->witness;
  }
  if (with_h3) {
    h3 = h3_order(*c.group, c.modulus);
    rep["h3_order"] = *h3;
  }

  if (machine) {
    std::cout << canonical_dump(rep);
  } else {
    print_tolerances(tol);
    std::cout << "group order: " << c.order() << ", modulus: " << c.modulus
              << "\n"
              << "cocycle condition: " << (ok ? "holds" : "FAILS") << "\n";
    if (cb)
      std::cout << "cohomologically trivial: " << (cb->trivial ? "yes" : "no")
                << " (working modulus " << cb->witness_modulus << ")\n";
    if (h3) std::cout << "|H^3(G, Z/" << c.modulus << ")| = " << *h3 << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_equivariantize(const std::string& arg, const Sources& s, bool machine,
                       const Tolerances& tol, std::uint64_t seed) {
  const GroupAction a = resolve_action_arg(arg, s);
  const auto v = validate_action(a);
  if (!v.empty()) {
    if (machine) {
      std::cout << canonical_dump(json{{"command", "equivariantize"},
                                       {"action_valid", false},
                                       {"violations", violations_json(v)},
                                       {"tolerances", tol_json(tol)}});
    } else {
      print_tolerances(tol);
      std::cout << "action is NOT valid:\n";
      for (const auto& x : v)
        std::cout << "  [" << x.code << "] " << x.message << "\n";
    }
    return 1;
  }
  const EquivariantSimples es = equivariant_simples(a, tol.agg);
  const EquivariantSequenceReport r = check_equivariant_sequence(a, tol.agg, seed);

  if (machine) {
    json entries = json::array();
    for (const auto& e : es.entries)
      entries.push_back({{"orbit", e.orbit},
                         {"irrep", e.irrep},
                         {"degree", e.degree},
                         {"dim", e.dim}});
    std::cout << canonical_dump(
        json{{"command", "equivariantize"},
             {"action_valid", true},
             {"entries", entries},
             {"total", es.total},
             {"identity_residual", es.identity_residual},
             {"sequence",
              {{"kernel_is_unit_orbit", r.kernel_is_unit_orbit},
               {"kernel_matches_rep_g", r.kernel_matches_rep_g},
               {"dominant", r.dominant},
               {"normal", r.normal},
               {"verdict", r.verdict}}},
             {"tolerances", tol_json(tol)}});
  } else {
    print_tolerances(tol);
    std::cout << "equivariant simples: " << es.entries.size() << "\n";
    for (const auto& e : es.entries) {
      std::cout << "  orbit {";
      for (std::size_t k = 0; k < e.orbit.size(); ++k)
        std::cout << (k ? ", " : "") << a.ring->label(e.orbit[k]);
      std::cout << "} irrep #" << e.irrep << " degree " << e.degree
                << " dim " << fmt(e.dim, 6) << "\n";
    }
    std::cout << "total FPdim: " << fmt(es.total, 6)
              << " (identity residual " << fmt(es.identity_residual, 12)
              << ")\n"
              << "kernel = unit orbit: "
              << (r.kernel_is_unit_orbit ? "yes" : "no") << "\n"
              << "kernel matches rep(G): "
              << (r.kernel_matches_rep_g ? "yes" : "no") << "\n"
              << "dominant: " << (r.dominant ? "yes" : "no")
              << ", normal: " << (r.normal ? "yes" : "no") << "\n"
              << "sequence verdict: " << (r.verdict ? "pass" : "FAIL")
              << "\n";
  }
  return r.verdict ? 0 : 1;
}

int cmd_repring(const std::string& arg, const Sources& s, bool machine,
                const Tolerances& tol, std::uint64_t seed,
                const std::string& out) {
  const GroupPtr g = resolve_group_arg(arg, s);
  const CharacterTable t = character_table(g, seed);
  const FusionRing ring = rep_fusion_ring(t);
  const auto v = validate(ring);
  if (!v.empty())
    throw consistency_error("rep_fusion_ring failed validation: " +
                            v.front().message);
  if (!out.empty()) {
    std::ofstream of(out);
    of << canonical_dump(ring_to_json(ring));
  }
  if (machine) {
    std::cout << canonical_dump(json{{"command", "repring"},
                                     {"order", g->order()},
                                     {"degrees", t.degrees},
                                     {"rank", ring.rank()},
                                     {"ring", ring_to_json(ring)},
                                     {"tolerances", tol_json(tol)}});
  } else {
    print_tolerances(tol);
    std::cout << "group order: " << g->order() << "\n"
              << "irreducibles: " << t.degrees.size() << ", degrees:";
    for (int d : t.degrees) std::cout << " " << d;
    std::cout << "\n"
              << "rep ring rank " << ring.rank() << ", valid\n";
    if (!out.empty()) std::cout << "ring written to " << out << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"fuscat: fusion ring and tensor functor calculator"};
  app.require_subcommand(1);

  std::string workspace_path;
  std::uint64_t seed = 0;
  std::string format = "text";
  app.add_option("--format", format, "output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--workspace", workspace_path,
                 "manifest whose entities positional names resolve against");
  app.add_option("--seed", seed, "character-table perturbation seed");

  std::string tol_override;
  app.add_option("--tol", tol_override,
                 "tolerance pair per_object,aggregate (overrides FUSCAT_TOL)");

  std::string arg1, arg2, out;
  bool with_h3 = false, with_coboundary = false;

  auto* c_validate = app.add_subcommand("validate", "check fusion ring axioms");
  c_validate->add_option("ring", arg1)->required();

  auto* c_fpdim = app.add_subcommand("fpdim", "Frobenius-Perron dimensions");
  c_fpdim->add_option("ring", arg1)->required();

  auto* c_functor = app.add_subcommand("functor-check",
                                       "validate a tensor functor matrix");
  c_functor->add_option("functor", arg1)->required();

  auto* c_exact = app.add_subcommand("exact-check",
                                     "verify an exact sequence (embedding, functor)");
  c_exact->add_option("embedding", arg1)->required();
  c_exact->add_option("functor", arg2)->required();

  auto* c_index2 = app.add_subcommand("index2-check",
                                      "index-2 dominant functor theorem");
  c_index2->add_option("functor", arg1)->required();

  auto* c_group = app.add_subcommand("group", "group structure report");
  c_group->add_option("group", arg1)->required();
  c_group->add_option("--out", out, "write canonical group file");

  auto* c_pointed = app.add_subcommand("pointed",
                                       "simplicity of a pointed category");
  c_pointed->add_option("pointed", arg1)->required();

  auto* c_cocycle = app.add_subcommand("cocycle", "3-cocycle checks");
  c_cocycle->add_option("cocycle", arg1)->required();
  c_cocycle->add_flag("--h3", with_h3, "also compute |H^3|");
  c_cocycle->add_flag("--coboundary", with_coboundary,
                      "also decide cohomological triviality");

  auto* c_equiv = app.add_subcommand("equivariantize",
                                     "equivariantization of a ring action");
  c_equiv->add_option("action", arg1)->required();

  auto* c_repring = app.add_subcommand("repring",
                                       "character table and rep fusion ring");
  c_repring->add_option("group", arg1)->required();
  c_repring->add_option("--out", out, "write canonical ring file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Tolerances tol = env_tolerances();
    if (!tol_override.empty()) {
      std::istringstream is(tol_override);
      char comma = 0;
      if (!(is >> tol.per >> comma >> tol.agg) || comma != ',')
        throw structural_error("--tol must be two comma-separated reals");
    }
    const bool m = format == "machine";
    const Sources s = open_sources(workspace_path);

    if (*c_validate) return cmd_validate(arg1, s, m, tol);
    if (*c_fpdim) return cmd_fpdim(arg1, s, m, tol);
    if (*c_functor) return cmd_functor_check(arg1, s, m, tol);
    if (*c_exact) return cmd_exact_check(arg1, arg2, s, m, tol);
    if (*c_index2) return cmd_index2_check(arg1, s, m, tol);
    if (*c_group) return cmd_group(arg1, s, m, tol, out);
    if (*c_pointed) return cmd_pointed(arg1, s, m, tol);
    if (*c_cocycle) return cmd_cocycle(arg1, s, m, tol, with_h3, with_coboundary);
    if (*c_equiv) return cmd_equivariantize(arg1, s, m, tol, seed);
    if (*c_repring) return cmd_repring(arg1, s, m, tol, seed, out);
    std::cerr << "unknown command\n";
    return 2;
  } catch (const workspace_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fuscat
