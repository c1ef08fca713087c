#include "fuscat/serialization.hpp"

#include <fstream>

#include "fuscat/errors.hpp"

namespace fuscat {

namespace {

const json& need(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw structural_error(std::string("missing key '") + key + "'");
  return *it;
}

void need_type(const json& j, const char* t) {
  if (!j.is_object() || need(j, "type").get<std::string>() != t)
    throw structural_error(std::string("expected an entity of type '") + t +
                           "'");
}

[[noreturn]] void rethrow_malformed(const json::exception& e) {
  throw structural_error(std::string("malformed entity: ") + e.what());
}

}  // namespace

std::string canonical_dump(const json& j) {
  return j.dump(2) + "\n";  // object keys are already sorted
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw structural_error("cannot open file: " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw structural_error("parse error in " + path.string() + ": " +
                           e.what());
  }
}

json ring_to_json(const FusionRing& r) {
  json n = json::array();
  for (const auto& q : r.quads()) n.push_back({q[0], q[1], q[2], q[3]});
  return json{{"type", "ring"},
              {"rank", r.rank()},
              {"unit", r.unit()},
              {"labels", r.labels()},
              {"dual", [&] {
                 std::vector<int> d(r.rank());
                 for (int i = 0; i < r.rank(); ++i) d[i] = r.dual(i);
                 return d;
               }()},
              {"N", std::move(n)}};
}

FusionRing ring_from_json(const json& j) {
  try {
    need_type(j, "ring");
    const int rank = need(j, "rank").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (int i = 0; i < rank; ++i) labels.push_back("x" + std::to_string(i));
    }
    auto dual = need(j, "dual").get<std::vector<int>>();
    std::vector<std::array<std::int64_t, 4>> quads;
    for (const auto& q : need(j, "N")) {
      if (!q.is_array() || q.size() != 4)
        throw structural_error("ring N entries must be [i,j,k,n] quadruples");
      quads.push_back({q[0].get<std::int64_t>(), q[1].get<std::int64_t>(),
                       q[2].get<std::int64_t>(), q[3].get<std::int64_t>()});
    }
    return FusionRing(rank, std::move(labels), need(j, "unit").get<int>(),
                      std::move(dual), std::move(quads));
  } catch (const json::exception& e) {
    rethrow_malformed(e);
  }
}

json group_to_json(const FiniteGroup& g) {
  return json{{"type", "group"}, {"table", g.table()}, {"names", g.names()}};
}

GroupPtr group_from_json(const json& j) {
  try {
    need_type(j, "group");
    std::vector<std::string> names;
    if (j.contains("names"))
      names = j.at("names").get<std::vector<std::string>>();
    if (j.contains("permutations")) {
      const json& p = j.at("permutations");
      auto g = from_permutations(
          need(p, "degree").get<int>(),
          need(p, "generators").get<std::vector<std::vector<int>>>());
      if (names.empty()) return g;
      return std::make_shared<FiniteGroup>(g->table(), std::move(names));
    }
    return std::make_shared<FiniteGroup>(
        need(j, "table").get<std::vector<std::vector<int>>>(),
        std::move(names));
  } catch (const json::exception& e) {
    rethrow_malformed(e);
  }
}

namespace {

RingPtr resolve_ring(const json& j, const Workspace* ws, const char* role) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (ws) {
      const auto it = ws->rings.find(name);
      if (it != ws->rings.end()) return it->second;
    }
    throw structural_error(std::string("unknown ring reference '") + name +
                           "' for " + role);
  }
  return std::make_shared<FusionRing>(ring_from_json(j));
}

GroupPtr resolve_group(const json& j, const Workspace* ws) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (ws) {
      const auto it = ws->groups.find(name);
      if (it != ws->groups.end()) return it->second;
    }
    throw structural_error(std::string("unknown group reference '") + name +
                           "'");
  }
  return group_from_json(j);
}

}  // namespace

json functor_to_json(const FunctorMatrix& f) {
  return json{{"type", "functor"},
              {"source", ring_to_json(*f.source())},
              {"target", ring_to_json(*f.target())},
              {"matrix", f.matrix()}};
}

FunctorMatrix functor_from_json(const json& j, const Workspace* ws) {
  try {
    need_type(j, "functor");
    return FunctorMatrix(
        resolve_ring(need(j, "source"), ws, "source"),
        resolve_ring(need(j, "target"), ws, "target"),
        need(j, "matrix").get<std::vector<std::vector<std::int64_t>>>());
  } catch (const json::exception& e) {
    rethrow_malformed(e);
  }
}

json cocycle_to_json(const Cocycle3& c) {
  return json{{"type", "cocycle"},
              {"group", group_to_json(*c.group)},
              {"modulus", c.modulus},
              {"values", c.values}};
}

Cocycle3 cocycle_from_json(const json& j, const Workspace* ws) {
  try {
    need_type(j, "cocycle");
    return Cocycle3(resolve_group(need(j, "group"), ws),
                    need(j, "modulus").get<long>(),
                    need(j, "values").get<std::vector<long>>());
  } catch (const json::exception& e) {
    rethrow_malformed(e);
  }
}

json action_to_json(const GroupAction& a) {
  return json{{"type", "action"},
              {"group", group_to_json(*a.group)},
              {"ring", ring_to_json(*a.ring)},
              {"perms", a.perms}};
}

GroupAction action_from_json(const json& j, const Workspace* ws) {
  try {
    need_type(j, "action");
    return GroupAction(
        resolve_group(need(j, "group"), ws),
        resolve_ring(need(j, "ring"), ws, "ring"),
        need(j, "perms").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    rethrow_malformed(e);
  }
}

json pointed_to_json(const PointedCategory& p) {
  return json{{"type", "pointed"}, {"cocycle", cocycle_to_json(p.alpha)}};
}

PointedCategory pointed_from_json(const json& j, const Workspace* ws) {
  try {
    need_type(j, "pointed");
    const json& cj = need(j, "cocycle");
    if (cj.is_string()) {
      const auto name = cj.get<std::string>();
      if (ws) {
        const auto it = ws->cocycles.find(name);
        if (it != ws->cocycles.end())
          return PointedCategory(it->second.group, it->second);
      }
      throw structural_error("unknown cocycle reference '" + name + "'");
    }
    Cocycle3 c = cocycle_from_json(cj, ws);
    GroupPtr g = c.group;
    return PointedCategory(std::move(g), std::move(c));
  } catch (const json::exception& e) {
    rethrow_malformed(e);
  }
}

}  // namespace fuscat
