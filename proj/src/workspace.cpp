#include "fuscat/workspace.hpp"

#include <sstream>

#include "fuscat/serialization.hpp"

namespace fuscat {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::ostringstream os;
  os << "workspace failed to load (" << issues.size() << " issue"
     << (issues.size() == 1 ? "" : "s") << ")";
  for (const auto& s : issues) os << "\n  " << s;
  return os.str();
}

}  // namespace

workspace_error::workspace_error(std::vector<std::string> issues_in)
    : error(join_issues(issues_in)), issues(std::move(issues_in)) {}

Workspace load_workspace(const std::filesystem::path& manifest_path) {
  std::vector<std::string> issues;
  json manifest;
  try {
    manifest = load_json_file(manifest_path);
    if (manifest.at("type").get<std::string>() != "workspace")
      throw structural_error("manifest type must be 'workspace'");
  } catch (const error& e) {
    throw workspace_error({manifest_path.string() + ": " + e.what()});
  } catch (const json::exception& e) {
    throw workspace_error({manifest_path.string() + ": " + e.what()});
  }

  const auto base = manifest_path.parent_path();
  // name -> (file, parsed json), bucketed by entity type so that
  // dependencies (groups, rings) resolve before dependents.
  std::vector<std::pair<std::string, json>> files;
  try {
    for (const auto& [name, rel] : manifest.at("entities").items())
      files.emplace_back(name, json{{"path", (base / rel.get<std::string>()).string()}});
  } catch (const json::exception& e) {
    throw workspace_error({manifest_path.string() + ": " + e.what()});
  }

  struct Entry {
    std::string name;
    std::string file;
    json body;
  };
  std::vector<Entry> entries;
  for (auto& [name, pj] : files) {
    const std::string file = pj.at("path").get<std::string>();
    try {
      entries.push_back({name, file, load_json_file(file)});
    } catch (const error& e) {
      issues.push_back(name + ": " + e.what());
    }
  }

  Workspace ws;
  auto pass = [&](const char* type, auto&& build) {
    for (const auto& e : entries) {
      if (!e.body.is_object() || !e.body.contains("type")) {
        continue;  // reported in the final pass
      }
      if (e.body.at("type") != type) continue;
      try {
        build(e);
      } catch (const error& ex) {
        issues.push_back(e.name + " (" + e.file + "): " + ex.what());
      }
    }
  };

  pass("group", [&](const Entry& e) {
    ws.groups.emplace(e.name, group_from_json(e.body));
  });
  pass("ring", [&](const Entry& e) {
    auto ring = std::make_shared<FusionRing>(ring_from_json(e.body));
    const auto v = validate(*ring);
    if (!v.empty())
      throw structural_error("ring violates axioms: " + v.front().message);
    ws.rings.emplace(e.name, std::move(ring));
  });
  pass("cocycle", [&](const Entry& e) {
    Cocycle3 c = cocycle_from_json(e.body, &ws);
    if (!is_cocycle(c))
      throw structural_error("values fail the cocycle condition");
    ws.cocycles.emplace(e.name, std::move(c));
  });
  pass("functor", [&](const Entry& e) {
    FunctorMatrix f = functor_from_json(e.body, &ws);
    const auto v = validate_functor(f);
    if (!v.empty())
      throw structural_error("functor violates axioms: " + v.front().message);
    ws.functors.emplace(e.name, std::move(f));
  });
  pass("action", [&](const Entry& e) {
    GroupAction a = action_from_json(e.body, &ws);
    const auto v = validate_action(a);
    if (!v.empty())
      throw structural_error("action violates axioms: " + v.front().message);
    ws.actions.emplace(e.name, std::move(a));
  });
  pass("pointed", [&](const Entry& e) {
    ws.pointed.emplace(e.name, pointed_from_json(e.body, &ws));
  });

  for (const auto& e : entries) {
    if (!e.body.is_object() || !e.body.contains("type")) {
      issues.push_back(e.name + " (" + e.file +
                       "): entity file lacks a type tag");
      continue;
    }
    const auto t = e.body.at("type").get<std::string>();
    if (t != "group" && t != "ring" && t != "cocycle" && t != "functor" &&
        t != "action" && t != "pointed")
      issues.push_back(e.name + " (" + e.file + "): unknown entity type '" +
                       t + "'");
  }

  if (!issues.empty()) throw workspace_error(std::move(issues));
  return ws;
}

}  // namespace fuscat
