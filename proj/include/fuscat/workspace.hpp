#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fuscat/cocycle.hpp"
#include "fuscat/equivariant.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/finite_group.hpp"
#include "fuscat/functor_matrix.hpp"
#include "fuscat/fusion_ring.hpp"
#include "fuscat/pointed.hpp"

namespace fuscat {

// Aggregated load failure: every issue carries its file context. A workspace
// is never partially usable; either all entities validate or this is thrown.
struct workspace_error : error {
  std::vector<std::string> issues;
  explicit workspace_error(std::vector<std::string> issues);
};

// Named entities loaded from a manifest. Cross-references between files are
// resolved by these names.
struct Workspace {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, FunctorMatrix> functors;
  std::map<std::string, Cocycle3> cocycles;
  std::map<std::string, GroupAction> actions;
  std::map<std::string, PointedCategory> pointed;
};

// Loads a manifest {"type":"workspace","entities":{name: relative-path}} and
// every entity file it names, fully validating each entity (ring axioms,
// functor axioms, cocycle condition, action axioms). Reference entities by
// name; load order inside the manifest does not matter.
Workspace load_workspace(const std::filesystem::path& manifest_path);

}  // namespace fuscat
