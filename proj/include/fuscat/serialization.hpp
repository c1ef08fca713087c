#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

#include "fuscat/workspace.hpp"

namespace fuscat {

using json = nlohmann::json;

// Canonical text form: sorted keys, two-space indent, trailing newline.
// save/load round-trips are bit-identical on this form.
std::string canonical_dump(const json& j);

// Parses a file, wrapping parser failures in structural_error with the file
// name and byte position.
json load_json_file(const std::filesystem::path& path);

json ring_to_json(const FusionRing& r);
json group_to_json(const FiniteGroup& g);
json functor_to_json(const FunctorMatrix& f);
json cocycle_to_json(const Cocycle3& c);
json action_to_json(const GroupAction& a);
json pointed_to_json(const PointedCategory& p);

// Sub-objects that name another entity ("source": "rep_s3") are resolved in
// ws; ws == nullptr makes every name reference an error. Inline sub-objects
// are always accepted.
FusionRing ring_from_json(const json& j);
GroupPtr group_from_json(const json& j);
FunctorMatrix functor_from_json(const json& j, const Workspace* ws = nullptr);
Cocycle3 cocycle_from_json(const json& j, const Workspace* ws = nullptr);
GroupAction action_from_json(const json& j, const Workspace* ws = nullptr);
PointedCategory pointed_from_json(const json& j, const Workspace* ws = nullptr);

}  // namespace fuscat
