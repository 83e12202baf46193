#pragma once

#include <string>

#include <json.hpp>

#include "xcohom/bitorsors.hpp"

namespace xcohom {

using nlohmann::json;

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json exm_to_json(const EquivariantCrossedModule& exm);
EquivariantCrossedModule exm_from_json(const json& j);

json cocycle1_to_json(const Cocycle1& c);
json cocycle2_to_json(const Cocycle2& c);
json groupoid_to_json(const GGroupoid& g);

// FNV-1a over the canonical (name-free) serialization, as a hex string.
std::string digest(const json& canonical);
std::string exm_digest(const EquivariantCrossedModule& exm);

// Resolves a builtin fixture name or reads a JSON model file.
// Throws ParseError (unknown name, unreadable file, malformed JSON) or the
// model's own ValidationError.
struct ModelFile {
  EquivariantCrossedModule exm;
  std::string source;  // fixture name or path
  std::string digest;
};

ModelFile load_model(const std::string& fixture_or_path);

// Builtin group name or a path to a group JSON file.
FiniteGroup load_group(const std::string& name_or_path);

}  // namespace xcohom
