#include "xcohom/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace xcohom {

namespace {

std::vector<std::vector<int>> rows_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("ParseError", {}, "expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError("ParseError", {}, "expected an array row");
    rows.push_back(row.get<std::vector<int>>());
  }
  return rows;
}

json rows_to_json(const std::vector<int>& flat, int n_rows, int n_cols) {
  json rows = json::array();
  for (int r = 0; r < n_rows; ++r) {
    json row = json::array();
    for (int c = 0; c < n_cols; ++c) row.push_back(flat[r * n_cols + c]);
    rows.push_back(std::move(row));
  }
  return rows;
}

json action_rows(const GroupAction& a) {
  return rows_to_json(a.table, a.actor.order, a.target_size);
}

}  // namespace

json group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order;
  j["mul"] = rows_to_json(g.mul_table, g.order, g.order);
  if (!g.name.empty()) j["name"] = g.name;
  return j;
}

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mul"))
    throw ValidationError("ParseError", {}, "group JSON needs a \"mul\" table");
  auto rows = rows_from_json(j.at("mul"));
  if (j.contains("order") && j.at("order").get<int>() != (int)rows.size())
    throw ValidationError("ParseError", {}, "declared order does not match the table");
  std::string name = j.value("name", std::string{});
  return make_group(rows, name);
}

json exm_to_json(const EquivariantCrossedModule& exm) {
  json j;
  j["M"] = group_to_json(exm.M());
  j["L"] = group_to_json(exm.L());
  j["G"] = group_to_json(exm.G);
  j["boundary"] = exm.base.boundary.map;
  j["l_action"] = action_rows(exm.base.l_on_m);
  j["g_on_M"] = action_rows(exm.g_on_M);
  j["g_on_L"] = action_rows(exm.g_on_L);
  if (!exm.name.empty()) j["name"] = exm.name;
  return j;
}

EquivariantCrossedModule exm_from_json(const json& j) {
  for (const char* key : {"M", "L", "G", "boundary", "l_action", "g_on_M", "g_on_L"})
    if (!j.contains(key))
      throw ValidationError("ParseError", {}, std::string("model JSON is missing \"") + key + "\"");
  FiniteGroup m = group_from_json(j.at("M"));
  FiniteGroup l = group_from_json(j.at("L"));
  FiniteGroup g = group_from_json(j.at("G"));
  auto xm = make_crossed_module(m, l, j.at("boundary").get<std::vector<int>>(),
                                rows_from_json(j.at("l_action")));
  auto exm = make_equivariant(std::move(xm), g, rows_from_json(j.at("g_on_M")),
                              rows_from_json(j.at("g_on_L")));
  exm.name = j.value("name", std::string{});
  return exm;
}

json cocycle1_to_json(const Cocycle1& c) { return json{{"f", c.f}, {"tau", c.tau}}; }

json cocycle2_to_json(const Cocycle2& c) {
  return json{{"f", rows_to_json(c.f, c.n, c.n)}, {"phi", c.phi}};
}

json groupoid_to_json(const GGroupoid& g) {
  json j;
  j["objects"] = g.n_objects;
  json homs = json::array();
  for (const auto& m : g.mors) homs.push_back(json::array({m.src, m.payload, m.dst}));
  j["homs"] = std::move(homs);
  json compose = json::array();
  for (int after = 0; after < g.morphism_count(); ++after)
    for (int first = 0; first < g.morphism_count(); ++first)
      if (g.compose(after, first) >= 0)
        compose.push_back(json::array({after, first, g.compose(after, first)}));
  j["compose"] = std::move(compose);
  j["action"] = json{{"objects", rows_to_json(g.act_obj, g.G.order, g.n_objects)},
                     {"morphisms", rows_to_json(g.act_mor, g.G.order, g.morphism_count())}};
  return j;
}

std::string digest(const json& canonical) {
  std::string s = canonical.dump();
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

namespace {

// names are cosmetic; digests cover structure only
json strip_names(json j) {
  if (j.is_object()) {
    j.erase("name");
    for (auto& [key, value] : j.items()) value = strip_names(value);
  }
  return j;
}

}  // namespace

std::string exm_digest(const EquivariantCrossedModule& exm) {
  return digest(strip_names(exm_to_json(exm)));
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("ParseError", {}, "cannot read file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ValidationError("ParseError", {}, "malformed JSON in " + path);
  return j;
}

}  // namespace

ModelFile load_model(const std::string& fixture_or_path) {
  ModelFile model;
  auto names = fixture_names();
  if (std::find(names.begin(), names.end(), fixture_or_path) != names.end()) {
    model.exm = builtin_fixture(fixture_or_path);
    model.source = fixture_or_path;
  } else {
    model.exm = exm_from_json(parse_file(fixture_or_path));
    model.source = fixture_or_path;
  }
  model.digest = exm_digest(model.exm);
  return model;
}

FiniteGroup load_group(const std::string& name_or_path) {
  if (auto g = builtin_group(name_or_path)) return *g;
  return group_from_json(parse_file(name_or_path));
}

}  // namespace xcohom
