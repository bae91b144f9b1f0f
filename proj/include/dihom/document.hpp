#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dihom/space.hpp"

namespace dihom {

using Json = nlohmann::ordered_json;

/// Text form of a space or pair. Relations are generating pairs; both are closed on load.
struct SpaceDocument {
  std::string name;
  std::vector<std::string> points;
  std::vector<PointPair> topology;
  DirectionMode mode = DirectionMode::Explicit;
  std::vector<PointPair> direction;
  std::optional<std::vector<std::string>> subset;

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline void only_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw InputError("unknown field '" + k + "' in " + where);
  }
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

inline std::string string_value(const Json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + " must be a string");
  return v.get<std::string>();
}

inline std::vector<std::string> string_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(string_value(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<PointPair> pair_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array of [from, to] pairs");
  std::vector<PointPair> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != 2) throw InputError(at + " must be a pair [from, to]");
    out.emplace_back(string_value(v[i][0], at + "[0]"), string_value(v[i][1], at + "[1]"));
  }
  return out;
}

inline Json pairs_json(const std::vector<PointPair>& ps) {
  Json out = Json::array();
  for (const auto& [a, b] : ps) out.push_back(Json::array({a, b}));
  return out;
}

}  // namespace detail

inline SpaceDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("syntax error at " + detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("document must be an object");
  detail::only_keys(j, "document", {"name", "points", "topology", "direction", "subset"});
  SpaceDocument d;
  d.name = detail::string_value(detail::field(j, "name", "document"), "name");
  d.points = detail::string_list(detail::field(j, "points", "document"), "points");

  const Json& topo = detail::field(j, "topology", "document");
  if (!topo.is_object()) throw InputError("topology must be an object");
  detail::only_keys(topo, "topology", {"relations"});
  d.topology = detail::pair_list(detail::field(topo, "relations", "topology"), "topology.relations");

  const Json& dir = detail::field(j, "direction", "document");
  if (!dir.is_object()) throw InputError("direction must be an object");
  detail::only_keys(dir, "direction", {"mode", "relations"});
  const std::string mode = detail::string_value(detail::field(dir, "mode", "direction"), "direction.mode");
  if (mode == "explicit") {
    d.mode = DirectionMode::Explicit;
    if (!dir.contains("relations")) throw InputError("direction mode 'explicit' requires a relations field");
    d.direction = detail::pair_list(dir.at("relations"), "direction.relations");
  } else if (mode == "discrete" || mode == "indiscrete") {
    d.mode = mode == "discrete" ? DirectionMode::Discrete : DirectionMode::Indiscrete;
    if (dir.contains("relations")) throw InputError("direction mode '" + mode + "' takes no relations field");
  } else {
    throw InputError("direction.mode must be explicit, discrete or indiscrete (got '" + mode + "')");
  }
  if (j.contains("subset")) d.subset = detail::string_list(j.at("subset"), "subset");
  return d;
}

inline Json document_json(const SpaceDocument& d) {
  Json j;
  j["name"] = d.name;
  j["points"] = d.points;
  j["topology"] = Json{{"relations", detail::pairs_json(d.topology)}};
  Json dir;
  dir["mode"] = to_string(d.mode);
  if (d.mode == DirectionMode::Explicit) dir["relations"] = detail::pairs_json(d.direction);
  j["direction"] = dir;
  if (d.subset) j["subset"] = *d.subset;
  return j;
}

inline std::string serialize_document(const SpaceDocument& d) { return document_json(d).dump(2) + "\n"; }

inline PairSpace to_pair(const SpaceDocument& d) {
  auto x = FinitePreorderedSpace::validate(d.points, d.topology, d.direction, d.mode);
  PointSet a = x.empty_set();
  if (d.subset) {
    for (const auto& id : *d.subset) {
      require_input(x.has(id), "subset names unknown point id '" + id + "'");
      a.set(x.index(id));
    }
  }
  return {std::move(x), std::move(a)};
}

namespace detail {

/// Covering pairs of a partial order: a < b with nothing strictly between.
inline std::vector<PointPair> covering_pairs(const FinitePreorderedSpace& x, const Relation& r) {
  std::vector<PointPair> out;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (a == b || !r[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < x.size() && covered; ++c)
        if (c != a && c != b && r[a][c] && r[c][b]) covered = false;
      if (covered) out.emplace_back(x.id(a), x.id(b));
    }
  return out;
}

inline std::vector<PointPair> nonreflexive_pairs(const FinitePreorderedSpace& x, const Relation& r) {
  std::vector<PointPair> out;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (a != b && r[a][b]) out.emplace_back(x.id(a), x.id(b));
  return out;
}

}  // namespace detail

/// Canonical document: Hasse pairs for orders, the shortest mode for the direction.
inline SpaceDocument to_document(const std::string& name, const FinitePreorderedSpace& x,
                                 const std::optional<PointSet>& subset = std::nullopt) {
  SpaceDocument d;
  d.name = name;
  d.points = x.points();
  d.topology = detail::covering_pairs(x, x.topo());
  if (x.size() > 0 && x.dir_is_discrete()) {
    d.mode = DirectionMode::Discrete;
  } else if (x.size() > 1 && x.dir_is_indiscrete()) {
    d.mode = DirectionMode::Indiscrete;
  } else {
    d.mode = DirectionMode::Explicit;
    d.direction = relation::is_antisymmetric(x.dir()) ? detail::covering_pairs(x, x.dir())
                                                       : detail::nonreflexive_pairs(x, x.dir());
  }
  if (subset) d.subset = x.ids(*subset);
  return d;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SpaceDocument load_document(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace dihom
