#include "qhopf/instance.hpp"

#include <algorithm>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

FiniteGroup builtin_group_atom(const std::string& tok) {
  auto numeric_suffix = [&](size_t from) -> std::optional<uint32_t> {
    if (from >= tok.size()) return std::nullopt;
    uint32_t n = 0;
    for (size_t i = from; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
      n = n * 10 + uint32_t(tok[i] - '0');
      if (n > 1000) return std::nullopt;
    }
    return n;
  };
  if (!tok.empty() && tok[0] == 'Z') {
    if (auto n = numeric_suffix(1); n && *n >= 1) return FiniteGroup::cyclic(*n);
  }
  if (!tok.empty() && tok[0] == 'S') {
    if (auto n = numeric_suffix(1); n && *n >= 1 && *n <= 4) return FiniteGroup::symmetric(*n);
  }
  throw input_error("unknown builtin group \"" + tok + "\" (want Z<n>, S<n<=4>, or products)");
}

uint32_t resolve_element(const FiniteGroup& g, const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    const uint32_t e = as_uint(j, where);
    if (e >= g.order()) throw input_error(where + ": element index out of range");
    return e;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (uint32_t e = 0; e < g.order(); ++e)
      if (g.name(e) == s) return e;
    throw input_error(where + ": no group element named \"" + s + "\"");
  }
  throw input_error(where + ": group elements are names or indices");
}

Character character_from_json(const FiniteGroup& g, const Field& f, const Json& j,
                              const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "trivial")
    return Character(g.order(), Scalar::one(f));
  if (!j.is_array() || j.size() != g.order())
    throw input_error(where + ": a character is \"trivial\" or one value per group element");
  Character chi;
  chi.reserve(g.order());
  for (const Json& e : j) chi.push_back(scalar_from_json(f, e, where));
  return chi;
}

// The two-element group with three loops at each vertex, twisted by
// (trivial, trivial, sign).
void apply_three_loops_preset(InstanceSpec& s, const std::string& where) {
  if (s.field.kind == FieldKind::Prime && s.field.p == 2)
    throw input_error(where + ": the sign character needs characteristic != 2");
  s.group = FiniteGroup::cyclic(2);
  s.group_echo = Json{{"builtin", "Z2"}};
  s.ramification = {RamificationEntry{1, 3}};
  const Scalar one = Scalar::one(s.field);
  const Character triv{one, one};
  const Character sign{one, -one};
  s.characters = {{triv, triv, sign}};
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
  std::vector<FiniteGroup> parts;
  size_t start = 0;
  while (true) {
    const size_t sep = name.find('x', start);
    parts.push_back(builtin_group_atom(
        name.substr(start, sep == std::string::npos ? sep : sep - start)));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  FiniteGroup g = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) g = FiniteGroup::direct_product(g, parts[i]);
  return g;
}

FiniteGroup group_from_json(const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("builtin"))
    return builtin_group(need_string(j, "builtin", where));
  if (j.is_object() && j.contains("table")) {
    const Json& names_j = need(j, "names", where);
    const Json& table_j = need(j, "table", where);
    if (!names_j.is_array() || !table_j.is_array())
      throw input_error(where + ": \"names\" and \"table\" must be arrays");
    std::vector<std::string> names;
    for (const Json& n : names_j) {
      if (!n.is_string()) throw input_error(where + ": group names are strings");
      names.push_back(n.get<std::string>());
    }
    std::vector<std::vector<uint32_t>> table;
    for (size_t r = 0; r < table_j.size(); ++r) {
      if (!table_j[r].is_array())
        throw input_error(where + ".table[" + std::to_string(r) + "]: expected a row");
      std::vector<uint32_t> row;
      for (const Json& e : table_j[r])
        row.push_back(as_uint(e, where + ".table[" + std::to_string(r) + "]"));
      table.push_back(std::move(row));
    }
    try {
      return FiniteGroup::from_table(std::move(names), std::move(table));
    } catch (const input_error& e) {
      throw input_error(where + ".table: " + e.what());
    }
  }
  throw input_error(where + ": group must be {\"builtin\": name} or {\"names\",\"table\"}");
}

DoubleKind double_kind_from_name(const std::string& s, const std::string& where) {
  if (s == "path-double") return DoubleKind::PathDouble;
  if (s == "semipath-double") return DoubleKind::SemipathDouble;
  throw input_error(where + ": variant must be \"path-double\" or \"semipath-double\"");
}

RUnitVariant r_unit_from_name(const std::string& s, const std::string& where) {
  if (s == "unit") return RUnitVariant::Unit;
  if (s == "vertex") return RUnitVariant::Vertex;
  throw input_error(where + ": r-unit variant must be \"unit\" or \"vertex\"");
}

InstanceSpec instance_from_json(const Json& j, const std::string& where) {
  expect_format(j, "qhopf-instance-v1", where);
  InstanceSpec s;
  if (j.contains("name")) s.name = need_string(j, "name", where);
  if (j.contains("field")) s.field = field_from_json(j["field"], where + ".field");

  const bool preset = j.contains("preset");
  if (preset) {
    const std::string p = need_string(j, "preset", where);
    if (p != "z2-three-loops") throw input_error(where + ": unknown preset \"" + p + "\"");
    if (j.contains("group") || j.contains("ramification") || j.contains("characters"))
      throw input_error(where + ": a preset replaces group/ramification/characters; "
                                "give one or the other");
    apply_three_loops_preset(s, where);
  } else {
    s.group = group_from_json(need(j, "group", where), where + ".group");
    s.group_echo = j["group"].contains("builtin") ? Json{{"builtin", j["group"]["builtin"]}}
                                                  : Json{{"names", Json::array()}, {"table", j["group"]["table"]}};
    if (!j["group"].contains("builtin"))
      for (uint32_t e = 0; e < s.group.order(); ++e) s.group_echo["names"].push_back(s.group.name(e));

    const Json& ram = need(j, "ramification", where);
    if (!ram.is_array() || ram.empty())
      throw input_error(where + ".ramification: expected a non-empty array");
    for (size_t i = 0; i < ram.size(); ++i) {
      const std::string rw = where + ".ramification[" + std::to_string(i) + "]";
      const uint32_t member = resolve_element(s.group, need(ram[i], "class", rw), rw);
      const uint32_t mult = need_uint(ram[i], "multiplicity", rw);
      if (mult == 0) throw input_error(rw + ": multiplicity must be >= 1");
      s.ramification.push_back(RamificationEntry{member, mult});
    }

    if (j.contains("characters")) {
      const Json& chars = j["characters"];
      if (!chars.is_array() || chars.size() != s.ramification.size())
        throw input_error(where + ".characters: one entry per ramification entry");
      for (size_t i = 0; i < chars.size(); ++i) {
        const std::string cw = where + ".characters[" + std::to_string(i) + "]";
        if (!chars[i].is_array() || chars[i].size() != s.ramification[i].multiplicity)
          throw input_error(cw + ": one character per arrow copy (multiplicity " +
                            std::to_string(s.ramification[i].multiplicity) + ")");
        std::vector<Character> per_copy;
        for (size_t c = 0; c < chars[i].size(); ++c)
          per_copy.push_back(character_from_json(s.group, s.field, chars[i][c],
                                                 cw + "[" + std::to_string(c) + "]"));
        s.characters.push_back(std::move(per_copy));
      }
    } else {
      // Absent means all-trivial; normalize so the echo reparses verbatim.
      const Character triv(s.group.order(), Scalar::one(s.field));
      for (const RamificationEntry& e : s.ramification)
        s.characters.emplace_back(e.multiplicity, triv);
    }
  }

  s.max_degree = need_uint(j, "max_degree", where);
  s.level = need_uint(j, "level", where);
  if (s.level > s.max_degree)
    throw input_error(where + ": level " + std::to_string(s.level) +
                      " exceeds the degree budget " + std::to_string(s.max_degree));
  if (j.contains("variant"))
    s.kind = double_kind_from_name(need_string(j, "variant", where), where + ".variant");
  if (j.contains("r_unit"))
    s.r_unit = r_unit_from_name(need_string(j, "r_unit", where), where + ".r_unit");
  return s;
}

InstanceSpec load_instance_file(const std::string& path) {
  return instance_from_json(load_json_file(path), path);
}

Json instance_json(const InstanceSpec& s) {
  Json ram = Json::array();
  for (const RamificationEntry& e : s.ramification)
    ram.push_back(Json{{"class", s.group.name(s.group.class_rep(e.class_member))},
                       {"multiplicity", e.multiplicity}});
  Json chars = Json::array();
  for (const auto& per_entry : s.characters) {
    Json copies = Json::array();
    for (const Character& chi : per_entry) {
      Json vals = Json::array();
      for (const Scalar& v : chi) vals.push_back(scalar_json(v));
      copies.push_back(std::move(vals));
    }
    chars.push_back(std::move(copies));
  }
  return Json{{"format", "qhopf-instance-v1"},
              {"name", s.name},
              {"field", field_json(s.field)},
              {"group", s.group_echo},
              {"ramification", std::move(ram)},
              {"characters", std::move(chars)},
              {"max_degree", s.max_degree},
              {"level", s.level},
              {"variant", double_kind_name(s.kind)},
              {"r_unit", r_unit_variant_name(s.r_unit)}};
}

CoveringQuiver quiver_of(const InstanceSpec& s) { return CoveringQuiver(s.group, s.ramification); }

LqtInstance build_instance(const InstanceSpec& s) {
  return build_lqt_instance(s.kind, s.field, quiver_of(s), s.characters, s.max_degree, s.level,
                            s.r_unit, s.name);
}

}  // namespace qhopf
