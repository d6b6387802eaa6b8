#pragma once

// Instance descriptions: everything needed to build one double cross product
// with its canonical-element tower, as a JSON document ("qhopf-instance-v1").
//
// A document names the coefficient field, the group (builtin name or Cayley
// table), the ramification data (conjugacy class representative ->
// multiplicity), one character per arrow copy twisting the right action, the
// truncation budget N, the level cap n, the double variant, and the padding
// convention for the canonical element. The preset "z2-three-loops" fills
// group, ramification and characters with the two-element group carrying
// three loops twisted by (trivial, trivial, sign) — the smallest instance
// whose truncation behaviour is nontrivial — and requires an odd
// characteristic (the sign character needs -1 != 1).

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/lqt.hpp"
#include "qhopf/quiver.hpp"
#include "qhopf/serialize.hpp"

namespace qhopf {

struct InstanceSpec {
  std::string name = "instance";
  Field field = Field::rational();
  FiniteGroup group = FiniteGroup::cyclic(1);
  Json group_echo;  // normalized source form: {"builtin": ...} or a table
  std::vector<RamificationEntry> ramification;
  std::vector<std::vector<Character>> characters;  // [entry][copy][element]
  uint32_t max_degree = 0;
  uint32_t level = 0;
  DoubleKind kind = DoubleKind::PathDouble;
  RUnitVariant r_unit = RUnitVariant::Unit;
};

// Builtin names: "Z<n>" cyclic, "S<n>" symmetric (n <= 4), and products of
// those joined with "x" ("Z2xZ2").
FiniteGroup builtin_group(const std::string& name);
FiniteGroup group_from_json(const Json& j, const std::string& where);

InstanceSpec instance_from_json(const Json& j, const std::string& where);
InstanceSpec load_instance_file(const std::string& path);
// Normalized echo; parses back to an equivalent spec, dumps deterministically.
Json instance_json(const InstanceSpec& s);

CoveringQuiver quiver_of(const InstanceSpec& s);
LqtInstance build_instance(const InstanceSpec& s);

// Inverses of double_kind_name / r_unit_variant_name; input_error otherwise.
DoubleKind double_kind_from_name(const std::string& s, const std::string& where);
RUnitVariant r_unit_from_name(const std::string& s, const std::string& where);

}  // namespace qhopf
