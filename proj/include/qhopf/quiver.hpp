#pragma once

// Covering quivers of a finite group: vertices are the group elements and,
// for each chosen conjugacy class C with multiplicity r_C, there are r_C
// arrows x -> xc for every x in the group and c in C.
//
// Arrow enumeration is fixed: source ascending, then class (by minimal
// element), then class element ascending, then copy index. Paths are stored
// with their arrows in traversal order (arrows[0] is traversed first) and
// printed last-arrow-first, joined by '|', matching the composition-style
// notation a_n|...|a_1.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qhopf/group.hpp"

namespace qhopf {

struct RamificationEntry {
  uint32_t class_member;  // any element of the class
  uint32_t multiplicity;  // >= 1
};

struct Arrow {
  uint32_t source = 0;
  uint32_t target = 0;     // source * class_elt
  uint32_t class_rep = 0;  // minimal element of the class
  uint32_t class_elt = 0;  // the c with target = source * c
  uint32_t copy = 0;       // 0-based copy index within (source, c)
};

struct Path {
  uint32_t source = 0;             // vertex, also the value for length 0
  std::vector<uint32_t> arrows{};  // arrow ids, traversal order

  uint32_t length() const { return static_cast<uint32_t>(arrows.size()); }
  bool operator==(const Path&) const = default;
};

class CoveringQuiver {
 public:
  CoveringQuiver(FiniteGroup group, std::vector<RamificationEntry> ramification);

  const FiniteGroup& group() const { return group_; }
  uint32_t num_vertices() const { return group_.order(); }
  uint32_t num_arrows() const { return static_cast<uint32_t>(arrows_.size()); }
  const Arrow& arrow(uint32_t id) const { return arrows_[id]; }
  const std::vector<uint32_t>& arrows_from(uint32_t vertex) const { return by_source_[vertex]; }
  // (class_rep, multiplicity) pairs, ordered by class_rep.
  const std::vector<std::pair<uint32_t, uint32_t>>& ramification() const { return ram_; }

  // Inverse of the enumeration: the arrow source -> source*c, copy i.
  uint32_t arrow_id(uint32_t source, uint32_t class_elt, uint32_t copy) const;
  std::string arrow_label(uint32_t id) const;
  uint32_t path_target(const Path& p) const;
  std::string path_label(const Path& p) const;
  bool path_valid(const Path& p) const;
  // first-arrow-major lexicographic order on arrow ids; length 0 = vertices
  // in group order.
  std::vector<Path> enumerate_paths(uint32_t length) const;
  // p after q: defined iff source(p) == target(q).
  std::optional<Path> compose(const Path& p, const Path& q) const;

 private:
  FiniteGroup group_;
  std::vector<std::pair<uint32_t, uint32_t>> ram_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<uint32_t>> by_source_;
  std::map<std::tuple<uint32_t, uint32_t, uint32_t>, uint32_t> id_of_;
};

}  // namespace qhopf
