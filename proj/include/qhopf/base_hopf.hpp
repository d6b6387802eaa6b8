#pragma once

// The two degree-zero Hopf algebras everything is built over: the group
// algebra kG (basis = group elements, grouplike coproduct) and its dual
// (kG)* (basis = indicator functions p_g, pointwise product). Both are
// spanned by a basis indexed by group elements, and the standard pairing
// <p_g, h> = delta_{g,h} identifies each as the dual of the other, antipode
// included. Structure constants are exposed over raw basis indices.

#include <cstdint>
#include <tuple>
#include <vector>

#include "qhopf/field.hpp"
#include "qhopf/group.hpp"

namespace qhopf {

// Element of B (or of M) as a sparse combination of basis indices.
using IndexVec = std::vector<std::pair<uint32_t, Scalar>>;
// Element of B (x) B, or of B (x) M etc.
using IndexVec2 = std::vector<std::tuple<uint32_t, uint32_t, Scalar>>;

struct BaseHopf {
  Field field;
  FiniteGroup group;
  bool dual = false;  // false: basis {g}; true: basis {p_g}

  static BaseHopf group_algebra(const Field& f, FiniteGroup g) {
    return BaseHopf{f, std::move(g), false};
  }
  static BaseHopf dual_group_algebra(const Field& f, FiniteGroup g) {
    return BaseHopf{f, std::move(g), true};
  }
  BaseHopf dual_hopf() const { return BaseHopf{field, group, !dual}; }

  uint32_t dim() const { return group.order(); }
  std::string label(uint32_t i) const { return dual ? "p:" + group.name(i) : group.name(i); }
  std::string kind_name() const { return dual ? "kG*" : "kG"; }

  IndexVec mu(uint32_t i, uint32_t j) const;
  IndexVec2 delta(uint32_t i) const;
  Scalar counit(uint32_t i) const;
  IndexVec unit() const;
  uint32_t antipode(uint32_t i) const { return group.inverse(i); }  // basis-permuting both ways
};

}  // namespace qhopf
