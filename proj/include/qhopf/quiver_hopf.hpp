#pragma once

// The four graded Hopf algebras attached to a covering quiver:
//
//   PathAlgebra        tensor algebra of the dualized translation bimodule
//                      over the dual group algebra; basis = paths.
//   PathCoalgebra      cotensor algebra of the translation bimodule over the
//                      group algebra; basis = paths, cut coproduct.
//   SemipathAlgebra    tensor algebra of the translation bimodule over the
//                      group algebra.
//   SemipathCoalgebra  cotensor algebra of the dualized bimodule over the
//                      dual group algebra.
//
// For the two path-basis kinds the constructor asserts that basis ordinal k
// in degree n corresponds to enumerate_paths(n)[k]; downstream code (duality
// pairings, frozen test vectors) relies on that order, so a violation is a
// hard error, not a silent re-indexing.

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/bimodule.hpp"
#include "qhopf/graded_hopf.hpp"
#include "qhopf/quiver.hpp"

namespace qhopf {

enum class QuiverHopfKind { PathAlgebra, PathCoalgebra, SemipathAlgebra, SemipathCoalgebra };

std::string quiver_hopf_kind_name(QuiverHopfKind kind);

// chars: one character per (ramification entry, copy), twisting the right
// action of the translation bimodule; empty means all trivial.
GradedHopfAlgebra quiver_hopf(QuiverHopfKind kind, const Field& f, const CoveringQuiver& q,
                              const std::vector<std::vector<Character>>& chars,
                              uint32_t max_degree, const std::string& name);

}  // namespace qhopf
