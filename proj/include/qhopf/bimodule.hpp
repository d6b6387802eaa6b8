#pragma once

// Hopf bimodules over a degree-zero base: a finite carrier M with left and
// right B-actions, left and right B-coactions, satisfying the module,
// comodule, and compatibility laws (both coactions are morphisms of
// B-bimodules). These are exactly the coefficient data from which the graded
// quiver algebras are generated, with arrows as the carrier basis.
//
// Nothing here is trusted: verify() machine-checks every law and names a
// witness on failure, and the generators below are verified in tests before
// anything downstream consumes them.

#include <string>
#include <vector>

#include "qhopf/base_hopf.hpp"
#include "qhopf/quiver.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

struct HopfBimodule {
  BaseHopf base;
  std::vector<std::string> labels;

  // act_left[b][m], act_right[m][b]: sparse combinations over M.
  std::vector<std::vector<IndexVec>> act_left;
  std::vector<std::vector<IndexVec>> act_right;
  // coact_left[m] in B (x) M, coact_right[m] in M (x) B.
  std::vector<IndexVec2> coact_left;
  std::vector<IndexVec2> coact_right;

  uint32_t dim() const { return static_cast<uint32_t>(labels.size()); }

  // Module laws (associativity + unit, both sides), bimodule commutation,
  // comodule laws (coassociativity + counit, both sides), bicomodule
  // commutation, and the four Hopf compatibilities (each coaction is a
  // bimodule morphism). Any failure carries a witness.
  Report verify() const;

  // The dual bimodule over the dual base: actions are transposes of the
  // coactions and vice versa; the basis (and labels) are reused for the dual
  // basis. Dualizing twice returns the original structure.
  HopfBimodule dualize() const;
};

// One-dimensional character of G with values in the field; must be
// multiplicative and send the identity to 1.
using Character = std::vector<Scalar>;

// The translation bimodule on the arrows of a covering quiver:
//   g . a(x, c, i)     = a(gx, c, i)
//   a(x, c, i) . g     = chi[k][i](g) * a(xg, g^-1 c g, i)
// with canonical vertex coactions  a -> t(a) (x) a  and  a -> a (x) s(a).
// chars[k][i] is the character twisting copy i of ramification entry k; an
// empty chars vector means all-trivial. The result is machine-verifiable for
// any group and ramification.
HopfBimodule translation_bimodule(const Field& f, const CoveringQuiver& q,
                                  const std::vector<std::vector<Character>>& chars = {});

// The running two-vertex example: Z2, three loop copies at each vertex,
// third copy twisted by the sign character of Z2.
HopfBimodule z2_three_loops_bimodule(const Field& f);

}  // namespace qhopf
