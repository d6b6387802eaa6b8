#pragma once

// Graded Hopf algebra cofreely cogenerated by a Hopf bimodule M over its
// degree-0 base B, truncated at a maximum degree.
//
// Degree 1 is M itself; degree n >= 2 is the balanced cotensor power,
// realised as ker(delta_plus (x) id - id (x) delta_minus) inside
// M (x) H_{n-1}. Every degree-n element is stored through its injective
// "flat" image in the n-th tensor power of M (words of letters, leftmost
// letter carrying the left coaction of the whole chain). The coproduct cuts
// flat words, with the two extreme components supplied by the letter
// coactions; the product interleaves the letters of the two factors in all
// order-preserving ways, filling the remaining slots by coaction values and
// multiplying slotwise through the bimodule actions. Results are re-expanded
// over the computed kernel bases, and every extraction asserts that the
// vector actually lies in the subspace it claims to.

#include <cstdint>
#include <string>

#include "qhopf/bimodule.hpp"
#include "qhopf/graded_hopf.hpp"

namespace qhopf {

GradedHopfAlgebra cotensor_hopf(const HopfBimodule& m, uint32_t max_degree,
                                const std::string& name);

}  // namespace qhopf
