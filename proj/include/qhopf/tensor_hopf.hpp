#pragma once

// Graded Hopf algebra freely generated by a Hopf bimodule M over its
// degree-0 base B, truncated at a maximum degree.
//
// Degree n is the balanced tensor power M tensor_B ... tensor_B M (n
// factors), realised concretely as the quotient of M (x) H_{n-1} by the span
// of (m . b) (x) h - m (x) (b . h). The quotient is computed by exact row
// reduction; the surviving basis consists of pure tensors (the non-pivot
// columns), and a projection table rewrites arbitrary pure tensors over that
// basis. The product is concatenation followed by projection; the coproduct
// is the unique bialgebra extension of the bimodule coactions
//   delta_1(m) = m_(-1) (x) m_(0) + m_(0) (x) m_(+1)
// with the two legs embedded in degrees 0 and 1.

#include <cstdint>
#include <string>

#include "qhopf/bimodule.hpp"
#include "qhopf/graded_hopf.hpp"

namespace qhopf {

GradedHopfAlgebra tensor_hopf(const HopfBimodule& m, uint32_t max_degree,
                              const std::string& name);

}  // namespace qhopf
