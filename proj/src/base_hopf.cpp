#include "qhopf/base_hopf.hpp"

namespace qhopf {

IndexVec BaseHopf::mu(uint32_t i, uint32_t j) const {
  if (!dual) return {{group.mul(i, j), Scalar::one(field)}};
  // pointwise product of indicator functions
  if (i != j) return {};
  return {{i, Scalar::one(field)}};
}

IndexVec2 BaseHopf::delta(uint32_t i) const {
  if (!dual) return {{i, i, Scalar::one(field)}};
  // Delta(p_g) = sum over factorizations a*b = g
  IndexVec2 out;
  for (uint32_t a = 0; a < group.order(); ++a)
    out.emplace_back(a, group.mul(group.inverse(a), i), Scalar::one(field));
  return out;
}

Scalar BaseHopf::counit(uint32_t i) const {
  if (!dual) return Scalar::one(field);
  return i == group.identity() ? Scalar::one(field) : Scalar::zero(field);
}

IndexVec BaseHopf::unit() const {
  if (!dual) return {{group.identity(), Scalar::one(field)}};
  IndexVec out;
  for (uint32_t g = 0; g < group.order(); ++g) out.emplace_back(g, Scalar::one(field));
  return out;
}

}  // namespace qhopf
