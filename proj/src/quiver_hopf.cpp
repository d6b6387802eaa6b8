#include "qhopf/quiver_hopf.hpp"

#include "qhopf/cotensor_hopf.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/tensor_hopf.hpp"

namespace qhopf {

std::string quiver_hopf_kind_name(QuiverHopfKind kind) {
  switch (kind) {
    case QuiverHopfKind::PathAlgebra: return "kQa";
    case QuiverHopfKind::PathCoalgebra: return "kQc";
    case QuiverHopfKind::SemipathAlgebra: return "kQs";
    case QuiverHopfKind::SemipathCoalgebra: return "kQsc";
  }
  throw input_error("unknown quiver hopf kind");
}

namespace {

void assert_path_basis(const GradedHopfAlgebra& h, const CoveringQuiver& q,
                       QuiverHopfKind kind) {
  const FiniteGroup& g = q.group();
  for (uint32_t n = 0; n <= h.max_degree(); ++n) {
    const std::vector<Path> paths = q.enumerate_paths(n);
    if (h.dim(n) != paths.size())
      throw verification_error(h.name() + ": degree " + std::to_string(n) + " has dimension " +
                               std::to_string(h.dim(n)) + ", expected " +
                               std::to_string(paths.size()) + " paths");
    for (uint32_t k = 0; k < paths.size(); ++k) {
      std::string expect = q.path_label(paths[k]);
      if (kind == QuiverHopfKind::PathAlgebra) {
        // Tensor-side labels carry the source vertex idempotent at the end.
        expect = (n == 0) ? "p:" + g.name(paths[k].source)
                          : expect + "|p:" + g.name(paths[k].source);
      }
      if (h.label(BasisIndex{n, k}) != expect)
        throw verification_error(h.name() + ": basis " + std::to_string(n) + ":" +
                                 std::to_string(k) + " is " + h.label(BasisIndex{n, k}) +
                                 ", expected path " + expect);
    }
  }
}

}  // namespace

GradedHopfAlgebra quiver_hopf(QuiverHopfKind kind, const Field& f, const CoveringQuiver& q,
                              const std::vector<std::vector<Character>>& chars,
                              uint32_t max_degree, const std::string& name) {
  const HopfBimodule bm = translation_bimodule(f, q, chars);
  switch (kind) {
    case QuiverHopfKind::PathAlgebra: {
      GradedHopfAlgebra h = tensor_hopf(bm.dualize(), max_degree, name);
      assert_path_basis(h, q, kind);
      return h;
    }
    case QuiverHopfKind::PathCoalgebra: {
      GradedHopfAlgebra h = cotensor_hopf(bm, max_degree, name);
      assert_path_basis(h, q, kind);
      return h;
    }
    case QuiverHopfKind::SemipathAlgebra:
      return tensor_hopf(bm, max_degree, name);
    case QuiverHopfKind::SemipathCoalgebra:
      return cotensor_hopf(bm.dualize(), max_degree, name);
  }
  throw input_error("unknown quiver hopf kind");
}

}  // namespace qhopf
