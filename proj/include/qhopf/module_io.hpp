#pragma once

// Exchange formats for module certificates ("qhopf-module-v1"), emitted
// braiding operators ("qhopf-braiding-v1"), and coaction structures
// ("qhopf-yd-v1"). A certificate file is bound to a concrete algebra on
// load (its space and field come from the algebra, never from the file),
// then stands or falls by check_module like any other certificate.

#include <string>

#include "qhopf/braidmod.hpp"
#include "qhopf/serialize.hpp"

namespace qhopf {

Json module_json(const FiniteCycleModule& m);
FiniteCycleModule module_from_json(const GradedHopfAlgebra& d, const Json& j,
                                   const std::string& where);
FiniteCycleModule load_module_file(const GradedHopfAlgebra& d, const std::string& path);

// Row-major matrices over the flattened pair bases, with both label lists.
Json braiding_json(const BraidingOperator& c, const FiniteCycleModule& u,
                   const FiniteCycleModule& v);

// Coaction columns of the canonical element: for each carrier vector, the
// list of [algebra-index, target-vector, coefficient].
Json yd_json(const YdStructure& yd);

}  // namespace qhopf
