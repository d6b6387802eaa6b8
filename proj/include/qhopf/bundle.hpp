#pragma once

// Algebra bundles ("qhopf-bundle-v1"): one self-contained JSON document per
// built instance, carrying a complete presentation of the double cross
// product — the normalized instance description (variant, padding
// convention, characters), both tensor factors as explicit tables (labelled
// bases fixing every ordering, coproduct, counit, unit, all nonzero in-budget
// products, antipode, letter-word representations), the pairing's nonzero
// values, the canonical-element tower and the copairing it came from, and
// the dimension table. Everything downstream of the factor tables is
// reconstructed on load: the pairing from the letter words, the double from
// the factors, the tower from the stored copairing levels (which are
// injected, so they are load-bearing, not decorative). verify_bundle_tables
// then cross-checks the stored derived sections against the reconstruction,
// so any single edited coefficient anywhere in the file is caught either by
// an axiom verifier or by a table-consistency witness.

#include <string>

#include "qhopf/instance.hpp"
#include "qhopf/lqt.hpp"
#include "qhopf/serialize.hpp"

namespace qhopf {

Json bundle_json(const InstanceSpec& spec, const LqtInstance& inst);

struct LoadedBundle {
  InstanceSpec spec;
  LqtInstance inst;
  Json stored;  // the source document, kept for table cross-checks
};

LoadedBundle load_bundle(const Json& j, const std::string& where);
LoadedBundle load_bundle_file(const std::string& path);

// Cross-checks the stored derived sections against the reconstruction:
//   dims-table       stored dimension table vs actual graded dimensions
//   tau-table        stored pairing values vs letter-word evaluation
//   copairing-table  stored (injected) copairing levels vs a fresh dual basis
//   r-table          stored tower levels vs the tower rebuilt from the
//                    stored copairing
Report verify_bundle_tables(const LoadedBundle& b);

// Serialized factor table, reusable for any graded Hopf algebra that carries
// letter-word representations.
Json algebra_json(const GradedHopfAlgebra& g);
GradedHopfAlgebra algebra_from_json(const Field& f, const Json& j, const std::string& where);

}  // namespace qhopf
