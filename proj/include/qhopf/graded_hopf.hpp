#pragma once

// Truncated graded Hopf algebras with exact structure maps.
//
// An instance holds, for degrees 0..max_degree: labelled bases, an eager
// coproduct table (degree-preserving), the counit (supported in degree 0),
// the unit, and a lazy memoized product. Products of degrees i and j are
// defined exactly when i + j <= max_degree (the truncation contract); beyond
// that mu throws budget_error rather than returning a silently truncated
// value. Coalgebra structure is genuinely graded; the algebra structure may
// be merely filtered (a product of degrees i, j may have components of any
// degree <= i + j), which is what the double cross products need.
//
// The antipode is degree-preserving for graded products and is computed on
// demand, degree by degree, from the convolution equation
//   sum S(x_(1)) x_(2) = counit(x) 1
// by an exact linear solve over each coupled component of the top coproduct
// layer; builders with a closed antipode formula can install it instead. The
// inverse antipode comes from exact inversion of the antipode's diagonal
// degree blocks (plus a filtration descent when S is not graded). Everything
// any solve produces is re-verified by verify_hopf, which checks both
// convolution identities independently.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/report.hpp"
#include "qhopf/sparse.hpp"

namespace qhopf {

// Image of a basis element in the free word space over the degree-1 letters
// (degree-0 elements use single-letter words of base ordinals). Builders
// that have such a faithful representation store it; the graded duality
// pairing is the coefficientwise dot product of these words.
using LetterWord = std::vector<uint32_t>;
using FlatRep = std::map<LetterWord, Scalar>;

struct GradedHopfData {
  std::string name;     // also the interned space name unless `space` is set
  SpaceId space = 0;    // 0 means "intern a fresh space under `name`"
  Field field;
  uint32_t max_degree = 0;
  std::vector<std::vector<std::string>> labels;  // [degree][ordinal]
  std::vector<std::vector<SparseTensor>> delta;  // [degree][ordinal], arity 2
  std::vector<Scalar> counit0;                   // degree-0 counit values
  SparseVector unit;
  std::function<SparseVector(BasisIndex, BasisIndex)> mu;  // basis pair product
  // Optional explicit antipode (and inverse); absent means "solve for it".
  std::function<SparseVector(BasisIndex)> antipode;
  std::function<SparseVector(BasisIndex)> antipode_inv;
  // Optional flat letter-word representations, [degree][ordinal].
  std::vector<std::vector<FlatRep>> flat;
};

class GradedHopfAlgebra {
 public:
  explicit GradedHopfAlgebra(GradedHopfData data);

  const std::string& name() const;
  const Field& field() const;
  uint32_t max_degree() const;
  uint32_t dim(uint32_t degree) const;
  uint32_t total_dim() const;
  SpaceId space() const;
  const std::string& label(BasisIndex i) const;
  LabelFn label_fn() const;
  SparseVector basis_vec(BasisIndex i) const;

  const SparseVector& unit() const;
  Scalar counit(BasisIndex x) const;
  Scalar counit(const SparseVector& v) const;
  const SparseTensor& delta(BasisIndex x) const;
  SparseTensor delta(const SparseVector& v) const;
  // The (i, j)-homogeneous component of delta(x).
  SparseTensor delta_part(BasisIndex x, uint32_t i, uint32_t j) const;

  // budget_error when deg(x) + deg(y) > max_degree.
  SparseVector mu(BasisIndex x, BasisIndex y) const;
  SparseVector mu(const SparseVector& x, const SparseVector& y) const;

  SparseVector antipode(BasisIndex x) const;
  SparseVector antipode(const SparseVector& v) const;
  SparseVector antipode_inv(BasisIndex x) const;
  SparseVector antipode_inv(const SparseVector& v) const;

  bool has_flat() const;
  const FlatRep& flat_rep(BasisIndex x) const;  // input_error when absent

 private:
  struct State;
  std::shared_ptr<State> s_;
  friend GradedHopfAlgebra opposite_coalgebra(const GradedHopfAlgebra& h);
};

// Same underlying space and product, coproduct legs swapped, antipode
// replaced by its inverse. Vectors remain interchangeable between the two
// views; it is the caller's responsibility to pick the right structure maps.
GradedHopfAlgebra opposite_coalgebra(const GradedHopfAlgebra& h);

// "label[degree:ordinal]", for witnesses.
std::string show(const GradedHopfAlgebra& h, BasisIndex i);

// Machine-checks associativity, unit, coassociativity, counit, degree
// grading of the coproduct, the bialgebra law, both antipode convolution
// identities, and the antipode/inverse round trip. Product-side checks run
// over all basis tuples whose total degree fits the budget; tuples beyond it
// are not silently assumed (the check reports how many cases ran).
Report verify_hopf(const GradedHopfAlgebra& h, std::optional<uint32_t> budget = std::nullopt,
                   bool check_antipode = true);

}  // namespace qhopf
