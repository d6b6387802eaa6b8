#pragma once

// Sparse exact vectors and small tensors over named basis spaces.
//
// A basis element is addressed by (degree, ordinal) within its space; spaces
// are interned by name so that vectors over different algebras cannot be
// mixed silently. Ordered maps keep every iteration deterministic.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "qhopf/field.hpp"

namespace qhopf {

struct BasisIndex {
  uint32_t degree = 0;
  uint32_t ordinal = 0;

  auto operator<=>(const BasisIndex&) const = default;
  uint64_t pack() const { return (uint64_t(degree) << 32) | ordinal; }
  static BasisIndex unpack(uint64_t k) {
    return BasisIndex{uint32_t(k >> 32), uint32_t(k & 0xffffffffu)};
  }
};

using SpaceId = uint32_t;
SpaceId intern_space(const std::string& name);
const std::string& space_name(SpaceId id);

using LabelFn = std::function<std::string(BasisIndex)>;

struct SparseVector {
  SpaceId space = 0;
  std::map<BasisIndex, Scalar> coeffs;

  SparseVector() = default;
  explicit SparseVector(SpaceId s) : space(s) {}

  void add(BasisIndex i, const Scalar& c);  // accumulates, drops exact zeros
  void add_scaled(const SparseVector& v, const Scalar& c);
  SparseVector scaled(const Scalar& c) const;
  SparseVector operator+(const SparseVector& o) const;
  SparseVector operator-(const SparseVector& o) const;
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const SparseVector& o) const;
  // Restrict to components of degree <= d.
  SparseVector truncated(uint32_t d) const;
  size_t size() const { return coeffs.size(); }
  std::string to_string(const LabelFn& label) const;
};

struct TensorKey {
  std::array<BasisIndex, 4> idx{};  // slots >= arity stay (0,0)
  auto operator<=>(const TensorKey&) const = default;

  static TensorKey of(BasisIndex a, BasisIndex b) { return TensorKey{{a, b, {}, {}}}; }
  static TensorKey of(BasisIndex a, BasisIndex b, BasisIndex c) { return TensorKey{{a, b, c, {}}}; }
  static TensorKey of(BasisIndex a, BasisIndex b, BasisIndex c, BasisIndex d) {
    return TensorKey{{a, b, c, d}};
  }
};

struct SparseTensor {
  uint8_t arity = 2;
  std::array<SpaceId, 4> spaces{};
  std::map<TensorKey, Scalar> coeffs;

  SparseTensor() = default;
  SparseTensor(SpaceId a, SpaceId b) : arity(2), spaces{a, b, 0, 0} {}
  SparseTensor(SpaceId a, SpaceId b, SpaceId c) : arity(3), spaces{a, b, c, 0} {}
  SparseTensor(SpaceId a, SpaceId b, SpaceId c, SpaceId d) : arity(4), spaces{a, b, c, d} {}

  void add(const TensorKey& k, const Scalar& c);
  void add_scaled(const SparseTensor& t, const Scalar& c);
  SparseTensor operator-(const SparseTensor& o) const;
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const SparseTensor& o) const;
  // Restrict slot `slot` to degree <= d.
  SparseTensor slot_truncated(int slot, uint32_t d) const;
  size_t size() const { return coeffs.size(); }
  std::string to_string(const std::array<LabelFn, 4>& labels) const;
};

// v ⊗ w as a 2-tensor.
SparseTensor outer(const SparseVector& v, const SparseVector& w);

}  // namespace qhopf
