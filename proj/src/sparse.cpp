#include "qhopf/sparse.hpp"

#include <mutex>
#include <vector>

#include "qhopf/errors.hpp"

namespace qhopf {
namespace {

struct SpaceRegistry {
  std::mutex mu;
  std::vector<std::string> names;
  std::map<std::string, SpaceId> ids;
};

SpaceRegistry& registry() {
  static SpaceRegistry r;
  static std::once_flag init;
  std::call_once(init, [] {
    r.names.push_back("?");  // id 0: the unnamed space of default-constructed vectors
    r.ids["?"] = 0;
  });
  return r;
}

}  // namespace

SpaceId intern_space(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.ids.find(name); it != r.ids.end()) return it->second;
  SpaceId id = static_cast<SpaceId>(r.names.size());
  r.names.push_back(name);
  r.ids.emplace(name, id);
  return id;
}

const std::string& space_name(SpaceId id) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (id >= r.names.size()) throw input_error("space: unknown id");
  return r.names[id];
}

void SparseVector::add(BasisIndex i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(i);
  if (it == coeffs.end()) {
    coeffs.emplace(i, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

void SparseVector::add_scaled(const SparseVector& v, const Scalar& c) {
  if (space != v.space)
    throw input_error("sparse: space mismatch (" + space_name(space) + " vs " +
                      space_name(v.space) + ")");
  if (c.is_zero()) return;
  for (const auto& [i, x] : v.coeffs) add(i, x * c);
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector out(space);
  out.add_scaled(*this, c);
  return out;
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
  SparseVector out = *this;
  if (o.is_zero()) return out;
  Scalar one = Scalar::one(o.coeffs.begin()->second.field());
  out.add_scaled(o, one);
  return out;
}

SparseVector SparseVector::operator-(const SparseVector& o) const {
  SparseVector out = *this;
  if (space != o.space)
    throw input_error("sparse: space mismatch in subtraction");
  for (const auto& [i, x] : o.coeffs) out.add(i, -x);
  return out;
}

bool SparseVector::operator==(const SparseVector& o) const {
  return space == o.space && coeffs == o.coeffs;
}

SparseVector SparseVector::truncated(uint32_t d) const {
  SparseVector out(space);
  for (const auto& [i, x] : coeffs)
    if (i.degree <= d) out.coeffs.emplace(i, x);
  return out;
}

std::string SparseVector::to_string(const LabelFn& label) const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [i, x] : coeffs) {
    if (!s.empty()) s += " + ";
    s += x.to_string() + "*" + label(i);
  }
  return s;
}

void SparseTensor::add(const TensorKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(k);
  if (it == coeffs.end()) {
    coeffs.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

void SparseTensor::add_scaled(const SparseTensor& t, const Scalar& c) {
  if (arity != t.arity || spaces != t.spaces)
    throw input_error("sparse: tensor shape mismatch");
  if (c.is_zero()) return;
  for (const auto& [k, x] : t.coeffs) add(k, x * c);
}

SparseTensor SparseTensor::operator-(const SparseTensor& o) const {
  if (arity != o.arity || spaces != o.spaces)
    throw input_error("sparse: tensor shape mismatch in subtraction");
  SparseTensor out = *this;
  for (const auto& [k, x] : o.coeffs) out.add(k, -x);
  return out;
}

bool SparseTensor::operator==(const SparseTensor& o) const {
  return arity == o.arity && spaces == o.spaces && coeffs == o.coeffs;
}

SparseTensor SparseTensor::slot_truncated(int slot, uint32_t d) const {
  SparseTensor out = *this;
  out.coeffs.clear();
  for (const auto& [k, x] : coeffs)
    if (k.idx[slot].degree <= d) out.coeffs.emplace(k, x);
  return out;
}

std::string SparseTensor::to_string(const std::array<LabelFn, 4>& labels) const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [k, x] : coeffs) {
    if (!s.empty()) s += " + ";
    s += x.to_string() + "*(";
    for (int i = 0; i < arity; ++i) {
      if (i) s += " (x) ";
      s += labels[i](k.idx[i]);
    }
    s += ")";
  }
  return s;
}

SparseTensor outer(const SparseVector& v, const SparseVector& w) {
  SparseTensor t(v.space, w.space);
  for (const auto& [i, x] : v.coeffs)
    for (const auto& [j, y] : w.coeffs) t.add(TensorKey::of(i, j), x * y);
  return t;
}

}  // namespace qhopf
