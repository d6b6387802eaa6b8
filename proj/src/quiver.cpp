#include "qhopf/quiver.hpp"

#include <algorithm>
#include <map>

#include "qhopf/errors.hpp"

namespace qhopf {

CoveringQuiver::CoveringQuiver(FiniteGroup group, std::vector<RamificationEntry> ramification)
    : group_(std::move(group)) {
  std::map<uint32_t, uint32_t> mult_of_rep;
  for (const auto& e : ramification) {
    if (e.class_member >= group_.order()) throw input_error("quiver: class member out of range");
    if (e.multiplicity == 0) throw input_error("quiver: zero multiplicity");
    uint32_t rep = group_.class_rep(e.class_member);
    if (!mult_of_rep.emplace(rep, e.multiplicity).second)
      throw input_error("quiver: class listed twice in ramification");
  }
  if (mult_of_rep.empty()) throw input_error("quiver: empty ramification");
  ram_.assign(mult_of_rep.begin(), mult_of_rep.end());

  auto classes = group_.conjugacy_classes();
  by_source_.resize(group_.order());
  for (uint32_t x = 0; x < group_.order(); ++x) {
    for (const auto& [rep, mult] : ram_) {
      for (const auto& cls : classes) {
        if (cls.front() != rep) continue;
        for (uint32_t c : cls)
          for (uint32_t i = 0; i < mult; ++i) {
            by_source_[x].push_back(num_arrows());
            id_of_[{x, c, i}] = num_arrows();
            arrows_.push_back(Arrow{x, group_.mul(x, c), rep, c, i});
          }
      }
    }
  }
}

uint32_t CoveringQuiver::arrow_id(uint32_t source, uint32_t class_elt, uint32_t copy) const {
  auto it = id_of_.find({source, class_elt, copy});
  if (it == id_of_.end()) throw input_error("quiver: no such arrow");
  return it->second;
}

std::string CoveringQuiver::arrow_label(uint32_t id) const {
  const Arrow& a = arrows_[id];
  return "a" + std::to_string(a.copy + 1) + ":" + group_.name(a.source) + ">" +
         group_.name(a.target);
}

uint32_t CoveringQuiver::path_target(const Path& p) const {
  return p.arrows.empty() ? p.source : arrows_[p.arrows.back()].target;
}

bool CoveringQuiver::path_valid(const Path& p) const {
  if (p.source >= group_.order()) return false;
  uint32_t at = p.source;
  for (uint32_t id : p.arrows) {
    if (id >= num_arrows() || arrows_[id].source != at) return false;
    at = arrows_[id].target;
  }
  return true;
}

std::string CoveringQuiver::path_label(const Path& p) const {
  if (p.arrows.empty()) return group_.name(p.source);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "|";
    s += arrow_label(*it);
  }
  return s;
}

std::vector<Path> CoveringQuiver::enumerate_paths(uint32_t length) const {
  std::vector<Path> out;
  if (length == 0) {
    for (uint32_t v = 0; v < group_.order(); ++v) out.push_back(Path{v, {}});
    return out;
  }
  Path cur;
  auto extend = [&](auto&& self, uint32_t at, uint32_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (uint32_t id : by_source_[at]) {
      cur.arrows.push_back(id);
      self(self, arrows_[id].target, remaining - 1);
      cur.arrows.pop_back();
    }
  };
  for (uint32_t v = 0; v < group_.order(); ++v) {
    cur = Path{v, {}};
    extend(extend, v, length);
  }
  return out;
}

std::optional<Path> CoveringQuiver::compose(const Path& p, const Path& q) const {
  if (p.source != path_target(q)) return std::nullopt;
  Path r = q;
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

}  // namespace qhopf
