#pragma once

// Finite groups as validated multiplication tables. Element 0 is always the
// identity; orderings (elements, conjugacy classes) are fixed so every
// downstream enumeration is deterministic.

#include <cstdint>
#include <string>
#include <vector>

namespace qhopf {

class FiniteGroup {
 public:
  static FiniteGroup cyclic(uint32_t n);
  static FiniteGroup symmetric(uint32_t n);  // 1 <= n <= 4, lex order on permutations
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // Validates: square table, identity at 0, Latin square, associativity.
  static FiniteGroup from_table(std::vector<std::string> names,
                                std::vector<std::vector<uint32_t>> table);

  uint32_t order() const { return static_cast<uint32_t>(names_.size()); }
  uint32_t identity() const { return 0; }
  uint32_t mul(uint32_t g, uint32_t h) const { return table_[g][h]; }
  uint32_t inverse(uint32_t g) const { return inv_[g]; }
  uint32_t conjugate(uint32_t g, uint32_t x) const {  // g x g^-1
    return mul(mul(g, x), inverse(g));
  }
  const std::string& name(uint32_t g) const { return names_[g]; }
  bool is_abelian() const;

  // Classes ordered by their minimal element; elements ascending inside.
  std::vector<std::vector<uint32_t>> conjugacy_classes() const;
  // Minimal element of the class of g.
  uint32_t class_rep(uint32_t g) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<uint32_t>> table_;
  std::vector<uint32_t> inv_;
};

}  // namespace qhopf
