#include "qhopf/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qhopf/errors.hpp"

namespace qhopf {
namespace {

// Cycle notation with 1-based points, "e" for the identity: (12), (123), (12)(34).
std::string perm_name(const std::vector<uint32_t>& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      s += std::to_string(j + 1);
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(uint32_t n) {
  if (n == 0) throw input_error("group: cyclic(0)");
  std::vector<std::string> names(n);
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
    for (uint32_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric(uint32_t n) {
  if (n < 1 || n > 4) throw input_error("group: symmetric(n) needs 1 <= n <= 4");
  std::vector<std::vector<uint32_t>> perms;
  std::vector<uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));  // lex order, identity first
  const uint32_t order = static_cast<uint32_t>(perms.size());
  std::map<std::vector<uint32_t>, uint32_t> index;
  std::vector<std::string> names(order);
  for (uint32_t i = 0; i < order; ++i) {
    index[perms[i]] = i;
    names[i] = perm_name(perms[i]);
  }
  std::vector<std::vector<uint32_t>> table(order, std::vector<uint32_t>(order));
  for (uint32_t i = 0; i < order; ++i)
    for (uint32_t j = 0; j < order; ++j) {
      std::vector<uint32_t> c(n);  // (i∘j)(x) = perms[i][perms[j][x]]
      for (uint32_t x = 0; x < n; ++x) c[x] = perms[i][perms[j][x]];
      table[i][j] = index[c];
    }
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const uint32_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> names(n);
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t i = 0; i < n; ++i) {
    names[i] = "(" + a.name(i / nb) + "," + b.name(i % nb) + ")";
    for (uint32_t j = 0; j < n; ++j)
      table[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  }
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    std::vector<std::vector<uint32_t>> table) {
  const uint32_t n = static_cast<uint32_t>(names.size());
  if (n == 0 || table.size() != n) throw input_error("group: table size mismatch");
  for (const auto& row : table) {
    if (row.size() != n) throw input_error("group: table is not square");
    for (uint32_t v : row)
      if (v >= n) throw input_error("group: table entry out of range");
  }
  for (uint32_t g = 0; g < n; ++g)
    if (table[0][g] != g || table[g][0] != g)
      throw input_error("group: element 0 is not an identity");
  for (uint32_t g = 0; g < n; ++g) {
    std::vector<bool> row(n, false), col(n, false);
    for (uint32_t h = 0; h < n; ++h) {
      if (row[table[g][h]] || col[table[h][g]])
        throw input_error("group: table is not a Latin square");
      row[table[g][h]] = col[table[h][g]] = true;
    }
  }
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw input_error("group: table is not associative");

  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inv_.assign(n, 0);
  for (uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (uint32_t b = 0; b < n; ++b)
      if (g.table_[a][b] == 0 && g.table_[b][a] == 0) {
        g.inv_[a] = b;
        found = true;
        break;
      }
    if (!found) throw input_error("group: missing inverse");
  }
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (uint32_t a = 0; a < order(); ++a)
    for (uint32_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<uint32_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<uint32_t>> classes;
  std::vector<bool> seen(order(), false);
  for (uint32_t g = 0; g < order(); ++g) {
    if (seen[g]) continue;
    std::vector<uint32_t> cls;
    for (uint32_t h = 0; h < order(); ++h) {
      uint32_t c = conjugate(h, g);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

uint32_t FiniteGroup::class_rep(uint32_t g) const {
  uint32_t m = g;
  for (uint32_t h = 0; h < order(); ++h) m = std::min(m, conjugate(h, g));
  return m;
}

}  // namespace qhopf
