#include "qhopf/cotensor_hopf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

#include "qhopf/errors.hpp"
#include "qhopf/linsolve.hpp"

namespace qhopf {

namespace {

using Word = std::vector<uint32_t>;          // letter ordinals, leftmost first
using Flat = std::map<Word, Scalar>;         // element of a tensor power of M
using Flat2 = std::map<std::pair<Word, Word>, Scalar>;

void flat_add(Flat& f, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = f.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

void flat2_add(Flat2& f, const Word& a, const Word& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = f.emplace(std::make_pair(a, b), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

struct CotensorState {
  BaseHopf base;
  HopfBimodule bm;
  Field field;
  uint32_t max_degree = 0;
  SpaceId space = 0;
  uint32_t dim_m = 0;

  std::vector<uint32_t> dims;                      // [degree]
  std::vector<std::vector<Flat>> flat;             // [n>=1][ordinal]
  std::vector<std::vector<Word>> pivot_words;      // [n>=1][k]
  std::vector<std::optional<DenseMatrix>> tmat;    // [n>=1]

  // Coordinates of a flat vector over the degree-n basis; throws if the
  // vector does not lie in the degree-n subspace (re-expansion check).
  std::vector<Scalar> coords(uint32_t n, const Flat& v) const {
    const uint32_t dn = dims[n];
    const DenseMatrix& t = *tmat[n];
    std::vector<Scalar> c(dn, Scalar::zero(field));
    for (uint32_t k = 0; k < dn; ++k)
      if (auto it = v.find(pivot_words[n][k]); it != v.end()) c[k] = it->second;
    std::vector<Scalar> x(dn, Scalar::zero(field));
    for (uint32_t j = 0; j < dn; ++j)
      for (uint32_t k = 0; k < dn; ++k)
        if (!c[k].is_zero()) x[j] += c[k] * t.at(k, j);
    Flat check;
    for (uint32_t j = 0; j < dn; ++j)
      if (!x[j].is_zero())
        for (const auto& [w, cw] : flat[n][j]) flat_add(check, w, x[j] * cw);
    if (!(check == v))
      throw verification_error("flat vector of degree " + std::to_string(n) +
                               " is not in the cotensor subspace");
    return x;
  }

  SparseVector extract(uint32_t n, const Flat& v) const {
    SparseVector out(space);
    if (n == 0) throw input_error("extract: degree must be positive");
    const std::vector<Scalar> x = coords(n, v);
    for (uint32_t j = 0; j < dims[n]; ++j)
      if (!x[j].is_zero()) out.add(BasisIndex{n, j}, x[j]);
    return out;
  }

  // Two-sided extraction over basis_i (x) basis_j, with its own
  // re-expansion check.
  SparseTensor extract2(uint32_t i, uint32_t j, const Flat2& f) const {
    SparseTensor out(space, space);
    const uint32_t di = dims[i], dj = dims[j];
    const DenseMatrix& ti = *tmat[i];
    const DenseMatrix& tj = *tmat[j];
    DenseMatrix c(field, di, dj);
    for (uint32_t k = 0; k < di; ++k)
      for (uint32_t l = 0; l < dj; ++l)
        if (auto it = f.find(std::make_pair(pivot_words[i][k], pivot_words[j][l]));
            it != f.end())
          c.at(k, l) = it->second;
    DenseMatrix x(field, di, dj);
    for (uint32_t a = 0; a < di; ++a)
      for (uint32_t b = 0; b < dj; ++b) {
        Scalar acc = Scalar::zero(field);
        for (uint32_t k = 0; k < di; ++k)
          for (uint32_t l = 0; l < dj; ++l)
            if (!c.at(k, l).is_zero()) acc += c.at(k, l) * ti.at(k, a) * tj.at(l, b);
        x.at(a, b) = acc;
      }
    Flat2 check;
    for (uint32_t a = 0; a < di; ++a)
      for (uint32_t b = 0; b < dj; ++b)
        if (!x.at(a, b).is_zero())
          for (const auto& [wa, ca] : flat[i][a])
            for (const auto& [wb, cb] : flat[j][b])
              flat2_add(check, wa, wb, x.at(a, b) * ca * cb);
    if (!(check == f))
      throw verification_error("flat tensor is not in the cotensor subspace pair (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
    for (uint32_t a = 0; a < di; ++a)
      for (uint32_t b = 0; b < dj; ++b)
        if (!x.at(a, b).is_zero())
          out.add(TensorKey::of(BasisIndex{i, a}, BasisIndex{j, b}), x.at(a, b));
    return out;
  }

  // Iterated coproduct of a base element spread over `slots` positions.
  std::vector<std::pair<std::vector<uint32_t>, Scalar>> delta_iter(uint32_t b,
                                                                   uint32_t slots) const {
    if (slots == 1) return {{{b}, Scalar::one(field)}};
    std::vector<std::pair<std::vector<uint32_t>, Scalar>> out;
    for (const auto& [b1, b2, c] : base.delta(b))
      for (const auto& [rest, c2] : delta_iter(b2, slots - 1)) {
        std::vector<uint32_t> v{b1};
        v.insert(v.end(), rest.begin(), rest.end());
        out.emplace_back(std::move(v), c * c2);
      }
    return out;
  }

  // r applications of the left coaction to letter m: base values, outermost
  // first, plus the surviving letter.
  std::vector<std::tuple<std::vector<uint32_t>, uint32_t, Scalar>> fill_left(
      uint32_t m, uint32_t r) const {
    if (r == 0) return {{{}, m, Scalar::one(field)}};
    std::vector<std::tuple<std::vector<uint32_t>, uint32_t, Scalar>> out;
    for (const auto& [b, m2, c] : bm.coact_left[m])
      for (const auto& [bs, m3, c2] : fill_left(m2, r - 1)) {
        std::vector<uint32_t> v{b};
        v.insert(v.end(), bs.begin(), bs.end());
        out.emplace_back(std::move(v), m3, c * c2);
      }
    return out;
  }

  // r applications of the right coaction to letter m: surviving letter plus
  // base values, innermost first.
  std::vector<std::tuple<uint32_t, std::vector<uint32_t>, Scalar>> fill_right(
      uint32_t m, uint32_t r) const {
    if (r == 0) return {{m, {}, Scalar::one(field)}};
    std::vector<std::tuple<uint32_t, std::vector<uint32_t>, Scalar>> out;
    for (const auto& [m2, b, c] : bm.coact_right[m])
      for (const auto& [m3, bs, c2] : fill_right(m2, r - 1)) {
        std::vector<uint32_t> v = bs;
        v.push_back(b);
        out.emplace_back(m3, std::move(v), c * c2);
      }
    return out;
  }

  // One slot of an interleaving: either a surviving letter or a base value.
  struct SlotPart {
    bool is_letter = false;
    uint32_t ord = 0;
  };

  // Spread the letters of `w` over the positions in S (ascending, |S| =
  // |w|), filling the remaining of `slots` positions with coaction values:
  // left coaction for gaps before a letter, right coaction for the tail gap.
  std::vector<std::pair<std::vector<SlotPart>, Scalar>> word_expand(
      const Word& w, const std::vector<uint32_t>& S, uint32_t slots) const {
    const uint32_t d = static_cast<uint32_t>(w.size());
    std::vector<std::pair<std::vector<SlotPart>, Scalar>> out;
    out.push_back({std::vector<SlotPart>(slots), Scalar::one(field)});
    for (uint32_t k = 0; k < d; ++k) {
      const uint32_t gap_start = (k == 0) ? 0 : S[k - 1] + 1;
      const uint32_t r_left = S[k] - gap_start;
      const uint32_t r_right = (k + 1 == d) ? slots - 1 - S[k] : 0;
      // Variants for this letter: left fills, surviving letter, right fills.
      std::vector<std::tuple<std::vector<uint32_t>, uint32_t, std::vector<uint32_t>, Scalar>>
          vars;
      for (const auto& [bs_l, m2, c1] : fill_left(w[k], r_left))
        for (const auto& [m3, bs_r, c2] : fill_right(m2, r_right))
          vars.emplace_back(bs_l, m3, bs_r, c1 * c2);
      std::vector<std::pair<std::vector<SlotPart>, Scalar>> next;
      for (const auto& [slots_so_far, c0] : out)
        for (const auto& [bs_l, m3, bs_r, cv] : vars) {
          std::vector<SlotPart> s = slots_so_far;
          for (uint32_t t = 0; t < r_left; ++t) s[gap_start + t] = {false, bs_l[t]};
          s[S[k]] = {true, m3};
          for (uint32_t t = 0; t < r_right; ++t) s[S[k] + 1 + t] = {false, bs_r[t]};
          next.push_back({std::move(s), c0 * cv});
        }
      out = std::move(next);
    }
    return out;
  }

  // All expansions of a degree-d basis element over `slots` positions with
  // letters at S.
  std::vector<std::pair<std::vector<SlotPart>, Scalar>> elt_expand(
      BasisIndex x, const std::vector<uint32_t>& S, uint32_t slots) const {
    std::vector<std::pair<std::vector<SlotPart>, Scalar>> out;
    if (x.degree == 0) {
      for (const auto& [bs, c] : delta_iter(x.ordinal, slots)) {
        std::vector<SlotPart> s(slots);
        for (uint32_t t = 0; t < slots; ++t) s[t] = {false, bs[t]};
        out.push_back({std::move(s), c});
      }
      return out;
    }
    for (const auto& [w, cw] : flat[x.degree][x.ordinal])
      for (auto& [s, c] : word_expand(w, S, slots)) out.push_back({std::move(s), cw * c});
    return out;
  }

  SparseVector mu(BasisIndex x, BasisIndex y) {
    const uint32_t i = x.degree, j = y.degree, n = i + j;
    SparseVector out(space);
    if (n == 0) {
      for (const auto& [r, c] : base.mu(x.ordinal, y.ordinal)) out.add(BasisIndex{0, r}, c);
      return out;
    }
    Flat acc;
    // Positions of the left factor's letters among the n slots.
    std::vector<uint32_t> S(i);
    for (uint32_t t = 0; t < i; ++t) S[t] = t;
    auto advance = [&]() -> bool {
      if (i == 0) return false;
      uint32_t k = i;
      while (k-- > 0) {
        const uint32_t limit = n - (i - k);
        if (S[k] < limit) {
          ++S[k];
          for (uint32_t t = k + 1; t < i; ++t) S[t] = S[t - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      std::vector<uint32_t> Sc;
      {
        std::vector<char> used(n, 0);
        for (uint32_t p : S) used[p] = 1;
        for (uint32_t p = 0; p < n; ++p)
          if (!used[p]) Sc.push_back(p);
      }
      for (const auto& [us, uc] : elt_expand(x, S, n))
        for (const auto& [vs, vc] : elt_expand(y, Sc, n)) {
          // Slotwise products; each slot pairs one letter with one base
          // value (left factor first), except in all-base degenerate slots,
          // which cannot occur since letter position sets are complementary.
          std::vector<std::vector<std::pair<uint32_t, Scalar>>> per_slot(n);
          bool dead = false;
          for (uint32_t p = 0; p < n && !dead; ++p) {
            const SlotPart& a = us[p];
            const SlotPart& b = vs[p];
            const IndexVec& prod = a.is_letter ? bm.act_right[a.ord][b.ord]
                                               : bm.act_left[a.ord][b.ord];
            if (prod.empty()) dead = true;
            for (const auto& [mo, c] : prod) per_slot[p].push_back({mo, c});
          }
          if (dead) continue;
          // Cartesian product of the per-slot results.
          std::vector<uint32_t> pick(n, 0);
          bool done = false;
          while (!done) {
            Word w(n);
            Scalar c = uc * vc;
            for (uint32_t p = 0; p < n; ++p) {
              w[p] = per_slot[p][pick[p]].first;
              c = c * per_slot[p][pick[p]].second;
            }
            flat_add(acc, w, c);
            done = true;
            uint32_t p = n;
            while (p-- > 0) {
              if (++pick[p] < per_slot[p].size()) {
                done = false;
                break;
              }
              pick[p] = 0;
            }
          }
        }
    } while (advance());
    return extract(n, acc);
  }
};

}  // namespace

GradedHopfAlgebra cotensor_hopf(const HopfBimodule& m, uint32_t max_degree,
                                const std::string& name) {
  auto st = std::make_shared<CotensorState>();
  st->base = m.base;
  st->bm = m;
  st->field = m.base.field;
  st->max_degree = max_degree;
  st->space = intern_space(name);
  st->dim_m = static_cast<uint32_t>(m.labels.size());
  const Field& f = st->field;
  const uint32_t d0 = st->base.dim();
  const Scalar one = Scalar::one(f);

  GradedHopfData data;
  data.name = name;
  data.space = st->space;
  data.field = f;
  data.max_degree = max_degree;
  data.labels.resize(max_degree + 1);
  data.delta.resize(max_degree + 1);

  st->dims.push_back(d0);
  st->flat.resize(max_degree + 1);
  st->pivot_words.resize(max_degree + 1);
  st->tmat.resize(max_degree + 1);
  for (uint32_t g = 0; g < d0; ++g) {
    data.labels[0].push_back(st->base.label(g));
    SparseTensor t(st->space, st->space);
    for (const auto& [a, b, c] : st->base.delta(g))
      t.add(TensorKey::of(BasisIndex{0, a}, BasisIndex{0, b}), c);
    data.delta[0].push_back(std::move(t));
    data.counit0.push_back(st->base.counit(g));
  }
  data.unit = SparseVector(st->space);
  for (const auto& [g, c] : st->base.unit()) data.unit.add(BasisIndex{0, g}, c);

  for (uint32_t n = 1; n <= max_degree; ++n) {
    if (n == 1) {
      // Degree 1 is all of M.
      for (uint32_t mo = 0; mo < st->dim_m; ++mo) {
        Flat fl;
        flat_add(fl, Word{mo}, one);
        st->flat[1].push_back(std::move(fl));
      }
    } else {
      // ker(delta_plus (x) id - id (x) delta_minus) in M (x) H_{n-1},
      // written out over flat words so no intermediate extraction is needed.
      const uint32_t d_prev = st->dims[n - 1];
      const uint32_t cols = d_prev * st->dim_m;
      std::map<std::tuple<uint32_t, uint32_t, Word>, uint32_t> row_of;
      std::vector<std::map<uint32_t, Scalar>> col_entries(cols);
      auto row_idx = [&](uint32_t mo, uint32_t b, const Word& w) -> uint32_t {
        auto key = std::make_tuple(mo, b, w);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        const uint32_t r = static_cast<uint32_t>(row_of.size());
        row_of.emplace(std::move(key), r);
        return r;
      };
      auto col_add = [&](uint32_t col, uint32_t r, const Scalar& c) {
        auto [it, fresh] = col_entries[col].emplace(r, c);
        if (!fresh) it->second += c;
      };
      for (uint32_t jo = 0; jo < d_prev; ++jo)
        for (uint32_t mo = 0; mo < st->dim_m; ++mo) {
          const uint32_t col = jo * st->dim_m + mo;
          for (const auto& [w, cw] : st->flat[n - 1][jo]) {
            for (const auto& [m2, b, c] : m.coact_right[mo])
              col_add(col, row_idx(m2, b, w), c * cw);
            for (const auto& [b, m2, c] : m.coact_left[w[0]]) {
              Word w2 = w;
              w2[0] = m2;
              col_add(col, row_idx(mo, b, w2), -(c * cw));
            }
          }
        }
      DenseMatrix rel(f, static_cast<uint32_t>(row_of.size()), cols);
      for (uint32_t c = 0; c < cols; ++c)
        for (const auto& [r, v] : col_entries[c]) rel.at(r, c) = v;
      DenseMatrix ker = kernel_basis(rel);
      for (uint32_t k = 0; k < ker.rows(); ++k) {
        Flat fl;
        for (uint32_t c = 0; c < cols; ++c) {
          if (ker.at(k, c).is_zero()) continue;
          const uint32_t jo = c / st->dim_m, mo = c % st->dim_m;
          for (const auto& [w, cw] : st->flat[n - 1][jo]) {
            Word w2{mo};
            w2.insert(w2.end(), w.begin(), w.end());
            flat_add(fl, w2, ker.at(k, c) * cw);
          }
        }
        st->flat[n].push_back(std::move(fl));
      }
    }
    const uint32_t dn = static_cast<uint32_t>(st->flat[n].size());
    st->dims.push_back(dn);

    // Extraction data: tracked reduction of the flat basis matrix.
    std::set<Word> support;
    for (const auto& fl : st->flat[n])
      for (const auto& [w, c] : fl) {
        (void)c;
        support.insert(w);
      }
    std::vector<Word> words(support.begin(), support.end());
    std::map<Word, uint32_t> word_col;
    for (uint32_t c = 0; c < words.size(); ++c) word_col[words[c]] = c;
    DenseMatrix e(f, dn, static_cast<uint32_t>(words.size()));
    for (uint32_t k = 0; k < dn; ++k)
      for (const auto& [w, c] : st->flat[n][k]) e.at(k, word_col[w]) = c;
    RrefResult rr = rref(e, /*track_transform=*/true);
    if (rr.pivot_cols.size() != dn)
      throw verification_error("flat basis of degree " + std::to_string(n) + " of " + name +
                               " is not linearly independent");
    for (uint32_t p : rr.pivot_cols) st->pivot_words[n].push_back(words[p]);
    st->tmat[n] = rr.transform;

    for (uint32_t k = 0; k < dn; ++k) {
      const Flat& fl = st->flat[n][k];
      if (fl.size() == 1 && fl.begin()->second.is_one()) {
        std::string l;
        for (uint32_t t = 0; t < n; ++t) {
          if (t) l += "|";
          l += m.labels[fl.begin()->first[t]];
        }
        data.labels[n].push_back(std::move(l));
      } else {
        data.labels[n].push_back("w" + std::to_string(n) + ":" + std::to_string(k));
      }
    }

    // Coproduct by cutting flat words; extreme components from the letter
    // coactions.
    for (uint32_t k = 0; k < dn; ++k) {
      SparseTensor acc(st->space, st->space);
      std::map<uint32_t, Flat> left0, right0;  // keyed by base ordinal
      std::vector<Flat2> middle(n);            // middle[i]: cut after i letters
      for (const auto& [w, cw] : st->flat[n][k]) {
        for (const auto& [b, m2, c] : m.coact_left[w[0]]) {
          Word w2 = w;
          w2[0] = m2;
          flat_add(left0[b], w2, c * cw);
        }
        for (const auto& [m2, b, c] : m.coact_right[w[n - 1]]) {
          Word w2 = w;
          w2[n - 1] = m2;
          flat_add(right0[b], w2, c * cw);
        }
        for (uint32_t i = 1; i < n; ++i)
          flat2_add(middle[i], Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end()),
                    cw);
      }
      for (const auto& [b, fl] : left0) {
        const SparseVector v = st->extract(n, fl);
        for (const auto& [idx, c] : v.coeffs)
          acc.add(TensorKey::of(BasisIndex{0, b}, idx), c);
      }
      for (const auto& [b, fl] : right0) {
        const SparseVector v = st->extract(n, fl);
        for (const auto& [idx, c] : v.coeffs)
          acc.add(TensorKey::of(idx, BasisIndex{0, b}), c);
      }
      for (uint32_t i = 1; i < n; ++i)
        if (!middle[i].empty()) {
          const SparseTensor part = st->extract2(i, n - i, middle[i]);
          for (const auto& [key, c] : part.coeffs) acc.add(key, c);
        }
      data.delta[n].push_back(std::move(acc));
    }
  }

  data.flat.resize(max_degree + 1);
  for (uint32_t g = 0; g < d0; ++g) {
    FlatRep fr;
    fr.emplace(LetterWord{g}, one);
    data.flat[0].push_back(std::move(fr));
  }
  for (uint32_t n = 1; n <= max_degree; ++n) data.flat[n] = st->flat[n];

  data.mu = [st](BasisIndex x, BasisIndex y) { return st->mu(x, y); };
  return GradedHopfAlgebra(std::move(data));
}

}  // namespace qhopf
