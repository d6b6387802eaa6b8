#include "qhopf/tensor_hopf.hpp"

#include <map>
#include <memory>
#include <utility>

#include "qhopf/errors.hpp"
#include "qhopf/linsolve.hpp"

namespace qhopf {

namespace {

// Recursive quotient data. Column (m, h) of M (x) H_{n-1} is h * dimM + m so
// that the surviving pure tensors are ordered by their degree-(n-1) tail
// first; for path-type inputs this reproduces the first-arrow-major path
// order.
struct TensorState {
  BaseHopf base;
  HopfBimodule bm;
  Field field;
  uint32_t max_degree = 0;
  SpaceId space = 0;
  uint32_t dim_m = 0;

  std::vector<uint32_t> dims;                              // [degree]
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> basis_cols;  // [n>=1][ord]
  std::vector<std::vector<SparseVector>> proj;             // [n>=1][col]
  std::vector<std::vector<std::vector<SparseVector>>> lact;  // [n][b][ord]
  std::vector<SparseVector> embed1;                        // M -> degree 1

  std::map<std::pair<uint64_t, uint64_t>, SparseVector> memo;

  uint32_t col(uint32_t m_ord, uint32_t h_ord) const { return h_ord * dim_m + m_ord; }

  SparseVector mu(BasisIndex x, BasisIndex y) {
    const auto key = std::make_pair(x.pack(), y.pack());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SparseVector out(space);
    if (x.degree == 0) {
      if (y.degree == 0) {
        for (const auto& [r, c] : base.mu(x.ordinal, y.ordinal))
          out.add(BasisIndex{0, r}, c);
      } else {
        out = lact[y.degree][x.ordinal][y.ordinal];
      }
    } else {
      const auto [m_ord, h_ord] = basis_cols[x.degree][x.ordinal];
      const SparseVector tail = mu(BasisIndex{x.degree - 1, h_ord}, y);
      const uint32_t target = x.degree + y.degree;
      for (const auto& [t, c] : tail.coeffs) {
        if (t.degree + 1 != target)
          throw verification_error("tensor product lost homogeneity");
        out.add_scaled(proj[target][col(m_ord, t.ordinal)], c);
      }
    }
    memo.emplace(key, out);
    return out;
  }

  SparseVector mu_vec(const SparseVector& x, const SparseVector& y) {
    SparseVector acc(space);
    for (const auto& [i, ci] : x.coeffs)
      for (const auto& [j, cj] : y.coeffs) acc.add_scaled(mu(i, j), ci * cj);
    return acc;
  }
};

}  // namespace

GradedHopfAlgebra tensor_hopf(const HopfBimodule& m, uint32_t max_degree,
                              const std::string& name) {
  auto st = std::make_shared<TensorState>();
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

  // Degree 0 is the base Hopf algebra.
  st->dims.push_back(d0);
  st->basis_cols.resize(max_degree + 1);
  st->proj.resize(max_degree + 1);
  st->lact.resize(max_degree + 1);
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
  st->lact[0].resize(d0);
  for (uint32_t g = 0; g < d0; ++g) {
    st->lact[0][g].reserve(d0);
    for (uint32_t j = 0; j < d0; ++j) {
      SparseVector v(st->space);
      for (const auto& [r, c] : st->base.mu(g, j)) v.add(BasisIndex{0, r}, c);
      st->lact[0][g].push_back(std::move(v));
    }
  }

  for (uint32_t n = 1; n <= max_degree; ++n) {
    const uint32_t d_prev = st->dims[n - 1];
    const uint32_t cols = st->dim_m * d_prev;

    // Span of the balancing relations (m . b) (x) h - m (x) (b . h).
    std::vector<std::vector<Scalar>> rows;
    for (uint32_t g = 0; g < d0; ++g)
      for (uint32_t mo = 0; mo < st->dim_m; ++mo)
        for (uint32_t j = 0; j < d_prev; ++j) {
          std::vector<Scalar> r(cols, Scalar::zero(f));
          bool nonzero = false;
          for (const auto& [m2, c] : m.act_right[mo][g]) {
            r[st->col(m2, j)] += c;
            nonzero = true;
          }
          for (const auto& [t, c] : st->lact[n - 1][g][j].coeffs) {
            r[st->col(mo, t.ordinal)] -= c;
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(r));
        }
    DenseMatrix rel(f, static_cast<uint32_t>(rows.size()), cols);
    for (uint32_t i = 0; i < rows.size(); ++i)
      for (uint32_t c = 0; c < cols; ++c) rel.at(i, c) = rows[i][c];
    RrefResult rr = rref(rel);

    std::vector<char> is_pivot(cols, 0);
    for (uint32_t p : rr.pivot_cols) is_pivot[p] = 1;
    std::vector<uint32_t> ord_of_col(cols, UINT32_MAX);
    for (uint32_t c = 0; c < cols; ++c)
      if (!is_pivot[c]) {
        ord_of_col[c] = static_cast<uint32_t>(st->basis_cols[n].size());
        st->basis_cols[n].push_back({c % st->dim_m, c / st->dim_m});
      }
    const uint32_t dn = static_cast<uint32_t>(st->basis_cols[n].size());
    st->dims.push_back(dn);

    st->proj[n].assign(cols, SparseVector(st->space));
    for (uint32_t c = 0; c < cols; ++c)
      if (!is_pivot[c]) st->proj[n][c].add(BasisIndex{n, ord_of_col[c]}, one);
    for (uint32_t k = 0; k < rr.pivot_cols.size(); ++k) {
      const uint32_t p = rr.pivot_cols[k];
      for (uint32_t c = p + 1; c < cols; ++c)
        if (!is_pivot[c] && !rr.mat.at(k, c).is_zero())
          st->proj[n][p].add(BasisIndex{n, ord_of_col[c]}, -rr.mat.at(k, c));
    }

    for (uint32_t k = 0; k < dn; ++k) {
      const auto [mo, ho] = st->basis_cols[n][k];
      data.labels[n].push_back(m.labels[mo] + "|" + data.labels[n - 1][ho]);
    }

    st->lact[n].resize(d0);
    for (uint32_t g = 0; g < d0; ++g) {
      st->lact[n][g].reserve(dn);
      for (uint32_t k = 0; k < dn; ++k) {
        const auto [mo, ho] = st->basis_cols[n][k];
        SparseVector v(st->space);
        for (const auto& [m2, c] : m.act_left[g][mo])
          v.add_scaled(st->proj[n][st->col(m2, ho)], c);
        st->lact[n][g].push_back(std::move(v));
      }
    }

    if (n == 1) {
      st->embed1.assign(st->dim_m, SparseVector(st->space));
      for (uint32_t mo = 0; mo < st->dim_m; ++mo)
        for (const auto& [g, c] : st->base.unit())
          st->embed1[mo].add_scaled(st->proj[1][st->col(mo, g)], c);
    }

    // Coproduct: delta(m (x) h) = delta_1(m) * delta(h) computed in the
    // tensor square, using products of degrees <= n already defined.
    for (uint32_t k = 0; k < dn; ++k) {
      const auto [mo, ho] = st->basis_cols[n][k];
      // delta_1 terms as (left vector, right vector, coefficient).
      std::vector<std::tuple<SparseVector, SparseVector, Scalar>> d1;
      for (const auto& [g, m2, c] : m.coact_left[mo]) {
        SparseVector l(st->space);
        l.add(BasisIndex{0, g}, one);
        d1.emplace_back(std::move(l), st->embed1[m2], c);
      }
      for (const auto& [m2, g, c] : m.coact_right[mo]) {
        SparseVector r(st->space);
        r.add(BasisIndex{0, g}, one);
        d1.emplace_back(st->embed1[m2], std::move(r), c);
      }
      SparseTensor acc(st->space, st->space);
      auto bvec = [&](BasisIndex i) {
        SparseVector v(st->space);
        v.add(i, one);
        return v;
      };
      const SparseTensor& dh = data.delta[n - 1][ho];
      for (const auto& [u, v, c] : d1)
        for (const auto& [hk, hc] : dh.coeffs) {
          const SparseVector left = st->mu_vec(u, bvec(hk.idx[0]));
          const SparseVector right = st->mu_vec(v, bvec(hk.idx[1]));
          const Scalar cc = c * hc;
          for (const auto& [a, va] : left.coeffs)
            for (const auto& [b, vb] : right.coeffs)
              acc.add(TensorKey::of(a, b), cc * va * vb);
        }
      data.delta[n].push_back(std::move(acc));
    }
  }

  // Flat letter words: a degree-n basis element is a chain m (x) h whose
  // innermost degree-0 leg is absorbed into the last letter by the right
  // action (the balanced tensor product over the base collapses it).
  data.flat.resize(max_degree + 1);
  for (uint32_t g = 0; g < d0; ++g) {
    FlatRep fr;
    fr.emplace(LetterWord{g}, one);
    data.flat[0].push_back(std::move(fr));
  }
  for (uint32_t n = 1; n <= max_degree; ++n)
    for (uint32_t k = 0; k < st->dims[n]; ++k) {
      const auto [mo, ho] = st->basis_cols[n][k];
      FlatRep fr;
      if (n == 1) {
        for (const auto& [m2, c] : m.act_right[mo][ho]) {
          auto [it, fresh] = fr.emplace(LetterWord{m2}, c);
          if (!fresh) it->second += c;
        }
      } else {
        for (const auto& [w, c] : data.flat[n - 1][ho]) {
          LetterWord w2{mo};
          w2.insert(w2.end(), w.begin(), w.end());
          fr.emplace(std::move(w2), c);
        }
      }
      data.flat[n].push_back(std::move(fr));
    }

  data.mu = [st](BasisIndex x, BasisIndex y) { return st->mu(x, y); };
  return GradedHopfAlgebra(std::move(data));
}

}  // namespace qhopf
