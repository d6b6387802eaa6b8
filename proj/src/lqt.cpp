#include "qhopf/lqt.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "qhopf/errors.hpp"
#include "qhopf/linsolve.hpp"

namespace qhopf {

// --- skew pairing -----------------------------------------------------------

struct SkewPairing::State {
  GradedHopfAlgebra h;
  GradedHopfAlgebra a;
  std::map<std::pair<uint64_t, uint64_t>, Scalar> overrides;  // seeded corruptions
  mutable std::map<std::pair<uint64_t, uint64_t>, Scalar> inv_memo;
  mutable std::mutex lock;

  State(GradedHopfAlgebra h_, GradedHopfAlgebra a_) : h(std::move(h_)), a(std::move(a_)) {}
};

SkewPairing::SkewPairing(GradedHopfAlgebra h, GradedHopfAlgebra a)
    : st_(std::make_shared<State>(std::move(h), std::move(a))) {
  if (!(st_->h.field() == st_->a.field()))
    throw input_error("skew pairing: factors live over different fields");
  if (!st_->h.has_flat() || !st_->a.has_flat())
    throw input_error("skew pairing needs letter-word representations on both factors");
}

const GradedHopfAlgebra& SkewPairing::h() const { return st_->h; }
const GradedHopfAlgebra& SkewPairing::a() const { return st_->a; }

Scalar SkewPairing::eval(BasisIndex y, BasisIndex x) const {
  if (!st_->overrides.empty()) {
    auto it = st_->overrides.find({y.pack(), x.pack()});
    if (it != st_->overrides.end()) return it->second;
  }
  const Field& f = st_->h.field();
  // Words of different lengths never pair: degree-0 and degree-1 words are
  // both single letters, but over disjoint index sets only within one degree.
  if (y.degree != x.degree) return Scalar::zero(f);
  const FlatRep& wy = st_->h.flat_rep(y);
  const FlatRep& wx = st_->a.flat_rep(x);
  Scalar acc = Scalar::zero(f);
  const FlatRep& small = wy.size() <= wx.size() ? wy : wx;
  const FlatRep& big = wy.size() <= wx.size() ? wx : wy;
  for (const auto& [word, c] : small) {
    auto it = big.find(word);
    if (it != big.end()) acc = acc + c * it->second;
  }
  return acc;
}

Scalar SkewPairing::eval(const SparseVector& y, const SparseVector& x) const {
  Scalar acc = Scalar::zero(st_->h.field());
  for (const auto& [iy, cy] : y.coeffs)
    for (const auto& [ix, cx] : x.coeffs) acc = acc + cy * cx * eval(iy, ix);
  return acc;
}

Scalar SkewPairing::inv(BasisIndex y, BasisIndex x) const {
  const std::pair<uint64_t, uint64_t> key{y.pack(), x.pack()};
  {
    std::lock_guard<std::mutex> g(st_->lock);
    auto it = st_->inv_memo.find(key);
    if (it != st_->inv_memo.end()) return it->second;
  }
  // tau^{-1} = tau o (id (x) S_A); verified against convolution inversion.
  const SparseVector sx = st_->a.antipode(x);
  Scalar acc = Scalar::zero(st_->h.field());
  for (const auto& [i, c] : sx.coeffs) acc = acc + c * eval(y, i);
  std::lock_guard<std::mutex> g(st_->lock);
  st_->inv_memo.emplace(key, acc);
  return acc;
}

Scalar SkewPairing::inv(const SparseVector& y, const SparseVector& x) const {
  Scalar acc = Scalar::zero(st_->h.field());
  for (const auto& [iy, cy] : y.coeffs)
    for (const auto& [ix, cx] : x.coeffs) acc = acc + cy * cx * inv(iy, ix);
  return acc;
}

SkewPairing SkewPairing::with_entry(BasisIndex y, BasisIndex x, Scalar v) const {
  SkewPairing out(st_->h, st_->a);
  out.st_->overrides = st_->overrides;
  out.st_->overrides[{y.pack(), x.pack()}] = std::move(v);
  return out;
}

Report verify_skew_pairing(const SkewPairing& tau) {
  const GradedHopfAlgebra& h = tau.h();
  const GradedHopfAlgebra& a = tau.a();
  const uint32_t budget = std::min(h.max_degree(), a.max_degree());
  Report rep;
  rep.subject = "tau";

  {  // tau(x, yz) = sum tau(x1, y) tau(x2, z)
    CaseCounter c;
    for (uint32_t dx = 0; dx <= budget; ++dx)
      for (uint32_t ix = 0; ix < h.dim(dx); ++ix) {
        const BasisIndex x{dx, ix};
        const SparseTensor& dlt = h.delta(x);
        for (uint32_t dy = 0; dy <= budget; ++dy)
          for (uint32_t dz = 0; dy + dz <= budget; ++dz)
            for (uint32_t iy = 0; iy < a.dim(dy); ++iy)
              for (uint32_t iz = 0; iz < a.dim(dz); ++iz) {
                const BasisIndex y{dy, iy}, z{dz, iz};
                ++c.cases;
                const Scalar lhs = tau.eval(h.basis_vec(x), a.mu(y, z));
                Scalar rhs = Scalar::zero(h.field());
                for (const auto& [k, cd] : dlt.coeffs) {
                  const Scalar s = tau.eval(k.idx[0], y);
                  if (s.is_zero()) continue;
                  rhs = rhs + cd * s * tau.eval(k.idx[1], z);
                }
                if (!(lhs == rhs))
                  c.fail("tau(" + show(h, x) + ", " + show(a, y) + "*" + show(a, z) + ")");
              }
      }
    c.commit(rep, "pair-product-a");
  }

  {  // tau(xu, z) = sum tau(x, z2) tau(u, z1)
    CaseCounter c;
    for (uint32_t dz = 0; dz <= budget; ++dz)
      for (uint32_t iz = 0; iz < a.dim(dz); ++iz) {
        const BasisIndex z{dz, iz};
        const SparseTensor& dlt = a.delta(z);
        for (uint32_t dx = 0; dx <= budget; ++dx)
          for (uint32_t du = 0; dx + du <= budget; ++du)
            for (uint32_t ix = 0; ix < h.dim(dx); ++ix)
              for (uint32_t iu = 0; iu < h.dim(du); ++iu) {
                const BasisIndex x{dx, ix}, u{du, iu};
                ++c.cases;
                const Scalar lhs = tau.eval(h.mu(x, u), a.basis_vec(z));
                Scalar rhs = Scalar::zero(h.field());
                for (const auto& [k, cd] : dlt.coeffs) {
                  const Scalar s = tau.eval(x, k.idx[1]);
                  if (s.is_zero()) continue;
                  rhs = rhs + cd * s * tau.eval(u, k.idx[0]);
                }
                if (!(lhs == rhs))
                  c.fail("tau(" + show(h, x) + "*" + show(h, u) + ", " + show(a, z) + ")");
              }
      }
    c.commit(rep, "pair-product-h");
  }

  {  // tau(x, 1) = eps(x)
    CaseCounter c;
    for (uint32_t dx = 0; dx <= h.max_degree(); ++dx)
      for (uint32_t ix = 0; ix < h.dim(dx); ++ix) {
        const BasisIndex x{dx, ix};
        ++c.cases;
        if (!(tau.eval(h.basis_vec(x), a.unit()) == h.counit(x)))
          c.fail("tau(" + show(h, x) + ", 1)");
      }
    c.commit(rep, "pair-unit-a");
  }

  {  // tau(1, y) = eps(y)
    CaseCounter c;
    for (uint32_t dy = 0; dy <= a.max_degree(); ++dy)
      for (uint32_t iy = 0; iy < a.dim(dy); ++iy) {
        const BasisIndex y{dy, iy};
        ++c.cases;
        if (!(tau.eval(h.unit(), a.basis_vec(y)) == a.counit(y)))
          c.fail("tau(1, " + show(a, y) + ")");
      }
    c.commit(rep, "pair-unit-h");
  }

  // Convolution inverse on both sides: only coproducts, so every basis pair
  // within the individual budgets is in reach.
  {
    CaseCounter cl, cr;
    for (uint32_t dx = 0; dx <= h.max_degree(); ++dx)
      for (uint32_t ix = 0; ix < h.dim(dx); ++ix) {
        const BasisIndex x{dx, ix};
        const SparseTensor& dx2 = h.delta(x);
        for (uint32_t dy = 0; dy <= a.max_degree(); ++dy)
          for (uint32_t iy = 0; iy < a.dim(dy); ++iy) {
            const BasisIndex y{dy, iy};
            const SparseTensor& dy2 = a.delta(y);
            ++cl.cases;
            ++cr.cases;
            const Scalar want = h.counit(x) * a.counit(y);
            Scalar left = Scalar::zero(h.field());
            Scalar right = Scalar::zero(h.field());
            for (const auto& [kx, cx] : dx2.coeffs)
              for (const auto& [ky, cy] : dy2.coeffs) {
                const Scalar w = cx * cy;
                left = left + w * tau.eval(kx.idx[0], ky.idx[0]) * tau.inv(kx.idx[1], ky.idx[1]);
                right = right + w * tau.inv(kx.idx[0], ky.idx[0]) * tau.eval(kx.idx[1], ky.idx[1]);
              }
            if (!(left == want)) cl.fail("(" + show(h, x) + ", " + show(a, y) + ")");
            if (!(right == want)) cr.fail("(" + show(h, x) + ", " + show(a, y) + ")");
          }
      }
    cl.commit(rep, "conv-inverse-left");
    cr.commit(rep, "conv-inverse-right");
  }

  return rep;
}

Report verify_duality(const SkewPairing& tau, uint32_t budget) {
  Report rep = verify_skew_pairing(tau);
  const GradedHopfAlgebra& h = tau.h();
  const GradedHopfAlgebra& a = tau.a();
  const uint32_t top = std::min({budget, h.max_degree(), a.max_degree()});
  CaseCounter dims, gram;
  for (uint32_t d = 0; d <= top; ++d) {
    ++dims.cases;
    if (h.dim(d) != a.dim(d)) {
      dims.fail("degree " + std::to_string(d) + ": " + std::to_string(h.dim(d)) + " vs " +
                std::to_string(a.dim(d)));
      continue;
    }
    ++gram.cases;
    DenseMatrix g(h.field(), h.dim(d), a.dim(d));
    for (uint32_t i = 0; i < h.dim(d); ++i)
      for (uint32_t j = 0; j < a.dim(d); ++j)
        g.at(i, j) = tau.eval(BasisIndex{d, i}, BasisIndex{d, j});
    if (!matrix_inverse(g)) gram.fail("degree " + std::to_string(d) + ": Gram matrix singular");
  }
  dims.commit(rep, "dual-dims");
  gram.commit(rep, "gram-invertible");
  return rep;
}

// --- copairing ---------------------------------------------------------------

struct Copairing::State {
  GradedHopfAlgebra h;
  GradedHopfAlgebra a;
  std::vector<SparseTensor> levels;  // cumulative, levels[n] = P_n

  State(GradedHopfAlgebra h_, GradedHopfAlgebra a_) : h(std::move(h_)), a(std::move(a_)) {}
};

const GradedHopfAlgebra& Copairing::h() const { return st_->h; }
const GradedHopfAlgebra& Copairing::a() const { return st_->a; }
uint32_t Copairing::max_level() const { return static_cast<uint32_t>(st_->levels.size()) - 1; }

const SparseTensor& Copairing::level(uint32_t n) const {
  if (n >= st_->levels.size())
    throw input_error("copairing level " + std::to_string(n) + " beyond cap " +
                      std::to_string(max_level()));
  return st_->levels[n];
}

SparseTensor Copairing::increment(uint32_t n) const { return level(n + 1) - level(n); }

Copairing Copairing::with_level(uint32_t n, SparseTensor t) const {
  level(n);  // bounds check
  Copairing out;
  out.st_ = std::make_shared<State>(st_->h, st_->a);
  out.st_->levels = st_->levels;
  out.st_->levels[n] = std::move(t);
  return out;
}

Copairing dual_basis_copairing(const SkewPairing& tau, uint32_t max_level) {
  const GradedHopfAlgebra& h = tau.h();
  const GradedHopfAlgebra& a = tau.a();
  if (max_level > std::min(h.max_degree(), a.max_degree()))
    throw input_error("copairing level cap " + std::to_string(max_level) +
                      " exceeds the factors' degree budget");
  Copairing out;
  out.st_ = std::make_shared<Copairing::State>(h, a);
  const Field& f = h.field();
  SparseTensor cur(h.space(), a.space());
  for (uint32_t i = 0; i <= max_level; ++i) {
    const uint32_t dh = h.dim(i), da = a.dim(i);
    if (dh != da)
      throw verification_error("pairing matrix at degree " + std::to_string(i) +
                               " is not square (" + std::to_string(dh) + " x " +
                               std::to_string(da) + ")");
    if (dh > 0) {
      DenseMatrix t(f, dh, dh);
      for (uint32_t k = 0; k < dh; ++k)
        for (uint32_t l = 0; l < dh; ++l) t.at(k, l) = tau.eval(BasisIndex{i, k}, BasisIndex{i, l});
      const auto inv = matrix_inverse(t);
      if (!inv)
        throw verification_error("pairing matrix at degree " + std::to_string(i) +
                                 " is singular; no dual basis exists");
      // sum_{k,l} (T^{-1})_{lk} h_k (x) a_l reproduces both sides' identities.
      for (uint32_t k = 0; k < dh; ++k)
        for (uint32_t l = 0; l < dh; ++l) {
          const Scalar& c = inv->at(l, k);
          if (!c.is_zero()) cur.add(TensorKey::of(BasisIndex{i, k}, BasisIndex{i, l}), c);
        }
    }
    out.st_->levels.push_back(cur);
  }
  return out;
}

namespace {

std::string first_term(const SparseTensor& t, const GradedHopfAlgebra& s0,
                       const GradedHopfAlgebra& s1, const GradedHopfAlgebra* s2 = nullptr) {
  if (t.coeffs.empty()) return "(zero)";
  const auto& [k, c] = *t.coeffs.begin();
  std::string out = c.to_string() + " * " + show(s0, k.idx[0]) + " (x) " + show(s1, k.idx[1]);
  if (s2 && t.arity >= 3) out += " (x) " + show(*s2, k.idx[2]);
  return out;
}

}  // namespace

Report verify_copairing(const Copairing& p, const SkewPairing& tau, uint32_t n) {
  const GradedHopfAlgebra& h = p.h();
  const GradedHopfAlgebra& a = p.a();
  Report rep;
  rep.subject = "cp";
  if (n > p.max_level())
    throw input_error("copairing verification at level " + std::to_string(n) + " beyond cap");
  if (2 * n > std::min(h.max_degree(), a.max_degree()))
    throw budget_error("copairing laws at level " + std::to_string(n) + " need degree budget " +
                       std::to_string(2 * n));
  const SparseTensor& P = p.level(n);

  {  // (id (x) Delta_A) P = sum P'Q' (x) Q'' (x) P'', product slot back in degree <= n
    SparseTensor lhs(h.space(), a.space(), a.space());
    for (const auto& [k, c] : P.coeffs)
      for (const auto& [kd, cd] : a.delta(k.idx[1]).coeffs)
        lhs.add(TensorKey::of(k.idx[0], kd.idx[0], kd.idx[1]), c * cd);
    SparseTensor rhs(h.space(), a.space(), a.space());
    for (const auto& [k, c] : P.coeffs)
      for (const auto& [q, cq] : P.coeffs) {
        const SparseVector prod = h.mu(k.idx[0], q.idx[0]).truncated(n);
        const Scalar w = c * cq;
        for (const auto& [i, ci] : prod.coeffs)
          rhs.add(TensorKey::of(i, q.idx[1], k.idx[1]), w * ci);
      }
    const SparseTensor diff = lhs - rhs;
    rep.add("expand-a", diff.is_zero() ? CheckStatus::Pass : CheckStatus::Fail, P.size(),
            diff.is_zero() ? "" : "residual " + first_term(diff, h, a, &a));
  }

  {  // (Delta_H (x) id) P = sum P' (x) Q' (x) P''Q'', product slot back in degree <= n
    SparseTensor lhs(h.space(), h.space(), a.space());
    for (const auto& [k, c] : P.coeffs)
      for (const auto& [kd, cd] : h.delta(k.idx[0]).coeffs)
        lhs.add(TensorKey::of(kd.idx[0], kd.idx[1], k.idx[1]), c * cd);
    SparseTensor rhs(h.space(), h.space(), a.space());
    for (const auto& [k, c] : P.coeffs)
      for (const auto& [q, cq] : P.coeffs) {
        const SparseVector prod = a.mu(k.idx[1], q.idx[1]).truncated(n);
        const Scalar w = c * cq;
        for (const auto& [i, ci] : prod.coeffs)
          rhs.add(TensorKey::of(k.idx[0], q.idx[0], i), w * ci);
      }
    const SparseTensor diff = lhs - rhs;
    rep.add("expand-h", diff.is_zero() ? CheckStatus::Pass : CheckStatus::Fail, P.size(),
            diff.is_zero() ? "" : "residual " + first_term(diff, h, h, &a));
  }

  {  // sum P' eps(P'') = 1_H, exactly
    SparseVector acc(h.space());
    for (const auto& [k, c] : P.coeffs) acc.add(k.idx[0], c * a.counit(k.idx[1]));
    const bool ok = acc == h.unit();
    rep.add("counit-a", ok ? CheckStatus::Pass : CheckStatus::Fail, P.size(),
            ok ? "" : "collapsed to " + acc.to_string(h.label_fn()));
  }

  {  // sum eps(P') P'' = 1_A, exactly
    SparseVector acc(a.space());
    for (const auto& [k, c] : P.coeffs) acc.add(k.idx[1], c * h.counit(k.idx[0]));
    const bool ok = acc == a.unit();
    rep.add("counit-h", ok ? CheckStatus::Pass : CheckStatus::Fail, P.size(),
            ok ? "" : "collapsed to " + acc.to_string(a.label_fn()));
  }

  {  // sum tau(P', x) P'' = x for every x of degree <= n
    CaseCounter c;
    for (uint32_t d = 0; d <= n; ++d)
      for (uint32_t i = 0; i < a.dim(d); ++i) {
        const BasisIndex x{d, i};
        ++c.cases;
        SparseVector acc(a.space());
        for (const auto& [k, cp] : P.coeffs) {
          const Scalar s = tau.eval(k.idx[0], x);
          if (!s.is_zero()) acc.add(k.idx[1], cp * s);
        }
        if (!(acc == a.basis_vec(x))) c.fail(show(a, x));
      }
    c.commit(rep, "reproduce-a");
  }

  {  // sum tau(y, P'') P' = y for every y of degree <= n
    CaseCounter c;
    for (uint32_t d = 0; d <= n; ++d)
      for (uint32_t i = 0; i < h.dim(d); ++i) {
        const BasisIndex y{d, i};
        ++c.cases;
        SparseVector acc(h.space());
        for (const auto& [k, cp] : P.coeffs) {
          const Scalar s = tau.eval(y, k.idx[1]);
          if (!s.is_zero()) acc.add(k.idx[0], cp * s);
        }
        if (!(acc == h.basis_vec(y))) c.fail(show(h, y));
      }
    c.commit(rep, "reproduce-h");
  }

  {  // each increment sits purely in its top degree
    CaseCounter c;
    for (uint32_t m = 0; m < n; ++m) {
      const SparseTensor w = p.increment(m);
      ++c.cases;
      for (const auto& [k, cw] : w.coeffs)
        if (k.idx[0].degree != m + 1 || k.idx[1].degree != m + 1) {
          c.fail("level " + std::to_string(m + 1) + " increment has term " +
                 first_term(w, h, a));
          break;
        }
    }
    c.commit(rep, "increment");
  }

  return rep;
}

// --- double cross product ----------------------------------------------------

struct DoubleCrossProduct::State {
  GradedHopfAlgebra a;
  GradedHopfAlgebra h;
  SkewPairing tau;
  uint32_t max_degree = 0;
  SpaceId space = 0;
  std::vector<std::vector<uint32_t>> offset;  // [n][i]: ordinal of first A_i (x) H_{n-i} element
  std::vector<uint32_t> dims;
  std::map<std::pair<uint64_t, uint64_t>, SparseVector> alpha_tab, beta_tab;
  std::mutex lock;

  State(GradedHopfAlgebra a_, GradedHopfAlgebra h_, SkewPairing tau_)
      : a(std::move(a_)), h(std::move(h_)), tau(std::move(tau_)) {}
};

namespace {

using DState = DoubleCrossProduct::State;

BasisIndex d_index(const DState& st, BasisIndex ai, BasisIndex hj) {
  const uint32_t n = ai.degree + hj.degree;
  return BasisIndex{n, st.offset[n][ai.degree] + ai.ordinal * st.h.dim(hj.degree) + hj.ordinal};
}

std::pair<BasisIndex, BasisIndex> d_split(const DState& st, BasisIndex di) {
  const uint32_t n = di.degree;
  uint32_t off = 0;
  for (uint32_t i = 0; i <= n; ++i) {
    const uint32_t block = st.a.dim(i) * st.h.dim(n - i);
    if (di.ordinal < off + block) {
      const uint32_t rem = di.ordinal - off;
      const uint32_t hd = st.h.dim(n - i);
      return {BasisIndex{i, rem / hd}, BasisIndex{n - i, rem % hd}};
    }
    off += block;
  }
  throw input_error("basis ordinal out of range in double cross product");
}

// alpha(h, b) = sum tau(h1, b1) b2 tau^{-1}(h2, b3): the twisted action of H
// on A entering the product's left leg.
const SparseVector& alpha_of(DState& st, BasisIndex hy, BasisIndex ax) {
  const std::pair<uint64_t, uint64_t> key{hy.pack(), ax.pack()};
  {
    std::lock_guard<std::mutex> g(st.lock);
    auto it = st.alpha_tab.find(key);
    if (it != st.alpha_tab.end()) return it->second;
  }
  SparseVector out(st.a.space());
  const SparseTensor& dh = st.h.delta(hy);
  for (const auto& [kh, ch] : dh.coeffs)
    for (const auto& [ka, ca] : st.a.delta(ax).coeffs)  // b12 (x) b3
      for (const auto& [ki, ci] : st.a.delta(ka.idx[0]).coeffs) {
        const Scalar s = st.tau.eval(kh.idx[0], ki.idx[0]);
        if (s.is_zero()) continue;
        const Scalar t = st.tau.inv(kh.idx[1], ka.idx[1]);
        if (t.is_zero()) continue;
        out.add(ki.idx[1], ch * ca * ci * s * t);
      }
  std::lock_guard<std::mutex> g(st.lock);
  return st.alpha_tab.emplace(key, std::move(out)).first->second;
}

// beta(h, b) = sum tau(h1, b1) h2 tau^{-1}(h3, b2): the reaction on the H leg.
const SparseVector& beta_of(DState& st, BasisIndex hy, BasisIndex ax) {
  const std::pair<uint64_t, uint64_t> key{hy.pack(), ax.pack()};
  {
    std::lock_guard<std::mutex> g(st.lock);
    auto it = st.beta_tab.find(key);
    if (it != st.beta_tab.end()) return it->second;
  }
  SparseVector out(st.h.space());
  const SparseTensor& da = st.a.delta(ax);
  for (const auto& [kh, ch] : st.h.delta(hy).coeffs)       // h12 (x) h3
    for (const auto& [ki, ci] : st.h.delta(kh.idx[0]).coeffs)  // h1 (x) h2
      for (const auto& [ka, ca] : da.coeffs) {
        const Scalar s = st.tau.eval(ki.idx[0], ka.idx[0]);
        if (s.is_zero()) continue;
        const Scalar t = st.tau.inv(kh.idx[1], ka.idx[1]);
        if (t.is_zero()) continue;
        out.add(ki.idx[1], ch * ci * ca * s * t);
      }
  std::lock_guard<std::mutex> g(st.lock);
  return st.beta_tab.emplace(key, std::move(out)).first->second;
}

SparseVector embed_vec(const DState& st, const SparseVector& av, const SparseVector& hv) {
  SparseVector out(st.space);
  for (const auto& [ai, ca] : av.coeffs)
    for (const auto& [hj, ch] : hv.coeffs) out.add(d_index(st, ai, hj), ca * ch);
  return out;
}

// (a (x) h)(b (x) g) = sum a.alpha(h1, b1) (x) beta(h2, b2).g
SparseVector dcp_mu(DState& st, BasisIndex x, BasisIndex y) {
  const auto [ax, hx] = d_split(st, x);
  const auto [ay, hy] = d_split(st, y);
  SparseVector out(st.space);
  const SparseTensor& dh = st.h.delta(hx);
  const SparseTensor& da = st.a.delta(ay);
  const SparseVector axv = st.a.basis_vec(ax);
  const SparseVector hyv = st.h.basis_vec(hy);
  for (const auto& [kh, ch] : dh.coeffs)
    for (const auto& [ka, ca] : da.coeffs) {
      const SparseVector& av = alpha_of(st, kh.idx[0], ka.idx[0]);
      if (av.is_zero()) continue;
      const SparseVector& bv = beta_of(st, kh.idx[1], ka.idx[1]);
      if (bv.is_zero()) continue;
      const SparseVector left = st.a.mu(axv, av);
      const SparseVector right = st.h.mu(bv, hyv);
      const Scalar w = ch * ca;
      for (const auto& [ai, cl] : left.coeffs)
        for (const auto& [hj, cr] : right.coeffs) {
          // filtered, never more: components cannot exceed the input degree
          if (ai.degree + hj.degree > x.degree + y.degree)
            throw verification_error("double cross product left the filtration");
          out.add(d_index(st, ai, hj), w * cl * cr);
        }
    }
  return out;
}

SparseVector dcp_mu_vec(DState& st, const SparseVector& u, const SparseVector& v) {
  SparseVector out(st.space);
  for (const auto& [x, cx] : u.coeffs)
    for (const auto& [y, cy] : v.coeffs) out.add_scaled(dcp_mu(st, x, y), cx * cy);
  return out;
}

}  // namespace

const GradedHopfAlgebra& DoubleCrossProduct::a() const { return st_->a; }
const GradedHopfAlgebra& DoubleCrossProduct::h() const { return st_->h; }
const SkewPairing& DoubleCrossProduct::tau() const { return st_->tau; }

BasisIndex DoubleCrossProduct::index(BasisIndex ai, BasisIndex hj) const {
  return d_index(*st_, ai, hj);
}

std::pair<BasisIndex, BasisIndex> DoubleCrossProduct::split(BasisIndex di) const {
  return d_split(*st_, di);
}

SparseVector DoubleCrossProduct::embed(const SparseVector& av, const SparseVector& hv) const {
  if (av.space != st_->a.space() || hv.space != st_->h.space())
    throw input_error("embed: vectors do not belong to the tensor factors");
  return embed_vec(*st_, av, hv);
}

SparseVector DoubleCrossProduct::alpha(BasisIndex hy, BasisIndex ax) const {
  return alpha_of(*st_, hy, ax);
}

SparseVector DoubleCrossProduct::beta(BasisIndex hy, BasisIndex ax) const {
  return beta_of(*st_, hy, ax);
}

DoubleCrossProduct double_cross_product(const GradedHopfAlgebra& a, const GradedHopfAlgebra& h,
                                        const SkewPairing& tau, const std::string& name) {
  if (!(a.field() == h.field()))
    throw input_error("double cross product: factors over different fields");
  if (a.max_degree() != h.max_degree())
    throw input_error("double cross product: factors truncated at different degrees");
  if (tau.h().space() != h.space() || tau.a().space() != a.space())
    throw input_error("double cross product: pairing does not match the factors");

  auto st = std::make_shared<DState>(a, h, tau);
  st->max_degree = a.max_degree();
  st->space = intern_space(name);
  st->offset.resize(st->max_degree + 1);
  st->dims.resize(st->max_degree + 1);
  for (uint32_t n = 0; n <= st->max_degree; ++n) {
    uint32_t off = 0;
    for (uint32_t i = 0; i <= n; ++i) {
      st->offset[n].push_back(off);
      off += a.dim(i) * h.dim(n - i);
    }
    st->dims[n] = off;
  }

  GradedHopfData d;
  d.name = name;
  d.space = st->space;
  d.field = a.field();
  d.max_degree = st->max_degree;
  d.labels.resize(st->max_degree + 1);
  d.delta.resize(st->max_degree + 1);
  for (uint32_t n = 0; n <= st->max_degree; ++n) {
    for (uint32_t o = 0; o < st->dims[n]; ++o) {
      const auto [ai, hj] = d_split(*st, BasisIndex{n, o});
      d.labels[n].push_back(a.label(ai) + "#" + h.label(hj));
      SparseTensor t(st->space, st->space);
      for (const auto& [ka, ca] : a.delta(ai).coeffs)
        for (const auto& [kh, ch] : h.delta(hj).coeffs)
          t.add(TensorKey::of(d_index(*st, ka.idx[0], kh.idx[0]),
                              d_index(*st, ka.idx[1], kh.idx[1])),
                ca * ch);
      d.delta[n].push_back(std::move(t));
    }
  }
  d.counit0.reserve(st->dims[0]);
  for (uint32_t o = 0; o < st->dims[0]; ++o) {
    const auto [ai, hj] = d_split(*st, BasisIndex{0, o});
    d.counit0.push_back(a.counit(ai) * h.counit(hj));
  }
  d.unit = embed_vec(*st, a.unit(), h.unit());
  d.mu = [st](BasisIndex x, BasisIndex y) { return dcp_mu(*st, x, y); };
  // S(a (x) h) = (1 (x) S_H h) * (S_A a (x) 1); filtered like the product, so
  // the inverse antipode is left to the generic triangular descent.
  d.antipode = [st](BasisIndex di) {
    const auto [ai, hj] = d_split(*st, di);
    const SparseVector left = embed_vec(*st, st->a.unit(), st->h.antipode(hj));
    const SparseVector right = embed_vec(*st, st->a.antipode(ai), st->h.unit());
    return dcp_mu_vec(*st, left, right);
  };

  DoubleCrossProduct out;
  out.st_ = st;
  out.d_ = std::make_shared<GradedHopfAlgebra>(std::move(d));
  return out;
}

const GradedHopfAlgebra& DoubleCrossProduct::d() const { return *d_; }

namespace {

void embed_checks(const DoubleCrossProduct& dcp, uint32_t budget, Report& rep) {
  const GradedHopfAlgebra& a = dcp.a();
  const GradedHopfAlgebra& h = dcp.h();
  const GradedHopfAlgebra& d = dcp.d();
  {
    CaseCounter c;
    for (uint32_t dx = 0; dx <= budget; ++dx)
      for (uint32_t dy = 0; dx + dy <= budget; ++dy)
        for (uint32_t ix = 0; ix < a.dim(dx); ++ix)
          for (uint32_t iy = 0; iy < a.dim(dy); ++iy) {
            const BasisIndex x{dx, ix}, y{dy, iy};
            ++c.cases;
            const SparseVector lhs = d.mu(dcp.embed(a.basis_vec(x), h.unit()),
                                          dcp.embed(a.basis_vec(y), h.unit()));
            if (!(lhs == dcp.embed(a.mu(x, y), h.unit())))
              c.fail(show(a, x) + " * " + show(a, y));
          }
    c.commit(rep, "embed-a");
  }
  {
    CaseCounter c;
    for (uint32_t dx = 0; dx <= budget; ++dx)
      for (uint32_t dy = 0; dx + dy <= budget; ++dy)
        for (uint32_t ix = 0; ix < h.dim(dx); ++ix)
          for (uint32_t iy = 0; iy < h.dim(dy); ++iy) {
            const BasisIndex x{dx, ix}, y{dy, iy};
            ++c.cases;
            const SparseVector lhs = d.mu(dcp.embed(a.unit(), h.basis_vec(x)),
                                          dcp.embed(a.unit(), h.basis_vec(y)));
            if (!(lhs == dcp.embed(a.unit(), h.mu(x, y))))
              c.fail(show(h, x) + " * " + show(h, y));
          }
    c.commit(rep, "embed-h");
  }
}

}  // namespace

Report verify_double_cross_product(const DoubleCrossProduct& dcp, std::optional<uint32_t> budget) {
  const GradedHopfAlgebra& d = dcp.d();
  const uint32_t b = budget.value_or(d.max_degree());
  Report rep;
  rep.subject = d.name();
  rep.merge(verify_hopf(d, b));
  embed_checks(dcp, b, rep);
  return rep;
}

// --- R family -----------------------------------------------------------------

std::string r_unit_variant_name(RUnitVariant v) {
  return v == RUnitVariant::Unit ? "unit" : "vertex";
}

struct LqtStructure::State {
  DoubleCrossProduct dcp;
  Copairing p;
  RUnitVariant variant;
  std::vector<SparseTensor> r, rinv;

  State(DoubleCrossProduct dcp_, Copairing p_, RUnitVariant v)
      : dcp(std::move(dcp_)), p(std::move(p_)), variant(v) {}
};

const DoubleCrossProduct& LqtStructure::dcp() const { return st_->dcp; }
const Copairing& LqtStructure::p() const { return st_->p; }
RUnitVariant LqtStructure::variant() const { return st_->variant; }
uint32_t LqtStructure::max_level() const { return static_cast<uint32_t>(st_->r.size()) - 1; }

const SparseTensor& LqtStructure::r(uint32_t n) const {
  if (n >= st_->r.size())
    throw input_error("R level " + std::to_string(n) + " beyond cap " +
                      std::to_string(max_level()));
  return st_->r[n];
}

const SparseTensor& LqtStructure::r_inverse(uint32_t n) const {
  r(n);
  return st_->rinv[n];
}

LqtStructure build_r(const DoubleCrossProduct& dcp, const Copairing& p, RUnitVariant variant) {
  const GradedHopfAlgebra& d = dcp.d();
  const GradedHopfAlgebra& a = dcp.a();
  const GradedHopfAlgebra& h = dcp.h();
  if (p.h().space() != h.space() || p.a().space() != a.space())
    throw input_error("R family: copairing does not match the double cross product");
  LqtStructure out;
  out.st_ = std::make_shared<LqtStructure::State>(dcp, p, variant);
  const uint32_t cap = std::min(p.max_level(), d.max_degree());
  const SparseVector au =
      variant == RUnitVariant::Unit ? a.unit() : a.basis_vec(BasisIndex{0, 0});
  const SparseVector hu =
      variant == RUnitVariant::Unit ? h.unit() : h.basis_vec(BasisIndex{0, 0});
  for (uint32_t n = 0; n <= cap; ++n) {
    // R_n = sum (pad (x) P') (x) (P'' (x) pad)
    SparseTensor rn(d.space(), d.space());
    for (const auto& [k, c] : p.level(n).coeffs) {
      const SparseVector left = dcp.embed(au, h.basis_vec(k.idx[0]));
      const SparseVector right = dcp.embed(a.basis_vec(k.idx[1]), hu);
      for (const auto& [i1, c1] : left.coeffs)
        for (const auto& [i2, c2] : right.coeffs)
          rn.add(TensorKey::of(i1, i2), c * c1 * c2);
    }
    SparseTensor rinv(d.space(), d.space());
    for (const auto& [k, c] : rn.coeffs) {  // (S (x) id) R_n
      const SparseVector sv = d.antipode(k.idx[0]);
      for (const auto& [i, ci] : sv.coeffs) rinv.add(TensorKey::of(i, k.idx[1]), c * ci);
    }
    out.st_->r.push_back(std::move(rn));
    out.st_->rinv.push_back(std::move(rinv));
  }
  return out;
}

namespace {

// Slotwise product of two 2-tensors in D (x) D, each slot projected back to
// degree <= cap on the way in (the truncated-algebra product).
SparseTensor pair_product_truncated(const GradedHopfAlgebra& d, const SparseTensor& s,
                                    const SparseTensor& t, uint32_t cap) {
  SparseTensor out(d.space(), d.space());
  for (const auto& [ks, cs] : s.coeffs)
    for (const auto& [kt, ct] : t.coeffs) {
      const SparseVector v1 = d.mu(ks.idx[0], kt.idx[0]).truncated(cap);
      if (v1.is_zero()) continue;
      const SparseVector v2 = d.mu(ks.idx[1], kt.idx[1]).truncated(cap);
      const Scalar w = cs * ct;
      for (const auto& [i1, c1] : v1.coeffs)
        for (const auto& [i2, c2] : v2.coeffs) out.add(TensorKey::of(i1, i2), w * c1 * c2);
    }
  return out;
}

}  // namespace

Report verify_lqt(const LqtStructure& s, uint32_t n) {
  const DoubleCrossProduct& dcp = s.dcp();
  const GradedHopfAlgebra& d = dcp.d();
  const GradedHopfAlgebra& a = dcp.a();
  const GradedHopfAlgebra& h = dcp.h();
  const SkewPairing& tau = dcp.tau();
  if (n > s.max_level())
    throw input_error("verify_lqt: level " + std::to_string(n) + " beyond cap");
  if (2 * n > d.max_degree())
    throw budget_error("verify_lqt at level " + std::to_string(n) + " needs degree budget " +
                       std::to_string(2 * n) + ", have " + std::to_string(d.max_degree()));

  Report rep;
  rep.subject = d.name() + " level " + std::to_string(n);
  rep.info["level"] = std::to_string(n);
  rep.info["budget"] = std::to_string(d.max_degree());
  rep.info["r-unit-variant"] = r_unit_variant_name(s.variant());
  rep.merge(verify_skew_pairing(tau));
  rep.merge(verify_copairing(s.p(), tau, n));

  const SparseTensor& R = s.r(n);

  {  // (eps (x) id) R = 1 = (id (x) eps) R
    SparseVector accl(d.space()), accr(d.space());
    for (const auto& [k, c] : R.coeffs) {
      accl.add(k.idx[1], c * d.counit(k.idx[0]));
      accr.add(k.idx[0], c * d.counit(k.idx[1]));
    }
    const bool okl = accl == d.unit(), okr = accr == d.unit();
    rep.add("r-counit-left", okl ? CheckStatus::Pass : CheckStatus::Fail, R.size(),
            okl ? "" : "collapsed to " + accl.to_string(d.label_fn()));
    rep.add("r-counit-right", okr ? CheckStatus::Pass : CheckStatus::Fail, R.size(),
            okr ? "" : "collapsed to " + accr.to_string(d.label_fn()));
  }

  {  // Delta^op(y) R = R Delta(y) for every D-basis y of degree <= n, with
     // both product slots projected back to degree <= n
    CaseCounter c;
    for (uint32_t dy = 0; dy <= n; ++dy)
      for (uint32_t iy = 0; iy < d.dim(dy); ++iy) {
        const BasisIndex y{dy, iy};
        ++c.cases;
        SparseTensor lhs(d.space(), d.space()), rhs(d.space(), d.space());
        for (const auto& [ky, cy] : d.delta(y).coeffs)
          for (const auto& [kr, cr] : R.coeffs) {
            const Scalar w = cy * cr;
            const SparseVector l1 = d.mu(ky.idx[1], kr.idx[0]).truncated(n);
            const SparseVector l2 = d.mu(ky.idx[0], kr.idx[1]).truncated(n);
            for (const auto& [i1, c1] : l1.coeffs)
              for (const auto& [i2, c2] : l2.coeffs) lhs.add(TensorKey::of(i1, i2), w * c1 * c2);
            const SparseVector r1 = d.mu(kr.idx[0], ky.idx[0]).truncated(n);
            const SparseVector r2 = d.mu(kr.idx[1], ky.idx[1]).truncated(n);
            for (const auto& [i1, c1] : r1.coeffs)
              for (const auto& [i2, c2] : r2.coeffs) rhs.add(TensorKey::of(i1, i2), w * c1 * c2);
          }
        if (!(lhs == rhs)) c.fail(show(d, y) + ", residual " + first_term(lhs - rhs, d, d));
      }
    c.commit(rep, "aco");
  }

  const SparseTensor& P = s.p().level(n);

  {  // sum P'y1 (x) P'' (x) y2 = sum tau(y1,P''1) tau^{-1}(y3,P''3) y4P' (x) P''2 (x) y2,
     // the H-product slot projected back to degree <= n
    CaseCounter c;
    for (uint32_t dy = 0; dy <= n; ++dy)
      for (uint32_t iy = 0; iy < h.dim(dy); ++iy) {
        const BasisIndex y{dy, iy};
        ++c.cases;
        SparseTensor lhs(h.space(), a.space(), h.space());
        for (const auto& [ky, cy] : h.delta(y).coeffs)
          for (const auto& [kp, cp] : P.coeffs) {
            const SparseVector u = h.mu(kp.idx[0], ky.idx[0]).truncated(n);
            const Scalar w = cy * cp;
            for (const auto& [i, ci] : u.coeffs)
              lhs.add(TensorKey::of(i, kp.idx[1], ky.idx[1]), w * ci);
          }
        SparseTensor rhs(h.space(), a.space(), h.space());
        for (const auto& [k1, c1] : h.delta(y).coeffs)            // y123 (x) y4
          for (const auto& [k2, c2] : h.delta(k1.idx[0]).coeffs)  // y12 (x) y3
            for (const auto& [k3, c3] : h.delta(k2.idx[0]).coeffs)  // y1 (x) y2
              for (const auto& [kp, cp] : P.coeffs)
                for (const auto& [e1, ce1] : a.delta(kp.idx[1]).coeffs)  // P''12 (x) P''3
                  for (const auto& [e2, ce2] : a.delta(e1.idx[0]).coeffs) {
                    const Scalar sl = tau.eval(k3.idx[0], e2.idx[0]);
                    if (sl.is_zero()) continue;
                    const Scalar sr = tau.inv(k2.idx[1], e1.idx[1]);
                    if (sr.is_zero()) continue;
                    const SparseVector u = h.mu(k1.idx[1], kp.idx[0]).truncated(n);
                    const Scalar w = c1 * c2 * c3 * cp * ce1 * ce2 * sl * sr;
                    for (const auto& [i, ci] : u.coeffs)
                      rhs.add(TensorKey::of(i, e2.idx[1], k3.idx[1]), w * ci);
                  }
        if (!(lhs == rhs)) c.fail(show(h, y) + ", residual " + first_term(lhs - rhs, h, a, &h));
      }
    c.commit(rep, "aco-h");
  }

  {  // sum x2 (x) P' (x) x1P'' = sum tau(P'1,x1) tau^{-1}(P'3,x3) x2 (x) P'2 (x) P''x4,
     // the A-product slot projected back to degree <= n
    CaseCounter c;
    for (uint32_t dx = 0; dx <= n; ++dx)
      for (uint32_t ix = 0; ix < a.dim(dx); ++ix) {
        const BasisIndex x{dx, ix};
        ++c.cases;
        SparseTensor lhs(a.space(), h.space(), a.space());
        for (const auto& [kx, cx] : a.delta(x).coeffs)
          for (const auto& [kp, cp] : P.coeffs) {
            const SparseVector u = a.mu(kx.idx[0], kp.idx[1]).truncated(n);
            const Scalar w = cx * cp;
            for (const auto& [i, ci] : u.coeffs)
              lhs.add(TensorKey::of(kx.idx[1], kp.idx[0], i), w * ci);
          }
        SparseTensor rhs(a.space(), h.space(), a.space());
        for (const auto& [k1, c1] : a.delta(x).coeffs)            // x123 (x) x4
          for (const auto& [k2, c2] : a.delta(k1.idx[0]).coeffs)  // x12 (x) x3
            for (const auto& [k3, c3] : a.delta(k2.idx[0]).coeffs)  // x1 (x) x2
              for (const auto& [kp, cp] : P.coeffs)
                for (const auto& [e1, ce1] : h.delta(kp.idx[0]).coeffs)  // P'12 (x) P'3
                  for (const auto& [e2, ce2] : h.delta(e1.idx[0]).coeffs) {
                    const Scalar sl = tau.eval(e2.idx[0], k3.idx[0]);
                    if (sl.is_zero()) continue;
                    const Scalar sr = tau.inv(e1.idx[1], k2.idx[1]);
                    if (sr.is_zero()) continue;
                    const SparseVector u = a.mu(kp.idx[1], k1.idx[1]).truncated(n);
                    const Scalar w = c1 * c2 * c3 * cp * ce1 * ce2 * sl * sr;
                    for (const auto& [i, ci] : u.coeffs)
                      rhs.add(TensorKey::of(k3.idx[1], e2.idx[1], i), w * ci);
                  }
        if (!(lhs == rhs)) c.fail(show(a, x) + ", residual " + first_term(lhs - rhs, a, h, &a));
      }
    c.commit(rep, "aco-a");
  }

  {  // R_{m+1} - R_m supported purely in degree m+1 on both slots
    CaseCounter c;
    for (uint32_t m = 0; m < n; ++m) {
      ++c.cases;
      const SparseTensor w = s.r(m + 1) - s.r(m);
      for (const auto& [k, cw] : w.coeffs)
        if (k.idx[0].degree != m + 1 || k.idx[1].degree != m + 1) {
          c.fail("level " + std::to_string(m + 1) + " increment has term " + first_term(w, d, d));
          break;
        }
    }
    c.commit(rep, "increment");
  }

  {  // truncating R_n to level m recovers R_m
    CaseCounter c;
    for (uint32_t m = 0; m <= n; ++m) {
      ++c.cases;
      if (!(R.slot_truncated(0, m).slot_truncated(1, m) == s.r(m)))
        c.fail("level " + std::to_string(m));
    }
    c.commit(rep, "level-coherence");
  }

  {  // R_n R_n^{-1} = 1 (x) 1 = R_n^{-1} R_n in the degree-<= n algebra
    const SparseTensor unit2 = outer(d.unit(), d.unit());
    const SparseTensor le = pair_product_truncated(d, R, s.r_inverse(n), n);
    const bool okl = le == unit2;
    rep.add("r-inverse-left", okl ? CheckStatus::Pass : CheckStatus::Fail, R.size(),
            okl ? "" : "residual " + first_term(le - unit2, d, d));
    const SparseTensor ri = pair_product_truncated(d, s.r_inverse(n), R, n);
    const bool okr = ri == unit2;
    rep.add("r-inverse-right", okr ? CheckStatus::Pass : CheckStatus::Fail, R.size(),
            okr ? "" : "residual " + first_term(ri - unit2, d, d));
  }

  embed_checks(dcp, d.max_degree(), rep);
  return rep;
}

SparseTensor qybe_defect(const LqtStructure& s, uint32_t n) {
  const GradedHopfAlgebra& d = s.dcp().d();
  if (3 * n > d.max_degree())
    throw budget_error("Yang-Baxter defect at level " + std::to_string(n) +
                       " needs degree budget " + std::to_string(3 * n) + ", have " +
                       std::to_string(d.max_degree()));
  const SparseTensor& R = s.r(n);
  SparseTensor out(d.space(), d.space(), d.space());
  for (const auto& [kx, cx] : R.coeffs)
    for (const auto& [ky, cy] : R.coeffs) {
      // slot 1 only sees the first two factors; hoist it out of the z loop
      const SparseVector l1 = d.mu(kx.idx[0], ky.idx[0]);
      const SparseVector r1 = d.mu(ky.idx[0], kx.idx[0]);
      const Scalar w2 = cx * cy;
      for (const auto& [kz, cz] : R.coeffs) {
        const Scalar w = w2 * cz;
        {  // + R12 R13 R23
          const SparseVector l2 = d.mu(kx.idx[1], kz.idx[0]);
          const SparseVector l3 = d.mu(ky.idx[1], kz.idx[1]);
          for (const auto& [i1, c1] : l1.coeffs)
            for (const auto& [i2, c2] : l2.coeffs)
              for (const auto& [i3, c3] : l3.coeffs)
                out.add(TensorKey::of(i1, i2, i3), w * c1 * c2 * c3);
        }
        {  // - R23 R13 R12
          const SparseVector r2 = d.mu(kz.idx[0], kx.idx[1]);
          const SparseVector r3 = d.mu(kz.idx[1], ky.idx[1]);
          const Scalar neg = -w;
          for (const auto& [i1, c1] : r1.coeffs)
            for (const auto& [i2, c2] : r2.coeffs)
              for (const auto& [i3, c3] : r3.coeffs)
                out.add(TensorKey::of(i1, i2, i3), neg * c1 * c2 * c3);
        }
      }
    }
  return out;
}

std::optional<uint32_t> lowest_nonzero_total_degree(const SparseTensor& t) {
  std::optional<uint32_t> best;
  for (const auto& [k, c] : t.coeffs) {
    uint32_t total = 0;
    for (uint8_t s = 0; s < t.arity; ++s) total += k.idx[s].degree;
    if (!best || total < *best) best = total;
  }
  return best;
}

// --- ready-made instances -------------------------------------------------------

std::string double_kind_name(DoubleKind k) {
  return k == DoubleKind::PathDouble ? "path-double" : "semipath-double";
}

LqtInstance build_lqt_instance(DoubleKind kind, const Field& f, const CoveringQuiver& q,
                               const std::vector<std::vector<Character>>& chars,
                               uint32_t max_degree, uint32_t level_cap, RUnitVariant variant,
                               const std::string& name) {
  if (level_cap > max_degree)
    throw input_error("level cap " + std::to_string(level_cap) + " exceeds degree budget " +
                      std::to_string(max_degree));
  const QuiverHopfKind ka =
      kind == DoubleKind::PathDouble ? QuiverHopfKind::PathAlgebra : QuiverHopfKind::SemipathAlgebra;
  const QuiverHopfKind kh = kind == DoubleKind::PathDouble ? QuiverHopfKind::PathCoalgebra
                                                           : QuiverHopfKind::SemipathCoalgebra;
  const GradedHopfAlgebra a_plain = quiver_hopf(ka, f, q, chars, max_degree, name + ".a");
  const GradedHopfAlgebra h = quiver_hopf(kh, f, q, chars, max_degree, name + ".h");
  const GradedHopfAlgebra a = opposite_coalgebra(a_plain);
  SkewPairing tau(h, a);
  Copairing p = dual_basis_copairing(tau, level_cap);
  DoubleCrossProduct dcp = double_cross_product(a, h, tau, name);
  LqtStructure r = build_r(dcp, p, variant);
  return LqtInstance{kind, dcp, std::move(p), std::move(r)};
}

}  // namespace qhopf
