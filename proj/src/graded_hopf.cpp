#include "qhopf/graded_hopf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "qhopf/errors.hpp"
#include "qhopf/linsolve.hpp"

namespace qhopf {

struct GradedHopfAlgebra::State {
  GradedHopfData d;
  SpaceId space = 0;

  std::mutex mu_lock;
  std::map<std::pair<uint64_t, uint64_t>, SparseVector> mu_memo;

  std::mutex s_lock;
  // s_tab[deg] present once the antipode is known on that degree.
  std::vector<std::optional<std::vector<SparseVector>>> s_tab;
  std::vector<std::optional<std::vector<SparseVector>>> sinv_tab;
  // Inverses of the diagonal degree blocks of the antipode, built on demand.
  std::vector<std::optional<DenseMatrix>> s_diag_inv;
};

namespace {

void require_degree(const GradedHopfAlgebra& h, BasisIndex i) {
  if (i.degree > h.max_degree() || i.ordinal >= h.dim(i.degree))
    throw input_error("basis index out of range for " + h.name());
}

}  // namespace

GradedHopfAlgebra::GradedHopfAlgebra(GradedHopfData data) : s_(std::make_shared<State>()) {
  State& st = *s_;
  st.d = std::move(data);
  GradedHopfData& d = st.d;
  if (d.labels.size() != d.max_degree + 1 || d.delta.size() != d.max_degree + 1)
    throw input_error("graded hopf data: tables must cover degrees 0..max_degree");
  if (d.counit0.size() != d.labels[0].size())
    throw input_error("graded hopf data: counit table must cover degree 0");
  if (!d.mu) throw input_error("graded hopf data: missing product");
  st.space = d.space != 0 ? d.space : intern_space(d.name);
  if (d.unit.space != st.space)
    throw input_error("graded hopf data: unit lives in the wrong space");
  st.s_tab.resize(d.max_degree + 1);
  st.sinv_tab.resize(d.max_degree + 1);
  st.s_diag_inv.resize(d.max_degree + 1);
}

const std::string& GradedHopfAlgebra::name() const { return s_->d.name; }
const Field& GradedHopfAlgebra::field() const { return s_->d.field; }
uint32_t GradedHopfAlgebra::max_degree() const { return s_->d.max_degree; }
uint32_t GradedHopfAlgebra::dim(uint32_t degree) const {
  return degree < s_->d.labels.size() ? static_cast<uint32_t>(s_->d.labels[degree].size()) : 0;
}
uint32_t GradedHopfAlgebra::total_dim() const {
  uint32_t t = 0;
  for (const auto& l : s_->d.labels) t += static_cast<uint32_t>(l.size());
  return t;
}
SpaceId GradedHopfAlgebra::space() const { return s_->space; }

const std::string& GradedHopfAlgebra::label(BasisIndex i) const {
  require_degree(*this, i);
  return s_->d.labels[i.degree][i.ordinal];
}

LabelFn GradedHopfAlgebra::label_fn() const {
  auto st = s_;
  return [st](BasisIndex i) -> std::string {
    if (i.degree < st->d.labels.size() && i.ordinal < st->d.labels[i.degree].size())
      return st->d.labels[i.degree][i.ordinal];
    return "<bad:" + std::to_string(i.degree) + ":" + std::to_string(i.ordinal) + ">";
  };
}

SparseVector GradedHopfAlgebra::basis_vec(BasisIndex i) const {
  require_degree(*this, i);
  SparseVector v(space());
  v.add(i, Scalar::one(field()));
  return v;
}

const SparseVector& GradedHopfAlgebra::unit() const { return s_->d.unit; }

Scalar GradedHopfAlgebra::counit(BasisIndex x) const {
  require_degree(*this, x);
  if (x.degree != 0) return Scalar::zero(field());
  return s_->d.counit0[x.ordinal];
}

Scalar GradedHopfAlgebra::counit(const SparseVector& v) const {
  if (v.space != space()) throw input_error("counit: vector from wrong space");
  Scalar acc = Scalar::zero(field());
  for (const auto& [i, c] : v.coeffs)
    if (i.degree == 0) acc += s_->d.counit0[i.ordinal] * c;
  return acc;
}

const SparseTensor& GradedHopfAlgebra::delta(BasisIndex x) const {
  require_degree(*this, x);
  return s_->d.delta[x.degree][x.ordinal];
}

SparseTensor GradedHopfAlgebra::delta(const SparseVector& v) const {
  if (v.space != space()) throw input_error("delta: vector from wrong space");
  SparseTensor acc(space(), space());
  for (const auto& [i, c] : v.coeffs) acc.add_scaled(delta(i), c);
  return acc;
}

SparseTensor GradedHopfAlgebra::delta_part(BasisIndex x, uint32_t i, uint32_t j) const {
  const SparseTensor& full = delta(x);
  SparseTensor out(space(), space());
  for (const auto& [k, c] : full.coeffs)
    if (k.idx[0].degree == i && k.idx[1].degree == j) out.add(k, c);
  return out;
}

SparseVector GradedHopfAlgebra::mu(BasisIndex x, BasisIndex y) const {
  require_degree(*this, x);
  require_degree(*this, y);
  if (x.degree + y.degree > max_degree())
    throw budget_error("product of degrees " + std::to_string(x.degree) + " and " +
                       std::to_string(y.degree) + " exceeds truncation degree " +
                       std::to_string(max_degree()) + " of " + name());
  const auto key = std::make_pair(x.pack(), y.pack());
  {
    std::lock_guard<std::mutex> g(s_->mu_lock);
    auto it = s_->mu_memo.find(key);
    if (it != s_->mu_memo.end()) return it->second;
  }
  SparseVector v = s_->d.mu(x, y);
  if (v.space != space()) throw verification_error("product landed in the wrong space");
  std::lock_guard<std::mutex> g(s_->mu_lock);
  return s_->mu_memo.emplace(key, std::move(v)).first->second;
}

SparseVector GradedHopfAlgebra::mu(const SparseVector& x, const SparseVector& y) const {
  if (x.space != space() || y.space != space())
    throw input_error("mu: vector from wrong space");
  SparseVector acc(space());
  for (const auto& [i, ci] : x.coeffs)
    for (const auto& [j, cj] : y.coeffs) acc.add_scaled(mu(i, j), ci * cj);
  return acc;
}

// --- antipode -------------------------------------------------------------

namespace {

// Coupled components of degree-n basis elements under "y appears in the
// (n, 0) part of delta(x)". The convolution equations for x only involve the
// unknown antipode values of elements in its component, so each component is
// solved independently.
std::vector<std::vector<uint32_t>> top_components(const GradedHopfAlgebra& h, uint32_t n) {
  const uint32_t dn = h.dim(n);
  std::vector<std::set<uint32_t>> adj(dn);
  for (uint32_t x = 0; x < dn; ++x) {
    adj[x].insert(x);
    for (const auto& [k, c] : h.delta(BasisIndex{n, x}).coeffs) {
      (void)c;
      if (k.idx[0].degree == n) {
        adj[x].insert(k.idx[0].ordinal);
        adj[k.idx[0].ordinal].insert(x);
      }
    }
  }
  std::vector<std::vector<uint32_t>> comps;
  std::vector<char> seen(dn, 0);
  for (uint32_t start = 0; start < dn; ++start) {
    if (seen[start]) continue;
    std::vector<uint32_t> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (uint32_t w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

SparseVector GradedHopfAlgebra::antipode(BasisIndex x) const {
  require_degree(*this, x);
  const uint32_t n = x.degree;
  {
    std::lock_guard<std::mutex> g(s_->s_lock);
    if (s_->s_tab[n]) return (*s_->s_tab[n])[x.ordinal];
  }
  std::vector<SparseVector> tab;
  tab.reserve(dim(n));
  if (s_->d.antipode) {
    for (uint32_t i = 0; i < dim(n); ++i) {
      SparseVector v = s_->d.antipode(BasisIndex{n, i});
      if (v.space != space()) throw verification_error("antipode landed in the wrong space");
      tab.push_back(std::move(v));
    }
  } else {
    // Degrees below n feed the constant terms of the equations; make sure
    // they are available first (recursion depth = n).
    for (uint32_t k = 0; n > 0 && k < n; ++k)
      if (dim(k) > 0) antipode(BasisIndex{k, 0});
    const uint32_t dn = dim(n);
    const Field& f = field();
    tab.assign(dn, SparseVector(space()));
    for (const auto& comp : top_components(*this, n)) {
      // Unknown (y, c): coefficient of basis element c in S(y); both of
      // degree n since the antipode of a graded bialgebra is graded.
      std::map<uint32_t, uint32_t> pos;  // ordinal -> position in comp
      for (uint32_t i = 0; i < comp.size(); ++i) pos[comp[i]] = i;
      auto ukey = [&](uint32_t y, uint32_t c) -> uint64_t {
        return static_cast<uint64_t>(pos.at(y)) * dn + c;
      };
      LinearSystem sys{f, {}};
      for (uint32_t xo : comp) {
        const BasisIndex xi{n, xo};
        // One equation per basis element of the result space; collect rows
        // keyed by the result index.
        std::map<BasisIndex, std::map<uint64_t, Scalar>> rows;
        std::map<BasisIndex, Scalar> rhs;
        for (const auto& [k, cD] : delta(xi).coeffs) {
          const BasisIndex x1 = k.idx[0], x2 = k.idx[1];
          if (x1.degree == n) {
            // x2 has degree 0; mu(c, x2) multiplies each candidate basis
            // element on the right and contributes unknown-linear terms.
            for (uint32_t c = 0; c < dn; ++c) {
              const SparseVector prod = mu(BasisIndex{n, c}, x2);
              for (const auto& [r, m] : prod.coeffs) {
                auto& row = rows[r];
                auto [it, fresh] = row.emplace(ukey(x1.ordinal, c), cD * m);
                if (!fresh) it->second += cD * m;
              }
            }
          } else {
            const SparseVector known = antipode(x1);
            const SparseVector prod = mu(known, basis_vec(x2));
            for (const auto& [r, m] : prod.coeffs) {
              auto [it, fresh] = rhs.emplace(r, -(cD * m));
              if (!fresh) it->second -= cD * m;
            }
          }
        }
        // counit(x) vanishes for n >= 1; degree 0 keeps the unit term.
        if (n == 0) {
          const Scalar e = counit(xi);
          for (const auto& [r, u] : unit().coeffs) {
            auto [it, fresh] = rhs.emplace(r, e * u);
            if (!fresh) it->second += e * u;
          }
        }
        std::set<BasisIndex> keys;
        for (const auto& [r, row] : rows) {
          (void)row;
          keys.insert(r);
        }
        for (const auto& [r, v] : rhs) {
          (void)v;
          keys.insert(r);
        }
        for (const BasisIndex& r : keys) {
          std::map<uint64_t, Scalar> row;
          if (auto it = rows.find(r); it != rows.end()) row = it->second;
          Scalar b = Scalar::zero(f);
          if (auto it = rhs.find(r); it != rhs.end()) b = it->second;
          sys.equations.emplace_back(std::move(row), std::move(b));
        }
      }
      LinearSolveResult sol = solve_linear(sys);
      if (!sol.feasible)
        throw verification_error("antipode equations are infeasible at degree " +
                                 std::to_string(n) + " of " + name());
      for (uint32_t y : comp) {
        SparseVector sv(space());
        for (uint32_t c = 0; c < dn; ++c) {
          auto it = sol.solution.find(ukey(y, c));
          if (it != sol.solution.end() && !it->second.is_zero())
            sv.add(BasisIndex{n, c}, it->second);
        }
        tab[y] = std::move(sv);
      }
    }
  }
  std::lock_guard<std::mutex> g(s_->s_lock);
  if (!s_->s_tab[n]) s_->s_tab[n] = std::move(tab);
  return (*s_->s_tab[n])[x.ordinal];
}

SparseVector GradedHopfAlgebra::antipode(const SparseVector& v) const {
  if (v.space != space()) throw input_error("antipode: vector from wrong space");
  SparseVector acc(space());
  for (const auto& [i, c] : v.coeffs) acc.add_scaled(antipode(i), c);
  return acc;
}

SparseVector GradedHopfAlgebra::antipode_inv(BasisIndex x) const {
  require_degree(*this, x);
  const uint32_t n = x.degree;
  {
    std::lock_guard<std::mutex> g(s_->s_lock);
    if (s_->sinv_tab[n]) return (*s_->sinv_tab[n])[x.ordinal];
  }
  if (s_->d.antipode_inv) {
    std::vector<SparseVector> tab;
    tab.reserve(dim(n));
    for (uint32_t i = 0; i < dim(n); ++i) {
      SparseVector v = s_->d.antipode_inv(BasisIndex{n, i});
      if (v.space != space())
        throw verification_error("inverse antipode landed in the wrong space");
      tab.push_back(std::move(v));
    }
    std::lock_guard<std::mutex> g(s_->s_lock);
    if (!s_->sinv_tab[n]) s_->sinv_tab[n] = std::move(tab);
    return (*s_->sinv_tab[n])[x.ordinal];
  }
  // Generic route: the antipode preserves the degree filtration, so its
  // matrix is block triangular by degree. Solving S(y) = x peels one degree
  // block at a time using exact inverses of the diagonal blocks.
  auto diag_inv = [&](uint32_t k) -> const DenseMatrix& {
    {
      std::lock_guard<std::mutex> g(s_->s_lock);
      if (s_->s_diag_inv[k]) return *s_->s_diag_inv[k];
    }
    const uint32_t dk = dim(k);
    DenseMatrix m(field(), dk, dk);
    for (uint32_t c = 0; c < dk; ++c) {
      const SparseVector sc = antipode(BasisIndex{k, c});
      for (const auto& [r, v] : sc.coeffs)
        if (r.degree == k) m.at(r.ordinal, c) = v;
    }
    auto inv = matrix_inverse(m);
    if (!inv)
      throw verification_error("antipode is not invertible on degree " + std::to_string(k) +
                               " of " + name());
    std::lock_guard<std::mutex> g(s_->s_lock);
    if (!s_->s_diag_inv[k]) s_->s_diag_inv[k] = std::move(*inv);
    return *s_->s_diag_inv[k];
  };
  auto solve_s = [&](const SparseVector& target) -> SparseVector {
    SparseVector residual = target, result(space());
    for (uint32_t k = max_degree() + 1; k-- > 0;) {
      std::vector<Scalar> coord(dim(k), Scalar::zero(field()));
      bool any = false;
      for (const auto& [i, c] : residual.coeffs)
        if (i.degree == k) {
          coord[i.ordinal] = c;
          any = true;
        }
      if (!any) continue;
      const DenseMatrix& inv = diag_inv(k);
      SparseVector yk(space());
      for (uint32_t r = 0; r < dim(k); ++r) {
        Scalar acc = Scalar::zero(field());
        for (uint32_t c = 0; c < dim(k); ++c)
          if (!coord[c].is_zero()) acc += inv.at(r, c) * coord[c];
        if (!acc.is_zero()) yk.add(BasisIndex{k, r}, acc);
      }
      result = result + yk;
      residual = residual - antipode(yk);
    }
    if (!residual.is_zero())
      throw verification_error("inverse antipode solve failed on " + name());
    return result;
  };
  std::vector<SparseVector> tab;
  tab.reserve(dim(n));
  for (uint32_t i = 0; i < dim(n); ++i) tab.push_back(solve_s(basis_vec(BasisIndex{n, i})));
  std::lock_guard<std::mutex> g(s_->s_lock);
  if (!s_->sinv_tab[n]) s_->sinv_tab[n] = std::move(tab);
  return (*s_->sinv_tab[n])[x.ordinal];
}

SparseVector GradedHopfAlgebra::antipode_inv(const SparseVector& v) const {
  if (v.space != space()) throw input_error("antipode_inv: vector from wrong space");
  SparseVector acc(space());
  for (const auto& [i, c] : v.coeffs) acc.add_scaled(antipode_inv(i), c);
  return acc;
}

bool GradedHopfAlgebra::has_flat() const { return !s_->d.flat.empty(); }

const FlatRep& GradedHopfAlgebra::flat_rep(BasisIndex x) const {
  require_degree(*this, x);
  if (!has_flat())
    throw input_error(name() + " has no flat letter-word representation");
  return s_->d.flat[x.degree][x.ordinal];
}

// --- opposite coalgebra ---------------------------------------------------

GradedHopfAlgebra opposite_coalgebra(const GradedHopfAlgebra& h) {
  GradedHopfData d;
  d.name = h.name() + "^cop";
  d.space = h.space();  // shares the vector space; only structure maps differ
  d.field = h.field();
  d.max_degree = h.max_degree();
  d.counit0.reserve(h.dim(0));
  for (uint32_t i = 0; i < h.dim(0); ++i) d.counit0.push_back(h.counit(BasisIndex{0, i}));
  d.unit = h.unit();
  d.labels.resize(d.max_degree + 1);
  d.delta.resize(d.max_degree + 1);
  for (uint32_t n = 0; n <= d.max_degree; ++n) {
    for (uint32_t i = 0; i < h.dim(n); ++i) {
      d.labels[n].push_back(h.label(BasisIndex{n, i}));
      const SparseTensor& t = h.delta(BasisIndex{n, i});
      SparseTensor flipped(h.space(), h.space());
      for (const auto& [k, c] : t.coeffs) flipped.add(TensorKey::of(k.idx[1], k.idx[0]), c);
      d.delta[n].push_back(std::move(flipped));
    }
  }
  if (h.has_flat()) {
    d.flat.resize(d.max_degree + 1);
    for (uint32_t n = 0; n <= d.max_degree; ++n)
      for (uint32_t i = 0; i < h.dim(n); ++i) d.flat[n].push_back(h.flat_rep(BasisIndex{n, i}));
  }
  GradedHopfAlgebra base = h;  // shared state keeps the product memo alive
  d.mu = [base](BasisIndex x, BasisIndex y) { return base.mu(x, y); };
  d.antipode = [base](BasisIndex x) { return base.antipode_inv(x); };
  d.antipode_inv = [base](BasisIndex x) { return base.antipode(x); };
  GradedHopfAlgebra out(std::move(d));
  return out;
}

// --- axiom verification ----------------------------------------------------

std::string show(const GradedHopfAlgebra& h, BasisIndex i) {
  return h.label(i) + "[" + std::to_string(i.degree) + ":" + std::to_string(i.ordinal) + "]";
}

Report verify_hopf(const GradedHopfAlgebra& h, std::optional<uint32_t> budget_opt,
                   bool check_antipode) {
  const uint32_t N = h.max_degree();
  const uint32_t budget = budget_opt ? std::min(*budget_opt, N) : N;
  Report rep;
  rep.subject = h.name();
  rep.info["max_degree"] = std::to_string(N);
  rep.info["check_budget"] = std::to_string(budget);
  const LabelFn lbl = h.label_fn();
  auto lbl4 = std::array<LabelFn, 4>{lbl, lbl, lbl, lbl};

  // Associativity on basis triples within the degree budget.
  {
    CaseCounter c;
    for (uint32_t di = 0; di <= budget; ++di)
      for (uint32_t dj = 0; di + dj <= budget; ++dj)
        for (uint32_t dk = 0; di + dj + dk <= budget; ++dk)
          for (uint32_t i = 0; i < h.dim(di); ++i)
            for (uint32_t j = 0; j < h.dim(dj); ++j)
              for (uint32_t k = 0; k < h.dim(dk); ++k) {
                const BasisIndex x{di, i}, y{dj, j}, z{dk, k};
                ++c.cases;
                const SparseVector lhs = h.mu(h.mu(x, y), h.basis_vec(z));
                const SparseVector rhs = h.mu(h.basis_vec(x), h.mu(y, z));
                if (!(lhs == rhs))
                  c.fail("(" + show(h, x) + " * " + show(h, y) + ") * " + show(h, z) +
                         " != " + show(h, x) + " * (" + show(h, y) + " * " + show(h, z) +
                         "): " + lhs.to_string(lbl) + " vs " + rhs.to_string(lbl));
              }
    c.commit(rep, "associativity");
  }

  // Unit element.
  {
    CaseCounter c;
    for (uint32_t dn = 0; dn <= budget; ++dn)
      for (uint32_t i = 0; i < h.dim(dn); ++i) {
        const BasisIndex x{dn, i};
        ++c.cases;
        const SparseVector xe = h.basis_vec(x);
        if (!(h.mu(h.unit(), xe) == xe) || !(h.mu(xe, h.unit()) == xe))
          c.fail("unit fails on " + show(h, x));
      }
    c.commit(rep, "unit");
  }

  // Coproduct grading: components of delta(x) must have degrees summing to
  // deg(x). Coassociativity and counit need no budget (delta preserves it).
  {
    CaseCounter c;
    for (uint32_t dn = 0; dn <= N; ++dn)
      for (uint32_t i = 0; i < h.dim(dn); ++i) {
        const BasisIndex x{dn, i};
        ++c.cases;
        for (const auto& [k, v] : h.delta(x).coeffs) {
          (void)v;
          if (k.idx[0].degree + k.idx[1].degree != dn)
            c.fail("coproduct of " + show(h, x) + " has a component of degrees (" +
                   std::to_string(k.idx[0].degree) + ", " + std::to_string(k.idx[1].degree) +
                   ")");
        }
      }
    c.commit(rep, "coproduct-graded");
  }

  {
    CaseCounter c;
    for (uint32_t dn = 0; dn <= N; ++dn)
      for (uint32_t i = 0; i < h.dim(dn); ++i) {
        const BasisIndex x{dn, i};
        ++c.cases;
        SparseTensor lhs(h.space(), h.space(), h.space());
        SparseTensor rhs(h.space(), h.space(), h.space());
        for (const auto& [k, v] : h.delta(x).coeffs) {
          for (const auto& [k2, v2] : h.delta(k.idx[0]).coeffs)
            lhs.add(TensorKey::of(k2.idx[0], k2.idx[1], k.idx[1]), v * v2);
          for (const auto& [k2, v2] : h.delta(k.idx[1]).coeffs)
            rhs.add(TensorKey::of(k.idx[0], k2.idx[0], k2.idx[1]), v * v2);
        }
        if (!(lhs == rhs))
          c.fail("coassociativity fails on " + show(h, x) + ": " + lhs.to_string(lbl4) +
                 " vs " + rhs.to_string(lbl4));
      }
    c.commit(rep, "coassociativity");
  }

  {
    CaseCounter c;
    for (uint32_t dn = 0; dn <= N; ++dn)
      for (uint32_t i = 0; i < h.dim(dn); ++i) {
        const BasisIndex x{dn, i};
        ++c.cases;
        SparseVector left(h.space()), right(h.space());
        for (const auto& [k, v] : h.delta(x).coeffs) {
          if (k.idx[0].degree == 0) left.add(k.idx[1], h.counit(k.idx[0]) * v);
          if (k.idx[1].degree == 0) right.add(k.idx[0], h.counit(k.idx[1]) * v);
        }
        const SparseVector xe = h.basis_vec(x);
        if (!(left == xe) || !(right == xe))
          c.fail("counit fails on " + show(h, x) + ": (eps x id) gives " +
                 left.to_string(lbl) + ", (id x eps) gives " + right.to_string(lbl));
      }
    c.commit(rep, "counit");
  }

  // Bialgebra law on basis pairs within the budget, plus multiplicativity of
  // the counit on the same pairs.
  {
    CaseCounter c, ce;
    for (uint32_t di = 0; di <= budget; ++di)
      for (uint32_t dj = 0; di + dj <= budget; ++dj)
        for (uint32_t i = 0; i < h.dim(di); ++i)
          for (uint32_t j = 0; j < h.dim(dj); ++j) {
            const BasisIndex x{di, i}, y{dj, j};
            ++c.cases;
            ++ce.cases;
            const SparseVector xy = h.mu(x, y);
            const SparseTensor lhs = h.delta(xy);
            SparseTensor rhs(h.space(), h.space());
            for (const auto& [kx, vx] : h.delta(x).coeffs)
              for (const auto& [ky, vy] : h.delta(y).coeffs) {
                const SparseVector p1 = h.mu(kx.idx[0], ky.idx[0]);
                const SparseVector p2 = h.mu(kx.idx[1], ky.idx[1]);
                const Scalar cc = vx * vy;
                for (const auto& [a, va] : p1.coeffs)
                  for (const auto& [b, vb] : p2.coeffs)
                    rhs.add(TensorKey::of(a, b), cc * va * vb);
              }
            if (!(lhs == rhs))
              c.fail("delta(" + show(h, x) + " * " + show(h, y) + ") != delta(" + show(h, x) +
                     ") delta(" + show(h, y) + ")");
            if (!(h.counit(xy) == h.counit(x) * h.counit(y)))
              ce.fail("counit not multiplicative on " + show(h, x) + ", " + show(h, y));
          }
    c.commit(rep, "bialgebra-law");
    ce.commit(rep, "counit-multiplicative");
  }

  if (check_antipode) {
    // Both convolution identities; the products involved pair degrees i and
    // n - i, so every case fits inside max_degree automatically.
    CaseCounter c;
    for (uint32_t dn = 0; dn <= N; ++dn)
      for (uint32_t i = 0; i < h.dim(dn); ++i) {
        const BasisIndex x{dn, i};
        ++c.cases;
        SparseVector left(h.space()), right(h.space());
        for (const auto& [k, v] : h.delta(x).coeffs) {
          left.add_scaled(h.mu(h.antipode(k.idx[0]), h.basis_vec(k.idx[1])), v);
          right.add_scaled(h.mu(h.basis_vec(k.idx[0]), h.antipode(k.idx[1])), v);
        }
        const SparseVector expect = h.unit().scaled(h.counit(x));
        if (!(left == expect))
          c.fail("sum S(x1) x2 != eps(x) 1 on " + show(h, x) + ": got " + left.to_string(lbl));
        if (!(right == expect))
          c.fail("sum x1 S(x2) != eps(x) 1 on " + show(h, x) + ": got " +
                 right.to_string(lbl));
      }
    c.commit(rep, "antipode-convolution");

    CaseCounter ci;
    for (uint32_t dn = 0; dn <= N; ++dn)
      for (uint32_t i = 0; i < h.dim(dn); ++i) {
        const BasisIndex x{dn, i};
        ++ci.cases;
        const SparseVector xe = h.basis_vec(x);
        if (!(h.antipode(h.antipode_inv(x)) == xe) || !(h.antipode_inv(h.antipode(x)) == xe))
          ci.fail("antipode inverse round trip fails on " + show(h, x));
      }
    ci.commit(rep, "antipode-inverse");
  }

  return rep;
}

}  // namespace qhopf
