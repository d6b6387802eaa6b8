#include "qhopf/braidmod.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t r1 = 0; r1 < a.rows(); ++r1)
    for (size_t c1 = 0; c1 < a.cols(); ++c1) {
      const Scalar& ac = a.at(r1, c1);
      if (ac.is_zero()) continue;
      for (size_t r2 = 0; r2 < b.rows(); ++r2)
        for (size_t c2 = 0; c2 < b.cols(); ++c2) {
          const Scalar& bc = b.at(r2, c2);
          if (!bc.is_zero()) out.at(r1 * b.rows() + r2, c1 * b.cols() + c2) = ac * bc;
        }
    }
  return out;
}

void bind_check(const FiniteCycleModule& m, const GradedHopfAlgebra& d) {
  if (m.dim == 0 || m.labels.size() != m.dim || m.cycle_bound.size() != m.dim)
    throw input_error("module '" + m.name + "': carrier data is incomplete");
  if (m.dspace != d.space())
    throw input_error("module '" + m.name + "' is not over '" + d.name() + "'");
  if (!(m.field == d.field()))
    throw input_error("module '" + m.name + "' uses a different scalar field than '" +
                      d.name() + "'");
}

// Action matrix for one braiding/coaction term; nullptr = acts by zero
// (only a degree0_only certificate may omit a matrix).
const DenseMatrix* term_action(const FiniteCycleModule& m, BasisIndex d) {
  const DenseMatrix* p = m.find_action(d);
  if (!p && !m.degree0_only)
    throw input_error("module '" + m.name + "': no action matrix for degree " +
                      std::to_string(d.degree) + ", ordinal " + std::to_string(d.ordinal));
  return p;
}

// Entrywise comparison committed as one named check.
void compare_matrices(Report& rep, const std::string& name, const DenseMatrix& lhs,
                      const DenseMatrix& rhs, const LabelFn& row_label,
                      const LabelFn& col_label) {
  CaseCounter cc;
  for (size_t r = 0; r < lhs.rows(); ++r)
    for (size_t c = 0; c < lhs.cols(); ++c) {
      ++cc.cases;
      if (!(lhs.at(r, c) == rhs.at(r, c)))
        cc.fail("entry (" + row_label(BasisIndex{0, uint32_t(r)}) + "; " +
                col_label(BasisIndex{0, uint32_t(c)}) + "): " + lhs.at(r, c).to_string() +
                " vs " + rhs.at(r, c).to_string());
    }
  cc.commit(rep, name);
}

LabelFn numeric_label() {
  return [](BasisIndex i) { return std::to_string(i.ordinal); };
}

LabelFn triple_label(const FiniteCycleModule& a, const FiniteCycleModule& b,
                     const FiniteCycleModule& c) {
  return [&a, &b, &c](BasisIndex i) {
    const uint32_t k = i.ordinal;
    return a.labels[k / (b.dim * c.dim)] + " (x) " + b.labels[(k / c.dim) % b.dim] + " (x) " +
           c.labels[k % c.dim];
  };
}

using CoactionColumn = std::map<std::pair<uint64_t, uint32_t>, Scalar>;

CoactionColumn coaction_column(const LqtStructure& s, const FiniteCycleModule& m, uint32_t x,
                               uint32_t level) {
  const Field& f = m.field;
  CoactionColumn out;
  for (const auto& [k, c] : s.r(level).coeffs) {
    const DenseMatrix* act = term_action(m, k.idx[0]);
    if (!act) continue;
    for (uint32_t t = 0; t < m.dim; ++t) {
      const Scalar& w = act->at(t, x);
      if (w.is_zero()) continue;
      auto it = out.try_emplace({k.idx[1].pack(), t}, Scalar::zero(f)).first;
      it->second += c * w;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

}  // namespace

const DenseMatrix* FiniteCycleModule::find_action(BasisIndex d) const {
  auto it = action.find(d.pack());
  return it == action.end() ? nullptr : &it->second;
}

DenseMatrix FiniteCycleModule::rho(BasisIndex d) const {
  if (const DenseMatrix* p = find_action(d)) return *p;
  if (degree0_only && d.degree > 0) return DenseMatrix(field, dim, dim);
  throw input_error("module '" + name + "': no action matrix for degree " +
                    std::to_string(d.degree) + ", ordinal " + std::to_string(d.ordinal));
}

DenseMatrix FiniteCycleModule::rho(const SparseVector& v) const {
  if (v.space != dspace)
    throw input_error("module '" + name + "': vector from a foreign space");
  DenseMatrix out(field, dim, dim);
  for (const auto& [bi, c] : v.coeffs) {
    if (degree0_only && bi.degree > 0) continue;
    const DenseMatrix m = rho(bi);
    for (size_t r = 0; r < out.rows(); ++r)
      for (size_t cc = 0; cc < out.cols(); ++cc) {
        const Scalar& e = m.at(r, cc);
        if (!e.is_zero()) out.at(r, cc) += c * e;
      }
  }
  return out;
}

Report check_module(const FiniteCycleModule& m, const GradedHopfAlgebra& d) {
  bind_check(m, d);
  Report rep;
  rep.subject = m.name;
  const uint32_t nmax = std::min(m.max_action_degree, d.max_degree());
  const uint32_t sweep_max = m.degree0_only ? 0 : nmax;
  rep.info["dimension"] = std::to_string(m.dim);
  rep.info["swept-degrees"] = "0.." + std::to_string(sweep_max);

  CaseCounter shape;
  for (const auto& [key, mat] : m.action) {
    ++shape.cases;
    const BasisIndex di = BasisIndex::unpack(key);
    if (di.degree > d.max_degree() || di.ordinal >= d.dim(di.degree)) {
      shape.fail("action key outside the basis: degree " + std::to_string(di.degree) +
                 ", ordinal " + std::to_string(di.ordinal));
      continue;
    }
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      shape.fail("matrix for " + show(d, di) + " is not " + std::to_string(m.dim) + " x " +
                 std::to_string(m.dim));
  }
  if (m.grading && m.grading->size() != m.dim) {
    ++shape.cases;
    shape.fail("carrier grading size differs from the dimension");
  }
  shape.commit(rep, "shape");
  if (!rep.all_passed()) return rep;  // malformed certificate; stop here

  CaseCounter cover;
  for (uint32_t deg = 0; deg <= sweep_max; ++deg)
    for (uint32_t ord = 0; ord < d.dim(deg); ++ord) {
      ++cover.cases;
      if (!m.find_action(BasisIndex{deg, ord}))
        cover.fail("no action matrix for " + show(d, BasisIndex{deg, ord}));
    }
  cover.commit(rep, "coverage");
  if (!rep.all_passed()) return rep;

  {
    CaseCounter cc;
    ++cc.cases;
    if (!(m.rho(d.unit()) == DenseMatrix::identity(m.field, m.dim)))
      cc.fail("rho(1) is not the identity");
    cc.commit(rep, "unit");
  }

  {
    CaseCounter cc;
    for (uint32_t dx = 0; dx <= sweep_max; ++dx)
      for (uint32_t dy = 0; dx + dy <= sweep_max; ++dy)
        for (uint32_t ox = 0; ox < d.dim(dx); ++ox)
          for (uint32_t oy = 0; oy < d.dim(dy); ++oy) {
            ++cc.cases;
            const BasisIndex x{dx, ox}, y{dy, oy};
            const DenseMatrix lhs = *m.find_action(x) * *m.find_action(y);
            if (!(lhs == m.rho(d.mu(x, y))))
              cc.fail("rho(" + show(d, x) + ") rho(" + show(d, y) +
                      ") differs from rho of the product");
          }
    cc.commit(rep, "product");
    if (m.degree0_only && nmax > 0)
      rep.add("product-scope", CheckStatus::Note, 0,
              "degree0-only certificate: products swept over degree 0 only");
  }

  {
    CaseCounter cc;
    for (const auto& [key, mat] : m.action) {
      const BasisIndex di = BasisIndex::unpack(key);
      for (uint32_t x = 0; x < m.dim; ++x) {
        if (di.degree <= m.cycle_bound[x]) continue;
        ++cc.cases;
        for (uint32_t r = 0; r < m.dim; ++r)
          if (!mat.at(r, x).is_zero()) {
            cc.fail(show(d, di) + " acts nonzero on " + m.labels[x] +
                    " above its cycle bound " + std::to_string(m.cycle_bound[x]));
            break;
          }
      }
    }
    cc.commit(rep, "vanishing");
  }

  if (!m.grading) {
    rep.add("graded", CheckStatus::Skipped, 0, "no carrier grading supplied");
  } else {
    CaseCounter cc;
    const auto& gr = *m.grading;
    for (const auto& [key, mat] : m.action) {
      const BasisIndex di = BasisIndex::unpack(key);
      for (uint32_t x = 0; x < m.dim; ++x) {
        ++cc.cases;
        for (uint32_t r = 0; r < m.dim; ++r)
          if (!mat.at(r, x).is_zero() && gr[r] != di.degree + gr[x]) {
            cc.fail(show(d, di) + " maps " + m.labels[x] + " (degree " + std::to_string(gr[x]) +
                    ") outside degree " + std::to_string(di.degree + gr[x]));
            break;
          }
      }
    }
    cc.commit(rep, "graded");
  }
  return rep;
}

FiniteCycleModule trivial_module(const GradedHopfAlgebra& d, const std::string& name) {
  FiniteCycleModule m{.name = name,
                      .field = d.field(),
                      .dspace = d.space(),
                      .dim = 1,
                      .max_action_degree = d.max_degree(),
                      .labels = {"v"},
                      .action = {},
                      .cycle_bound = {0},
                      .grading = std::vector<uint32_t>{0},
                      .degree0_only = false};
  for (uint32_t deg = 0; deg <= d.max_degree(); ++deg)
    for (uint32_t ord = 0; ord < d.dim(deg); ++ord) {
      DenseMatrix mat(d.field(), 1, 1);
      mat.at(0, 0) = d.counit(BasisIndex{deg, ord});
      m.action.emplace(BasisIndex{deg, ord}.pack(), std::move(mat));
    }
  return m;
}

FiniteCycleModule d0_module_from_yd(const DoubleCrossProduct& dcp, const FiniteGroup& g,
                                    const std::vector<uint32_t>& grading,
                                    const std::vector<DenseMatrix>& action,
                                    const std::string& name) {
  const GradedHopfAlgebra& d = dcp.d();
  const Field& f = d.field();
  const uint32_t dim = static_cast<uint32_t>(grading.size());
  const uint32_t n = g.order();
  if (dim == 0) throw input_error("module '" + name + "': empty carrier");
  if (action.size() != n)
    throw input_error("module '" + name + "': expected one action matrix per group element");
  for (const DenseMatrix& mat : action)
    if (mat.rows() != dim || mat.cols() != dim || !(mat.field() == f))
      throw input_error("module '" + name + "': malformed action matrix");
  for (uint32_t x = 0; x < dim; ++x)
    if (grading[x] >= n) throw input_error("module '" + name + "': grading element out of range");

  // The group must be the one the double's degree-0 part is built from, in
  // the same element order on both tensor legs.
  if (d.dim(0) != n * n)
    throw input_error("module '" + name + "': group order does not match the degree-0 part");
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      SparseVector hm(dcp.h().space());
      hm.add(BasisIndex{0, g.mul(a, b)}, Scalar::one(f));
      if (!(dcp.h().mu(BasisIndex{0, a}, BasisIndex{0, b}) == hm))
        throw input_error("module '" + name + "': group table does not match the double");
      SparseVector am(dcp.a().space());
      if (a == b) am.add(BasisIndex{0, a}, Scalar::one(f));
      if (!(dcp.a().mu(BasisIndex{0, a}, BasisIndex{0, b}) == am))
        throw input_error("module '" + name + "': vertex idempotents do not match the double");
    }

  if (!(action[g.identity()] == DenseMatrix::identity(f, dim)))
    throw input_error("module '" + name + "': the identity element must act as the identity");
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (!(action[a] * action[b] == action[g.mul(a, b)]))
        throw input_error("module '" + name + "': matrices do not define a group action");
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t x = 0; x < dim; ++x) {
      const uint32_t want = g.conjugate(a, grading[x]);
      for (uint32_t r = 0; r < dim; ++r)
        if (!action[a].at(r, x).is_zero() && grading[r] != want)
          throw input_error("module '" + name + "': grading compatibility failure: " +
                            g.name(a) + " maps the " + g.name(grading[x]) +
                            "-component outside the " + g.name(want) + "-component");
    }

  FiniteCycleModule m{.name = name,
                      .field = f,
                      .dspace = d.space(),
                      .dim = dim,
                      .max_action_degree = d.max_degree(),
                      .labels = {},
                      .action = {},
                      .cycle_bound = std::vector<uint32_t>(dim, 0),
                      .grading = std::vector<uint32_t>(dim, 0),
                      .degree0_only = true};
  m.labels.reserve(dim);
  for (uint32_t x = 0; x < dim; ++x)
    m.labels.push_back("v" + std::to_string(x) + ":" + g.name(grading[x]));

  // (p_a (x) h) acts as the a-grading projection after the h-action.
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t h = 0; h < n; ++h) {
      DenseMatrix mat(f, dim, dim);
      for (uint32_t x = 0; x < dim; ++x)
        for (uint32_t r = 0; r < dim; ++r)
          if (grading[r] == a) mat.at(r, x) = action[h].at(r, x);
      m.action.emplace(dcp.index(BasisIndex{0, a}, BasisIndex{0, h}).pack(), std::move(mat));
    }
  return m;
}

FiniteCycleModule conjugation_module(const DoubleCrossProduct& dcp, const FiniteGroup& g,
                                     const std::string& name) {
  const uint32_t n = g.order();
  const Field& f = dcp.d().field();
  std::vector<uint32_t> grading(n);
  for (uint32_t h = 0; h < n; ++h) grading[h] = h;
  std::vector<DenseMatrix> action;
  action.reserve(n);
  for (uint32_t a = 0; a < n; ++a) {
    DenseMatrix mat(f, n, n);
    for (uint32_t h = 0; h < n; ++h) mat.at(g.conjugate(a, h), h) = Scalar::one(f);
    action.push_back(std::move(mat));
  }
  FiniteCycleModule m = d0_module_from_yd(dcp, g, grading, action, name);
  for (uint32_t h = 0; h < n; ++h) m.labels[h] = "v:" + g.name(h);
  return m;
}

FiniteCycleModule class_module(const DoubleCrossProduct& dcp, const FiniteGroup& g,
                               uint32_t class_member, const std::string& name) {
  if (class_member >= g.order())
    throw input_error("module '" + name + "': class member out of range");
  std::vector<uint32_t> elems;
  for (const auto& cls : g.conjugacy_classes())
    if (g.class_rep(cls[0]) == g.class_rep(class_member)) elems = cls;
  std::vector<uint32_t> pos(g.order(), UINT32_MAX);
  for (uint32_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;

  const Field& f = dcp.d().field();
  const uint32_t dim = static_cast<uint32_t>(elems.size());
  std::vector<DenseMatrix> action;
  action.reserve(g.order());
  for (uint32_t a = 0; a < g.order(); ++a) {
    DenseMatrix mat(f, dim, dim);
    for (uint32_t i = 0; i < dim; ++i) mat.at(pos[g.conjugate(a, elems[i])], i) = Scalar::one(f);
    action.push_back(std::move(mat));
  }
  FiniteCycleModule m = d0_module_from_yd(dcp, g, elems, action, name);
  for (uint32_t i = 0; i < dim; ++i) m.labels[i] = "v:" + g.name(elems[i]);
  return m;
}

FiniteCycleModule tensor_module(const FiniteCycleModule& u, const FiniteCycleModule& v,
                                const GradedHopfAlgebra& d) {
  bind_check(u, d);
  bind_check(v, d);
  const Field& f = d.field();
  const uint32_t dim = u.dim * v.dim;
  const bool flagged = u.degree0_only || v.degree0_only;
  const uint32_t nmax = std::min({u.max_action_degree, v.max_action_degree, d.max_degree()});

  FiniteCycleModule out{.name = "(" + u.name + " (x) " + v.name + ")",
                        .field = f,
                        .dspace = d.space(),
                        .dim = dim,
                        .max_action_degree = nmax,
                        .labels = {},
                        .action = {},
                        .cycle_bound = std::vector<uint32_t>(dim, 0),
                        .grading = std::nullopt,
                        .degree0_only = flagged};
  out.labels.reserve(dim);
  for (uint32_t x = 0; x < u.dim; ++x)
    for (uint32_t y = 0; y < v.dim; ++y)
      out.labels.push_back(u.labels[x] + " (x) " + v.labels[y]);
  if (u.grading && v.grading) {
    std::vector<uint32_t> gr(dim);
    for (uint32_t x = 0; x < u.dim; ++x)
      for (uint32_t y = 0; y < v.dim; ++y) gr[x * v.dim + y] = (*u.grading)[x] + (*v.grading)[y];
    out.grading = std::move(gr);
  }

  const uint32_t amax = flagged ? 0 : nmax;
  for (uint32_t deg = 0; deg <= amax; ++deg)
    for (uint32_t ord = 0; ord < d.dim(deg); ++ord) {
      const BasisIndex di{deg, ord};
      DenseMatrix mat(f, dim, dim);
      for (const auto& [k, c] : d.delta(di).coeffs) {
        const DenseMatrix m1 = u.rho(k.idx[0]);
        const DenseMatrix m2 = v.rho(k.idx[1]);
        for (uint32_t r1 = 0; r1 < u.dim; ++r1)
          for (uint32_t c1 = 0; c1 < u.dim; ++c1) {
            const Scalar& e1 = m1.at(r1, c1);
            if (e1.is_zero()) continue;
            for (uint32_t r2 = 0; r2 < v.dim; ++r2)
              for (uint32_t c2 = 0; c2 < v.dim; ++c2) {
                const Scalar& e2 = m2.at(r2, c2);
                if (!e2.is_zero()) mat.at(r1 * v.dim + r2, c1 * v.dim + c2) += c * e1 * e2;
              }
          }
      }
      out.action.emplace(di.pack(), std::move(mat));
    }

  // Tighten the composition bound 2 n_x + 2 n_y to what the matrices verify.
  for (uint32_t x = 0; x < u.dim; ++x)
    for (uint32_t y = 0; y < v.dim; ++y) {
      const uint32_t flat = x * v.dim + y;
      const uint32_t claim = flagged ? 0 : 2 * u.cycle_bound[x] + 2 * v.cycle_bound[y];
      uint32_t seen = 0;
      for (const auto& [key, mat] : out.action) {
        const BasisIndex di = BasisIndex::unpack(key);
        if (di.degree <= seen) continue;
        for (uint32_t r = 0; r < dim; ++r)
          if (!mat.at(r, flat).is_zero()) {
            seen = di.degree;
            break;
          }
      }
      if (seen > claim)
        throw verification_error("tensor module '" + out.name + "': " + out.labels[flat] +
                                 " is hit from degree " + std::to_string(seen) +
                                 ", above the composition bound " + std::to_string(claim));
      out.cycle_bound[flat] = seen;
    }
  return out;
}

BraidingOperator braiding_matrix(const LqtStructure& s, const FiniteCycleModule& u,
                                 const FiniteCycleModule& v, std::optional<uint32_t> level) {
  const GradedHopfAlgebra& d = s.dcp().d();
  bind_check(u, d);
  bind_check(v, d);
  const Field& f = d.field();
  const size_t du = u.dim, dv = v.dim, n2 = du * dv;
  DenseMatrix mat(f, n2, n2), inv(f, n2, n2);
  uint32_t used = 0;

  const auto pick = [&](uint32_t need) {
    const uint32_t lev = level ? *level : need;
    if (lev < need)
      throw input_error("braiding of " + u.name + " (x) " + v.name + ": forced level " +
                        std::to_string(lev) + " is below the stable threshold " +
                        std::to_string(need));
    if (lev > s.max_level())
      throw budget_error("braiding of " + u.name + " (x) " + v.name + ": needs level " +
                         std::to_string(lev) + " but the structure holds " +
                         std::to_string(s.max_level()));
    used = std::max(used, lev);
    return lev;
  };

  for (uint32_t x = 0; x < du; ++x)
    for (uint32_t y = 0; y < dv; ++y) {
      const uint32_t lev = pick(std::min(u.cycle_bound[x], v.cycle_bound[y]));
      const size_t col = x * dv + y;
      for (const auto& [k, c] : s.r(lev).coeffs) {
        const DenseMatrix* a1 = term_action(u, k.idx[0]);
        const DenseMatrix* a2 = term_action(v, k.idx[1]);
        if (!a1 || !a2) continue;
        for (uint32_t t = 0; t < dv; ++t) {
          const Scalar& wy = a2->at(t, y);
          if (wy.is_zero()) continue;
          for (uint32_t ss = 0; ss < du; ++ss) {
            const Scalar& wx = a1->at(ss, x);
            if (!wx.is_zero()) mat.at(t * du + ss, col) += c * wy * wx;
          }
        }
      }
    }

  for (uint32_t t = 0; t < dv; ++t)
    for (uint32_t ss = 0; ss < du; ++ss) {
      const uint32_t lev = pick(v.cycle_bound[t]);
      const size_t col = t * du + ss;
      for (const auto& [k, c] : s.r_inverse(lev).coeffs) {
        const DenseMatrix* a1 = term_action(u, k.idx[0]);
        const DenseMatrix* a2 = term_action(v, k.idx[1]);
        if (!a1 || !a2) continue;
        for (uint32_t xn = 0; xn < du; ++xn) {
          const Scalar& wx = a1->at(xn, ss);
          if (wx.is_zero()) continue;
          for (uint32_t yn = 0; yn < dv; ++yn) {
            const Scalar& wy = a2->at(yn, t);
            if (!wy.is_zero()) inv.at(xn * dv + yn, col) += c * wx * wy;
          }
        }
      }
    }

  const DenseMatrix id = DenseMatrix::identity(f, n2);
  if (!(mat * inv == id) || !(inv * mat == id))
    throw verification_error("braiding of " + u.name + " (x) " + v.name +
                             ": the antipode-side inverse does not invert it");
  return BraidingOperator{u.name + " (x) " + v.name, static_cast<uint32_t>(du),
                          static_cast<uint32_t>(dv), used, std::move(mat), std::move(inv)};
}

Report check_braid_relation(const BraidingOperator& c_uv, const BraidingOperator& c_uw,
                            const BraidingOperator& c_vw) {
  const uint32_t du = c_uv.dim_u, dv = c_uv.dim_v, dw = c_uw.dim_v;
  if (c_uw.dim_u != du || c_vw.dim_u != dv || c_vw.dim_v != dw)
    throw input_error("braid relation: the three braidings disagree on module dimensions");
  const Field& f = c_uv.mat.field();
  const DenseMatrix iu = DenseMatrix::identity(f, du);
  const DenseMatrix iv = DenseMatrix::identity(f, dv);
  const DenseMatrix iw = DenseMatrix::identity(f, dw);

  const DenseMatrix lhs = kron(c_vw.mat, iu) * kron(iv, c_uw.mat) * kron(c_uv.mat, iw);
  const DenseMatrix rhs = kron(iw, c_uv.mat) * kron(c_uw.mat, iv) * kron(iu, c_vw.mat);

  Report rep;
  rep.subject = "braid[" + c_uv.source + " | " + c_uw.source + " | " + c_vw.source + "]";
  compare_matrices(rep, "braid-relation", lhs, rhs, numeric_label(), numeric_label());
  return rep;
}

Report hexagon_check(const LqtStructure& s, const FiniteCycleModule& u,
                     const FiniteCycleModule& v, const FiniteCycleModule& w) {
  const GradedHopfAlgebra& d = s.dcp().d();
  const Field& f = d.field();
  Report rep;
  rep.subject = "hexagon[" + u.name + " | " + v.name + " | " + w.name + "]";

  const BraidingOperator c_uv = braiding_matrix(s, u, v);
  const BraidingOperator c_uw = braiding_matrix(s, u, w);
  const BraidingOperator c_vw = braiding_matrix(s, v, w);
  const FiniteCycleModule uv = tensor_module(u, v, d);
  const FiniteCycleModule vw = tensor_module(v, w, d);
  const BraidingOperator c_uv_w = braiding_matrix(s, uv, w);
  const BraidingOperator c_u_vw = braiding_matrix(s, u, vw);
  rep.info["level"] = std::to_string(std::max({c_uv.level, c_uw.level, c_vw.level, c_uv_w.level,
                                               c_u_vw.level}));

  const DenseMatrix iu = DenseMatrix::identity(f, u.dim);
  const DenseMatrix iv = DenseMatrix::identity(f, v.dim);
  const DenseMatrix iw = DenseMatrix::identity(f, w.dim);

  compare_matrices(rep, "hexagon-first", c_uv_w.mat, kron(c_uw.mat, iv) * kron(iu, c_vw.mat),
                   triple_label(w, u, v), triple_label(u, v, w));
  compare_matrices(rep, "hexagon-second", c_u_vw.mat, kron(iv, c_uw.mat) * kron(c_uv.mat, iw),
                   triple_label(v, w, u), triple_label(u, v, w));
  return rep;
}

Report check_naturality(const BraidingOperator& c_uv, const BraidingOperator& c_uv2,
                        const DenseMatrix& f, const DenseMatrix& g) {
  if (f.cols() != c_uv.dim_u || g.cols() != c_uv.dim_v || f.rows() != c_uv2.dim_u ||
      g.rows() != c_uv2.dim_v)
    throw input_error("naturality: map shapes do not match the braidings");
  Report rep;
  rep.subject = "naturality[" + c_uv.source + " -> " + c_uv2.source + "]";
  compare_matrices(rep, "naturality", kron(g, f) * c_uv.mat, c_uv2.mat * kron(f, g),
                   numeric_label(), numeric_label());
  return rep;
}

YdStructure yd_structure(const LqtStructure& s, const FiniteCycleModule& m) {
  bind_check(m, s.dcp().d());
  YdStructure yd{m, std::vector<uint32_t>(m.dim, 0), {}};
  yd.coaction.resize(m.dim);
  for (uint32_t x = 0; x < m.dim; ++x) {
    const uint32_t lev = m.cycle_bound[x];
    if (lev > s.max_level())
      throw budget_error("coaction of '" + m.labels[x] + "' needs level " + std::to_string(lev) +
                         " but the structure holds " + std::to_string(s.max_level()));
    yd.level[x] = lev;
    yd.coaction[x] = coaction_column(s, m, x, lev);
  }
  return yd;
}

Report verify_yd(const LqtStructure& s, const YdStructure& yd) {
  const FiniteCycleModule& m = yd.m;
  const GradedHopfAlgebra& d = s.dcp().d();
  bind_check(m, d);
  if (yd.coaction.size() != m.dim || yd.level.size() != m.dim)
    throw input_error("coaction data does not cover the carrier");
  const Field& f = d.field();
  Report rep;
  rep.subject = "yd[" + m.name + "]";

  {
    CaseCounter cc;
    for (uint32_t x = 0; x < m.dim; ++x) {
      ++cc.cases;
      std::map<uint32_t, Scalar> acc;
      for (const auto& [key, c] : yd.coaction[x]) {
        const Scalar e = d.counit(BasisIndex::unpack(key.first));
        if (e.is_zero()) continue;
        auto it = acc.try_emplace(key.second, Scalar::zero(f)).first;
        it->second += e * c;
        if (it->second.is_zero()) acc.erase(it);
      }
      const std::map<uint32_t, Scalar> want{{x, Scalar::one(f)}};
      if (acc != want) cc.fail("(eps (x) id) coaction(" + m.labels[x] + ") != " + m.labels[x]);
    }
    cc.commit(rep, "counit");
  }

  {
    CaseCounter cc;
    using Key3 = std::tuple<uint64_t, uint64_t, uint32_t>;
    for (uint32_t x = 0; x < m.dim; ++x) {
      ++cc.cases;
      std::map<Key3, Scalar> lhs, rhs;
      const auto accum = [&f](std::map<Key3, Scalar>& into, const Key3& key, const Scalar& c) {
        auto it = into.try_emplace(key, Scalar::zero(f)).first;
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
      };
      for (const auto& [key, c] : yd.coaction[x]) {
        for (const auto& [k2, c2] : d.delta(BasisIndex::unpack(key.first)).coeffs)
          accum(lhs, {k2.idx[0].pack(), k2.idx[1].pack(), key.second}, c * c2);
        for (const auto& [key2, c2] : yd.coaction[key.second])
          accum(rhs, {key.first, key2.first, key2.second}, c * c2);
      }
      if (lhs != rhs) cc.fail("coaction of " + m.labels[x] + " is not coassociative");
    }
    cc.commit(rep, "coassoc");
  }

  {
    CaseCounter cc;
    for (uint32_t x = 0; x < m.dim; ++x) {
      if (yd.level[x] + 1 > s.max_level()) continue;
      ++cc.cases;
      if (coaction_column(s, m, x, yd.level[x] + 1) != yd.coaction[x])
        cc.fail("coaction of " + m.labels[x] + " changes from level " +
                std::to_string(yd.level[x]) + " to " + std::to_string(yd.level[x] + 1));
    }
    if (cc.cases == 0)
      rep.add("level-stable", CheckStatus::Skipped, 0, "no level headroom within the budget");
    else
      cc.commit(rep, "level-stable");
  }

  const bool coaction_ok = rep.all_passed();

  // Left-left compatibility over the in-budget action domain. The acting
  // element's degree is capped so that both product slots stay within the
  // algebra budget next to the coaction legs.
  CaseCounter ll;
  {
    uint32_t slot_max = 0;
    for (uint32_t x = 0; x < m.dim; ++x) slot_max = std::max(slot_max, yd.level[x]);
    const uint32_t cap = m.degree0_only ? 0 : d.max_degree() - slot_max;
    using Key2 = std::pair<uint64_t, uint32_t>;
    const auto accum = [&f](std::map<Key2, Scalar>& into, const Key2& key, const Scalar& c) {
      auto it = into.try_emplace(key, Scalar::zero(f)).first;
      it->second += c;
      if (it->second.is_zero()) into.erase(it);
    };
    for (uint32_t deg = 0; deg <= cap; ++deg)
      for (uint32_t ord = 0; ord < d.dim(deg); ++ord)
        for (uint32_t x = 0; x < m.dim; ++x) {
          ++ll.cases;
          const BasisIndex h{deg, ord};
          std::map<Key2, Scalar> lhs, rhs;
          for (const auto& [k, cd] : d.delta(h).coeffs) {
            const DenseMatrix* act2 = term_action(m, k.idx[1]);
            if (act2) {
              for (const auto& [key, c2] : yd.coaction[x]) {
                const SparseVector prod = d.mu(k.idx[0], BasisIndex::unpack(key.first));
                for (uint32_t r = 0; r < m.dim; ++r) {
                  const Scalar& w = act2->at(r, key.second);
                  if (w.is_zero()) continue;
                  for (const auto& [bi, pc] : prod.coeffs)
                    accum(lhs, {bi.pack(), r}, cd * c2 * w * pc);
                }
              }
            }
            const DenseMatrix* act1 = term_action(m, k.idx[0]);
            if (act1) {
              for (uint32_t t2 = 0; t2 < m.dim; ++t2) {
                const Scalar& w = act1->at(t2, x);
                if (w.is_zero()) continue;
                for (const auto& [key, c2] : yd.coaction[t2]) {
                  const SparseVector prod = d.mu(BasisIndex::unpack(key.first), k.idx[1]);
                  for (const auto& [bi, pc] : prod.coeffs)
                    accum(rhs, {bi.pack(), key.second}, cd * w * c2 * pc);
                }
              }
            }
          }
          if (lhs != rhs) ll.fail("acting element " + show(d, h) + " on " + m.labels[x]);
        }
  }
  if (ll.witness && coaction_ok) {
    rep.add("left-left", CheckStatus::Note, ll.cases, "convention mismatch: " + *ll.witness);
    rep.info["compatibility"] = "convention-mismatch";
  } else {
    ll.commit(rep, "left-left");
    rep.info["compatibility"] = ll.witness ? "failed" : "left-left verified";
  }
  return rep;
}

}  // namespace qhopf
