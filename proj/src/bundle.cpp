#include "qhopf/bundle.hpp"

#include <memory>

#include "qhopf/errors.hpp"
#include "qhopf/graded_hopf.hpp"

namespace qhopf {

namespace {

Json terms_json(const SparseTensor& t) { return tensor_json(t)["terms"]; }

SparseTensor terms_from_json(const std::array<SpaceId, 4>& spaces, const Field& f, const Json& j,
                             const std::string& where) {
  return tensor_from_json(2, spaces, f, Json{{"terms", j}}, where);
}

Json flat_json(const FlatRep& rep) {
  Json out = Json::array();
  for (const auto& [word, c] : rep) {
    Json letters = Json::array();
    for (uint32_t l : word) letters.push_back(l);
    out.push_back(Json::array({std::move(letters), scalar_json(c)}));
  }
  return out;
}

FlatRep flat_from_json(const Field& f, const Json& j, const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": flat representation must be an array");
  FlatRep rep;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_array())
      throw input_error(where + ": expected [[letters...], coeff]");
    LetterWord word;
    for (const Json& l : e[0]) word.push_back(as_uint(l, where));
    rep[std::move(word)] = scalar_from_json(f, e[1], where);
  }
  return rep;
}

Json dims_json(const GradedHopfAlgebra& g) {
  Json out = Json::array();
  for (uint32_t d = 0; d <= g.max_degree(); ++d) out.push_back(g.dim(d));
  return out;
}

// All nonzero values of the pairing on equal-degree basis pairs, in basis
// order: [y-index, x-index, value].
Json tau_json(const SkewPairing& tau, uint32_t max_degree) {
  Json out = Json::array();
  for (uint32_t d = 0; d <= max_degree; ++d)
    for (uint32_t yo = 0; yo < tau.h().dim(d); ++yo)
      for (uint32_t xo = 0; xo < tau.a().dim(d); ++xo) {
        const BasisIndex y{d, yo}, x{d, xo};
        const Scalar v = tau.eval(y, x);
        if (!v.is_zero())
          out.push_back(Json::array({index_str(y), index_str(x), scalar_json(v)}));
      }
  return out;
}

}  // namespace

Json algebra_json(const GradedHopfAlgebra& g) {
  if (!g.has_flat())
    throw input_error("bundle: algebra \"" + g.name() +
                      "\" has no letter-word representation; it cannot be reloaded");
  Json labels = Json::array();
  Json delta = Json::array();
  Json antipode = Json::array();
  Json flat = Json::array();
  for (uint32_t d = 0; d <= g.max_degree(); ++d) {
    Json lab = Json::array(), del = Json::array(), ant = Json::array(), fl = Json::array();
    for (uint32_t o = 0; o < g.dim(d); ++o) {
      const BasisIndex i{d, o};
      lab.push_back(g.label(i));
      del.push_back(terms_json(g.delta(i)));
      ant.push_back(vec_json(g.antipode(i)));
      fl.push_back(flat_json(g.flat_rep(i)));
    }
    labels.push_back(std::move(lab));
    delta.push_back(std::move(del));
    antipode.push_back(std::move(ant));
    flat.push_back(std::move(fl));
  }
  Json counit = Json::array();
  for (uint32_t o = 0; o < g.dim(0); ++o) counit.push_back(scalar_json(g.counit(BasisIndex{0, o})));
  Json mu = Json::array();
  for (uint32_t dx = 0; dx <= g.max_degree(); ++dx)
    for (uint32_t dy = 0; dx + dy <= g.max_degree(); ++dy)
      for (uint32_t ox = 0; ox < g.dim(dx); ++ox)
        for (uint32_t oy = 0; oy < g.dim(dy); ++oy) {
          const BasisIndex x{dx, ox}, y{dy, oy};
          const SparseVector v = g.mu(x, y);
          if (!v.is_zero())
            mu.push_back(Json::array({index_str(x), index_str(y), vec_json(v)}));
        }
  return Json{{"name", g.name()},
              {"max_degree", g.max_degree()},
              {"labels", std::move(labels)},
              {"counit", std::move(counit)},
              {"unit", vec_json(g.unit())},
              {"delta", std::move(delta)},
              {"mu", std::move(mu)},
              {"antipode", std::move(antipode)},
              {"flat", std::move(flat)}};
}

GradedHopfAlgebra algebra_from_json(const Field& f, const Json& j, const std::string& where) {
  GradedHopfData data;
  data.name = need_string(j, "name", where);
  data.space = intern_space(data.name);
  data.field = f;
  data.max_degree = need_uint(j, "max_degree", where);
  const SpaceId sp = data.space;

  const Json& labels = need(j, "labels", where);
  const Json& delta = need(j, "delta", where);
  const Json& antipode = need(j, "antipode", where);
  const Json& flat = need(j, "flat", where);
  if (!labels.is_array() || labels.size() != size_t(data.max_degree) + 1)
    throw input_error(where + ": \"labels\" needs one array per degree 0.." +
                      std::to_string(data.max_degree));
  auto degree_block = [&](const Json& block, const char* key, uint32_t d) -> const Json& {
    if (!block.is_array() || block.size() != labels.size() || !block[d].is_array() ||
        block[d].size() != labels[d].size())
      throw input_error(where + ": \"" + key + "\" must mirror the label table's shape");
    return block[d];
  };

  auto s_table = std::make_shared<std::map<uint64_t, SparseVector>>();
  for (uint32_t d = 0; d <= data.max_degree; ++d) {
    if (!labels[d].is_array()) throw input_error(where + ": label rows are arrays");
    std::vector<std::string> lab;
    std::vector<SparseTensor> del;
    std::vector<FlatRep> fl;
    const Json& del_row = degree_block(delta, "delta", d);
    const Json& ant_row = degree_block(antipode, "antipode", d);
    const Json& flat_row = degree_block(flat, "flat", d);
    for (uint32_t o = 0; o < labels[d].size(); ++o) {
      if (!labels[d][o].is_string()) throw input_error(where + ": labels are strings");
      lab.push_back(labels[d][o].get<std::string>());
      del.push_back(terms_from_json({sp, sp, 0, 0}, f, del_row[o], where + ".delta"));
      (*s_table)[BasisIndex{d, o}.pack()] =
          vec_from_json(sp, f, ant_row[o], where + ".antipode");
      fl.push_back(flat_from_json(f, flat_row[o], where + ".flat"));
    }
    data.labels.push_back(std::move(lab));
    data.delta.push_back(std::move(del));
    data.flat.push_back(std::move(fl));
  }

  const Json& counit = need(j, "counit", where);
  if (!counit.is_array() || counit.size() != data.labels[0].size())
    throw input_error(where + ": \"counit\" needs one value per degree-0 element");
  for (const Json& c : counit) data.counit0.push_back(scalar_from_json(f, c, where + ".counit"));
  data.unit = vec_from_json(sp, f, need(j, "unit", where), where + ".unit");

  auto mu_table = std::make_shared<std::map<std::pair<uint64_t, uint64_t>, SparseVector>>();
  const Json& mu = need(j, "mu", where);
  if (!mu.is_array()) throw input_error(where + ": \"mu\" must be an array");
  for (const Json& e : mu) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
      throw input_error(where + ".mu: expected [x, y, product]");
    const BasisIndex x = index_from_str(e[0].get<std::string>(), where + ".mu");
    const BasisIndex y = index_from_str(e[1].get<std::string>(), where + ".mu");
    (*mu_table)[{x.pack(), y.pack()}] = vec_from_json(sp, f, e[2], where + ".mu");
  }
  const uint32_t budget = data.max_degree;
  data.mu = [mu_table, sp, budget](BasisIndex x, BasisIndex y) -> SparseVector {
    if (uint64_t(x.degree) + y.degree > budget)
      throw budget_error("product of degrees " + std::to_string(x.degree) + " and " +
                         std::to_string(y.degree) + " exceeds the stored budget " +
                         std::to_string(budget));
    auto it = mu_table->find({x.pack(), y.pack()});
    return it == mu_table->end() ? SparseVector(sp) : it->second;
  };
  const std::string ctx = where;
  data.antipode = [s_table, ctx](BasisIndex x) -> SparseVector {
    auto it = s_table->find(x.pack());
    if (it == s_table->end())
      throw input_error(ctx + ": antipode table has no entry for " + index_str(x));
    return it->second;
  };
  return GradedHopfAlgebra(std::move(data));
}

Json bundle_json(const InstanceSpec& spec, const LqtInstance& inst) {
  const GradedHopfAlgebra& d = inst.dcp.d();
  Json cop = Json::array();
  Json r = Json::array();
  for (uint32_t n = 0; n <= inst.r.max_level(); ++n) {
    cop.push_back(Json{{"level", n}, {"terms", terms_json(inst.p.level(n))}});
    r.push_back(Json{{"level", n}, {"terms", terms_json(inst.r.r(n))}});
  }
  return Json{{"format", "qhopf-bundle-v1"},
              {"instance", instance_json(spec)},
              {"dims", Json{{"a", dims_json(inst.dcp.a())},
                            {"h", dims_json(inst.dcp.h())},
                            {"d", dims_json(d)}}},
              {"algebras", Json{{"a", algebra_json(inst.dcp.a())},
                                {"h", algebra_json(inst.dcp.h())}}},
              {"tau", tau_json(inst.dcp.tau(), spec.max_degree)},
              {"copairing", std::move(cop)},
              {"r", std::move(r)}};
}

LoadedBundle load_bundle(const Json& j, const std::string& where) {
  expect_format(j, "qhopf-bundle-v1", where);
  InstanceSpec spec = instance_from_json(need(j, "instance", where), where + ".instance");
  const Json& algebras = need(j, "algebras", where);
  GradedHopfAlgebra a =
      algebra_from_json(spec.field, need(algebras, "a", where), where + ".algebras.a");
  GradedHopfAlgebra h =
      algebra_from_json(spec.field, need(algebras, "h", where), where + ".algebras.h");
  if (a.max_degree() != spec.max_degree || h.max_degree() != spec.max_degree)
    throw input_error(where + ": factor budgets disagree with the instance's max_degree");
  SkewPairing tau(h, a);
  Copairing p = dual_basis_copairing(tau, spec.level);
  const Json& cop = need(j, "copairing", where);
  if (!cop.is_array() || cop.size() != size_t(spec.level) + 1)
    throw input_error(where + ": \"copairing\" needs levels 0.." + std::to_string(spec.level));
  for (uint32_t n = 0; n <= spec.level; ++n)
    p = p.with_level(n, terms_from_json({h.space(), a.space(), 0, 0}, spec.field,
                                        need(cop[n], "terms", where),
                                        where + ".copairing[" + std::to_string(n) + "]"));
  DoubleCrossProduct dcp = double_cross_product(a, h, tau, spec.name);
  LqtStructure r = build_r(dcp, p, spec.r_unit);
  LqtInstance inst{spec.kind, std::move(dcp), std::move(p), std::move(r)};
  return LoadedBundle{std::move(spec), std::move(inst), j};
}

LoadedBundle load_bundle_file(const std::string& path) {
  return load_bundle(load_json_file(path), path);
}

Report verify_bundle_tables(const LoadedBundle& b) {
  Report rep;
  rep.subject = "bundle[" + b.spec.name + "]";
  const std::string where = "bundle";
  const Field& f = b.spec.field;
  const GradedHopfAlgebra& ha = b.inst.dcp.h();
  const GradedHopfAlgebra& aa = b.inst.dcp.a();

  {
    CaseCounter c;
    const Json& dims = need(b.stored, "dims", where);
    const std::pair<const char*, const GradedHopfAlgebra*> sides[] = {
        {"a", &aa}, {"h", &ha}, {"d", &b.inst.dcp.d()}};
    for (const auto& [key, alg] : sides) {
      const Json& row = need(dims, key, where + ".dims");
      for (uint32_t d = 0; d <= alg->max_degree(); ++d) {
        ++c.cases;
        const uint32_t stored =
            (row.is_array() && d < row.size()) ? as_uint(row[d], where + ".dims") : 0;
        if (stored != alg->dim(d))
          c.fail(std::string(key) + " degree " + std::to_string(d) + ": stored " +
                 std::to_string(stored) + ", actual " + std::to_string(alg->dim(d)));
      }
    }
    c.commit(rep, "dims-table");
  }

  {
    CaseCounter c;
    std::map<std::pair<uint64_t, uint64_t>, Scalar> stored;
    const Json& tau = need(b.stored, "tau", where);
    if (!tau.is_array()) throw input_error(where + ": \"tau\" must be an array");
    for (const Json& e : tau) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
        throw input_error(where + ".tau: expected [y, x, value]");
      stored[{index_from_str(e[0].get<std::string>(), where + ".tau").pack(),
              index_from_str(e[1].get<std::string>(), where + ".tau").pack()}] =
          scalar_from_json(f, e[2], where + ".tau");
    }
    for (uint32_t d = 0; d <= b.spec.max_degree; ++d)
      for (uint32_t yo = 0; yo < ha.dim(d); ++yo)
        for (uint32_t xo = 0; xo < aa.dim(d); ++xo) {
          ++c.cases;
          const BasisIndex y{d, yo}, x{d, xo};
          const Scalar actual = b.inst.dcp.tau().eval(y, x);
          auto it = stored.find({y.pack(), x.pack()});
          const Scalar file_v = it == stored.end() ? Scalar::zero(f) : it->second;
          if (!(actual == file_v))
            c.fail("tau(" + show(ha, y) + ", " + show(aa, x) + "): stored " + file_v.to_string() +
                   ", computed " + actual.to_string());
        }
    c.commit(rep, "tau-table");
  }

  {
    // The loaded copairing was injected from the file; a fresh dual basis
    // from the (re-evaluated) pairing is the independent reference.
    CaseCounter c;
    const Copairing fresh = dual_basis_copairing(b.inst.dcp.tau(), b.spec.level);
    for (uint32_t n = 0; n <= b.spec.level; ++n) {
      ++c.cases;
      if (!(b.inst.p.level(n) == fresh.level(n)))
        c.fail("level " + std::to_string(n) + " differs from the dual basis of the pairing");
    }
    c.commit(rep, "copairing-table");
  }

  {
    CaseCounter c;
    const SpaceId dsp = b.inst.dcp.d().space();
    const Json& rj = need(b.stored, "r", where);
    if (!rj.is_array() || rj.size() != size_t(b.spec.level) + 1)
      throw input_error(where + ": \"r\" needs levels 0.." + std::to_string(b.spec.level));
    for (uint32_t n = 0; n <= b.spec.level; ++n) {
      ++c.cases;
      const SparseTensor stored =
          terms_from_json({dsp, dsp, 0, 0}, f, need(rj[n], "terms", where),
                          where + ".r[" + std::to_string(n) + "]");
      if (!(stored == b.inst.r.r(n)))
        c.fail("level " + std::to_string(n) +
               " differs from the tower rebuilt from the stored copairing");
    }
    c.commit(rep, "r-table");
  }
  return rep;
}

}  // namespace qhopf
