#include "qhopf/module_io.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

Json module_json(const FiniteCycleModule& m) {
  Json labels = Json::array();
  for (const std::string& l : m.labels) labels.push_back(l);
  Json bounds = Json::array();
  for (uint32_t b : m.cycle_bound) bounds.push_back(b);
  Json action = Json::array();
  for (const auto& [key, mat] : m.action)
    action.push_back(Json{{"element", index_str(BasisIndex::unpack(key))},
                          {"matrix", matrix_json(mat)}});
  Json out{{"format", "qhopf-module-v1"},
           {"name", m.name},
           {"dim", m.dim},
           {"labels", std::move(labels)},
           {"max_action_degree", m.max_action_degree},
           {"degree0_only", m.degree0_only},
           {"cycle_bound", std::move(bounds)}};
  if (m.grading) {
    Json gr = Json::array();
    for (uint32_t g : *m.grading) gr.push_back(g);
    out["grading"] = std::move(gr);
  }
  out["action"] = std::move(action);
  return out;
}

FiniteCycleModule module_from_json(const GradedHopfAlgebra& d, const Json& j,
                                   const std::string& where) {
  expect_format(j, "qhopf-module-v1", where);
  FiniteCycleModule m;
  m.name = need_string(j, "name", where);
  m.field = d.field();
  m.dspace = d.space();
  m.dim = need_uint(j, "dim", where);
  m.max_action_degree = need_uint(j, "max_action_degree", where);
  const Json& flag = need(j, "degree0_only", where);
  if (!flag.is_boolean()) throw input_error(where + ": \"degree0_only\" must be a boolean");
  m.degree0_only = flag.get<bool>();

  const Json& labels = need(j, "labels", where);
  if (!labels.is_array() || labels.size() != m.dim)
    throw input_error(where + ": \"labels\" needs one string per carrier vector");
  for (const Json& l : labels) {
    if (!l.is_string()) throw input_error(where + ": labels are strings");
    m.labels.push_back(l.get<std::string>());
  }
  const Json& bounds = need(j, "cycle_bound", where);
  if (!bounds.is_array() || bounds.size() != m.dim)
    throw input_error(where + ": \"cycle_bound\" needs one value per carrier vector");
  for (const Json& b : bounds) m.cycle_bound.push_back(as_uint(b, where + ".cycle_bound"));
  if (j.contains("grading")) {
    const Json& gr = j["grading"];
    if (!gr.is_array() || gr.size() != m.dim)
      throw input_error(where + ": \"grading\" needs one value per carrier vector");
    std::vector<uint32_t> grading;
    for (const Json& g : gr) grading.push_back(as_uint(g, where + ".grading"));
    m.grading = std::move(grading);
  }

  const Json& action = need(j, "action", where);
  if (!action.is_array()) throw input_error(where + ": \"action\" must be an array");
  for (const Json& e : action) {
    const BasisIndex key =
        index_from_str(need_string(e, "element", where + ".action"), where + ".action");
    DenseMatrix mat = matrix_from_json(d.field(), need(e, "matrix", where + ".action"),
                                       where + ".action[" + index_str(key) + "]");
    if (!m.action.emplace(key.pack(), std::move(mat)).second)
      throw input_error(where + ".action: duplicate entry for " + index_str(key));
  }
  return m;
}

FiniteCycleModule load_module_file(const GradedHopfAlgebra& d, const std::string& path) {
  return module_from_json(d, load_json_file(path), path);
}

Json braiding_json(const BraidingOperator& c, const FiniteCycleModule& u,
                   const FiniteCycleModule& v) {
  Json basis_u = Json::array(), basis_v = Json::array();
  for (const std::string& l : u.labels) basis_u.push_back(l);
  for (const std::string& l : v.labels) basis_v.push_back(l);
  return Json{{"format", "qhopf-braiding-v1"},
              {"source", c.source},
              {"level", c.level},
              {"dim_u", c.dim_u},
              {"dim_v", c.dim_v},
              {"basis_u", std::move(basis_u)},
              {"basis_v", std::move(basis_v)},
              {"matrix", matrix_json(c.mat)},
              {"inverse", matrix_json(c.inv)}};
}

Json yd_json(const YdStructure& yd) {
  Json levels = Json::array();
  for (uint32_t l : yd.level) levels.push_back(l);
  Json columns = Json::array();
  for (uint32_t x = 0; x < yd.coaction.size(); ++x) {
    Json col = Json::array();
    for (const auto& [key, c] : yd.coaction[x])
      col.push_back(Json::array(
          {index_str(BasisIndex::unpack(key.first)), key.second, scalar_json(c)}));
    columns.push_back(std::move(col));
  }
  return Json{{"format", "qhopf-yd-v1"},
              {"module", yd.m.name},
              {"level", std::move(levels)},
              {"coaction", std::move(columns)}};
}

}  // namespace qhopf
