#include "qhopf/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based; count line breaks up to (not including) it.
    size_t line = 1, col = 1;
    const size_t stop = e.byte == 0 ? 0 : std::min(text.size(), size_t(e.byte) - 1);
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw input_error(where + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw input_error("cannot write " + path);
  out << dump_canonical(j);
  if (!out) throw input_error("write failed: " + path);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw input_error(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw input_error(where + ": missing key \"" + key + "\"");
  return *it;
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_string()) throw input_error(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

uint32_t as_uint(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    if (j.get<uint64_t>() <= 0xffffffffull) return uint32_t(j.get<uint64_t>());
  } else if (j.is_number_integer()) {
    const int64_t v = j.get<int64_t>();
    if (v >= 0 && v <= 0xffffffffll) return uint32_t(v);
  }
  throw input_error(where + ": expected a small non-negative integer");
}

uint32_t need_uint(const Json& j, const char* key, const std::string& where) {
  return as_uint(need(j, key, where), where + ".\"" + key + "\"");
}

void expect_format(const Json& j, const std::string& tag, const std::string& where) {
  if (need_string(j, "format", where) != tag)
    throw input_error(where + ": format tag is not \"" + tag + "\"");
}

Json field_json(const Field& f) {
  if (f.kind == FieldKind::Rational) return Json("rational");
  return Json{{"prime", f.p}};
}

Field field_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "rational") return Field::rational();
    throw input_error(where + ": unknown field \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.contains("prime")) return Field::prime(as_uint(j["prime"], where));
  throw input_error(where + ": field must be \"rational\" or {\"prime\": p}");
}

Json scalar_json(const Scalar& c) { return Json(c.to_json_string()); }

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where) {
  if (!j.is_string()) throw input_error(where + ": coefficients are strings");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const input_error& e) {
    throw input_error(where + ": " + e.what());
  }
}

std::string index_str(BasisIndex i) {
  return std::to_string(i.degree) + ":" + std::to_string(i.ordinal);
}

BasisIndex index_from_str(const std::string& s, const std::string& where) {
  const size_t sep = s.find(':');
  if (sep == std::string::npos || sep == 0 || sep + 1 == s.size())
    throw input_error(where + ": basis index must look like \"degree:ordinal\", got \"" + s + "\"");
  try {
    const unsigned long d = std::stoul(s.substr(0, sep));
    const unsigned long o = std::stoul(s.substr(sep + 1));
    if (d > 0xfffffffful || o > 0xfffffffful) throw std::out_of_range("");
    return BasisIndex{uint32_t(d), uint32_t(o)};
  } catch (const std::exception&) {
    throw input_error(where + ": bad basis index \"" + s + "\"");
  }
}

Json vec_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v.coeffs) out.push_back(Json::array({index_str(i), scalar_json(c)}));
  return out;
}

SparseVector vec_from_json(SpaceId space, const Field& f, const Json& j,
                           const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": expected an array of [index, coeff] pairs");
  SparseVector v(space);
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string())
      throw input_error(where + ": expected [\"degree:ordinal\", coeff]");
    v.add(index_from_str(e[0].get<std::string>(), where), scalar_from_json(f, e[1], where));
  }
  return v;
}

Json tensor_json(const SparseTensor& t) {
  Json terms = Json::array();
  for (const auto& [k, c] : t.coeffs) {
    Json row = Json::array();
    for (uint8_t s = 0; s < t.arity; ++s) row.push_back(index_str(k.idx[s]));
    row.push_back(scalar_json(c));
    terms.push_back(std::move(row));
  }
  return Json{{"terms", std::move(terms)}};
}

SparseTensor tensor_from_json(uint8_t arity, const std::array<SpaceId, 4>& spaces, const Field& f,
                              const Json& j, const std::string& where) {
  SparseTensor t;
  t.arity = arity;
  t.spaces = spaces;
  const Json& terms = need(j, "terms", where);
  if (!terms.is_array()) throw input_error(where + ": \"terms\" must be an array");
  for (const Json& row : terms) {
    if (!row.is_array() || row.size() != size_t(arity) + 1)
      throw input_error(where + ": each term needs " + std::to_string(arity) +
                        " indices and a coefficient");
    TensorKey k;
    for (uint8_t s = 0; s < arity; ++s) {
      if (!row[s].is_string()) throw input_error(where + ": tensor indices are strings");
      k.idx[s] = index_from_str(row[s].get<std::string>(), where);
    }
    t.add(k, scalar_from_json(f, row[arity], where));
  }
  return t;
}

Json matrix_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix matrix_from_json(const Field& f, const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw input_error(where + ": expected a non-empty array of rows");
  DenseMatrix m(f, j.size(), j[0].size());
  for (size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols())
      throw input_error(where + ": row " + std::to_string(r) + " has the wrong length");
    for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = scalar_from_json(f, j[r][c], where);
  }
  return m;
}

Json report_json(const Report& r) {
  // The console summary shouts "FAIL"; the file format stays lowercase.
  auto slug = [](CheckStatus s) {
    std::string t = to_string(s);
    for (char& ch : t) ch = char(std::tolower(static_cast<unsigned char>(ch)));
    return t;
  };
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json e{{"name", c.name}, {"status", slug(c.status)}, {"cases", c.cases}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  Json info = Json::object();
  for (const auto& [k, v] : r.info) info[k] = v;
  return Json{{"format", "qhopf-report-v1"},
              {"subject", r.subject},
              {"all_passed", r.all_passed()},
              {"checks", std::move(checks)},
              {"info", std::move(info)}};
}

}  // namespace qhopf
