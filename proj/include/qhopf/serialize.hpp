#pragma once

// JSON plumbing shared by every file format the tool reads or writes.
//
// All documents are UTF-8 JSON; scalars travel as exact strings ("5/1",
// "-3/2", residues as plain digits), basis elements as "degree:ordinal".
// Serialization always walks ordered containers and inserts keys in a fixed
// sequence, so identical inputs dump byte-identically; no floats exist in
// any format. Readers raise input_error with the offending location (file,
// line and column for syntax; a key path for schema violations).

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qhopf/linsolve.hpp"
#include "qhopf/report.hpp"
#include "qhopf/sparse.hpp"

namespace qhopf {

using Json = nlohmann::ordered_json;

// Canonical text form: two-space indent, trailing newline.
std::string dump_canonical(const Json& j);
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
// input_error with "<where>:<line>:<column>" on syntax errors.
Json parse_json_text(const std::string& text, const std::string& where);

// Schema access: input_error naming `where` and the key / expected shape.
const Json& need(const Json& j, const char* key, const std::string& where);
std::string need_string(const Json& j, const char* key, const std::string& where);
uint32_t need_uint(const Json& j, const char* key, const std::string& where);
uint32_t as_uint(const Json& j, const std::string& where);
// Rejects documents whose "format" tag is missing or different.
void expect_format(const Json& j, const std::string& tag, const std::string& where);

Json field_json(const Field& f);
Field field_from_json(const Json& j, const std::string& where);

Json scalar_json(const Scalar& c);
Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where);

std::string index_str(BasisIndex i);
BasisIndex index_from_str(const std::string& s, const std::string& where);

// [["degree:ordinal", "coeff"], ...] in basis order.
Json vec_json(const SparseVector& v);
SparseVector vec_from_json(SpaceId space, const Field& f, const Json& j, const std::string& where);

// {"terms": [["i", "j", ..., "coeff"], ...]} with one index column per slot.
Json tensor_json(const SparseTensor& t);
SparseTensor tensor_from_json(uint8_t arity, const std::array<SpaceId, 4>& spaces, const Field& f,
                              const Json& j, const std::string& where);

// Row-major array of rows of coefficient strings.
Json matrix_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Field& f, const Json& j, const std::string& where);

// {"subject", "checks": [{"name","status","cases","witness"?}...], "info"}.
Json report_json(const Report& r);

}  // namespace qhopf
