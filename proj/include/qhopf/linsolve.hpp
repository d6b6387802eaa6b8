#pragma once

// Exact dense linear algebra: reduced row echelon form with an optional
// tracked transform, matrix inverse, right-kernel bases, and a sparse
// equation-system front end. Everything is field-exact; there is no
// tolerance anywhere.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qhopf/field.hpp"

namespace qhopf {

class DenseMatrix {
 public:
  DenseMatrix(const Field& f, size_t rows, size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  static DenseMatrix identity(const Field& f, size_t n);
  DenseMatrix operator*(const DenseMatrix& o) const;
  bool operator==(const DenseMatrix& o) const;

 private:
  Field field_;
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  DenseMatrix mat;                 // the RREF
  std::vector<size_t> pivot_cols;  // ascending
  // transform * input == mat; identity-sized iff tracking was requested,
  // otherwise a 0x0 placeholder.
  DenseMatrix transform;
  size_t rank() const { return pivot_cols.size(); }
};

RrefResult rref(DenseMatrix m, bool track_transform = false);

// nullopt when singular (or non-square: input_error).
std::optional<DenseMatrix> matrix_inverse(const DenseMatrix& m);

// Rows of the result form an echelonized basis of {v : m v = 0}, one row per
// free column of m, ordered by that free column; entry at its free column
// is 1 and entries at other free columns are 0 (so membership coordinates
// can be read off the free-column values).
DenseMatrix kernel_basis(const DenseMatrix& m);

// A linear system over unknowns addressed by opaque uint64 keys.
struct LinearSystem {
  Field field;
  // row: unknown key -> coefficient; paired with the right-hand side.
  std::vector<std::pair<std::map<uint64_t, Scalar>, Scalar>> equations;
};

struct LinearSolveResult {
  bool feasible = false;
  // One solution with every free unknown set to zero. Empty when infeasible.
  std::map<uint64_t, Scalar> solution;
  // When infeasible: index of one original equation involved in the
  // contradictory combination.
  size_t inconsistent_equation = 0;
};

// Distinguishes "no solution" (feasible = false) from malformed input
// (input_error: mismatched scalar fields, empty equation set).
LinearSolveResult solve_linear(const LinearSystem& sys);

}  // namespace qhopf
