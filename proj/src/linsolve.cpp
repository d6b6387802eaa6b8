#include "qhopf/linsolve.hpp"

#include <algorithm>

#include "qhopf/errors.hpp"

namespace qhopf {

DenseMatrix DenseMatrix::identity(const Field& f, size_t n) {
  DenseMatrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw input_error("linsolve: matrix product shape mismatch");
  DenseMatrix out(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  return a_ == o.a_;
}

RrefResult rref(DenseMatrix m, bool track_transform) {
  const Field f = m.field();
  const size_t rows = m.rows(), cols = m.cols();
  DenseMatrix t = track_transform ? DenseMatrix::identity(f, rows) : DenseMatrix(f, 0, 0);
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = rows;
    for (size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr == rows) continue;
    if (pr != r) {
      for (size_t j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
      if (track_transform)
        for (size_t j = 0; j < rows; ++j) std::swap(t.at(pr, j), t.at(r, j));
    }
    Scalar inv = m.at(r, c).inverse();
    for (size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    if (track_transform)
      for (size_t j = 0; j < rows; ++j) t.at(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (size_t j = c; j < cols; ++j) m.at(i, j) -= factor * m.at(r, j);
      if (track_transform)
        for (size_t j = 0; j < rows; ++j) t.at(i, j) -= factor * t.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots), std::move(t)};
}

std::optional<DenseMatrix> matrix_inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("linsolve: inverse of a non-square matrix");
  RrefResult r = rref(m, /*track_transform=*/true);
  if (r.rank() < m.rows()) return std::nullopt;
  return r.transform;
}

DenseMatrix kernel_basis(const DenseMatrix& m) {
  RrefResult r = rref(m);
  const size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatrix out(m.field(), free_cols.size(), cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    out.at(k, fc) = Scalar::one(m.field());
    for (size_t i = 0; i < r.rank(); ++i)
      out.at(k, r.pivot_cols[i]) = -r.mat.at(i, fc);
  }
  return out;
}

LinearSolveResult solve_linear(const LinearSystem& sys) {
  if (sys.equations.empty()) throw input_error("linsolve: empty equation system");
  std::vector<uint64_t> keys;
  for (const auto& [row, rhs] : sys.equations) {
    if (!(rhs.field() == sys.field))
      throw input_error("linsolve: right-hand side field mismatch");
    for (const auto& [k, c] : row) {
      if (!(c.field() == sys.field)) throw input_error("linsolve: coefficient field mismatch");
      keys.push_back(k);
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::map<uint64_t, size_t> col_of;
  for (size_t i = 0; i < keys.size(); ++i) col_of[keys[i]] = i;

  const size_t rows = sys.equations.size(), ncols = keys.size();
  // Augmented [A | b]; elimination pivots only on the A part.
  DenseMatrix m(sys.field, rows, ncols + 1);
  for (size_t i = 0; i < rows; ++i) {
    for (const auto& [k, c] : sys.equations[i].first) m.at(i, col_of[k]) = c;
    m.at(i, ncols) = sys.equations[i].second;
  }
  DenseMatrix t = DenseMatrix::identity(sys.field, rows);
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows; ++c) {
    size_t pr = rows;
    for (size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr == rows) continue;
    if (pr != r)
      for (size_t j = 0; j <= ncols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    if (pr != r)
      for (size_t j = 0; j < rows; ++j) std::swap(t.at(pr, j), t.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (size_t j = c; j <= ncols; ++j) m.at(r, j) *= inv;
    for (size_t j = 0; j < rows; ++j) t.at(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (size_t j = c; j <= ncols; ++j) m.at(i, j) -= factor * m.at(r, j);
      for (size_t j = 0; j < rows; ++j) t.at(i, j) -= factor * t.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }

  LinearSolveResult res;
  for (size_t i = r; i < rows; ++i) {
    if (m.at(i, ncols).is_zero()) continue;
    // 0 = nonzero: pick the latest original equation in the combination.
    res.feasible = false;
    res.inconsistent_equation = 0;
    for (size_t j = rows; j-- > 0;)
      if (!t.at(i, j).is_zero()) {
        res.inconsistent_equation = j;
        break;
      }
    return res;
  }
  res.feasible = true;
  for (size_t i = 0; i < pivots.size(); ++i) {
    const Scalar& v = m.at(i, ncols);
    if (!v.is_zero()) res.solution[keys[pivots[i]]] = v;
  }
  return res;
}

}  // namespace qhopf
