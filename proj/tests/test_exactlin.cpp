#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhopf/field.hpp"
#include "qhopf/linsolve.hpp"
#include "qhopf/sparse.hpp"

using namespace qhopf;

namespace {

// Oracle: multiply matrix by vector the dumb way and compare against the
// right-hand side; a claimed solution must satisfy every equation exactly.
bool satisfies(const LinearSystem& sys, const std::map<uint64_t, Scalar>& sol) {
  for (const auto& [row, rhs] : sys.equations) {
    Scalar acc = Scalar::zero(sys.field);
    for (const auto& [k, c] : row) {
      auto it = sol.find(k);
      if (it != sol.end()) acc += c * it->second;
    }
    if (!(acc == rhs)) return false;
  }
  return true;
}

Scalar rnd_scalar(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  return Scalar::of_int(f, d(rng));
}

}  // namespace

TEST_CASE("rational scalars are canonical and exact") {
  Field q = Field::rational();
  Scalar a = Scalar::of_ratio(q, 2, 4);
  CHECK(a.to_string() == "1/2");
  CHECK(a.to_json_string() == "1/2");
  Scalar b = Scalar::of_ratio(q, -3, -6);
  CHECK(a == b);
  CHECK((a + b).to_string() == "1");
  CHECK((a + b).to_json_string() == "1/1");
  CHECK((a - b).is_zero());
  CHECK((a * Scalar::of_int(q, 2)).is_one());
  CHECK(a.inverse().to_string() == "2");
  CHECK((-Scalar::of_int(q, 0)).is_zero());
  // 1/3 has no finite decimal expansion; exactness means (1/3)*3 == 1.
  Scalar third = Scalar::of_ratio(q, 1, 3);
  CHECK((third * Scalar::of_int(q, 3)).is_one());
}

TEST_CASE("scalar parsing round-trips and rejects junk") {
  Field q = Field::rational();
  for (const char* s : {"0", "5", "-5", "7/3", "-7/3", "10/4"}) {
    Scalar v = Scalar::parse(q, s);
    CHECK(Scalar::parse(q, v.to_json_string()) == v);
    CHECK(Scalar::parse(q, v.to_string()) == v);
  }
  CHECK(Scalar::parse(q, "10/4") == Scalar::of_ratio(q, 5, 2));
  CHECK_THROWS_AS(Scalar::parse(q, ""), input_error);
  CHECK_THROWS_AS(Scalar::parse(q, "x"), input_error);
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), input_error);
  CHECK_THROWS_AS(Scalar::parse(q, "1/"), input_error);
}

TEST_CASE("prime fields: arithmetic, inverses, and rejected moduli") {
  CHECK_THROWS_AS(Field::prime(2), input_error);
  CHECK_THROWS_AS(Field::prime(9), input_error);
  CHECK_THROWS_AS(Field::prime(1), input_error);
  Field f7 = Field::prime(7);
  CHECK(Scalar::of_int(f7, 10).to_string() == "3");
  CHECK(Scalar::of_int(f7, -1).to_string() == "6");
  // Every nonzero residue times its inverse is 1.
  for (long r = 1; r < 7; ++r)
    CHECK((Scalar::of_int(f7, r) * Scalar::of_int(f7, r).inverse()).is_one());
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), input_error);
  CHECK(Scalar::parse(f7, "1/2") == Scalar::of_int(f7, 4));
  CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), input_error);
  // No silent cross-field arithmetic.
  CHECK_THROWS_AS(Scalar::one(f7) + Scalar::one(Field::rational()), input_error);
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937_64 rng(12345);
  for (Field f : {Field::rational(), Field::prime(13)}) {
    for (int i = 0; i < 200; ++i) {
      Scalar a = rnd_scalar(f, rng), b = rnd_scalar(f, rng), c = rnd_scalar(f, rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("sparse vectors accumulate and cancel exactly") {
  Field q = Field::rational();
  SpaceId s = intern_space("test:v");
  SparseVector v(s);
  v.add(BasisIndex{1, 2}, Scalar::of_ratio(q, 1, 2));
  v.add(BasisIndex{1, 2}, Scalar::of_ratio(q, 1, 2));
  v.add(BasisIndex{0, 0}, Scalar::of_int(q, 3));
  CHECK(v.coeffs.at(BasisIndex{1, 2}).is_one());
  v.add(BasisIndex{1, 2}, Scalar::of_int(q, -1));
  CHECK(v.coeffs.count(BasisIndex{1, 2}) == 0);  // exact cancellation removes the entry
  CHECK(v.size() == 1);
  SparseVector w(intern_space("test:w"));
  CHECK_THROWS_AS(v.add_scaled(w, Scalar::one(q)), input_error);
  CHECK(v.truncated(0).size() == 1);
  SparseVector diff = v - v;
  CHECK(diff.is_zero());
}

TEST_CASE("sparse tensors: outer products and slot truncation") {
  Field q = Field::rational();
  SpaceId s = intern_space("test:v");
  SparseVector v(s), w(s);
  v.add(BasisIndex{0, 0}, Scalar::of_int(q, 2));
  v.add(BasisIndex{1, 1}, Scalar::of_int(q, 1));
  w.add(BasisIndex{2, 0}, Scalar::of_int(q, 5));
  SparseTensor t = outer(v, w);
  CHECK(t.size() == 2);
  CHECK(t.coeffs.at(TensorKey::of(BasisIndex{0, 0}, BasisIndex{2, 0})) == Scalar::of_int(q, 10));
  CHECK(t.slot_truncated(0, 0).size() == 1);
  CHECK(t.slot_truncated(1, 1).is_zero());
  CHECK((t - t).is_zero());
}

TEST_CASE("rref: pivots are unit columns and rref is idempotent") {
  Field q = Field::rational();
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    size_t rows = 1 + trial % 6, cols = 1 + (trial * 7) % 8;
    DenseMatrix m(q, rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = rnd_scalar(q, rng);
    RrefResult r = rref(m, true);
    CHECK(r.transform * m == r.mat);
    for (size_t k = 0; k < r.pivot_cols.size(); ++k) {
      for (size_t i = 0; i < rows; ++i) {
        Scalar want = i == k ? Scalar::one(q) : Scalar::zero(q);
        CHECK(r.mat.at(i, r.pivot_cols[k]) == want);
      }
    }
    RrefResult again = rref(r.mat);
    CHECK(again.mat == r.mat);
  }
}

TEST_CASE("matrix inverse: M * inv(M) == I, singular detected") {
  Field q = Field::rational();
  std::mt19937_64 rng(31);
  int invertible_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    size_t n = 1 + trial % 5;
    DenseMatrix m(q, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = rnd_scalar(q, rng);
    auto inv = matrix_inverse(m);
    if (!inv) {
      CHECK(rref(m).rank() < n);
      continue;
    }
    ++invertible_seen;
    CHECK(*inv * m == DenseMatrix::identity(q, n));
    CHECK(m * *inv == DenseMatrix::identity(q, n));
  }
  CHECK(invertible_seen > 5);
  // A matrix with a repeated row is singular.
  DenseMatrix s(q, 2, 2);
  s.at(0, 0) = s.at(1, 0) = Scalar::of_int(q, 3);
  s.at(0, 1) = s.at(1, 1) = Scalar::of_int(q, 4);
  CHECK(!matrix_inverse(s));
}

TEST_CASE("kernel basis: exact annihilation and rank-nullity") {
  std::mt19937_64 rng(99);
  for (Field f : {Field::rational(), Field::prime(11)}) {
    for (int trial = 0; trial < 20; ++trial) {
      size_t rows = 1 + trial % 4, cols = 1 + (trial * 3) % 7;
      DenseMatrix m(f, rows, cols);
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rnd_scalar(f, rng);
      DenseMatrix k = kernel_basis(m);
      CHECK(k.rows() + rref(m).rank() == cols);
      for (size_t r = 0; r < k.rows(); ++r)
        for (size_t i = 0; i < rows; ++i) {
          Scalar acc = Scalar::zero(f);
          for (size_t j = 0; j < cols; ++j) acc += m.at(i, j) * k.at(r, j);
          CHECK(acc.is_zero());
        }
    }
  }
}

TEST_CASE("solve_linear finds planted solutions") {
  std::mt19937_64 rng(2024);
  for (Field f : {Field::rational(), Field::prime(101)}) {
    for (int trial = 0; trial < 20; ++trial) {
      size_t nuk = 1 + trial % 5, neq = 1 + (trial * 5) % 7;
      // Plant x, compute b = A x, ask for any solution, check it satisfies.
      std::map<uint64_t, Scalar> planted;
      for (size_t u = 0; u < nuk; ++u) planted[u * 10 + 3] = rnd_scalar(f, rng);
      LinearSystem sys{f, {}};
      for (size_t e = 0; e < neq; ++e) {
        std::map<uint64_t, Scalar> row;
        Scalar rhs = Scalar::zero(f);
        for (size_t u = 0; u < nuk; ++u) {
          Scalar c = rnd_scalar(f, rng);
          if (c.is_zero()) continue;
          row[u * 10 + 3] = c;
          rhs += c * planted[u * 10 + 3];
        }
        sys.equations.emplace_back(std::move(row), rhs);
      }
      LinearSolveResult res = solve_linear(sys);
      REQUIRE(res.feasible);
      CHECK(satisfies(sys, res.solution));
    }
  }
}

TEST_CASE("solve_linear: infeasibility reported with an equation index") {
  Field q = Field::rational();
  LinearSystem sys{q, {}};
  std::map<uint64_t, Scalar> row{{7, Scalar::of_int(q, 1)}, {9, Scalar::of_int(q, 2)}};
  sys.equations.emplace_back(row, Scalar::of_int(q, 1));
  sys.equations.emplace_back(row, Scalar::of_int(q, 2));  // same row, different rhs
  LinearSolveResult res = solve_linear(sys);
  CHECK(!res.feasible);
  CHECK(res.solution.empty());
  CHECK(res.inconsistent_equation <= 1);
  // Malformed input is an input_error, not infeasibility.
  CHECK_THROWS_AS(solve_linear(LinearSystem{q, {}}), input_error);
  LinearSystem bad{q, {}};
  bad.equations.emplace_back(std::map<uint64_t, Scalar>{{1, Scalar::one(Field::prime(5))}},
                             Scalar::zero(q));
  CHECK_THROWS_AS(solve_linear(bad), input_error);
}

TEST_CASE("solve_linear: underdetermined systems still satisfy exactly") {
  Field q = Field::rational();
  LinearSystem sys{q, {}};
  // x + y = 5 with free y: solution must satisfy, free unknowns default to 0.
  sys.equations.emplace_back(
      std::map<uint64_t, Scalar>{{1, Scalar::one(q)}, {2, Scalar::one(q)}}, Scalar::of_int(q, 5));
  LinearSolveResult res = solve_linear(sys);
  REQUIRE(res.feasible);
  CHECK(satisfies(sys, res.solution));
  CHECK(res.solution.size() == 1);
}
