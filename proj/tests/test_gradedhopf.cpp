// Graded Hopf algebra engine: free (tensor) and cofree (cotensor)
// constructions over a Hopf bimodule, axiom verification, antipodes,
// opposite coalgebras, and the flat-word duality pairing.
//
// Independent oracles used below, written before the implementations they
// pin: Pascal-triangle binomials for the one-loop cotensor product, path
// composition (from the quiver module) for the tensor product, explicit
// translation formulas for actions by degree-0 elements, and hand-derived
// two-letter shuffle products including the sign-character twist.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/bimodule.hpp"
#include "qhopf/cotensor_hopf.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/graded_hopf.hpp"
#include "qhopf/quiver_hopf.hpp"
#include "qhopf/tensor_hopf.hpp"

using namespace qhopf;

namespace {

// Oracle: binomial coefficients by the Pascal recursion, nothing shared with
// the library's arithmetic beyond Scalar construction at the end.
int64_t binom(int m, int k) {
  if (k < 0 || k > m) return 0;
  std::vector<std::vector<int64_t>> t(m + 1);
  for (int r = 0; r <= m; ++r) {
    t[r].assign(r + 1, 1);
    for (int c = 1; c < r; ++c) t[r][c] = t[r - 1][c - 1] + t[r - 1][c];
  }
  return t[m][k];
}

CoveringQuiver one_loop() {
  return CoveringQuiver(FiniteGroup::cyclic(1), {{0, 1}});
}

CoveringQuiver two_vertex_loops() {
  return CoveringQuiver(FiniteGroup::cyclic(2), {{0, 3}});
}

std::vector<std::vector<Character>> sign_chars(const Field& f) {
  const Character triv{Scalar::one(f), Scalar::one(f)};
  const Character sign{Scalar::one(f), -Scalar::one(f)};
  return {{triv, triv, sign}};
}

// Ordinal of a path among the degree-n basis (paths in enumeration order).
uint32_t path_ordinal(const CoveringQuiver& q, const Path& p) {
  const auto paths = q.enumerate_paths(p.length());
  for (uint32_t k = 0; k < paths.size(); ++k)
    if (paths[k] == p) return k;
  throw std::runtime_error("path not found");
}

void require_all_passed(const Report& r) {
  INFO(r.summary());
  CHECK(r.all_passed());
}

}  // namespace

TEST_CASE("one-loop tensor algebra concatenates; cotensor algebra is binomial") {
  const Field f = Field::rational();
  const CoveringQuiver q = one_loop();
  const uint32_t N = 4;
  GradedHopfAlgebra a = quiver_hopf(QuiverHopfKind::PathAlgebra, f, q, {}, N, "t1.kQa.loop");
  GradedHopfAlgebra c = quiver_hopf(QuiverHopfKind::PathCoalgebra, f, q, {}, N, "t1.kQc.loop");
  for (uint32_t n = 0; n <= N; ++n) {
    CHECK(a.dim(n) == 1);
    CHECK(c.dim(n) == 1);
  }
  for (uint32_t i = 0; i + 0 <= N; ++i)
    for (uint32_t j = 0; i + j <= N; ++j) {
      const SparseVector pa = a.mu(BasisIndex{i, 0}, BasisIndex{j, 0});
      const SparseVector pc = c.mu(BasisIndex{i, 0}, BasisIndex{j, 0});
      SparseVector ea(a.space()), ec(c.space());
      ea.add(BasisIndex{i + j, 0}, Scalar::one(f));
      ec.add(BasisIndex{i + j, 0}, Scalar::of_int(f, binom(i + j, i)));
      CHECK(pa == ea);
      CHECK(pc == ec);
    }
  const BasisIndex deg3{3, 0}, deg2{2, 0};
  CHECK_THROWS_AS(a.mu(deg3, deg2), budget_error);
  require_all_passed(verify_hopf(a));
  require_all_passed(verify_hopf(c));
  // Hand values: S(a^n) = (-1)^n a^n in both truncations.
  for (uint32_t n = 0; n <= N; ++n) {
    SparseVector expect(a.space());
    expect.add(BasisIndex{n, 0}, n % 2 ? -Scalar::one(f) : Scalar::one(f));
    CHECK(a.antipode(BasisIndex{n, 0}) == expect);
    SparseVector expect_c(c.space());
    expect_c.add(BasisIndex{n, 0}, n % 2 ? -Scalar::one(f) : Scalar::one(f));
    CHECK(c.antipode(BasisIndex{n, 0}) == expect_c);
  }
}

TEST_CASE("tensor product of paths is composition-or-zero") {
  const Field f = Field::rational();
  const CoveringQuiver q = two_vertex_loops();
  GradedHopfAlgebra a =
      quiver_hopf(QuiverHopfKind::PathAlgebra, f, q, sign_chars(f), 2, "t2.kQa.z2");
  for (uint32_t i = 0; i <= 2; ++i)
    for (uint32_t j = 0; i + j <= 2; ++j) {
      const auto pi = q.enumerate_paths(i);
      const auto pj = q.enumerate_paths(j);
      for (uint32_t x = 0; x < pi.size(); ++x)
        for (uint32_t y = 0; y < pj.size(); ++y) {
          const SparseVector got = a.mu(BasisIndex{i, x}, BasisIndex{j, y});
          SparseVector expect(a.space());
          if (auto comp = q.compose(pi[x], pj[y]))
            expect.add(BasisIndex{i + j, path_ordinal(q, *comp)}, Scalar::one(f));
          CHECK(got == expect);
        }
    }
}

TEST_CASE("frozen coproduct of a sign-twisted arrow in the path algebra") {
  const Field f = Field::rational();
  const CoveringQuiver q = two_vertex_loops();
  GradedHopfAlgebra a =
      quiver_hopf(QuiverHopfKind::PathAlgebra, f, q, sign_chars(f), 1, "t3.kQa.z2");
  // Arrow ordinal 2 is the third loop at e, the one twisted by the sign
  // character. Left coaction translates it to ordinal 5 (third loop at g);
  // the right coaction picks up the sign there.
  const SparseTensor& d = a.delta(BasisIndex{1, 2});
  SparseTensor expect(a.space(), a.space());
  const Scalar one = Scalar::one(f);
  expect.add(TensorKey::of(BasisIndex{0, 0}, BasisIndex{1, 2}), one);
  expect.add(TensorKey::of(BasisIndex{0, 1}, BasisIndex{1, 5}), one);
  expect.add(TensorKey::of(BasisIndex{1, 2}, BasisIndex{0, 0}), one);
  expect.add(TensorKey::of(BasisIndex{1, 5}, BasisIndex{0, 1}), -one);
  CHECK(d == expect);
}

TEST_CASE("degree-0 elements act on cotensor paths by translation") {
  const Field f = Field::rational();
  const CoveringQuiver q = two_vertex_loops();
  const FiniteGroup& g = q.group();
  GradedHopfAlgebra c =
      quiver_hopf(QuiverHopfKind::PathCoalgebra, f, q, sign_chars(f), 2, "t4.kQc.z2");
  for (uint32_t n = 1; n <= 2; ++n) {
    const auto paths = q.enumerate_paths(n);
    for (uint32_t go = 0; go < g.order(); ++go)
      for (uint32_t k = 0; k < paths.size(); ++k) {
        // Left: every arrow (x, c, i) moves to (g x, c, i), coefficient 1.
        Path lp{g.mul(go, paths[k].source), {}};
        for (uint32_t aid : paths[k].arrows) {
          const Arrow& ar = q.arrow(aid);
          lp.arrows.push_back(q.arrow_id(g.mul(go, ar.source), ar.class_elt, ar.copy));
        }
        SparseVector expect_l(c.space());
        expect_l.add(BasisIndex{n, path_ordinal(q, lp)}, Scalar::one(f));
        CHECK(c.mu(BasisIndex{0, go}, BasisIndex{n, k}) == expect_l);
        // Right: every arrow (x, c, i) moves to (x g, g^-1 c g, i) and
        // multiplies the copy's character value at g.
        Path rp{g.mul(paths[k].source, go), {}};
        Scalar coeff = Scalar::one(f);
        for (uint32_t aid : paths[k].arrows) {
          const Arrow& ar = q.arrow(aid);
          const uint32_t moved_elt = g.conjugate(g.inverse(go), ar.class_elt);
          rp.arrows.push_back(q.arrow_id(g.mul(ar.source, go), moved_elt, ar.copy));
          if (ar.copy == 2 && go == 1) coeff = -coeff;  // the sign character
        }
        SparseVector expect_r(c.space());
        expect_r.add(BasisIndex{n, path_ordinal(q, rp)}, coeff);
        CHECK(c.mu(BasisIndex{n, k}, BasisIndex{0, go}) == expect_r);
      }
  }
}

TEST_CASE("hand-derived two-letter shuffle with the sign twist") {
  const Field f = Field::rational();
  const CoveringQuiver q = two_vertex_loops();
  GradedHopfAlgebra c =
      quiver_hopf(QuiverHopfKind::PathCoalgebra, f, q, sign_chars(f), 2, "t5.kQc.z2");
  // For degree-1 letters u, v the product is
  //   (u <- t(v)) (x) (s(u) -> v)  +  (t(u) -> v) (x) (u <- s(v)),
  // where <- is the (character-twisted) right translation and -> the left
  // translation. With u = third loop at e (sign copy) and v = first loop at
  // g, both translations of u are by g, so each term picks up one sign:
  //   u v = -(a3:g|a1:g) - (a1:g|a3:g).
  const auto paths = q.enumerate_paths(2);
  auto find_label = [&](const std::string& l) {
    for (uint32_t k = 0; k < paths.size(); ++k)
      if (q.path_label(paths[k]) == l) return k;
    throw std::runtime_error("no such path");
  };
  const SparseVector got = c.mu(BasisIndex{1, 2}, BasisIndex{1, 3});
  SparseVector expect(c.space());
  expect.add(BasisIndex{2, find_label("a3:g>g|a1:g>g")}, -Scalar::one(f));
  expect.add(BasisIndex{2, find_label("a1:g>g|a3:g>g")}, -Scalar::one(f));
  CHECK(got == expect);
}

TEST_CASE("full axiom suites for the four quiver Hopf algebras") {
  const Field f = Field::rational();
  const CoveringQuiver q = two_vertex_loops();
  const auto chars = sign_chars(f);
  for (QuiverHopfKind kind :
       {QuiverHopfKind::PathAlgebra, QuiverHopfKind::PathCoalgebra,
        QuiverHopfKind::SemipathAlgebra, QuiverHopfKind::SemipathCoalgebra}) {
    GradedHopfAlgebra h =
        quiver_hopf(kind, f, q, chars, 2, "t6." + quiver_hopf_kind_name(kind) + ".z2");
    const std::vector<uint32_t> dims{2, 6, 18};
    for (uint32_t n = 0; n <= 2; ++n) {
      INFO(quiver_hopf_kind_name(kind) << " degree " << n);
      CHECK(h.dim(n) == dims[n]);
    }
    require_all_passed(verify_hopf(h));
  }
}

TEST_CASE("axiom suite over a prime field") {
  const Field f5 = Field::prime(5);
  const CoveringQuiver q = two_vertex_loops();
  GradedHopfAlgebra a =
      quiver_hopf(QuiverHopfKind::PathAlgebra, f5, q, sign_chars(f5), 2, "t7.kQa.z2.f5");
  GradedHopfAlgebra c =
      quiver_hopf(QuiverHopfKind::PathCoalgebra, f5, q, sign_chars(f5), 2, "t7.kQc.z2.f5");
  require_all_passed(verify_hopf(a));
  require_all_passed(verify_hopf(c));
}

TEST_CASE("axiom suite on a nonabelian quiver") {
  const Field f = Field::rational();
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  // Transposition class, multiplicity 1.
  const CoveringQuiver q(s3, {{1, 1}});
  GradedHopfAlgebra c = quiver_hopf(QuiverHopfKind::PathCoalgebra, f, q, {}, 1, "t8.kQc.s3");
  GradedHopfAlgebra a = quiver_hopf(QuiverHopfKind::PathAlgebra, f, q, {}, 1, "t8.kQa.s3");
  CHECK(c.dim(1) == 18);
  require_all_passed(verify_hopf(c));
  require_all_passed(verify_hopf(a));
}

TEST_CASE("opposite coalgebra flips the coproduct and inverts the antipode") {
  const Field f = Field::rational();
  const CoveringQuiver q = two_vertex_loops();
  GradedHopfAlgebra a =
      quiver_hopf(QuiverHopfKind::PathAlgebra, f, q, sign_chars(f), 2, "t9.kQa.z2");
  GradedHopfAlgebra ac = opposite_coalgebra(a);
  CHECK(ac.space() == a.space());
  CHECK(ac.name() == "t9.kQa.z2^cop");
  for (uint32_t n = 0; n <= 2; ++n)
    for (uint32_t k = 0; k < a.dim(n); ++k) {
      const BasisIndex x{n, k};
      // delta_cop = flip of delta.
      SparseTensor flip(a.space(), a.space());
      for (const auto& [key, v] : a.delta(x).coeffs)
        flip.add(TensorKey::of(key.idx[1], key.idx[0]), v);
      CHECK(ac.delta(x) == flip);
      // S_cop = S^-1, and products agree.
      CHECK(ac.antipode(x) == a.antipode_inv(x));
      CHECK(ac.antipode(a.antipode(x)) == a.basis_vec(x));
    }
  CHECK(a.mu(BasisIndex{1, 0}, BasisIndex{1, 1}) == ac.mu(BasisIndex{1, 0}, BasisIndex{1, 1}));
  require_all_passed(verify_hopf(ac));
}

TEST_CASE("flat words realize paths and the graded duality pairing") {
  const Field f = Field::rational();
  const CoveringQuiver q = two_vertex_loops();
  GradedHopfAlgebra a =
      quiver_hopf(QuiverHopfKind::PathAlgebra, f, q, sign_chars(f), 2, "t10.kQa.z2");
  GradedHopfAlgebra c =
      quiver_hopf(QuiverHopfKind::PathCoalgebra, f, q, sign_chars(f), 2, "t10.kQc.z2");
  REQUIRE(a.has_flat());
  REQUIRE(c.has_flat());
  // Paths flatten to the single word of their arrow ordinals, last arrow
  // leftmost, on both sides; the pairing matrix is therefore the identity.
  const auto paths = q.enumerate_paths(2);
  for (uint32_t k = 0; k < paths.size(); ++k) {
    const FlatRep& fa = a.flat_rep(BasisIndex{2, k});
    const FlatRep& fc = c.flat_rep(BasisIndex{2, k});
    REQUIRE(fa.size() == 1);
    CHECK(fa == fc);
    const LetterWord& w = fa.begin()->first;
    const LetterWord expect{paths[k].arrows[1], paths[k].arrows[0]};
    CHECK(w == expect);
  }
  // Adjointness of the pairing: <x y, q> = sum <x, q_1> <y, q_2> over the cut
  // coproduct, checked for all basis triples with total degree <= 2.
  auto pair = [&](BasisIndex x, BasisIndex y) -> Scalar {
    Scalar acc = Scalar::zero(f);
    if (x.degree != y.degree) return acc;
    const FlatRep& fx = a.flat_rep(x);
    const FlatRep& fy = c.flat_rep(y);
    for (const auto& [w, cx] : fx)
      if (auto it = fy.find(w); it != fy.end()) acc += cx * it->second;
    return acc;
  };
  for (uint32_t i = 0; i <= 2; ++i)
    for (uint32_t j = 0; i + j <= 2; ++j)
      for (uint32_t x = 0; x < a.dim(i); ++x)
        for (uint32_t y = 0; y < a.dim(j); ++y) {
          const SparseVector xy = a.mu(BasisIndex{i, x}, BasisIndex{j, y});
          for (uint32_t k = 0; k < c.dim(i + j); ++k) {
            Scalar lhs = Scalar::zero(f);
            for (const auto& [r, v] : xy.coeffs) lhs += pair(r, BasisIndex{i + j, k}) * v;
            Scalar rhs = Scalar::zero(f);
            for (const auto& [key, v] : c.delta(BasisIndex{i + j, k}).coeffs)
              if (key.idx[0].degree == i && key.idx[1].degree == j)
                rhs += pair(BasisIndex{i, x}, key.idx[0]) *
                       pair(BasisIndex{j, y}, key.idx[1]) * v;
            INFO("x=" << a.label(BasisIndex{i, x}) << " y=" << a.label(BasisIndex{j, y})
                      << " q=" << c.label(BasisIndex{i + j, k}));
            CHECK(lhs == rhs);
          }
        }
}

TEST_CASE("construction is deterministic") {
  const Field f = Field::rational();
  const CoveringQuiver q = two_vertex_loops();
  GradedHopfAlgebra c1 =
      quiver_hopf(QuiverHopfKind::PathCoalgebra, f, q, sign_chars(f), 2, "t11.kQc.z2");
  GradedHopfAlgebra c2 =
      quiver_hopf(QuiverHopfKind::PathCoalgebra, f, q, sign_chars(f), 2, "t11.kQc.z2");
  for (uint32_t n = 0; n <= 2; ++n) {
    REQUIRE(c1.dim(n) == c2.dim(n));
    for (uint32_t k = 0; k < c1.dim(n); ++k) {
      CHECK(c1.label(BasisIndex{n, k}) == c2.label(BasisIndex{n, k}));
      CHECK(c1.delta(BasisIndex{n, k}) == c2.delta(BasisIndex{n, k}));
    }
  }
  for (uint32_t x = 0; x < 6; ++x)
    for (uint32_t y = 0; y < 6; ++y)
      CHECK(c1.mu(BasisIndex{1, x}, BasisIndex{1, y}) == c2.mu(BasisIndex{1, x}, BasisIndex{1, y}));
}
