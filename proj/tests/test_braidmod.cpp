// Finite-cycle module certificates, the braiding matrices the R family
// induces on them, and the derived coaction.
//
// Independent oracles used below, written before the code they pin: the
// conjugation braiding permutation (image of v_a (x) v_h computed from the
// group table alone), the coaction of the group carrier expanded by hand
// from the level-0 canonical element, and the requirement that extending a
// degree-0 module by zero must break the product relations because twisted
// products of positive-degree elements have degree-0 components.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/braidmod.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/lqt.hpp"

using namespace qhopf;

namespace {

CoveringQuiver two_vertex_loops() { return CoveringQuiver(FiniteGroup::cyclic(2), {{0, 3}}); }

std::vector<std::vector<Character>> sign_chars(const Field& f) {
  const Character triv{Scalar::one(f), Scalar::one(f)};
  const Character sign{Scalar::one(f), -Scalar::one(f)};
  return {{triv, triv, sign}};
}

LqtInstance s3_level0(const Field& f) {
  const CoveringQuiver q(FiniteGroup::symmetric(3), {{0, 1}});
  return build_lqt_instance(DoubleKind::PathDouble, f, q, {}, 0, 0, RUnitVariant::Unit, "bm.s3");
}

LqtInstance z2_sign(const Field& f) {
  return build_lqt_instance(DoubleKind::PathDouble, f, two_vertex_loops(), sign_chars(f), 2, 1,
                            RUnitVariant::Unit, "bm.z2");
}

void require_all_passed(const Report& r) {
  INFO(r.summary());
  CHECK(r.all_passed());
}

const CheckResult& find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check named " + name + " in report " + r.subject);
}

// The conjugation braiding as a permutation matrix built from the group
// table alone: v_a (x) v_h -> v_h (x) v_{h a h^-1}.
DenseMatrix conjugation_braiding_oracle(const Field& f, const FiniteGroup& g) {
  const uint32_t n = g.order();
  DenseMatrix expect(f, n * n, n * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t h = 0; h < n; ++h)
      expect.at(h * n + g.conjugate(h, a), a * n + h) = Scalar::one(f);
  return expect;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix out(m.field(), m.cols(), m.rows());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out.at(c, r) = m.at(r, c);
  return out;
}

// The degree-0 module presented as a module over all of D by zero matrices
// in positive degrees; check_module must reject this presentation.
FiniteCycleModule zero_extended(FiniteCycleModule m, const GradedHopfAlgebra& d) {
  m.degree0_only = false;
  for (uint32_t deg = 1; deg <= d.max_degree(); ++deg)
    for (uint32_t ord = 0; ord < d.dim(deg); ++ord)
      m.action.emplace(BasisIndex{deg, ord}.pack(), DenseMatrix(m.field, m.dim, m.dim));
  return m;
}

}  // namespace

TEST_CASE("conjugation braiding is the group-table permutation") {
  const Field f = Field::rational();
  const LqtInstance inst = s3_level0(f);
  const FiniteGroup& G = FiniteGroup::symmetric(3);

  const FiniteCycleModule conj = conjugation_module(inst.dcp, G, "conj");
  require_all_passed(check_module(conj, inst.dcp.d()));

  const BraidingOperator c = braiding_matrix(inst.r, conj, conj);
  CHECK(c.level == 0);
  CHECK(c.dim_u == 6);
  const DenseMatrix expect = conjugation_braiding_oracle(f, G);
  CHECK(c.mat == expect);
  // A permutation matrix is inverted by its transpose.
  CHECK(c.inv == transpose(expect));

  // Abelian group: the same oracle degenerates to the flip.
  const LqtInstance z2 = z2_sign(f);
  const FiniteGroup& Z2 = FiniteGroup::cyclic(2);
  const FiniteCycleModule conj2 = conjugation_module(z2.dcp, Z2, "conj-z2");
  const BraidingOperator c2 = braiding_matrix(z2.r, conj2, conj2);
  CHECK(c2.mat == conjugation_braiding_oracle(f, Z2));
  for (uint32_t a = 0; a < 2; ++a)
    for (uint32_t h = 0; h < 2; ++h)
      CHECK(c2.mat.at(h * 2 + a, a * 2 + h) == Scalar::one(f));
}

TEST_CASE("module certificates pass their sweeps") {
  const Field f = Field::rational();
  const LqtInstance z2 = z2_sign(f);
  const GradedHopfAlgebra& d = z2.dcp.d();

  const FiniteCycleModule triv = trivial_module(d, "triv");
  const Report rt = check_module(triv, d);
  require_all_passed(rt);
  CHECK(find_check(rt, "product").cases > 1000);  // all in-budget pairs swept
  CHECK(find_check(rt, "graded").status == CheckStatus::Pass);

  const FiniteCycleModule conj = conjugation_module(z2.dcp, FiniteGroup::cyclic(2), "conj-z2");
  const Report rc = check_module(conj, d);
  require_all_passed(rc);
  CHECK(find_check(rc, "product-scope").status == CheckStatus::Note);

  const LqtInstance s3 = s3_level0(f);
  const FiniteGroup& G = FiniteGroup::symmetric(3);
  const FiniteCycleModule cls = class_module(s3.dcp, G, 1, "transpositions");
  CHECK(cls.dim == 3);
  CHECK(cls.labels[0] == "v:(23)");  // lex order: [0,2,1] is element 1
  require_all_passed(check_module(cls, s3.dcp.d()));
  require_all_passed(check_module(conjugation_module(s3.dcp, G, "conj"), s3.dcp.d()));
}

TEST_CASE("tensor modules: counit factor is neutral and reindexing associates") {
  const Field f = Field::rational();
  const LqtInstance z2 = z2_sign(f);
  const GradedHopfAlgebra& d = z2.dcp.d();

  const FiniteCycleModule triv = trivial_module(d, "triv");
  const FiniteCycleModule tt = tensor_module(triv, triv, d);
  CHECK(tt.dim == 1);
  CHECK(tt.cycle_bound == std::vector<uint32_t>{0});
  for (const auto& [key, mat] : triv.action) CHECK(tt.rho(BasisIndex::unpack(key)) == mat);
  require_all_passed(check_module(tt, d));

  const FiniteCycleModule conj = conjugation_module(z2.dcp, FiniteGroup::cyclic(2), "conj-z2");
  const FiniteCycleModule mixed = tensor_module(conj, triv, d);
  CHECK(mixed.degree0_only);
  require_all_passed(check_module(mixed, d));

  const LqtInstance s3 = s3_level0(f);
  const FiniteGroup& G = FiniteGroup::symmetric(3);
  const FiniteCycleModule cls = class_module(s3.dcp, G, 1, "cls");
  const FiniteCycleModule t3 = trivial_module(s3.dcp.d(), "triv");
  const FiniteCycleModule left = tensor_module(tensor_module(cls, cls, s3.dcp.d()), t3, s3.dcp.d());
  const FiniteCycleModule right = tensor_module(cls, tensor_module(cls, t3, s3.dcp.d()), s3.dcp.d());
  CHECK(left.dim == right.dim);
  CHECK(left.cycle_bound == right.cycle_bound);
  for (const auto& [key, mat] : left.action) CHECK(right.rho(BasisIndex::unpack(key)) == mat);
  require_all_passed(check_module(left, s3.dcp.d()));
}

TEST_CASE("zero extension of a degree-0 module is not a module") {
  const Field f = Field::rational();
  const LqtInstance z2 = z2_sign(f);
  const GradedHopfAlgebra& d = z2.dcp.d();
  const FiniteCycleModule conj = conjugation_module(z2.dcp, FiniteGroup::cyclic(2), "conj-z2");

  const FiniteCycleModule claimed = zero_extended(conj, d);
  const Report rep = check_module(claimed, d);
  INFO(rep.summary());
  CHECK_FALSE(rep.all_passed());
  CHECK(find_check(rep, "coverage").status == CheckStatus::Pass);
  CHECK(find_check(rep, "unit").status == CheckStatus::Pass);
  const CheckResult& product = find_check(rep, "product");
  CHECK(product.status == CheckStatus::Fail);
  CHECK(!product.witness.empty());

  // The mechanism: two positive-degree basis elements whose twisted product
  // has a degree-0 component, so the zero matrices multiply to zero while
  // the product acts nonzero.
  bool found = false;
  for (uint32_t ox = 0; ox < d.dim(1) && !found; ++ox)
    for (uint32_t oy = 0; oy < d.dim(1) && !found; ++oy) {
      const SparseVector prod = d.mu(BasisIndex{1, ox}, BasisIndex{1, oy});
      const DenseMatrix acted = claimed.rho(prod);
      bool nonzero = false;
      for (uint32_t r = 0; r < claimed.dim && !nonzero; ++r)
        for (uint32_t cc = 0; cc < claimed.dim && !nonzero; ++cc)
          nonzero = !acted.at(r, cc).is_zero();
      if (nonzero) found = true;  // rho(x) rho(y) = 0, rho(xy) != 0
    }
  CHECK(found);
}

TEST_CASE("wrong cycle bound is caught by the vanishing sweep") {
  const Field f = Field::rational();
  const LqtInstance z2 = z2_sign(f);
  FiniteCycleModule conj = conjugation_module(z2.dcp, FiniteGroup::cyclic(2), "conj-z2");
  conj.action.emplace(BasisIndex{1, 0}.pack(), DenseMatrix::identity(f, conj.dim));
  const Report rep = check_module(conj, z2.dcp.d());
  INFO(rep.summary());
  CHECK_FALSE(rep.all_passed());
  const CheckResult& vanishing = find_check(rep, "vanishing");
  CHECK(vanishing.status == CheckStatus::Fail);
  CHECK(vanishing.witness.find("cycle bound") != std::string::npos);
}

TEST_CASE("braid relation holds on class modules and fails under mutation") {
  const Field f = Field::rational();
  const LqtInstance s3 = s3_level0(f);
  const FiniteGroup& G = FiniteGroup::symmetric(3);
  const FiniteCycleModule cls = class_module(s3.dcp, G, 1, "cls");

  const BraidingOperator c = braiding_matrix(s3.r, cls, cls);
  const Report rep = check_braid_relation(c, c, c);
  require_all_passed(rep);
  CHECK(find_check(rep, "braid-relation").cases == 27 * 27);

  // Distinct modules on the three legs.
  const FiniteCycleModule conj = conjugation_module(s3.dcp, G, "conj");
  const FiniteCycleModule triv = trivial_module(s3.dcp.d(), "triv");
  require_all_passed(check_braid_relation(braiding_matrix(s3.r, conj, cls),
                                          braiding_matrix(s3.r, conj, triv),
                                          braiding_matrix(s3.r, cls, triv)));

  BraidingOperator mutated = c;
  mutated.mat.at(0, 0) += Scalar::one(f);
  const Report bad = check_braid_relation(mutated, c, c);
  CHECK_FALSE(bad.all_passed());
  CHECK(!find_check(bad, "braid-relation").witness.empty());
}

TEST_CASE("hexagons factor the braiding through tensor legs") {
  const Field f = Field::rational();
  const LqtInstance s3 = s3_level0(f);
  const FiniteGroup& G = FiniteGroup::symmetric(3);
  const FiniteCycleModule cls = class_module(s3.dcp, G, 1, "cls");
  const FiniteCycleModule conj = conjugation_module(s3.dcp, G, "conj");
  const FiniteCycleModule triv = trivial_module(s3.dcp.d(), "triv");

  require_all_passed(hexagon_check(s3.r, cls, cls, cls));
  require_all_passed(hexagon_check(s3.r, triv, conj, cls));
  require_all_passed(hexagon_check(s3.r, cls, triv, conj));

  const Field fp = Field::prime(10007);
  const LqtInstance z2 = build_lqt_instance(DoubleKind::PathDouble, fp, two_vertex_loops(),
                                            sign_chars(fp), 2, 1, RUnitVariant::Unit, "bm.z2p");
  const FiniteCycleModule conj2 = conjugation_module(z2.dcp, FiniteGroup::cyclic(2), "conj-z2");
  const FiniteCycleModule triv2 = trivial_module(z2.dcp.d(), "triv");
  require_all_passed(hexagon_check(z2.r, conj2, triv2, conj2));
}

TEST_CASE("naturality holds for module maps and fails for a basis swap") {
  const Field f = Field::rational();
  const LqtInstance s3 = s3_level0(f);
  const FiniteGroup& G = FiniteGroup::symmetric(3);
  const FiniteCycleModule conj = conjugation_module(s3.dcp, G, "conj");
  const BraidingOperator c = braiding_matrix(s3.r, conj, conj);

  const DenseMatrix id6 = DenseMatrix::identity(f, 6);
  require_all_passed(check_naturality(c, c, id6, id6));

  DenseMatrix doubled = id6;
  for (size_t i = 0; i < 6; ++i) doubled.at(i, i) = Scalar::of_int(f, 2);
  require_all_passed(check_naturality(c, c, doubled, id6));

  // Swapping the fixed vector v:e with a transposition vector is not
  // equivariant, so naturality must fail.
  DenseMatrix swap = id6;
  swap.at(0, 0) = Scalar::zero(f);
  swap.at(1, 1) = Scalar::zero(f);
  swap.at(0, 1) = Scalar::one(f);
  swap.at(1, 0) = Scalar::one(f);
  const Report broken = check_naturality(c, c, swap, id6);
  CHECK_FALSE(broken.all_passed());
}

TEST_CASE("braiding is level-stable and polices its level arguments") {
  const Field f = Field::rational();
  const LqtInstance z2 = z2_sign(f);
  const FiniteCycleModule conj = conjugation_module(z2.dcp, FiniteGroup::cyclic(2), "conj-z2");

  const BraidingOperator at0 = braiding_matrix(z2.r, conj, conj, 0);
  const BraidingOperator at1 = braiding_matrix(z2.r, conj, conj, 1);
  CHECK(at0.mat == at1.mat);
  CHECK(at0.inv == at1.inv);
  CHECK(at1.level == 1);

  FiniteCycleModule claimed1 = conj;
  claimed1.cycle_bound.assign(claimed1.dim, 1);
  CHECK_THROWS_AS(braiding_matrix(z2.r, claimed1, claimed1, 0), input_error);
  CHECK(braiding_matrix(z2.r, claimed1, claimed1).level == 1);

  FiniteCycleModule claimed2 = conj;
  claimed2.cycle_bound.assign(claimed2.dim, 2);
  CHECK_THROWS_AS(braiding_matrix(z2.r, claimed2, claimed2), budget_error);
}

TEST_CASE("coaction columns expand the canonical element") {
  const Field f = Field::rational();
  const LqtInstance z2 = z2_sign(f);
  const GradedHopfAlgebra& d = z2.dcp.d();

  // Trivial module: the coaction is 1_D (x) v, frozen against the unit.
  const FiniteCycleModule triv = trivial_module(d, "triv");
  const YdStructure yt = yd_structure(z2.r, triv);
  std::map<std::pair<uint64_t, uint32_t>, Scalar> expect_triv;
  for (const auto& [bi, c] : d.unit().coeffs) expect_triv[{bi.pack(), 0}] = c;
  CHECK(yt.coaction[0] == expect_triv);
  const Report rt = verify_yd(z2.r, yt);
  require_all_passed(rt);
  CHECK(find_check(rt, "level-stable").cases == 1);  // headroom 0 -> 1 exercised
  CHECK(find_check(rt, "left-left").status == CheckStatus::Pass);

  // Conjugation module: coaction of v_h collects every grading projection
  // against the conjugated vector, (p_g (x) e) (x) v_{g h g^-1}.
  const LqtInstance s3 = s3_level0(f);
  const FiniteGroup& G = FiniteGroup::symmetric(3);
  const FiniteCycleModule conj = conjugation_module(s3.dcp, G, "conj");
  const YdStructure yc = yd_structure(s3.r, conj);
  for (uint32_t h = 0; h < 6; ++h) {
    std::map<std::pair<uint64_t, uint32_t>, Scalar> expect;
    for (uint32_t g = 0; g < 6; ++g) {
      const BasisIndex dg = s3.dcp.index(BasisIndex{0, g}, BasisIndex{0, G.identity()});
      expect[{dg.pack(), G.conjugate(g, h)}] = Scalar::one(f);
    }
    CHECK(yc.coaction[h] == expect);
  }
  const Report rc = verify_yd(s3.r, yc);
  require_all_passed(rc);
  CHECK(find_check(rc, "left-left").status == CheckStatus::Pass);
  CHECK(rc.info.at("compatibility") == "left-left verified");
  CHECK(find_check(rc, "level-stable").status == CheckStatus::Skipped);

  // Corrupting the column of a vector that conjugation moves breaks the
  // counit law and the compatibility at once: with the coaction laws broken
  // the left-left failure is a hard Fail, not a convention Note. (Clearing
  // the column of the fixed vector v:e would NOT break left-left — a zero
  // column is still equivariant — so the moved vector is the right target.)
  YdStructure bad = yc;
  bad.coaction[1].clear();
  const Report rb = verify_yd(s3.r, bad);
  CHECK_FALSE(rb.all_passed());
  CHECK(find_check(rb, "counit").status == CheckStatus::Fail);
  CHECK(find_check(rb, "left-left").status == CheckStatus::Fail);  // not a Note

  FiniteCycleModule claimed = conj;
  claimed.cycle_bound.assign(claimed.dim, 1);
  CHECK_THROWS_AS(yd_structure(s3.r, claimed), budget_error);
}

TEST_CASE("degree-0 module construction validates its inputs") {
  const Field f = Field::rational();
  const LqtInstance z2 = z2_sign(f);

  // Foreign group.
  CHECK_THROWS_AS(conjugation_module(z2.dcp, FiniteGroup::symmetric(3), "bad"), input_error);

  // Identity action cannot respect a conjugation-moving grading.
  const LqtInstance s3 = s3_level0(f);
  const FiniteGroup& G = FiniteGroup::symmetric(3);
  const std::vector<uint32_t> grading{1, 2};
  std::vector<DenseMatrix> action(G.order(), DenseMatrix::identity(f, 2));
  CHECK_THROWS_AS(d0_module_from_yd(s3.dcp, G, grading, action, "bad"), input_error);
}
