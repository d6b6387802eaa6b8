#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qhopf/bimodule.hpp"
#include "qhopf/errors.hpp"

using namespace qhopf;

namespace {

// Order/duplication-insensitive view of sparse index combinations.
std::map<uint32_t, Scalar> norm1(const IndexVec& v) {
  std::map<uint32_t, Scalar> m;
  for (const auto& [i, c] : v) {
    auto it = m.find(i);
    if (it == m.end())
      m.emplace(i, c);
    else
      it->second += c;
  }
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
  return m;
}

std::map<std::pair<uint32_t, uint32_t>, Scalar> norm2(const IndexVec2& v) {
  std::map<std::pair<uint32_t, uint32_t>, Scalar> m;
  for (const auto& [i, j, c] : v) {
    auto it = m.find({i, j});
    if (it == m.end())
      m.emplace(std::pair{i, j}, c);
    else
      it->second += c;
  }
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
  return m;
}

bool same_bimodule(const HopfBimodule& a, const HopfBimodule& b) {
  if (a.dim() != b.dim() || a.base.dual != b.base.dual) return false;
  for (uint32_t g = 0; g < a.base.dim(); ++g)
    for (uint32_t m = 0; m < a.dim(); ++m) {
      if (norm1(a.act_left[g][m]) != norm1(b.act_left[g][m])) return false;
      if (norm1(a.act_right[m][g]) != norm1(b.act_right[m][g])) return false;
    }
  for (uint32_t m = 0; m < a.dim(); ++m) {
    if (norm2(a.coact_left[m]) != norm2(b.coact_left[m])) return false;
    if (norm2(a.coact_right[m]) != norm2(b.coact_right[m])) return false;
  }
  return true;
}

// Brute-force Hopf axioms for a degree-zero base over its structure
// constants; independent of any graded machinery.
void check_base_hopf(const BaseHopf& B) {
  const uint32_t n = B.dim();
  const Field& f = B.field;
  using V2 = std::map<std::pair<uint32_t, uint32_t>, Scalar>;
  auto acc2 = [](V2& m, uint32_t i, uint32_t j, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = m.find({i, j});
    if (it == m.end())
      m.emplace(std::pair{i, j}, c);
    else {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) {
      // Delta(xy) == Delta(x) Delta(y)
      V2 lhs, rhs;
      for (const auto& [z, c] : B.mu(x, y))
        for (const auto& [z1, z2, c2] : B.delta(z)) acc2(lhs, z1, z2, c * c2);
      for (const auto& [x1, x2, cx] : B.delta(x))
        for (const auto& [y1, y2, cy] : B.delta(y))
          for (const auto& [a, ca] : B.mu(x1, y1))
            for (const auto& [b, cb] : B.mu(x2, y2)) acc2(rhs, a, b, cx * cy * ca * cb);
      CHECK(lhs == rhs);
      // eps(xy) == eps(x) eps(y)
      Scalar el = Scalar::zero(f);
      for (const auto& [z, c] : B.mu(x, y)) el += c * B.counit(z);
      CHECK(el == B.counit(x) * B.counit(y));
    }
  // antipode convolution identities: sum S(x1) x2 == eps(x) 1 == sum x1 S(x2)
  for (uint32_t x = 0; x < n; ++x) {
    std::map<uint32_t, Scalar> l, r, want;
    auto acc1 = [](std::map<uint32_t, Scalar>& m, uint32_t i, const Scalar& c) {
      if (c.is_zero()) return;
      auto it = m.find(i);
      if (it == m.end())
        m.emplace(i, c);
      else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
      }
    };
    for (const auto& [x1, x2, c] : B.delta(x)) {
      for (const auto& [z, cz] : B.mu(B.antipode(x1), x2)) acc1(l, z, c * cz);
      for (const auto& [z, cz] : B.mu(x1, B.antipode(x2))) acc1(r, z, c * cz);
    }
    for (const auto& [u, cu] : B.unit()) acc1(want, u, cu * B.counit(x));
    CHECK(l == want);
    CHECK(r == want);
  }
}

}  // namespace

TEST_CASE("degree-zero bases are Hopf algebras (kG and its dual)") {
  Field q = Field::rational();
  check_base_hopf(BaseHopf::group_algebra(q, FiniteGroup::symmetric(3)));
  check_base_hopf(BaseHopf::dual_group_algebra(q, FiniteGroup::symmetric(3)));
  check_base_hopf(BaseHopf::group_algebra(Field::prime(5), FiniteGroup::cyclic(4)));
  check_base_hopf(BaseHopf::dual_group_algebra(Field::prime(5), FiniteGroup::cyclic(4)));
}

TEST_CASE("the two-vertex three-loop bimodule satisfies every law") {
  HopfBimodule m = z2_three_loops_bimodule(Field::rational());
  CHECK(m.dim() == 6);
  Report rep = m.verify();
  INFO(rep.summary());
  CHECK(rep.all_passed());
  CHECK(rep.checks.size() == 12);

  // The sign twist is visible in the right action of g on the third copy.
  // Arrows: 0..2 at vertex e, 3..5 at vertex g, copies 1..3.
  Field q = Field::rational();
  CHECK(m.act_right[2][1] == IndexVec{{5, -Scalar::one(q)}});
  CHECK(m.act_right[1][1] == IndexVec{{4, Scalar::one(q)}});
  CHECK(m.act_left[1][2] == IndexVec{{5, Scalar::one(q)}});
}

TEST_CASE("translation bimodules verify over nonabelian groups") {
  Field q = Field::rational();
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  auto transpositions = s3.conjugacy_classes()[1];
  CoveringQuiver quiver(s3, {{transpositions.front(), 2}});
  HopfBimodule m = translation_bimodule(q, quiver);
  Report rep = m.verify();
  INFO(rep.summary());
  CHECK(rep.all_passed());

  // Right translation really conjugates the class element.
  const Arrow& a = quiver.arrow(0);
  for (uint32_t g = 0; g < s3.order(); ++g) {
    REQUIRE(m.act_right[0][g].size() == 1);
    const Arrow& b = quiver.arrow(m.act_right[0][g][0].first);
    CHECK(b.source == s3.mul(a.source, g));
    CHECK(b.class_elt == s3.mul(s3.mul(s3.inverse(g), a.class_elt), g));
  }
}

TEST_CASE("bad characters are rejected, broken structures are caught") {
  Field q = Field::rational();
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  CoveringQuiver quiver(z2, {{0, 1}});
  // chi(g) = 2 is not multiplicative on Z2 (chi(g)^2 = 4 != 1 = chi(e)).
  std::vector<std::vector<Character>> bad{{{Scalar::one(q), Scalar::of_int(q, 2)}}};
  CHECK_THROWS_AS(translation_bimodule(q, quiver, bad), input_error);
  std::vector<std::vector<Character>> zero{{{Scalar::one(q), Scalar::zero(q)}}};
  CHECK_THROWS_AS(translation_bimodule(q, quiver, zero), input_error);

  // Corrupting one action entry must trip a named check.
  HopfBimodule m = z2_three_loops_bimodule(q);
  m.act_left[1][0] = {{0, Scalar::one(q)}};  // g now fixes the first loop at e
  Report rep = m.verify();
  CHECK(!rep.all_passed());
  bool named = false;
  for (const auto& c : rep.checks)
    if (c.status == CheckStatus::Fail && !c.witness.empty()) named = true;
  CHECK(named);
}

TEST_CASE("dualization transposes the structure and is an involution") {
  Field q = Field::rational();
  HopfBimodule m = z2_three_loops_bimodule(q);
  HopfBimodule d = m.dualize();
  CHECK(d.base.dual);

  // The dual of a verified bimodule verifies.
  Report rep = d.verify();
  INFO(rep.summary());
  CHECK(rep.all_passed());

  // Dual left action is the vertex projection: p_b . a* = [b == t(a)] a*.
  CoveringQuiver quiver(FiniteGroup::cyclic(2), {{0, 3}});
  for (uint32_t b = 0; b < 2; ++b)
    for (uint32_t a = 0; a < 6; ++a) {
      IndexVec want;
      if (quiver.arrow(a).target == b) want.emplace_back(a, Scalar::one(q));
      CHECK(norm1(d.act_left[b][a]) == norm1(want));
    }

  // Frozen dual coactions for the sign-twisted loop at vertex e (arrow 2):
  //   delta-(a*) = p_e (x) a2* at e + p_g (x) a3* at g   (left translation transposed)
  //   delta+(a*) = a3*(e) (x) p_e - a3*(g) (x) p_g       (sign enters on the right)
  CHECK(norm2(d.coact_left[2]) ==
        norm2(IndexVec2{{0, 2, Scalar::one(q)}, {1, 5, Scalar::one(q)}}));
  CHECK(norm2(d.coact_right[2]) ==
        norm2(IndexVec2{{2, 0, Scalar::one(q)}, {5, 1, -Scalar::one(q)}}));

  // Double dual gives back the original tables.
  CHECK(same_bimodule(m, d.dualize()));

  // Dualizing a dual-based bimodule lands back on a group-algebra base.
  HopfBimodule dd = d.dualize();
  CHECK(!dd.base.dual);
  CHECK(dd.verify().all_passed());
}
