#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qhopf/errors.hpp"
#include "qhopf/quiver.hpp"

using namespace qhopf;

namespace {

// The running two-vertex example: Z2 with three loop copies at each vertex.
CoveringQuiver two_vertex_loops() {
  return CoveringQuiver(FiniteGroup::cyclic(2), {{0, 3}});
}

// Smallest interesting quiver: one vertex, one loop.
CoveringQuiver one_loop() {
  return CoveringQuiver(FiniteGroup::cyclic(1), {{0, 1}});
}

}  // namespace

TEST_CASE("group constructors validate their tables") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inverse(1) == 3);
  CHECK(z4.is_abelian());
  CHECK(z4.name(0) == "e");
  CHECK(z4.name(2) == "g2");

  // A broken table (not associative / not Latin) must be rejected.
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "x"}, {{0, 1}, {1, 1}}), input_error);
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "x"}, {{1, 0}, {0, 1}}), input_error);
}

TEST_CASE("symmetric groups: orders, classes, non-commutativity") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(!s3.is_abelian());
  CHECK(s3.name(0) == "e");

  auto classes = s3.conjugacy_classes();
  REQUIRE(classes.size() == 3);
  // identity first, then by minimal element
  CHECK(classes[0] == std::vector<uint32_t>{0});
  std::vector<size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  CHECK(sizes == std::vector<size_t>{1, 3, 2});  // {e}, transpositions, 3-cycles

  FiniteGroup s4 = FiniteGroup::symmetric(4);
  CHECK(s4.order() == 24);
  std::multiset<size_t> s4sizes;
  for (const auto& c : s4.conjugacy_classes()) s4sizes.insert(c.size());
  CHECK(s4sizes == std::multiset<size_t>{1, 3, 6, 6, 8});

  // (gh)^-1 == h^-1 g^-1 across the whole table.
  for (uint32_t g = 0; g < s3.order(); ++g)
    for (uint32_t h = 0; h < s3.order(); ++h)
      CHECK(s3.inverse(s3.mul(g, h)) == s3.mul(s3.inverse(h), s3.inverse(g)));
}

TEST_CASE("direct products build the Klein four-group") {
  FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  for (uint32_t g = 0; g < 4; ++g) CHECK(v4.mul(g, g) == 0);  // exponent 2
  CHECK(v4.conjugacy_classes().size() == 4);
}

TEST_CASE("arrow enumeration is by source, class, class element, copy") {
  CoveringQuiver q = two_vertex_loops();
  CHECK(q.num_vertices() == 2);
  CHECK(q.num_arrows() == 6);
  std::vector<std::string> labels;
  for (uint32_t i = 0; i < q.num_arrows(); ++i) labels.push_back(q.arrow_label(i));
  CHECK(labels == std::vector<std::string>{"a1:e>e", "a2:e>e", "a3:e>e", "a1:g>g", "a2:g>g",
                                           "a3:g>g"});

  // On S3 with the transposition class at multiplicity 1, arrows go x -> x*c.
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  auto transpositions = s3.conjugacy_classes()[1];
  CoveringQuiver qs(s3, {{transpositions.front(), 1}});
  CHECK(qs.num_arrows() == 18);  // 6 vertices * 3 class elements
  for (uint32_t i = 0; i < qs.num_arrows(); ++i) {
    const Arrow& a = qs.arrow(i);
    CHECK(a.target == s3.mul(a.source, a.class_elt));
    CHECK(s3.class_rep(a.class_elt) == a.class_rep);
  }

  std::vector<RamificationEntry> empty_ram;
  std::vector<RamificationEntry> zero_mult{{0, 0}};
  // Two members of one class are one class, not two ramification entries.
  std::vector<RamificationEntry> dup_class{{transpositions[0], 1}, {transpositions[1], 1}};
  CHECK_THROWS_AS(CoveringQuiver(s3, empty_ram), input_error);
  CHECK_THROWS_AS(CoveringQuiver(s3, zero_mult), input_error);
  CHECK_THROWS_AS(CoveringQuiver(s3, dup_class), input_error);
}

TEST_CASE("path counts: 2 * 3^n on the two-vertex example, 1 on the loop") {
  CoveringQuiver q = two_vertex_loops();
  std::vector<size_t> counts;
  for (uint32_t n = 0; n <= 4; ++n) counts.push_back(q.enumerate_paths(n).size());
  CHECK(counts == std::vector<size_t>{2, 6, 18, 54, 162});

  CoveringQuiver loop = one_loop();
  for (uint32_t n = 0; n <= 5; ++n) CHECK(loop.enumerate_paths(n).size() == 1);
}

TEST_CASE("path enumeration: first-arrow-major order, valid, deterministic") {
  CoveringQuiver q = two_vertex_loops();
  auto paths = q.enumerate_paths(2);
  // Lexicographic in traversal order: (a1,a1), (a1,a2), (a1,a3), (a2,a1), ...
  CHECK(q.path_label(paths[0]) == "a1:e>e|a1:e>e");
  CHECK(q.path_label(paths[1]) == "a2:e>e|a1:e>e");  // second arrow printed first
  CHECK(q.path_label(paths[3]) == "a1:e>e|a2:e>e");
  CHECK(q.path_label(paths[9]) == "a1:g>g|a1:g>g");
  for (const auto& p : paths) CHECK(q.path_valid(p));
  CHECK(paths == q.enumerate_paths(2));

  // Labels are pairwise distinct.
  std::set<std::string> seen;
  for (const auto& p : paths) seen.insert(q.path_label(p));
  CHECK(seen.size() == paths.size());

  // On a quiver with real sources/targets only composable chains appear.
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  CoveringQuiver qz(z3, {{1, 2}});  // class {g}, two copies: arrows x -> x*g
  auto p2 = qz.enumerate_paths(2);
  CHECK(p2.size() == 3 * 2 * 2);
  for (const auto& p : p2) {
    CHECK(qz.path_valid(p));
    CHECK(qz.arrow(p.arrows[1]).source == qz.arrow(p.arrows[0]).target);
  }
}

TEST_CASE("composition is associative and respects endpoints") {
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  CoveringQuiver q(z3, {{1, 1}});  // single loop-free cycle x -> x*g
  auto p1 = q.enumerate_paths(1);

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<size_t> pick(0, p1.size() - 1);
  int composed = 0;
  for (int t = 0; t < 200; ++t) {
    const Path &a = p1[pick(rng)], &b = p1[pick(rng)], &c = p1[pick(rng)];
    auto bc = q.compose(b, c);
    auto ab = q.compose(a, b);
    if (!bc || !ab) {
      // compose defined exactly when endpoints meet
      if (!bc) CHECK(b.source != q.path_target(c));
      if (!ab) CHECK(a.source != q.path_target(b));
      continue;
    }
    ++composed;
    auto left = q.compose(a, *bc);
    auto right = q.compose(*ab, c);
    REQUIRE(left);
    REQUIRE(right);
    CHECK(*left == *right);
    CHECK(q.path_target(*left) == q.path_target(a));
    CHECK(left->source == c.source);
  }
  CHECK(composed > 0);
}
