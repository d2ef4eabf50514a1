#include "doctest.h"
#include "test_util.hpp"

#include <set>

#include "exel_oracle.hpp"
#include "grpd/constructions.hpp"
#include "grpd/inverse_semigroup.hpp"

using namespace grpd;
using testing::kind_of;

TEST_CASE("partial bijections") {
  const auto all = all_partial_bijections(2);
  // Sum over k of C(2,k)^2 k!.
  CHECK(all.size() == 7);
  CHECK(all_partial_bijections(3).size() == 34);
  CHECK(all.front() == PartialBijection::empty(2));

  const PartialBijection swap{{1, 0}};
  const PartialBijection first{{0, -1}};
  CHECK((swap * swap) == PartialBijection::identity_on(ElemSet::full(2)));
  // first is applied before swap.
  CHECK((swap * first).image == std::vector<int>{1, -1});
  CHECK((first * swap).image == std::vector<int>{-1, 0});
  CHECK(first.restriction_of(PartialBijection::identity_on(ElemSet::full(2))));
  CHECK_FALSE(swap.restriction_of(first));
  CHECK(swap.restrict(ElemSet(2, {0})).image == std::vector<int>{1, -1});
  CHECK(swap.to_string({"x", "y"}) == "{x->y,y->x}");
  CHECK(PartialBijection::empty(2).to_string({"x", "y"}) == "{}");
}

TEST_CASE("symmetric inverse monoid") {
  const auto m = partial_bijection_monoid({"x", "y"});
  const auto& s = m.semigroup;
  CHECK(s.size() == 7);
  CHECK(s.idempotents().size() == 4);
  REQUIRE(s.unit());
  CHECK(s.label(*s.unit()) == "{x->x,y->y}");
  CHECK(check_inverse_semigroup(s.size(), s.table(), s.star_map()).ok());
  const Elem e = m.index_of(PartialBijection::empty(2));
  for (Elem t = 0; t < s.size(); ++t) CHECK(s.leq(e, t));
  CHECK(kind_of([] { partial_bijection_monoid({}); }) == ErrorKind::EmptyStructure);
}

TEST_CASE("inverse semigroup checker") {
  // {0, 1} under max is a semilattice; under + mod 2 a group.
  CHECK(check_inverse_semigroup(2, {0, 1, 1, 1}, {0, 1}).ok());
  CHECK(check_inverse_semigroup(2, {0, 1, 1, 0}, {0, 1}).ok());
  const auto wrong_star = check_inverse_semigroup(2, {0, 1, 1, 0}, {1, 0});
  CHECK_FALSE(wrong_star.star_identities);
  // Left-zero band: st = s. Associative, but s has two inverses.
  const auto band = check_inverse_semigroup(2, {0, 0, 1, 1}, {0, 1});
  CHECK(band.associative);
  CHECK_FALSE(band.ok());
  CHECK(kind_of([] { FiniteInverseSemigroup({"a", "b"}, {0, 0, 1, 1}, {0, 1}); }) ==
        ErrorKind::StarViolation);
}

TEST_CASE("restricted product groupoid") {
  const auto m = partial_bijection_monoid({"x", "y"});
  const Groupoid g = restricted_product_groupoid(m.semigroup);
  CHECK(g.size() == 7);
  // One identity per subset of the points.
  CHECK(g.identities().size() == 4);
}

TEST_CASE("Exel semigroup sizes") {
  CHECK(exel_semigroup(cyclic_group(1)).elements.size() == 1);
  CHECK(exel_semigroup(cyclic_group(2)).elements.size() == 3);
  CHECK(exel_semigroup(cyclic_group(3)).elements.size() == 8);
  // 2^(n-1) sets A for g = 1 and 2^(n-2) for each other g.
  CHECK(exel_semigroup(cyclic_group(4)).elements.size() == 8 + 3 * 4);
  CHECK(kind_of([] { exel_semigroup(pair_groupoid({"x", "y"})); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { exel_semigroup(cyclic_group(9)); }) == ErrorKind::TooLarge);
}

TEST_CASE("Exel semigroup is an inverse monoid") {
  for (const auto& c : small_groups()) {
    if (c.groupoid.size() > 6) continue;
    CAPTURE(c.name);
    const ExelSemigroup e = exel_semigroup(c.groupoid);
    const auto& s = e.semigroup;
    CHECK(check_inverse_semigroup(s.size(), s.table(), s.star_map()).ok());
    REQUIRE(s.unit());
    CHECK(*s.unit() == e.generator(c.groupoid.identities().front()));
  }
}

TEST_CASE("rewriting to normal form") {
  const Groupoid z3 = cyclic_group(3);
  const ExelSemigroup e = exel_semigroup(z3);
  const auto tokens = exel_rewrite(z3, {1, 1});
  REQUIRE_FALSE(tokens.empty());
  CHECK(tokens.back().kind == ExelToken::Gen);
  CHECK(tokens.back().g == 2);
  CHECK(exel_normal_form(z3, {1, 1}) == exel_fold(e, {1, 1}));
  CHECK(exel_normal_form(z3, {0, 2}) == exel_fold(e, {2}));
  CHECK(kind_of([&] { exel_rewrite(z3, {}); }) == ErrorKind::EmptyWord);

  // Every word up to length 5 over Z3 and Z2xZ2.
  for (const Groupoid& g : {z3, direct_product(cyclic_group(2), cyclic_group(2))}) {
    const ExelSemigroup eg = exel_semigroup(g);
    const oracle::ExelCongruence cc(g, 5, 2);
    std::set<std::size_t> classes;
    std::set<Elem> elements;
    for (const auto& w : cc.words()) {
      const ExelElement x = exel_fold(eg, w);
      CHECK(exel_normal_form(g, w) == x);
      classes.insert(cc.class_of(w));
      elements.insert(eg.index_of(x));
    }
    CHECK(classes.size() == elements.size());
    CHECK(elements.size() == eg.elements.size());
  }
}

TEST_CASE("composability in the Exel semigroup") {
  const ExelSemigroup e = exel_semigroup(cyclic_group(3));
  const auto& s = e.semigroup;
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b) {
      const auto c = exel_composability(e, e.elements[a], e.elements[b]);
      CHECK(c.by_products == c.by_sets);
      CHECK(c.by_products == (s.mul(a, s.star(a)) == s.mul(s.star(b), b)));
    }
  // [1][2] in Z3: both sides are the idempotent [1][2].
  const ExelElement g1 = e.elements[e.generator(1)];
  const ExelElement g2 = e.elements[e.generator(2)];
  CHECK(exel_composability(e, g1, g2).by_products);
  CHECK(exel_literal_criterion(e, g1, g2));
}

TEST_CASE("pair-form operations") {
  const ExelSemigroup e = exel_semigroup(cyclic_group(2));
  const ExelElement g = e.elements[e.generator(1)];
  CHECK(e.label(g) == "({0,1},1)");
  const ExelElement gg = e.mul(g, g);
  CHECK(gg.g == 0);
  CHECK(gg.a.size() == 2);
  CHECK(e.star(g) == g);
  CHECK(e.mul(e.mul(g, e.star(g)), g) == g);
}
