#include "doctest.h"
#include "test_util.hpp"

#include "grpd/constructions.hpp"
#include "grpd/morphism.hpp"

using namespace grpd;
using testing::kind_of;
using testing::labels;

namespace {

/// Z_n -> Z_m, k -> k mod m (m divides n).
Hom reduction(unsigned n, unsigned m) {
  const Groupoid a = cyclic_group(n), b = cyclic_group(m);
  std::vector<Elem> map(n);
  for (unsigned k = 0; k < n; ++k) map[k] = k % m;
  return check_hom(a, b, map);
}

}  // namespace

TEST_CASE("classification of homomorphisms") {
  const Hom r = reduction(6, 3);
  CHECK(r.strong);
  CHECK(r.surjective);
  CHECK_FALSE(r.injective);

  // Inclusion of the identities of a pair groupoid is not strong: the images
  // of (x,x) and (y,y) never compose, but neither do the elements.
  const Groupoid p = pair_groupoid({"x", "y"});
  const Groupoid ids = restrict_to(p, p.identity_set());
  const Hom inc = check_hom(ids, p, {p.at("(x,x)"), p.at("(y,y)")});
  CHECK(inc.injective);
  CHECK_FALSE(inc.surjective);

  // Collapsing the pair groupoid onto the trivial group is not strong.
  const Groupoid one = cyclic_group(1);
  const Hom collapse = check_hom(p, one, std::vector<Elem>(4, 0));
  CHECK_FALSE(collapse.strong);
  CHECK(collapse.surjective);
}

TEST_CASE("maps that are not homomorphisms") {
  const Groupoid z6 = cyclic_group(6), z2 = cyclic_group(2);
  CHECK(kind_of([&] { check_hom(z6, z2, {0, 1, 1, 0, 0, 1}); }) == ErrorKind::NotAHomomorphism);
  CHECK(kind_of([&] { check_hom(z6, z2, {0, 1}); }) == ErrorKind::NotAHomomorphism);
  CHECK(kind_of([&] { check_hom_labels(z6, z2, {{"0", "0"}}); }) == ErrorKind::SchemaError);
  CHECK(kind_of([&] { check_hom_labels(z6, z2, {{"0", "7"}}); }) == ErrorKind::UnknownLabel);
}

TEST_CASE("composition, kernel and image") {
  const Hom a = reduction(12, 6), b = reduction(6, 2);
  const Hom c = compose(b, a);
  CHECK(c.map == reduction(12, 2).map);
  CHECK(kind_of([&] { compose(a, b); }) == ErrorKind::GroupoidMismatch);
  CHECK(compose(identity_hom(a.codomain), a).map == a.map);

  const auto ker = kernel(c);
  CHECK(ker.size() == 6);
  CHECK(ker.normal());
  CHECK(image(a).set.size() == 6);
  CHECK(image(a).is_subgroupoid);
  CHECK(image_of(a, labels(a.domain, {"0", "6"})).set.size() == 1);
  CHECK(preimage(b, labels(b.codomain, {"0"})).size() == 3);
}

TEST_CASE("anchor and theta maps") {
  const Groupoid g = direct_product(cyclic_group(2), pair_groupoid({"x", "y"}));
  const Hom anchor = anchor_map(g);
  CHECK(anchor.codomain.size() == 4);
  CHECK(anchor.surjective);
  CHECK(kernel(anchor).members() == iso_set(g));
  const Hom theta = theta_map(g);
  CHECK(theta.domain.size() == 4);
}

TEST_CASE("cosets") {
  const Groupoid s3 = symmetric_group_3();
  const CosetTable c = cosets(s3, labels(s3, {"id", "(12)"}));
  CHECK(c.classes.size() == 3);
  for (const auto& k : c.classes) CHECK(k.size() == 2);
  for (Elem e = 0; e < s3.size(); ++e) CHECK(c.classes[c.class_of[e]].contains(e));
  CHECK(kind_of([&] {
          const Groupoid p = pair_groupoid({"x", "y"});
          cosets(p, labels(p, {"(x,x)"}));
        }) == ErrorKind::NotWide);
}

TEST_CASE("quotients") {
  const Groupoid s3 = symmetric_group_3();
  const Quotient q = quotient(s3, labels(s3, {"id", "(123)", "(132)"}));
  CHECK(q.groupoid.size() == 2);
  CHECK(is_group(q.groupoid));
  CHECK(q.projection.strong);
  CHECK(q.projection.surjective);
  CHECK(q.groupoid.label(coset_index(q, s3.at("(12)"))) == "[(12)]");

  CHECK(kind_of([&] { quotient(s3, labels(s3, {"id", "(12)"})); }) == ErrorKind::NotNormal);
  const Groupoid p = pair_groupoid({"x", "y"});
  CHECK(kind_of([&] { quotient(p, p.all()); }) == ErrorKind::QuotientUndefined);
  CHECK(find_isomorphism(quotient(p, p.identity_set()).groupoid, p));
}

TEST_CASE("first isomorphism theorem") {
  const FirstIso f = first_iso(reduction(12, 4));
  CHECK(f.quotient.groupoid.size() == 4);
  CHECK(f.iso.bijective());
  CHECK(f.iso.strong);
  const Groupoid p = pair_groupoid({"x", "y"});
  CHECK(kind_of([&] { first_iso(check_hom(p, cyclic_group(1), std::vector<Elem>(4, 0))); }) ==
        ErrorKind::NotStrong);
  const Groupoid z2 = cyclic_group(2);
  CHECK(kind_of([&] { first_iso(check_hom(z2, cyclic_group(4), {0, 2})); }) ==
        ErrorKind::NotSurjective);
}

TEST_CASE("second and third isomorphism theorems") {
  const Groupoid z12 = cyclic_group(12);
  const ElemSet m = labels(z12, {"0", "4", "8"});
  const ElemSet n = labels(z12, {"0", "6"});
  const SecondIso s = second_iso(z12, m, n);
  CHECK(s.mn.size() == 6);
  CHECK(s.lhs.groupoid.size() == 3);
  CHECK(s.rhs.groupoid.size() == 3);
  CHECK(s.iso.bijective());

  const ElemSet h = labels(z12, {"0", "2", "4", "6", "8", "10"});
  const ElemSet k = labels(z12, {"0", "6"});
  const ThirdIso t = third_iso(z12, h, k);
  CHECK(t.g_by_k.groupoid.size() == 6);
  CHECK(t.h_by_k.size() == 3);
  CHECK(t.outer.groupoid.size() == 2);
  CHECK(t.g_by_h.groupoid.size() == 2);
  CHECK(t.iso.bijective());
  CHECK(kind_of([&] { third_iso(z12, k, h); }) == ErrorKind::NotNested);
}

TEST_CASE("correspondence through a strong surjection") {
  const Correspondence c = correspondence(reduction(12, 6));
  // Subgroups of Z12 containing 6 are generated by 1, 2, 3 and 6.
  CHECK(c.domain_side.size() == 4);
  CHECK(c.image_side.size() == 4);
  CHECK(c.bijective);
  CHECK(c.preserves_normality);
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(cyclic_group(4), cyclic_group(4)));
  CHECK_FALSE(find_isomorphism(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK_FALSE(find_isomorphism(cyclic_group(6), symmetric_group_3()));
  CHECK(find_isomorphism(dihedral_group(3), symmetric_group_3()));
  CHECK(find_isomorphism(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  const Groupoid p = pair_groupoid({"x", "y"});
  const Groupoid z2 = cyclic_group(2);
  CHECK(find_isomorphism(disjoint_union(z2, p), disjoint_union(p, z2)));
  const auto iso = find_isomorphism(direct_product(z2, p), direct_product(p, z2));
  REQUIRE(iso);
  CHECK(iso->strong);
  CHECK(iso->bijective());
}
