#include "doctest.h"
#include "twocat/presentation.hpp"

#include <random>

using namespace twocat;

TEST_CASE("ordinal presentations validate") {
  for (int n = 0; n <= 6; ++n) {
    auto a = ordinal(n);
    CHECK(validate(*a).ok());
  }
  CHECK(ordinal(0)->n_obj() == 1);
  auto o1 = ordinal(1);
  CHECK(o1->n_obj() == 2);
  CHECK(o1->n_one() == 3);  // two identities + 0->1
  CHECK(ordinal(3)->n_obj() == 4);
  CHECK(ordinal(3)->n_one() == 10);  // pairs i<=j
}

TEST_CASE("group and monoid categories validate") {
  for (int n : {1, 2, 3, 4}) {
    CHECK(validate(*cyclic_group_cat(n)).ok());
    CHECK(validate(*cyclic_monoid_cat(n)).ok());
  }
  CHECK(validate(*walking_two_cell()).ok());
  CHECK(validate(*bipartite_preorder_cat(3, {{0, 1}, {1, 2}})).ok());
}

TEST_CASE("single-entry mutation of Z/2 hcomp is detected") {
  auto g = cyclic_group_cat(2);
  // swapping the unit-free hcomp entry g1 o g1 breaks the interchange law
  TwoCat mutated = *g;
  mutated.hcomp_tab[pair_key(1, 1)] = 1;
  auto rep = validate(mutated);
  CHECK(!rep.ok());
  bool interchange = false;
  for (const auto& v : rep.violations) interchange |= (v.tag == "InterchangeViolation");
  CHECK(interchange);
  // any other single swap is detected as well
  TwoCat m2 = *g;
  m2.hcomp_tab[pair_key(0, 0)] = 1;
  CHECK(!validate(m2).ok());
}

TEST_CASE("duality algebra") {
  auto fixtures = {ordinal(2), cyclic_group_cat(2), walking_two_cell()};
  for (const auto& a : fixtures) {
    CHECK(equal_presentation(*dual(dual(*a, DualKind::Op), DualKind::Op), *a));
    CHECK(equal_presentation(*dual(dual(*a, DualKind::Co), DualKind::Co), *a));
    auto coop1 = dual(dual(*a, DualKind::Op), DualKind::Co);
    auto coop2 = dual(dual(*a, DualKind::Co), DualKind::Op);
    auto coop3 = dual(*a, DualKind::Coop);
    CHECK(equal_presentation(*coop1, *coop2));
    CHECK(equal_presentation(*coop1, *coop3));
    CHECK(validate(*dual(*a, DualKind::Op)).ok());
    CHECK(validate(*dual(*a, DualKind::Co)).ok());
    CHECK(validate(*dual(*a, DualKind::Coop)).ok());
  }
  // dual(ordinal(1), op) isomorphic to ordinal(1) by relabeling
  auto iso = find_isomorphism(*dual(*ordinal(1), DualKind::Op), *ordinal(1));
  REQUIRE(iso.has_value());
  CHECK(iso->ob_map[0] == 1);  // the relabeling swaps the endpoints
}

TEST_CASE("product and coproduct") {
  auto e = point_cat();
  auto a = walking_two_cell();
  auto p = product(*e, *a);
  CHECK(validate(*p).ok());
  CHECK(find_isomorphism(*p, *a).has_value());

  auto q = product(*ordinal(1), *ordinal(1));
  CHECK(validate(*q).ok());
  CHECK(q->n_obj() == 4);
  CHECK(q->n_one() == 9);

  auto c = coproduct(*e, *e);
  CHECK(validate(*c).ok());
  CHECK(pi0(*c).size() == 2);

  auto big = coproduct(*a, *ordinal(2));
  CHECK(validate(*big).ok());
  CHECK(pi0(*big).size() == pi0(*a).size() + pi0(*ordinal(2)).size());
}

TEST_CASE("truncations") {
  auto g = cyclic_group_cat(3);
  auto tb = tau_b(*g);
  CHECK(validate(*tb).ok());
  CHECK(is_category(*tb));
  CHECK(tb->n_obj() == 1);
  CHECK(tb->n_one() == 1);  // terminal-like: one object, one arrow
  auto ti = tau_i(*g);
  CHECK(validate(*ti).ok());
  CHECK(is_category(*ti));
  CHECK(ti->n_one() == 1);  // the unique 1-cell's pi0 class is a singleton

  auto o2 = ordinal(2);
  CHECK(equal_presentation(*tau_i(*tau_b(*o2)), *tau_b(*o2)));
  CHECK(tau_i(*o2)->n_one() == o2->n_one());

  auto w = walking_two_cell();
  auto tiw = tau_i(*w);
  CHECK(validate(*tiw).ok());
  CHECK(tiw->n_one() == 3);  // m and n get identified
}

TEST_CASE("tau_i flags a quotient that does not descend") {
  // an invalid presentation: p,q identified by a 2-cell, but their
  // self-composites land in different classes
  TwoCatBuilder b;
  b.add_object("x");
  int one = b.add_one("1", 0, 0);
  int p = b.add_one("p", 0, 0);
  int q = b.add_one("q", 0, 0);
  b.set_id1(0, one);
  b.set_comp1(one, one, one);
  b.set_comp1(p, one, p);
  b.set_comp1(one, p, p);
  b.set_comp1(q, one, q);
  b.set_comp1(one, q, q);
  b.set_comp1(p, p, p);
  b.set_comp1(q, q, one);  // breaks descent: [p][p] would be both p and 1
  b.set_comp1(p, q, p);
  b.set_comp1(q, p, q);
  int tp = b.add_two("ip", p, p);
  int tq = b.add_two("iq", q, q);
  int t1 = b.add_two("i1", one, one);
  int al = b.add_two("al", p, q);
  b.set_id2(one, t1);
  b.set_id2(p, tp);
  b.set_id2(q, tq);
  const TwoCat& cur = b.peek();
  for (int t2 = 0; t2 < b.n_two(); ++t2)
    for (int s = 0; s < b.n_two(); ++s) {
      if (cur.twos[s].tgt == cur.twos[t2].src && !b.has_vcomp(t2, s))
        b.set_vcomp(t2, s, cur.twos[s].src == cur.twos[t2].tgt ? s : al);
      if (!b.has_hcomp(t2, s))
        b.set_hcomp(t2, s, cur.id2_tab[cur.comp1_tab.at(
                               pair_key(cur.twos[t2].src, cur.twos[s].src))]);
    }
  auto a = b.finalize();
  CHECK(!validate(*a).ok());  // the input is not a 2-category
  CHECK_THROWS_AS(tau_i(*a), Error);
}

TEST_CASE("pi0") {
  CHECK(pi0(*ordinal(5)).size() == 1);
  CHECK(pi0(*cyclic_group_cat(2)).size() == 1);
  TwoCatBuilder b;
  auto empty = b.finalize();
  CHECK(pi0(*empty).empty());
  CHECK(validate(*empty).ok());
}

TEST_CASE("builder rejects duplicates and missing entries") {
  TwoCatBuilder b;
  b.add_object("x");
  int f = b.add_one("f", 0, 0);
  b.set_id1(0, f);
  b.set_comp1(f, f, f);
  // a different value for the same key is a duplicate-entry error
  TwoCatBuilder b2;
  b2.add_object("x");
  int g = b2.add_one("g", 0, 0);
  int h = b2.add_one("h", 0, 0);
  b2.set_id1(0, g);
  b2.set_comp1(g, g, g);
  CHECK_THROWS_AS(b2.set_comp1(g, g, h), Error);
  // missing id2 caught at finalize
  CHECK_THROWS_AS(b2.finalize(), Error);
}

TEST_CASE("autoid synthesis round") {
  TwoCatBuilder b;
  b.add_object("a");
  b.add_object("b");
  b.add_one("f", 0, 1);
  b.synthesize_identities();
  auto c = b.finalize();
  CHECK(validate(*c).ok());
  CHECK(c->n_one() == 3);
}
