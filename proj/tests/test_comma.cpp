#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/comma.hpp"

using namespace twocat;
using namespace twofix;

namespace {

void check_slice_against_oracle(const LaxFunctor& u, int b, SliceVariant variant) {
  auto sl = slice(u, b, variant);
  auto es = explicit_slice(u, b, variant);
  REQUIRE(sl.slice->n_obj() == static_cast<int>(es.objs.size()));
  REQUIRE(sl.slice->n_one() == static_cast<int>(es.ones.size()));
  REQUIRE(sl.slice->n_two() == es.n_twos);
  for (int o = 0; o < sl.slice->n_obj(); ++o) {
    bool found = false;
    for (auto& [a, p] : es.objs) found |= (a == sl.obj_a[o] && p == sl.obj_p[o]);
    CHECK(found);
  }
  CHECK(validate(*sl.slice).ok());
  CHECK(validate_functor(sl.proj).ok());
  CHECK(is_strict(sl.proj));
}

}  // namespace

TEST_CASE("comma of identities on the point") {
  auto e = point_cat();
  auto id = identity_functor(e);
  LaxFunctor idc = id;
  idc.dir = Direction::Colax;
  auto c = comma(id, idc);
  CHECK(validate(*c.comma).ok());
  CHECK(find_isomorphism(*c.comma, *e).has_value());
}

TEST_CASE("comma of identities on ordinal(1): three objects") {
  auto a = ordinal(1);
  auto id = identity_functor(a);
  LaxFunctor idc = id;
  idc.dir = Direction::Colax;
  auto c = comma(id, idc);
  CHECK(c.comma->n_obj() == 3);
  CHECK(validate(*c.comma).ok());
  CHECK(validate_functor(c.proj_src).ok());
  CHECK(validate_functor(c.proj_tgt).ok());
}

TEST_CASE("comma over randomized lax/colax pairs validates") {
  std::mt19937 rng(101);
  for (int it = 0; it < 25; ++it) {
    auto u = random_chain_functor(rng, 1 + static_cast<int>(rng() % 2), 2);
    auto vlax = random_chain_functor(rng, 1 + static_cast<int>(rng() % 2), 2);
    auto v = dual_functor(dual_functor(vlax, DualKind::Op), DualKind::Coop);
    REQUIRE(v.dir == Direction::Colax);
    v.tgt = u.tgt;
    auto c = comma(u, v);
    CHECK(validate(*c.comma).ok());
    CHECK(validate_functor(c.proj_src).ok());
    CHECK(validate_functor(c.proj_tgt).ok());
  }
}

TEST_CASE("slice variants against explicit descriptions") {
  std::mt19937 rng(103);
  for (int it = 0; it < 6; ++it) {
    auto u = random_chain_functor(rng, 2, 2);
    check_slice_against_oracle(u, 0, SliceVariant::LaxOver);
    check_slice_against_oracle(u, 0, SliceVariant::LaxUnder);
    auto uc = dual_functor(u, DualKind::Co);
    check_slice_against_oracle(uc, 0, SliceVariant::ColaxOver);
    check_slice_against_oracle(uc, 0, SliceVariant::ColaxUnder);
  }
  auto s = constant_functor(ordinal(1), ordinal(2), 1);
  for (auto v : {SliceVariant::LaxOver, SliceVariant::LaxUnder, SliceVariant::ColaxOver,
                 SliceVariant::ColaxUnder})
    check_slice_against_oracle(s, 2, v);
}

TEST_CASE("slice counts") {
  auto id1 = identity_functor(ordinal(1));
  auto sl = slice(id1, 1, SliceVariant::LaxOver);
  CHECK(sl.slice->n_obj() == 2);  // (0, 0->1) and (1, 1_1)

  auto sl0 = slice(id1, 0, SliceVariant::LaxOver);
  CHECK(sl0.slice->n_obj() == 1);
}

TEST_CASE("colax slice of an identity has the final-admitting object (a,1_a)") {
  for (const auto& a : {ordinal(2), cyclic_group_cat(2), walking_two_cell()}) {
    auto id = identity_functor(a);
    for (int ob = 0; ob < a->n_obj(); ++ob) {
      auto sl = slice(id, ob, SliceVariant::ColaxOver);
      auto w = has_object_admitting_final(*sl.slice);
      REQUIRE(w.has_value());
      CHECK(sl.obj_a[w->z] == ob);
      CHECK(sl.obj_p[w->z] == a->id1(ob));
    }
  }
}

TEST_CASE("1-categorical slice coincides with the classical comma A/b") {
  auto a = ordinal(2);
  auto id = identity_functor(a);
  auto sl = slice(id, 2, SliceVariant::LaxOver);
  CHECK(is_category(*sl.slice));
  CHECK(sl.slice->n_obj() == 3);
  CHECK(sl.slice->n_one() == 6);
}

TEST_CASE("induced comma morphism") {
  std::mt19937 rng(107);
  auto u = random_chain_functor(rng, 2, 2);
  auto up = random_chain_functor(rng, 2, 2);
  auto vlax = random_chain_functor(rng, 1, 2);
  auto v = dual_functor(dual_functor(vlax, DualKind::Op), DualKind::Coop);
  v.tgt = u.tgt;

  auto idu = identity_transformation(u);
  auto m = induced_comma_morphism(idu, v);
  CHECK(validate_functor(m).ok());
  CHECK(is_strict(m));
  for (std::size_t i = 0; i < m.ob_map.size(); ++i)
    CHECK(m.ob_map[i] == static_cast<int>(i));

  auto sigma = random_colax_transformation(rng, u, up, 2);
  REQUIRE(validate_transformation(sigma).ok());
  auto ms = induced_comma_morphism(sigma, v);
  CHECK(validate_functor(ms).ok());
  CHECK(is_strict(ms));

  auto src_comma = comma(up, v);
  auto tgt_comma = comma(u, v);
  for (int o = 0; o < ms.src->n_obj(); ++o) {
    int r = src_comma.obj_r[o];
    int rs = u.tgt->comp1(r, sigma.comp_obj[0]);
    CHECK(tgt_comma.obj_r[ms.ob(o)] == rs);
  }
}

TEST_CASE("composite of induced comma morphisms") {
  std::mt19937 rng(307);
  auto u = random_chain_functor(rng, 2, 2);
  auto up = random_chain_functor(rng, 2, 2);
  auto upp = random_chain_functor(rng, 2, 2);
  auto vlax = random_chain_functor(rng, 1, 2);
  auto v = dual_functor(dual_functor(vlax, DualKind::Op), DualKind::Coop);
  v.tgt = u.tgt;
  auto s1 = random_colax_transformation(rng, u, up, 2);     // u => u'
  auto s2 = random_colax_transformation(rng, up, upp, 2);   // u' => u''
  REQUIRE(validate_transformation(s1).ok());
  REQUIRE(validate_transformation(s2).ok());
  // vertical composite of the two colax transformations, built by hand:
  // (s2.s1)_a = s2_a s1_a; (s2.s1)_f = (s2_{a'} o0 s1_f) *1 (s2_f o0 s1_a)
  const TwoCat& B = *u.tgt;
  Transformation comp;
  comp.kind = TransKind::Colax;
  comp.from = u;
  comp.to = upp;
  comp.comp_obj.resize(u.src->n_obj());
  comp.comp_one.resize(u.src->n_one());
  for (int a = 0; a < u.src->n_obj(); ++a)
    comp.comp_obj[a] = B.comp1(s2.comp_obj[a], s1.comp_obj[a]);
  for (int f = 0; f < u.src->n_one(); ++f) {
    int a = u.src->ones[f].src, ap = u.src->ones[f].tgt;
    comp.comp_one[f] = B.vcomp(B.whisker_l(s2.comp_obj[ap], s1.comp_one[f]),
                               B.whisker_r(s2.comp_one[f], s1.comp_obj[a]));
  }
  REQUIRE(validate_transformation(comp).ok());
  auto m1 = induced_comma_morphism(s1, v);   // [u',v] -> [u,v]
  auto m2 = induced_comma_morphism(s2, v);   // [u'',v] -> [u',v]
  auto mc = induced_comma_morphism(comp, v); // [u'',v] -> [u,v]
  auto chain = compose_functors(m1, m2);
  CHECK(chain.ob_map == mc.ob_map);
  CHECK(chain.one_map == mc.one_map);
  CHECK(chain.two_map == mc.two_map);
}

TEST_CASE("induced slice morphisms for the four variants") {
  std::mt19937 rng(109);
  auto a = ordinal(2);
  auto id = identity_functor(a);
  auto sigma0 = identity_transformation(id);
  auto f0 = induced_slice_morphism(id, id, id, sigma0, 2, SliceVariant::LaxOver);
  CHECK(validate_functor(f0).ok());
  for (std::size_t i = 0; i < f0.ob_map.size(); ++i)
    CHECK(f0.ob_map[i] == static_cast<int>(i));

  auto u = constant_functor(ordinal(1), a, 2);
  auto w = u;
  auto sigma1 = identity_transformation(w);
  auto f1 = induced_slice_morphism(u, id, w, sigma1, 2, SliceVariant::LaxOver);
  CHECK(validate_functor(f1).ok());
  CHECK(is_strict(f1));

  auto bz = cyclic_group_cat(2);
  auto ul = random_chain_functor(rng, 2, 2);
  auto wl = random_chain_functor(rng, 2, 2);
  auto vb = identity_functor(bz);
  auto sig = random_colax_transformation(rng, ul, wl, 2);
  REQUIRE(validate_transformation(sig).ok());
  auto f2 = induced_slice_morphism(ul, vb, wl, sig, 0, SliceVariant::LaxOver);
  CHECK(validate_functor(f2).ok());

  auto sig_lax = random_lax_transformation(rng, wl, ul, 2);
  REQUIRE(validate_transformation(sig_lax).ok());
  auto f3 = induced_slice_morphism(ul, vb, wl, sig_lax, 0, SliceVariant::LaxUnder);
  CHECK(validate_functor(f3).ok());
  auto f3b = dual_functor(
      induced_slice_morphism(dual_functor(ul, DualKind::Op), dual_functor(vb, DualKind::Op),
                             dual_functor(wl, DualKind::Op),
                             dual_transformation(sig_lax, DualKind::Op), 0,
                             SliceVariant::LaxOver),
      DualKind::Op);
  CHECK(f3.ob_map == f3b.ob_map);
  CHECK(f3.one_map == f3b.one_map);
  CHECK(f3.two_map == f3b.two_map);

  auto uc = dual_functor(ul, DualKind::Co);
  auto wc = dual_functor(wl, DualKind::Co);
  auto vc = dual_functor(vb, DualKind::Co);
  auto sig_c = dual_transformation(sig, DualKind::Co);
  auto f4 = induced_slice_morphism(uc, vc, wc, sig_c, 0, SliceVariant::ColaxOver);
  CHECK(validate_functor(f4).ok());
  auto sig_cu = dual_transformation(sig_lax, DualKind::Co);
  auto f5 = induced_slice_morphism(uc, vc, wc, sig_cu, 0, SliceVariant::ColaxUnder);
  CHECK(validate_functor(f5).ok());
}

TEST_CASE("fibers") {
  auto a = ordinal(1);
  auto b = walking_two_cell();
  auto p = product(*a, *b);
  std::vector<int> om(p->n_obj()), fm(p->n_one()), tm(p->n_two());
  for (int i = 0; i < p->n_obj(); ++i) om[i] = i / b->n_obj();
  for (int i = 0; i < p->n_one(); ++i) fm[i] = i / b->n_one();
  for (int i = 0; i < p->n_two(); ++i) tm[i] = i / b->n_two();
  auto proj = make_strict(p, a, om, fm, tm);
  REQUIRE(validate_functor(proj).ok());
  auto fib = fiber(proj, 0);
  CHECK(validate(*fib.fiber).ok());
  CHECK(find_isomorphism(*fib.fiber, *b).has_value());

  auto fib_op = fiber(dual_functor(proj, DualKind::Op), 0);
  CHECK(equal_presentation(*fib_op.fiber, *dual(*fib.fiber, DualKind::Op)));

  std::mt19937 rng(11);
  auto lax = random_chain_functor(rng, 2, 2);
  if (!is_strict(lax)) CHECK_THROWS_AS(fiber(lax, 0), Error);
}

TEST_CASE("preadjoint detectors") {
  auto a = ordinal(2);
  auto id = identity_functor(a);
  CHECK(is_preadjoint(id, Side::Left, Direction::Lax).holds);
  CHECK(is_preadjoint(id, Side::Left, Direction::Colax).holds);
  CHECK(is_preadjoint(id, Side::Right, Direction::Lax).holds);
  CHECK(is_preadjoint(id, Side::Right, Direction::Colax).holds);

  CHECK(has_object_admitting_final(*ordinal(3)).has_value());
  CHECK(has_object_admitting_final(*ordinal(3))->z == 3);
  CHECK(!has_object_admitting_final(*cyclic_group_cat(2)).has_value());

  TwoCatBuilder eb;
  auto empty = eb.finalize();
  std::vector<int> none;
  auto incl = make_strict(empty, ordinal(0), none, none, none);
  CHECK(!is_preadjoint(incl, Side::Left, Direction::Colax).holds);

  auto o1 = ordinal(1);
  auto top1 = constant_functor(point_cat(), o1, 0);
  auto o2 = ordinal(2);
  std::vector<int> om{0, 1};
  std::vector<int> fm{o2->one_index("0<=0"), o2->one_index("0<=1"), o2->one_index("1<=1")};
  std::vector<int> tm{o2->id2(fm[0]), o2->id2(fm[1]), o2->id2(fm[2])};
  auto up = make_strict(o1, o2, om, fm, tm);
  REQUIRE(validate_functor(up).ok());
  auto c1 = is_preadjoint(top1, Side::Left, Direction::Colax);
  auto c2 = is_preadjoint(up, Side::Left, Direction::Colax);
  REQUIRE(c1.holds);
  REQUIRE(c2.holds);
  auto comp = compose_functors(up, top1);
  CHECK(is_preadjoint(comp, Side::Left, Direction::Colax).holds);

  for (int b = 0; b <= 2; ++b) {
    auto sl = slice(up, b, SliceVariant::ColaxOver);
    if (!sl.obj_a.empty()) CHECK(has_object_admitting_final(*sl.slice).has_value());
  }
}

TEST_CASE("the transformation to the constant endofunctor at a final witness") {
  for (const auto& a : {ordinal(2), ordinal(3)}) {
    auto w = has_object_admitting_final(*a);
    REQUIRE(w.has_value());
    auto s = transformation_to_constant_final(a, *w);
    CHECK(validate_transformation(s).ok());
    // the induced homotopy restricts to Z on the top end
    auto hom = homotopy_from_transformation(s);
    CHECK(validate_functor(hom.h).ok());
    const TwoCat& A = *a;
    for (int f = 0; f < A.n_one(); ++f)
      CHECK(hom.h.one_map[2 * A.n_one() + f] == A.id1(w->z));
  }
  // a slice with a genuine 2-cell structure
  auto g = cyclic_group_cat(2);
  LaxFunctor idc = identity_functor(g);
  idc.dir = Direction::Colax;
  auto sl = slice(idc, 0, SliceVariant::ColaxOver);
  auto w = has_object_admitting_final(*sl.slice);
  REQUIRE(w.has_value());
  auto s = transformation_to_constant_final(sl.slice, *w);
  CHECK(validate_transformation(s).ok());
  auto hom = homotopy_from_transformation(s);
  CHECK(validate_functor(hom.h).ok());
}

TEST_CASE("a functor that fails the prefibration scan") {
  // two discrete points into the walking arrow: the missing 1-cell between
  // the fibers defeats the witness scan
  auto two = coproduct(*point_cat(), *point_cat());
  auto o1 = ordinal(1);
  std::vector<int> om{0, 1};
  std::vector<int> fm{o1->id1(0), o1->id1(1)};
  std::vector<int> tm{o1->id2(fm[0]), o1->id2(fm[1])};
  auto u = make_strict(two, o1, om, fm, tm);
  REQUIRE(validate_functor(u).ok());
  auto v = is_prefibration(u, FibrationVariant::Pre);
  CHECK(!v.holds);
}

TEST_CASE("prefibrations: projections satisfy all four variants") {
  auto a = ordinal(1);
  auto b = cyclic_group_cat(2);
  auto p = product(*a, *b);
  std::vector<int> om(p->n_obj()), fm(p->n_one()), tm(p->n_two());
  for (int i = 0; i < p->n_obj(); ++i) om[i] = i / b->n_obj();
  for (int i = 0; i < p->n_one(); ++i) fm[i] = i / b->n_one();
  for (int i = 0; i < p->n_two(); ++i) tm[i] = i / b->n_two();
  auto proj = make_strict(p, a, om, fm, tm);
  REQUIRE(validate_functor(proj).ok());
  CHECK(is_prefibration(proj, FibrationVariant::Pre).holds);
  CHECK(is_prefibration(proj, FibrationVariant::PreOp).holds);
  CHECK(is_prefibration(proj, FibrationVariant::PreCo).holds);
  CHECK(is_prefibration(proj, FibrationVariant::PreCoop).holds);
}

TEST_CASE("lax-colax adjunction validator: identity adjunction") {
  for (const auto& a : {ordinal(1), cyclic_group_cat(2)}) {
    LaxColaxAdjunction d;
    d.u = identity_functor(a);
    LaxFunctor v = identity_functor(a);
    v.dir = Direction::Colax;
    d.v = v;
    d.p_obj.resize(a->n_obj());
    d.q_obj.resize(a->n_obj());
    d.sigma.resize(a->n_obj());
    d.tau.resize(a->n_obj());
    for (int o = 0; o < a->n_obj(); ++o) {
      d.p_obj[o] = a->id1(o);
      d.q_obj[o] = a->id1(o);
      d.sigma[o] = a->id2(a->comp1(a->id1(o), a->id1(o)));
      d.tau[o] = a->id2(a->comp1(a->id1(o), a->id1(o)));
    }
    d.p_one.resize(a->n_one());
    d.q_one.resize(a->n_one());
    for (int f = 0; f < a->n_one(); ++f) {
      int s = a->ones[f].src, t = a->ones[f].tgt;
      d.p_one[f] = a->id2(a->comp1(f, a->id1(s)));
      d.q_one[f] = a->id2(a->comp1(a->id1(t), f));
    }
    auto rep = validate_lax_colax_adjunction(d);
    CHECK(rep.ok());

    if (a->n_obj() == 1 && a->n_two() > 1) {
      LaxColaxAdjunction bad = d;
      bad.tau[0] = 1;
      auto r2 = validate_lax_colax_adjunction(bad);
      CHECK(!r2.ok());
      bool alc = false;
      for (auto& viol : r2.violations)
        alc |= (viol.tag == "ALC8" || viol.tag == "ALC9" || viol.tag == "ALC10");
      CHECK(alc);
    }
  }
}
