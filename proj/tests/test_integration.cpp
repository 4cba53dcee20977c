#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/integration.hpp"

using namespace twocat;
using namespace twofix;

namespace {

// A non-constant diagram on ordinal(1): F(0) = walking 2-cell, F(1) = BZ/2,
// F(0->1) collapses m,n onto the 1-cell and alpha onto the unit.
Diagram step_diagram() {
  Diagram d;
  d.base = ordinal(1);
  d.variance = Variance::Cov;
  auto w = walking_two_cell();
  auto g = cyclic_group_cat(2);
  d.ob_val = {w, g};
  std::vector<int> om(w->n_obj(), 0);
  std::vector<int> fm(w->n_one(), 0);
  std::vector<int> tm(w->n_two(), 0);
  auto step = make_strict(w, g, om, fm, tm);
  d.one_val = {identity_functor(w), step, identity_functor(g)};
  d.two_val.resize(d.base->n_two());
  for (int t = 0; t < d.base->n_two(); ++t)
    d.two_val[t] = identity_transformation(d.one_val[d.base->twos[t].src]);
  return d;
}

// A diagram over the walking 2-cell: two parallel functors BZ/2 -> BZ/2
// (identity twice) with the transformation gamma acting by the nontrivial
// component on the single object.
Diagram twocell_diagram() {
  Diagram d;
  d.base = walking_two_cell();
  d.variance = Variance::Cov;
  auto g = cyclic_group_cat(2);
  d.ob_val = {g, g};
  auto idg = identity_functor(g);
  d.one_val = {idg, idg, idg, idg};
  d.two_val.resize(d.base->n_two());
  for (int t = 0; t < d.base->n_two(); ++t)
    d.two_val[t] = identity_transformation(idg);
  // the nonidentity 2-cell alpha : m => n acts by the 1-cell "1" with the
  // nontrivial structure... in BZ/2 the only 1-cell is the identity, so the
  // transformation is the identity; naturality holds trivially.
  return d;
}

}  // namespace

TEST_CASE("diagram validation") {
  auto d = step_diagram();
  CHECK(validate_diagram(d).ok());
  // break functoriality: make one_val of the composite differ
  Diagram bad = d;
  bad.one_val[1] = identity_functor(bad.ob_val[0]);
  bad.one_val[1].tgt = bad.ob_val[1];  // ill-typed on purpose
  CHECK(!validate_diagram(bad).ok());
  CHECK(validate_diagram(twocell_diagram()).ok());
}

TEST_CASE("integral of a constant diagram is the product") {
  for (const auto& a : {ordinal(1), walking_two_cell()}) {
    auto b = cyclic_group_cat(2);
    auto d = constant_diagram(a, b);
    REQUIRE(validate_diagram(d).ok());
    auto r = integrate(d);
    CHECK(validate(*r.total).ok());
    CHECK(validate_functor(r.projection).ok());
    CHECK(find_isomorphism(*r.total, *product(*a, *b)).has_value());
  }
}

TEST_CASE("integral over the point is the value") {
  auto x = walking_two_cell();
  auto d = constant_diagram(point_cat(), x);
  auto r = integrate(d);
  CHECK(find_isomorphism(*r.total, *x).has_value());
}

TEST_CASE("integration of a nonconstant diagram validates; fibers match") {
  auto d = step_diagram();
  auto r = integrate(d);
  CHECK(validate(*r.total).ok());
  CHECK(validate_functor(r.projection).ok());
  for (int a = 0; a <= 1; ++a) {
    auto fib = fiber(r.projection, a);
    CHECK(find_isomorphism(*fib.fiber, *d.ob_val[a]).has_value());
  }
  auto d2 = twocell_diagram();
  auto r2 = integrate(d2);
  CHECK(validate(*r2.total).ok());
  for (int a = 0; a <= 1; ++a) {
    auto fib = fiber(r2.projection, a);
    CHECK(find_isomorphism(*fib.fiber, *d2.ob_val[a]).has_value());
  }
}

TEST_CASE("projection of an integral is a precoopfibration") {
  auto d = step_diagram();
  auto r = integrate(d);
  CHECK(is_prefibration(r.projection, FibrationVariant::PreCoop).holds);
}

TEST_CASE("the twelve dualized variants validate and match the explicit laws") {
  // fiber of each flavor matches the appropriately dualized value
  auto val = walking_two_cell();
  auto base = ordinal(1);
  for (auto variance : {Variance::Cov, Variance::Op, Variance::Co, Variance::Coop}) {
    auto d = constant_diagram(base, val, variance);
    REQUIRE(validate_diagram(d).ok());
    struct Case {
      IntegralFlavor flavor;
      DualKind fiber_dual;
      bool dual_none;
    };
    for (auto c : {Case{IntegralFlavor::Primary, DualKind::Op, true},
                   Case{IntegralFlavor::DualOp, DualKind::Op, false},
                   Case{IntegralFlavor::DualCo, DualKind::Co, false},
                   Case{IntegralFlavor::DualCoop, DualKind::Coop, false}}) {
      auto r = integrate(d, c.flavor);
      CHECK(validate(*r.total).ok());
      CHECK(validate_functor(r.projection).ok());
      CHECK(equal_presentation(*r.projection.tgt, *base));
      auto fib = fiber(r.projection, 0);
      TwoCatPtr expect = c.dual_none ? val : dual(val, c.fiber_dual);
      CHECK(find_isomorphism(*fib.fiber, *expect).has_value());
    }
  }
}

TEST_CASE("the sixteen flavor descriptions hold cell-for-cell") {
  // base: the walking 2-cell; values: the commutative monoid Z/2 as a
  // one-object category, with the nonidentity base 2-cell acting by the
  // nontrivial 1-cell. The symmetry makes the same data well-typed for all
  // four variances.
  auto base = walking_two_cell();
  auto m2 = cyclic_monoid_cat(2);
  auto idm = identity_functor(m2);
  Transformation act;
  act.kind = TransKind::Strict;
  act.from = idm;
  act.to = idm;
  act.comp_obj = {1};  // the nonidentity endocell
  act.comp_one.resize(m2->n_one());
  for (int f = 0; f < m2->n_one(); ++f)
    act.comp_one[f] = m2->id2(m2->comp1(1, f));
  REQUIRE(validate_transformation(act).ok());

  for (auto variance : {Variance::Cov, Variance::Op, Variance::Co, Variance::Coop}) {
    Diagram d;
    d.base = base;
    d.variance = variance;
    d.ob_val = {m2, m2};
    d.one_val = {idm, idm, idm, idm};
    d.two_val.resize(base->n_two());
    for (int t2 = 0; t2 < base->n_two(); ++t2)
      d.two_val[t2] = base->is_id2(t2) ? identity_transformation(idm) : act;
    REQUIRE(validate_diagram(d).ok());
    bool src_side = (variance == Variance::Op || variance == Variance::Coop);
    for (auto flavor : {IntegralFlavor::Primary, IntegralFlavor::DualOp,
                        IntegralFlavor::DualCo, IntegralFlavor::DualCoop}) {
      auto r = integrate(d, flavor);
      REQUIRE(validate(*r.total).ok());
      bool r_backward = (flavor == IntegralFlavor::DualOp || flavor == IntegralFlavor::DualCoop);
      // structure of the phi law per (variance, flavor): whether gamma's
      // component multiplies r or s, and the direction of phi
      const TwoCat& T = *r.total;
      const TwoCat& V = *m2;
      for (int t2 = 0; t2 < T.n_two(); ++t2) {
        int l1 = T.twos[t2].src, l2 = T.twos[t2].tgt;
        int gam = r.two_g[t2], phi = r.two_phi[t2];
        int rr = r.one_r[l1], ss = r.one_r[l2];
        int gcomp = d.two_val[gam].comp_obj[0];
        // choose the expected boundary per the sixteen descriptions
        int from1 = -1, to1 = -1;
        bool prim_like = (flavor == IntegralFlavor::Primary);
        bool co_like = (flavor == IntegralFlavor::DualCo);
        bool op_like = (flavor == IntegralFlavor::DualOp);
        switch (variance) {
          case Variance::Cov:
            if (prim_like) { from1 = rr; to1 = V.comp1(ss, gcomp); }
            else if (op_like) { from1 = V.comp1(gcomp, rr); to1 = ss; }
            else if (co_like) { from1 = V.comp1(ss, gcomp); to1 = rr; }
            else { from1 = ss; to1 = V.comp1(gcomp, rr); }
            break;
          case Variance::Op:
            if (prim_like) { from1 = V.comp1(gcomp, rr); to1 = ss; }
            else if (op_like) { from1 = rr; to1 = V.comp1(ss, gcomp); }
            else if (co_like) { from1 = ss; to1 = V.comp1(gcomp, rr); }
            else { from1 = V.comp1(ss, gcomp); to1 = rr; }
            break;
          case Variance::Co:
            // the DualOp/DualCoop laws follow the defining conjugation
            // formulas; the thesis's concrete rewrites of these two are
            // ill-typed (the component composite does not compose)
            if (prim_like) { from1 = V.comp1(rr, gcomp); to1 = ss; }
            else if (op_like) { from1 = rr; to1 = V.comp1(gcomp, ss); }
            else if (co_like) { from1 = ss; to1 = V.comp1(rr, gcomp); }
            else { from1 = V.comp1(gcomp, ss); to1 = rr; }
            break;
          case Variance::Coop:
            if (prim_like) { from1 = rr; to1 = V.comp1(gcomp, ss); }
            else if (op_like) { from1 = V.comp1(rr, gcomp); to1 = ss; }
            else if (co_like) { from1 = V.comp1(gcomp, ss); to1 = rr; }
            else { from1 = ss; to1 = V.comp1(rr, gcomp); }
            break;
        }
        CHECK(V.twos[phi].src == from1);
        CHECK(V.twos[phi].tgt == to1);
      }
      (void)src_side;
      (void)r_backward;
    }
  }
}

TEST_CASE("primary variants against hand-rolled descriptions on a poset diagram") {
  // For a covariant constant diagram, compare 1-cell counts of each flavor
  // against the explicit descriptions: r runs forwards for Primary/DualCo
  // and backwards for DualOp/DualCoop.
  auto val = ordinal(1);
  auto base = ordinal(1);
  auto d = constant_diagram(base, val);
  auto count_ones = [&](IntegralFlavor fl) {
    return integrate(d, fl).total->n_one();
  };
  // by the explicit formulas the four flavors of a constant integral over
  // [1] x [1] all have the same number of 1-cells as the product
  int prod_ones = product(*base, *val)->n_one();
  CHECK(count_ones(IntegralFlavor::Primary) == prod_ones);
  CHECK(count_ones(IntegralFlavor::DualOp) == prod_ones);
  CHECK(count_ones(IntegralFlavor::DualCo) == prod_ones);
  CHECK(count_ones(IntegralFlavor::DualCoop) == prod_ones);
}

TEST_CASE("jk pair on the covariant integral") {
  for (auto dmk : {0, 1}) {
    Diagram d = dmk == 0 ? step_diagram() : twocell_diagram();
    auto r = integrate(d);
    const TwoCat& A = *d.base;
    for (int a = 0; a < A.n_obj(); ++a) {
      auto jk = jk_pair(d, r, a);
      CHECK(validate_functor(jk.j).ok());
      CHECK(validate_functor(jk.k).ok());
      CHECK(is_strict(jk.j));
      CHECK(is_strict(jk.k));
      // K J = 1 table-for-table
      auto kj = compose_functors(jk.k, jk.j);
      auto idf = identity_functor(jk.fib.fiber);
      CHECK(kj.ob_map == idf.ob_map);
      CHECK(kj.one_map == idf.one_map);
      CHECK(kj.two_map == idf.two_map);
      // the canonical colax transformation 1 => JK validates
      CHECK(validate_transformation(jk.unit).ok());
      // the (K,J) data passes the ALC validator
      CHECK(validate_lax_colax_adjunction(jk.adj).ok());
      // K_a is a left lax preadjoint, J_a a right colax preadjoint
      CHECK(is_preadjoint(jk.k, Side::Left, Direction::Lax).holds);
      CHECK(is_preadjoint(jk.j, Side::Right, Direction::Colax).holds);
    }
  }
}

TEST_CASE("jk pair for the dual variances") {
  auto base = ordinal(1);
  auto val = walking_two_cell();
  for (auto v : {Variance::Op, Variance::Co, Variance::Coop}) {
    auto d = constant_diagram(base, val, v);
    auto r = integrate(d);
    for (int a = 0; a <= 1; ++a) {
      auto jk = jk_pair(d, r, a);
      CHECK(is_strict(jk.j));
      CHECK(is_strict(jk.k));
      auto kj = compose_functors(jk.k, jk.j);
      auto idf = identity_functor(jk.fib.fiber);
      CHECK(kj.ob_map == idf.ob_map);
      CHECK(kj.one_map == idf.one_map);
      CHECK(kj.two_map == idf.two_map);
      CHECK(validate_transformation(jk.unit).ok());
      // the comparison kind per variance: colax JK => 1 (op),
      // lax 1 => JK (co), lax JK => 1 (coop)
      if (v == Variance::Op) CHECK(jk.unit.kind == TransKind::Colax);
      if (v == Variance::Co) CHECK(jk.unit.kind == TransKind::Lax);
      if (v == Variance::Coop) CHECK(jk.unit.kind == TransKind::Lax);
      CHECK(validate_lax_colax_adjunction(jk.adj).ok());
      // the dualized fiber matches the fiber of the dualized projection
      auto fib = fiber(r.projection, a);
      CHECK(find_isomorphism(*jk.fib.fiber, *fib.fiber).has_value());
    }
  }
}

TEST_CASE("integrate_transformation") {
  auto g = cyclic_group_cat(2);
  auto base = ordinal(1);
  auto d1 = constant_diagram(base, g);
  auto d2 = constant_diagram(base, g);
  DiagramMorphism m;
  m.comp = {identity_functor(g), identity_functor(g)};
  REQUIRE(validate_diagram_morphism(d1, d2, m).ok());
  auto i1 = integrate(d1);
  auto i2 = integrate(d2);
  auto f = integrate_transformation(d1, d2, m, i1, i2);
  CHECK(validate_functor(f).ok());
  // sigma identity: identity functor
  for (std::size_t i = 0; i < f.ob_map.size(); ++i)
    CHECK(f.ob_map[i] == static_cast<int>(i));
  // projection triangle commutes table-for-table
  auto left = compose_functors(i2.projection, f);
  CHECK(left.ob_map == i1.projection.ob_map);
  CHECK(left.one_map == i1.projection.one_map);
  CHECK(left.two_map == i1.projection.two_map);
  // J-square commutes: (int sigma)_a . J_a = J_a . sigma_a-fiber
  for (int a = 0; a <= 1; ++a) {
    auto jk1 = jk_pair(d1, i1, a);
    auto jk2 = jk_pair(d2, i2, a);
    // restriction of f to the fibers
    const TwoCat& F1 = *jk1.fib.fiber;
    std::vector<int> om(F1.n_obj()), fm(F1.n_one()), tm(F1.n_two());
    std::vector<int> ro(i2.total->n_obj(), -1), rf(i2.total->n_one(), -1),
        rt(i2.total->n_two(), -1);
    for (std::size_t i = 0; i < jk2.fib.obj_of.size(); ++i) ro[jk2.fib.obj_of[i]] = i;
    for (std::size_t i = 0; i < jk2.fib.one_of.size(); ++i) rf[jk2.fib.one_of[i]] = i;
    for (std::size_t i = 0; i < jk2.fib.two_of.size(); ++i) rt[jk2.fib.two_of[i]] = i;
    for (int o = 0; o < F1.n_obj(); ++o) om[o] = ro[f.ob(jk1.fib.obj_of[o])];
    for (int l = 0; l < F1.n_one(); ++l) fm[l] = rf[f.one(jk1.fib.one_of[l])];
    for (int t = 0; t < F1.n_two(); ++t) tm[t] = rt[f.two(jk1.fib.two_of[t])];
    auto f_fib = make_strict(jk1.fib.fiber, jk2.fib.fiber, om, fm, tm);
    // the slice-level restriction of f
    auto sl_map = induced_slice_morphism(f, i2.projection, i1.projection,
                                         identity_transformation(i1.projection), a,
                                         SliceVariant::LaxOver);
    // compare (sl_map . J_1) with (J_2 . f_fib) on maps
    auto lhs = compose_functors(sl_map, jk1.j);
    auto rhs = compose_functors(jk2.j, f_fib);
    CHECK(lhs.ob_map == rhs.ob_map);
    CHECK(lhs.one_map == rhs.one_map);
    CHECK(lhs.two_map == rhs.two_map);
  }
}

TEST_CASE("cylinder S1") {
  for (const auto& a : {point_cat(), ordinal(1), walking_two_cell(), cyclic_group_cat(2)}) {
    auto c = cylinder_s1(a);
    CHECK(validate(*c.cyl).ok());
    CHECK(validate_functor(c.s).ok());
    CHECK(validate_functor(c.t).ok());
    CHECK(c.cyl->n_obj() == a->n_one());
    auto src = cylinder_s1_integral_src(a, c);
    CHECK(validate(*src.integral.total).ok());
    CHECK(validate_functor(src.to_integral).ok());
    CHECK(validate_functor(src.from_integral).ok());
    auto rt = compose_functors(src.from_integral, src.to_integral);
    for (std::size_t i = 0; i < rt.ob_map.size(); ++i)
      CHECK(rt.ob_map[i] == static_cast<int>(i));
    for (std::size_t i = 0; i < rt.one_map.size(); ++i)
      CHECK(rt.one_map[i] == static_cast<int>(i));
    auto tgt = cylinder_s1_integral_tgt(a, c);
    CHECK(validate_functor(tgt.to_integral).ok());
    CHECK(validate_functor(tgt.from_integral).ok());
    auto rt2 = compose_functors(tgt.from_integral, tgt.to_integral);
    for (std::size_t i = 0; i < rt2.one_map.size(); ++i)
      CHECK(rt2.one_map[i] == static_cast<int>(i));
  }
  // S1(e) is the point
  auto ce = cylinder_s1(point_cat());
  CHECK(find_isomorphism(*ce.cyl, *point_cat()).has_value());
  // |objects of S1([1])| = 3
  CHECK(static_cast<int>(cylinder_s1(ordinal(1)).obj_k.size()) == 3);
  // projections are preopfibrations
  auto c1 = cylinder_s1(ordinal(1));
  CHECK(is_prefibration(c1.s, FibrationVariant::PreOp).holds);
  CHECK(is_prefibration(c1.t, FibrationVariant::PreOp).holds);
}

TEST_CASE("cylinder S2") {
  for (const auto& a : {point_cat(), ordinal(1), walking_two_cell(), cyclic_group_cat(2)}) {
    auto c = cylinder_s2(a);
    CHECK(validate(*c.cyl).ok());
    CHECK(validate_functor(c.s).ok());
    CHECK(validate_functor(c.t).ok());
    auto src = cylinder_s2_integral_src(a, c);
    CHECK(validate_functor(src.to_integral).ok());
    CHECK(validate_functor(src.from_integral).ok());
    auto rt = compose_functors(src.from_integral, src.to_integral);
    for (std::size_t i = 0; i < rt.one_map.size(); ++i)
      CHECK(rt.one_map[i] == static_cast<int>(i));
    auto tgt = cylinder_s2_integral_tgt(a, c);
    CHECK(validate_functor(tgt.to_integral).ok());
    CHECK(validate_functor(tgt.from_integral).ok());
    auto rt2 = compose_functors(tgt.from_integral, tgt.to_integral);
    for (std::size_t i = 0; i < rt2.one_map.size(); ++i)
      CHECK(rt2.one_map[i] == static_cast<int>(i));
  }
  // s2 is a prefibration, t2 a preopfibration
  auto c1 = cylinder_s2(ordinal(1));
  CHECK(is_prefibration(c1.s, FibrationVariant::Pre).holds);
  CHECK(is_prefibration(c1.t, FibrationVariant::PreOp).holds);
}

TEST_CASE("cylinder functoriality S_i(u)") {
  auto a = ordinal(1);
  auto b = ordinal(2);
  std::vector<int> om{0, 2};
  std::vector<int> fm{b->one_index("0<=0"), b->one_index("0<=2"), b->one_index("2<=2")};
  std::vector<int> tm{b->id2(fm[0]), b->id2(fm[1]), b->id2(fm[2])};
  auto u = make_strict(a, b, om, fm, tm);
  REQUIRE(validate_functor(u).ok());
  auto ca = cylinder_s1(a), cb = cylinder_s1(b);
  auto s1u = cylinder_s1_map(ca, cb, u);
  CHECK(validate_functor(s1u).ok());
  // the square with s and t commutes
  auto lhs = compose_functors(cb.t, s1u);
  auto rhs = compose_functors(u, ca.t);
  CHECK(lhs.ob_map == rhs.ob_map);
  CHECK(lhs.one_map == rhs.one_map);
  auto ca2 = cylinder_s2(a), cb2 = cylinder_s2(b);
  auto s2u = cylinder_s2_map(ca2, cb2, u);
  CHECK(validate_functor(s2u).ok());
}

TEST_CASE("cylinder of a morphism") {
  auto a = ordinal(1);
  auto b = ordinal(2);
  std::vector<int> om{0, 1};
  std::vector<int> fm{b->one_index("0<=0"), b->one_index("0<=1"), b->one_index("1<=1")};
  std::vector<int> tm{b->id2(fm[0]), b->id2(fm[1]), b->id2(fm[2])};
  auto u = make_strict(a, b, om, fm, tm);
  auto cu = cylinder_of_morphism(u);
  CHECK(validate(*cu.cyl).ok());
  CHECK(validate_functor(cu.s).ok());
  CHECK(validate_functor(cu.t).ok());
  // S(id_e) = e
  auto ce = cylinder_of_morphism(identity_functor(point_cat()));
  CHECK(find_isomorphism(*ce.cyl, *point_cat()).has_value());
  // projections are precoopfibrations (t_u always; s_u as well)
  CHECK(is_prefibration(cu.t, FibrationVariant::PreCoop).holds);
  // fiber of t_u over a is dual(slice(id_B, u(a), colax_over), op)
  for (int ax = 0; ax < a->n_obj(); ++ax) {
    auto fib = fiber(cu.t, ax);
    LaxFunctor idb = identity_functor(b);
    idb.dir = Direction::Colax;
    auto sl = slice(idb, u.ob(ax), SliceVariant::ColaxOver);
    CHECK(find_isomorphism(*fib.fiber, *dual(sl.slice, DualKind::Op)).has_value());
  }
  // S(id_A) vs S1(A): compare on a poset (identity 2-cells only)
  auto cid = cylinder_of_morphism(identity_functor(a));
  auto c1 = cylinder_s1(a);
  CHECK(find_isomorphism(*cid.cyl, *c1.cyl).has_value());
  // S(v,w) functoriality square
  auto cv = cylinder_of_morphism(identity_functor(a));
  auto svw = cylinder_morphism_map(cv, cu, identity_functor(a), u);
  CHECK(validate_functor(svw).ok());
  auto lhs = compose_functors(cu.t, svw);
  auto rhs = compose_functors(identity_functor(a), cv.t);
  CHECK(lhs.ob_map == rhs.ob_map);
  CHECK(lhs.one_map == rhs.one_map);
}

TEST_CASE("S(id_A) versus S1(A)") {
  // with invertible 2-cells the two cylinders are isomorphic
  for (const auto& a : {ordinal(2), cyclic_group_cat(2)}) {
    auto cid = cylinder_of_morphism(identity_functor(a));
    auto c1 = cylinder_s1(a);
    CHECK(find_isomorphism(*cid.cyl, *c1.cyl).has_value());
  }
  // with a noninvertible 2-cell they differ; the identification that holds
  // in general is S1(A) = co-dual of S(1_{A^co})
  auto a = walking_two_cell();
  auto cid = cylinder_of_morphism(identity_functor(a));
  auto c1 = cylinder_s1(a);
  CHECK(cid.cyl->n_two() == c1.cyl->n_two());
  CHECK(!find_isomorphism(*cid.cyl, *c1.cyl).has_value());
  auto cid_co = cylinder_of_morphism(identity_functor(dual(a, DualKind::Co)));
  CHECK(find_isomorphism(*dual(cid_co.cyl, DualKind::Co), *c1.cyl).has_value());
}
