#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/homology.hpp"
#include "twocat/nerve.hpp"

#include <sstream>

using namespace twocat;
using namespace twofix;

namespace {

bool equal_sset(const TruncatedSSet& a, const TruncatedSSet& b) {
  return a.dim == b.dim && a.names == b.names && a.face == b.face && a.degen == b.degen &&
         a.degenerate == b.degenerate;
}

// independent oracle: normalized 2-cocycles on the m-simplex with Z/p
// coefficients, counted by brute force over all assignments
long long cocycle_count(int m, int p) {
  std::vector<std::array<int, 3>> triples;
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) triples.push_back({i, j, k});
  long long count = 0;
  std::vector<int> c(triples.size(), 0);
  auto val = [&](int i, int j, int k) {
    if (i == j || j == k) return 0;
    for (std::size_t t = 0; t < triples.size(); ++t)
      if (triples[t][0] == i && triples[t][1] == j && triples[t][2] == k)
        return c[t];
    return -1;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == triples.size()) {
      for (int l = 0; l <= m; ++l)
        for (int k = 0; k < l; ++k)
          for (int j = 0; j < k; ++j)
            for (int i = 0; i < j; ++i)
              if ((val(j, k, l) + val(i, j, l)) % p != (val(i, k, l) + val(i, j, k)) % p)
                return;
      ++count;
      return;
    }
    for (int v = 0; v < p; ++v) {
      c[t] = v;
      rec(t + 1);
    }
  };
  rec(0);
  return count;
}

// independent oracle: F_p Betti numbers of the normalized chain complex by
// Gaussian elimination mod p
std::vector<int> fp_betti(const TruncatedSSet& x, int k_max, int p) {
  ChainComplex cc = normalized_chains(x, k_max);
  auto rank_mod_p = [&](std::vector<std::vector<long long>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (auto& row : m)
      for (auto& v : row) v = ((v % p) + p) % p;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
      int piv = -1;
      for (int r = rank; r < rows; ++r)
        if (m[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[rank], m[piv]);
      long long inv = 1;
      for (long long t = 1; t < p; ++t)
        if (m[rank][c] * t % p == 1) inv = t;
      for (int cc2 = 0; cc2 < cols; ++cc2) m[rank][cc2] = m[rank][cc2] * inv % p;
      for (int r = 0; r < rows; ++r) {
        if (r == rank || m[r][c] == 0) continue;
        long long f = m[r][c];
        for (int cc2 = 0; cc2 < cols; ++cc2)
          m[r][cc2] = ((m[r][cc2] - f * m[rank][cc2]) % p + p) % p;
      }
      ++rank;
    }
    return rank;
  };
  std::vector<int> betti(k_max + 1);
  std::vector<int> rank(k_max + 2, 0);
  for (int k = 1; k <= k_max + 1; ++k) rank[k] = rank_mod_p(cc.boundary[k]);
  for (int k = 0; k <= k_max; ++k)
    betti[k] = cc.dims[k] - (k >= 1 ? rank[k] : 0) - rank[k + 1];
  return betti;
}

}  // namespace

TEST_CASE("nerve of ordinal(1), normalized lax, dim 3") {
  auto n = nerve(ordinal(1), NerveVariant::LaxNor, 3);
  CHECK(validate_sset(n.sset).ok());
  CHECK(n.sset.nondegenerate_count(0) == 2);
  CHECK(n.sset.nondegenerate_count(1) == 1);
  CHECK(n.sset.nondegenerate_count(2) == 0);
  CHECK(n.sset.nondegenerate_count(3) == 0);
}

TEST_CASE("K(G,2) simplex counts against the cocycle oracle") {
  // oracle values first
  CHECK(cocycle_count(2, 2) == 2);
  CHECK(cocycle_count(3, 2) == 8);
  CHECK(cocycle_count(4, 2) == 64);
  auto n2 = nerve(cyclic_group_cat(2), NerveVariant::LaxNor, 4);
  CHECK(validate_sset(n2.sset).ok());
  for (int m = 0; m <= 4; ++m)
    CHECK(n2.sset.count(m) == cocycle_count(m, 2));
  CHECK(n2.sset.count(0) == 1);
  CHECK(n2.sset.count(1) == 1);
  CHECK(n2.sset.count(2) == 2);
  CHECK(n2.sset.count(3) == 8);
  CHECK(n2.sset.count(4) == 64);

  auto n3 = nerve(cyclic_group_cat(3), NerveVariant::LaxNor, 4);
  for (int m = 0; m <= 4; ++m)
    CHECK(n3.sset.count(m) == cocycle_count(m, 3));
}

TEST_CASE("classical nerve and the lax-normalized nerve agree on categories") {
  auto c = classical_nerve(ordinal(2), 3);
  CHECK(validate_sset(c.sset).ok());
  CHECK(c.sset.nondegenerate_count(0) == 3);
  CHECK(c.sset.nondegenerate_count(1) == 3);
  CHECK(c.sset.nondegenerate_count(2) == 1);
  CHECK(c.sset.nondegenerate_count(3) == 0);
  std::mt19937 rng(131);
  for (int it = 0; it < 6; ++it) {
    TwoCatPtr cat;
    switch (it % 3) {
      case 0: cat = ordinal(1 + static_cast<int>(rng() % 3)); break;
      case 1: cat = cyclic_monoid_cat(2 + static_cast<int>(rng() % 2)); break;
      default: cat = tau_b(*bipartite_preorder_cat(2, {{0, 1}})); break;
    }
    auto lhs = nerve(cat, NerveVariant::LaxNor, 4);
    auto rhs = classical_nerve(cat, 4);
    CHECK(equal_sset(lhs.sset, rhs.sset));
  }
}

TEST_CASE("enumeration budgets throw") {
  CHECK_THROWS_AS(nerve(cyclic_group_cat(3), NerveVariant::LaxNor, 4, 50), Error);
  CHECK_THROWS_AS(nerve_strict(cyclic_group_cat(2), 3, 10), Error);
}

TEST_CASE("general lax nerve") {
  // dimension-0 lax simplices of a poset: only identities (a monad on a
  // poset object is trivial)
  auto n = nerve(ordinal(1), NerveVariant::Lax, 2);
  CHECK(validate_sset(n.sset).ok());
  CHECK(n.sset.count(0) == 2);
  // BZ/2: a 0-simplex is a monad (f, unit, mult) with mult = -unit; the
  // unit is free, so there are exactly |G| of them
  auto ng = nerve(cyclic_group_cat(2), NerveVariant::Lax, 2);
  CHECK(validate_sset(ng.sset).ok());
  CHECK(ng.sset.count(0) == 2);
}

TEST_CASE("homology of fixtures") {
  auto n1 = nerve(ordinal(1), NerveVariant::LaxNor, 3);
  auto h1 = homology(n1.sset, 1);
  CHECK(h1.groups[0] == HomologyGroup{1, {}});
  CHECK(h1.groups[1] == HomologyGroup{0, {}});

  auto n2 = nerve(cyclic_group_cat(2), NerveVariant::LaxNor, 4);
  auto h2 = homology(n2.sset, 2);
  CHECK(h2.groups[0] == HomologyGroup{1, {}});
  CHECK(h2.groups[1] == HomologyGroup{0, {}});
  CHECK(h2.groups[2] == HomologyGroup{0, {2}});
  // independent F_p oracle
  auto b2 = fp_betti(n2.sset, 2, 2);
  CHECK(b2 == std::vector<int>{1, 0, 1});
  auto b5 = fp_betti(n2.sset, 2, 5);
  CHECK(b5 == std::vector<int>{1, 0, 0});

  auto n3 = nerve(cyclic_group_cat(3), NerveVariant::LaxNor, 4);
  auto h3 = homology(n3.sset, 2);
  CHECK(h3.groups[2] == HomologyGroup{0, {3}});
  auto b3 = fp_betti(n3.sset, 2, 3);
  CHECK(b3 == std::vector<int>{1, 0, 1});

  // disjoint union doubles H_0
  auto cp = coproduct(*ordinal(1), *ordinal(1));
  auto nc = nerve(cp, NerveVariant::LaxNor, 2);
  auto hc = homology(nc.sset, 1);
  CHECK(hc.groups[0].free_rank == 2);
  CHECK(pi0_sset(nc.sset) == 2);
}

TEST_CASE("strict nerve and diagonal") {
  auto g = cyclic_group_cat(2);
  auto bs = nerve_strict(g, 3);
  CHECK(validate_bisset(bs).ok());
  // level 0 is discrete on objects; level 1 of BG has |G|^n n-cells
  CHECK(bs.names[0][0].size() == 1);
  for (int n = 0; n <= 3; ++n)
    CHECK(bs.names[1][n].size() == static_cast<std::size_t>(1 << n));
  auto d = diagonal(bs);
  CHECK(validate_sset(d).ok());

  // for a 1-category the diagonal has the homotopy type of the classical
  // nerve (equal counts and homology on the truncation)
  auto c = ordinal(2);
  auto bsc = nerve_strict(c, 3);
  auto dc = diagonal(bsc);
  auto cn = classical_nerve(c, 3);
  for (int m = 0; m <= 3; ++m) CHECK(dc.count(m) == cn.sset.count(m));
  auto hd = homology(dc, 2);
  auto hn = homology(cn.sset, 2);
  for (int k = 0; k <= 2; ++k) CHECK(hd.groups[k] == hn.groups[k]);

  // diagonal of a bisimplicial set constant in one direction: the strict
  // nerve of a 1-category is vertically constant on nondegenerate data
  CHECK(pi0_sset(dc) == 1);
}

TEST_CASE("category of simplices") {
  auto cn = classical_nerve(ordinal(1), 2);
  auto sc = category_of_simplices(cn.sset);
  CHECK(sc.cat->n_obj() == 9);  // 2 + 3 + 4
  CHECK(validate(*sc.cat).ok());
  CHECK(is_category(*sc.cat));

  // nerve of the point: the full subcategory Delta_{<=d}
  auto ne = nerve(point_cat(), NerveVariant::LaxNor, 2);
  auto sce = category_of_simplices(ne.sset);
  CHECK(sce.cat->n_obj() == 3);
  int expected = 0;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      // monotone maps [m] -> [n]: C(m+n+1, m+1)
      int c = 1;
      for (int i = 1; i <= m + 1; ++i) c = c * (n + 1 + i - 1) / i;
      expected += c;
    }
  CHECK(sce.cat->n_one() == expected);
}

TEST_CASE("sup morphisms") {
  // sup1 on a 1-category: strict, value x_m
  auto a1 = ordinal(2);
  auto s1 = sup(a1, SupVariant::Sup1, 2);
  CHECK(validate_functor(s1.functor).ok());
  CHECK(is_strict(s1.functor));
  for (int o = 0; o < s1.source->n_obj(); ++o) {
    auto [m, i] = s1.simplices.obj[o];
    CHECK(s1.functor.ob(o) >= 0);
    (void)m;
    (void)i;
  }

  // sup_lax_nor on a genuine 2-category
  auto g = cyclic_group_cat(2);
  auto sl = sup(g, SupVariant::SupLaxNor, 3);
  CHECK(validate_functor(sl.functor).ok());
  CHECK(is_normalized(sl.functor));

  // sup_lax on the general lax nerve
  auto slx = sup(g, SupVariant::SupLax, 2);
  CHECK(validate_functor(slx.functor).ok());

  // the categorical variants
  auto scl = sup(g, SupVariant::SupCatLaxNor, 2);
  CHECK(validate_functor(scl.functor).ok());
  auto sh = sup(g, SupVariant::SupHom, 2);
  CHECK(validate_functor(sh.functor).ok());

  // sup_lax_nor = sup_cat_lax_nor o inclusion: the simplex-only morphisms
  // of the categorical source restrict to the plain category of simplices;
  // on a 1-category both coincide with sup1's values
  auto s1b = sup(a1, SupVariant::SupLaxNor, 2);
  CHECK(validate_functor(s1b.functor).ok());
  CHECK(s1b.functor.ob_map == s1.functor.ob_map);
  CHECK(s1b.functor.one_map == s1.functor.one_map);

  // naturality square with a strict functor u (poset inclusion)
  auto b1 = ordinal(1);
  std::vector<int> om{0, 1};
  std::vector<int> fm{a1->one_index("0<=0"), a1->one_index("0<=1"), a1->one_index("1<=1")};
  std::vector<int> tm{a1->id2(fm[0]), a1->id2(fm[1]), a1->id2(fm[2])};
  auto u = make_strict(b1, a1, om, fm, tm);
  auto supb = sup(b1, SupVariant::SupLaxNor, 2);
  auto supa = sup(a1, SupVariant::SupLaxNor, 2);
  auto nb = nerve(b1, NerveVariant::LaxNor, 2);
  auto na = nerve(a1, NerveVariant::LaxNor, 2);
  // induced functor on the categories of simplices
  const TwoCat& CB = *supb.source;
  std::vector<int> mo(CB.n_obj()), mf(CB.n_one()), mt(CB.n_two());
  auto push_simplex = [&](const Simplex& s) {
    Simplex r = s;
    for (auto& o : r.obs) o = u.ob(o);
    for (auto& f : r.one) f = u.one(f);
    for (auto& t : r.two) t = u.two(t);
    for (auto& t : r.unit) t = u.two(t);
    return r;
  };
  for (int o = 0; o < CB.n_obj(); ++o) {
    auto [m, i] = supb.simplices.obj[o];
    Simplex img = push_simplex(nb.simplices[m][i]);
    int found = -1;
    for (std::size_t j = 0; j < na.simplices[m].size(); ++j)
      if (na.simplices[m][j].key() == img.key()) found = static_cast<int>(j);
    REQUIRE(found >= 0);
    for (std::size_t oo = 0; oo < supa.simplices.obj.size(); ++oo)
      if (supa.simplices.obj[oo] == std::make_pair(m, found)) mo[o] = static_cast<int>(oo);
  }
  const TwoCat& CA = *supa.source;
  for (int l = 0; l < CB.n_one(); ++l) {
    for (int l2 = 0; l2 < CA.n_one(); ++l2)
      if (CA.ones[l2].src == mo[CB.ones[l].src] && CA.ones[l2].tgt == mo[CB.ones[l].tgt] &&
          supa.simplices.one_map[l2] == supb.simplices.one_map[l])
        mf[l] = l2;
  }
  for (int t = 0; t < CB.n_two(); ++t) mt[t] = CA.id2(mf[CB.twos[t].src]);
  auto nmap = make_strict(supb.source, supa.source, mo, mf, mt);
  REQUIRE(validate_functor(nmap).ok());
  auto lhs = compose_functors(u, supb.functor);
  auto rhs = compose_functors(supa.functor, nmap);
  CHECK(lhs.ob_map == rhs.ob_map);
  CHECK(lhs.one_map == rhs.one_map);
  CHECK(lhs.two_map == rhs.two_map);
  CHECK(lhs.comp_cell == rhs.comp_cell);
}

TEST_CASE("sup_lax_nor factors through sup_cat_lax_nor") {
  auto g = cyclic_group_cat(2);
  int d = 2;
  auto plain = sup(g, SupVariant::SupLaxNor, d);
  auto cat = sup(g, SupVariant::SupCatLaxNor, d);
  auto nr = nerve(g, NerveVariant::LaxNor, d);
  const TwoCat& CP = *plain.source;
  const TwoCat& CC = *cat.source;
  // the inclusion: objects match by simplex, a simplex-map morphism phi
  // goes to (phi, identity family)
  std::vector<int> om(CP.n_obj()), fm(CP.n_one()), tm(CP.n_two());
  for (int o = 0; o < CP.n_obj(); ++o) {
    auto [m, i] = plain.simplices.obj[o];
    // cat source enumerates the same simplices in the same order
    om[o] = -1;
    int seen = 0;
    for (int oo = 0; oo < CC.n_obj(); ++oo) {
      (void)seen;
      // match via the functor data: same dimension index pair
      // (cat.sup's objects are exactly nr.simplices in order)
      if (oo == o) om[o] = oo;
    }
    REQUIRE(om[o] >= 0);
    (void)m;
    (void)i;
  }
  auto find_cc_one = [&](int so, int to, const std::vector<int>& phi,
                         const std::vector<int>& fam) {
    for (int l = 0; l < CC.n_one(); ++l)
      if (CC.ones[l].src == so && CC.ones[l].tgt == to) {
        // names encode (phi|fam)#src.tgt deterministically; rebuild and match
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < phi.size(); ++i) os << (i ? "," : "") << phi[i];
        os << "|";
        for (std::size_t i = 0; i < fam.size(); ++i) os << (i ? "," : "") << fam[i];
        os << ")#" << so << "." << to;
        if (CC.ones[l].name == os.str()) return l;
      }
    return -1;
  };
  for (int l = 0; l < CP.n_one(); ++l) {
    auto [m, i] = plain.simplices.obj[CP.ones[l].src];
    const Simplex& x = nr.simplices[m][i];
    std::vector<int> fam;
    for (int j = 1; j <= m; ++j)
      for (int ii = 0; ii < j; ++ii) fam.push_back(g->id2(x.one[pair_index(ii, j)]));
    fm[l] = find_cc_one(om[CP.ones[l].src], om[CP.ones[l].tgt],
                        plain.simplices.one_map[l], fam);
    REQUIRE(fm[l] >= 0);
  }
  for (int t2 = 0; t2 < CP.n_two(); ++t2) tm[t2] = CC.id2(fm[CP.twos[t2].src]);
  auto incl = make_strict(plain.source, cat.source, om, fm, tm);
  REQUIRE(validate_functor(incl).ok());
  auto lhs = compose_functors(cat.functor, incl);
  CHECK(lhs.ob_map == plain.functor.ob_map);
  CHECK(lhs.one_map == plain.functor.one_map);
  CHECK(lhs.two_map == plain.functor.two_map);
  CHECK(lhs.comp_cell == plain.functor.comp_cell);
  CHECK(lhs.unit_cell == plain.functor.unit_cell);
}

TEST_CASE("decalage") {
  // on the point: D appends the unique vertex
  auto e = point_cat();
  auto we = has_object_admitting_final(*e);
  REQUIRE(we.has_value());
  auto de = decalage(e, *we, 2);
  CHECK(validate_functor(de.incl).ok());
  CHECK(validate_functor(de.d).ok());
  CHECK(validate_transformation(de.iota).ok());
  CHECK(validate_transformation(de.omega).ok());

  // poset fixture
  auto a = ordinal(2);
  auto w = has_object_admitting_final(*a);
  REQUIRE(w.has_value());
  CHECK(w->z == 2);
  auto dr = decalage(a, *w, 3);
  CHECK(validate_functor(dr.incl).ok());
  CHECK(validate_functor(dr.d).ok());
  CHECK(validate_functor(dr.z).ok());
  CHECK(validate_transformation(dr.iota).ok());
  CHECK(validate_transformation(dr.omega).ok());
  // D raises simplex dimension by exactly one
  auto full = category_of_simplices(nerve(a, NerveVariant::LaxNor, 3).sset);
  for (std::size_t o = 0; o < dr.d.ob_map.size(); ++o) {
    // the image object lives one dimension higher
    auto sub_cat = category_of_simplices(nerve(a, NerveVariant::LaxNor, 2).sset);
    CHECK(full.obj[dr.d.ob(static_cast<int>(o))].first ==
          sub_cat.obj[o].first + 1);
  }
  // a 2-category fixture with a final-admitting object: colax slice of id
  auto g = cyclic_group_cat(2);
  auto idg = identity_functor(g);
  LaxFunctor idgc = idg;
  idgc.dir = Direction::Colax;
  auto sl = slice(idgc, 0, SliceVariant::ColaxOver);
  auto wsl = has_object_admitting_final(*sl.slice);
  REQUIRE(wsl.has_value());
  auto dg = decalage(sl.slice, *wsl, 2);
  CHECK(validate_transformation(dg.iota).ok());
  CHECK(validate_transformation(dg.omega).ok());
}

TEST_CASE("slice over a simplex") {
  auto b2 = ordinal(2);
  auto b1 = ordinal(1);
  std::vector<int> om{0, 1};
  std::vector<int> fm{b2->one_index("0<=0"), b2->one_index("0<=1"), b2->one_index("1<=1")};
  std::vector<int> tm{b2->id2(fm[0]), b2->id2(fm[1]), b2->id2(fm[2])};
  auto u = make_strict(b1, b2, om, fm, tm);
  REQUIRE(validate_functor(u).ok());
  auto nb = nerve(b2, NerveVariant::LaxNor, 2);

  // a 0-simplex: coincides with the colax slice
  for (std::size_t i = 0; i < nb.simplices[0].size(); ++i) {
    auto ss = slice_over_simplex(u, nb.simplices[0][i]);
    CHECK(validate(*ss.slice).ok());
    CHECK(find_isomorphism(*ss.slice, *ss.point_slice.slice).has_value());
  }

  // a nondegenerate 1-simplex
  for (std::size_t i = 0; i < nb.simplices[1].size(); ++i) {
    if (nb.sset.degenerate[1][i]) continue;
    auto ss = slice_over_simplex(u, nb.simplices[1][i]);
    CHECK(validate(*ss.slice).ok());
    CHECK(validate_functor(ss.r).ok());
    CHECK(validate_functor(ss.i).ok());
    // R I = 1 table-for-table
    auto ri = compose_functors(ss.r, ss.i);
    auto idp = identity_functor(ss.point_slice.slice);
    CHECK(ri.ob_map == idp.ob_map);
    CHECK(ri.one_map == idp.one_map);
    CHECK(ri.two_map == idp.two_map);
    // sigma : 1 => I R validates
    CHECK(validate_transformation(ss.sigma).ok());
  }

  // a 2-category target: identity on BZ/2 over its 1-simplex
  auto g = cyclic_group_cat(2);
  auto idg = identity_functor(g);
  auto ng = nerve(g, NerveVariant::LaxNor, 2);
  auto ss = slice_over_simplex(idg, ng.simplices[1][0]);
  CHECK(validate(*ss.slice).ok());
  auto ri = compose_functors(ss.r, ss.i);
  auto idp = identity_functor(ss.point_slice.slice);
  CHECK(ri.one_map == idp.one_map);
  CHECK(validate_transformation(ss.sigma).ok());
}

TEST_CASE("weak equivalence probe") {
  // identity: consistent
  auto g = cyclic_group_cat(2);
  auto pid = we_probe(identity_functor(g), 4, 2);
  CHECK(pid.verdict == ProbeVerdict::Consistent);

  // e -> BZ/2: refuted at degree 2
  auto incl = constant_functor(point_cat(), g, 0);
  auto pg = we_probe(incl, 4, 2);
  CHECK(pg.verdict == ProbeVerdict::Refuted);
  CHECK(pg.detail.find("H_2") != std::string::npos);

  // {0} -> ordinal(1): consistent at the truncation
  auto io = constant_functor(point_cat(), ordinal(1), 0);
  auto po = we_probe(io, 3, 2);
  CHECK(po.verdict == ProbeVerdict::Consistent);

  // pi0 failure: the two-point discrete to the point
  auto two = coproduct(*point_cat(), *point_cat());
  auto col = constant_functor(two, point_cat(), 0);
  auto pc = we_probe(col, 2, 1);
  CHECK(pc.verdict == ProbeVerdict::Refuted);
  CHECK(pc.detail.find("pi0") != std::string::npos);

  // verdicts agree across nerve variants on a fixture
  auto v1 = we_probe(identity_functor(ordinal(1)), 3, 1, NerveVariant::LaxNor);
  auto v2 = we_probe(identity_functor(ordinal(1)), 3, 1, NerveVariant::Lax);
  CHECK(v1.verdict == v2.verdict);
}

TEST_CASE("final-admitting 2-categories have trivial truncated homology") {
  std::vector<TwoCatPtr> fixtures = {ordinal(1), ordinal(2), ordinal(3)};
  {
    auto g = cyclic_group_cat(2);
    LaxFunctor idc = identity_functor(g);
    idc.dir = Direction::Colax;
    fixtures.push_back(slice(idc, 0, SliceVariant::ColaxOver).slice);
  }
  for (const auto& a : fixtures) {
    REQUIRE(has_object_admitting_final(*a).has_value());
    auto n = nerve(a, NerveVariant::LaxNor, 4);
    auto h = homology(n.sset, 2);
    CHECK(h.groups[0] == HomologyGroup{1, {}});
    CHECK(h.groups[1] == HomologyGroup{0, {}});
    CHECK(h.groups[2] == HomologyGroup{0, {}});
  }
}

TEST_CASE("homology is independent of the simplex enumeration order") {
  auto n2 = nerve(cyclic_group_cat(2), NerveVariant::LaxNor, 4);
  // permute simplices in each dimension with a fixed pseudo-random shuffle
  TruncatedSSet x = n2.sset;
  std::mt19937 rng(12345);
  for (int mдim = 0; mдim <= x.dim; ++mдim) {
    int nn = x.count(mдim);
    std::vector<int> perm(nn), inv(nn);
    for (int i = 0; i < nn; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < nn; ++i) inv[perm[i]] = i;
    // apply: new index j = inv[old index]
    std::vector<std::string> names(nn);
    std::vector<bool> deg(nn);
    for (int i = 0; i < nn; ++i) {
      names[inv[i]] = x.names[mдim][i];
      deg[inv[i]] = x.degenerate[mдim][i];
    }
    x.names[mдim] = names;
    x.degenerate[mдim] = deg;
    // fix tables touching this dimension
    if (mдim >= 1)
      for (auto& row : x.face[mдim]) {
        std::vector<int> nr(nn);
        for (int i = 0; i < nn; ++i) nr[inv[i]] = row[i];
        row = nr;
      }
    if (mдim < x.dim)
      for (auto& row : x.degen[mдim]) {
        std::vector<int> nr(nn);
        for (int i = 0; i < nn; ++i) nr[inv[i]] = row[i];
        row = nr;
      }
    // entries pointing INTO dimension mдim
    if (mдim + 1 <= x.dim)
      for (auto& row : x.face[mдim + 1])
        for (auto& v : row) v = inv[v];
    if (mдim >= 1)
      for (auto& row : x.degen[mдim - 1])
        for (auto& v : row) v = inv[v];
  }
  REQUIRE(validate_sset(x).ok());
  auto h1 = homology(n2.sset, 2);
  auto h2 = homology(x, 2);
  for (int k = 0; k <= 2; ++k) CHECK(h1.groups[k] == h2.groups[k]);
}
