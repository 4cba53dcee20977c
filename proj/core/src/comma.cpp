#include "twocat/comma.hpp"

#include <map>
#include <tuple>

namespace twocat {

namespace {

struct CommaBuild {
  CommaResult res;
  std::vector<int> obj_a, obj_b;              // object components
  std::vector<int> one_f, one_g, one_al, one_src, one_tgt;
  std::vector<int> two_phi, two_psi, two_src, two_tgt;
  std::map<std::tuple<int, int, int>, int> obj_idx;            // (a,b,r)
  std::map<std::tuple<int, int, int, int>, int> one_idx;       // (srcO,f,g,al)
  std::map<std::tuple<int, int, int, int>, int> two_idx;       // (src1,tgt1,phi,psi)
};

CommaBuild build_comma(const LaxFunctor& u, const LaxFunctor& v) {
  if (u.dir != Direction::Lax) throw Error("DirectionMismatch", "comma: u must be lax");
  if (v.dir != Direction::Colax && !is_strict(v))
    throw Error("DirectionMismatch", "comma: v must be colax");
  if (!equal_presentation(*u.tgt, *v.tgt))
    throw Error("TargetMismatch", "comma: functors do not share a target");
  const TwoCat& A = *u.src;
  const TwoCat& B = *v.src;
  const TwoCat& C = *u.tgt;

  CommaBuild cb;
  TwoCatBuilder bld;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = 0; b < B.n_obj(); ++b)
      for (int r : C.ones_from_to(u.ob(a), v.ob(b))) {
        int idx = bld.add_object("(" + A.objects[a] + "|" + B.objects[b] + "|" +
                                 C.ones[r].name + ")");
        cb.obj_a.push_back(a);
        cb.obj_b.push_back(b);
        cb.res.obj_r.push_back(r);
        cb.obj_idx[{a, b, r}] = idx;
      }
  const int n_obj = bld.n_obj();

  auto alpha_of_id = [&](int o) {
    // (r o0 u_a) *1 (v_b o0 r)
    int a = cb.obj_a[o], b = cb.obj_b[o], r = cb.res.obj_r[o];
    return C.vcomp(C.whisker_l(r, u.unit(a)), C.whisker_r(v.unit(b), r));
  };

  for (int so = 0; so < n_obj; ++so)
    for (int to = 0; to < n_obj; ++to) {
      int a = cb.obj_a[so], b = cb.obj_b[so], r = cb.res.obj_r[so];
      int ap = cb.obj_a[to], bp = cb.obj_b[to], rp = cb.res.obj_r[to];
      for (int f : A.ones_from_to(a, ap))
        for (int g : B.ones_from_to(b, bp)) {
          int lsrc = C.comp1(v.one(g), r);
          int ltgt = C.comp1(rp, u.one(f));
          for (int al : C.twos_from_to(lsrc, ltgt)) {
            int idx = bld.add_one("(" + A.ones[f].name + "|" + B.ones[g].name + "|" +
                                      C.twos[al].name + ")#" + std::to_string(so) + "." +
                                      std::to_string(to),
                                  so, to);
            cb.one_f.push_back(f);
            cb.one_g.push_back(g);
            cb.one_al.push_back(al);
            cb.one_src.push_back(so);
            cb.one_tgt.push_back(to);
            cb.res.one_alpha.push_back(al);
            cb.one_idx[{so, f, g, al}] = idx;
          }
        }
    }
  const int n_one = bld.n_one();

  for (int o = 0; o < n_obj; ++o) {
    int a = cb.obj_a[o], b = cb.obj_b[o];
    bld.set_id1(o, cb.one_idx.at({o, A.id1(a), B.id1(b), alpha_of_id(o)}));
  }

  for (int l1 = 0; l1 < n_one; ++l1)
    for (int l2 = 0; l2 < n_one; ++l2) {
      if (!(cb.one_src[l1] == cb.one_src[l2] && cb.one_tgt[l1] == cb.one_tgt[l2])) continue;
      int f = cb.one_f[l1], g = cb.one_g[l1], al = cb.one_al[l1];
      int h = cb.one_f[l2], k = cb.one_g[l2], be = cb.one_al[l2];
      int r = cb.res.obj_r[cb.one_src[l1]], rp = cb.res.obj_r[cb.one_tgt[l1]];
      for (int phi : A.twos_from_to(f, h))
        for (int psi : B.twos_from_to(g, k)) {
          // (r' o0 u(phi)) *1 alpha = beta *1 (v(psi) o0 r)
          int lhs = C.vcomp(C.whisker_l(rp, u.two(phi)), al);
          int rhs = C.vcomp(be, C.whisker_r(v.two(psi), r));
          if (lhs != rhs) continue;
          int idx = bld.add_two("(" + A.twos[phi].name + "|" + B.twos[psi].name + ")#" +
                                    std::to_string(l1) + "." + std::to_string(l2),
                                l1, l2);
          cb.two_phi.push_back(phi);
          cb.two_psi.push_back(psi);
          cb.two_src.push_back(l1);
          cb.two_tgt.push_back(l2);
          cb.two_idx[{l1, l2, phi, psi}] = idx;
        }
    }
  const int n_two = bld.n_two();
  for (int l = 0; l < n_one; ++l) {
    int f = cb.one_f[l], g = cb.one_g[l];
    bld.set_id2(l, cb.two_idx.at({l, l, A.id2(f), B.id2(g)}));
  }

  // composition of 1-cells
  for (int l1 = 0; l1 < n_one; ++l1)
    for (int l2 = 0; l2 < n_one; ++l2) {
      if (cb.one_tgt[l1] != cb.one_src[l2]) continue;
      int f = cb.one_f[l1], g = cb.one_g[l1], al = cb.one_al[l1];
      int fp = cb.one_f[l2], gp = cb.one_g[l2], alp = cb.one_al[l2];
      int r = cb.res.obj_r[cb.one_src[l1]], rpp = cb.res.obj_r[cb.one_tgt[l2]];
      // (r'' o0 u_{f',f}) *1 (alpha' o0 u(f)) *1 (v(g') o0 alpha) *1 (v_{g',g} o0 r)
      int c = C.vcomp(
          C.whisker_l(rpp, u.comp(fp, f)),
          C.vcomp(C.whisker_r(alp, u.one(f)),
                  C.vcomp(C.whisker_l(v.one(gp), al), C.whisker_r(v.comp(gp, g), r))));
      bld.set_comp1(l2, l1,
                    cb.one_idx.at({cb.one_src[l1], A.comp1(fp, f), B.comp1(gp, g), c}));
    }

  // vertical and horizontal composition of 2-cells (componentwise)
  for (int t1 = 0; t1 < n_two; ++t1)
    for (int t2 = 0; t2 < n_two; ++t2) {
      if (cb.two_tgt[t1] == cb.two_src[t2])
        bld.set_vcomp(t2, t1,
                      cb.two_idx.at({cb.two_src[t1], cb.two_tgt[t2],
                                     A.vcomp(cb.two_phi[t2], cb.two_phi[t1]),
                                     B.vcomp(cb.two_psi[t2], cb.two_psi[t1])}));
      if (cb.one_tgt[cb.two_src[t1]] == cb.one_src[cb.two_src[t2]]) {
        const TwoCat& cur = bld.peek();
        int s1 = cur.comp1_tab.at(pair_key(cb.two_src[t2], cb.two_src[t1]));
        int s2 = cur.comp1_tab.at(pair_key(cb.two_tgt[t2], cb.two_tgt[t1]));
        bld.set_hcomp(t2, t1,
                      cb.two_idx.at({s1, s2, A.hcomp(cb.two_phi[t2], cb.two_phi[t1]),
                                     B.hcomp(cb.two_psi[t2], cb.two_psi[t1])}));
      }
    }

  cb.res.comma = bld.finalize();

  // strict projections
  {
    std::vector<int> om(n_obj), fm(n_one), tm(n_two);
    for (int o = 0; o < n_obj; ++o) om[o] = cb.obj_a[o];
    for (int l = 0; l < n_one; ++l) fm[l] = cb.one_f[l];
    for (int t = 0; t < n_two; ++t) tm[t] = cb.two_phi[t];
    cb.res.proj_src = make_strict(cb.res.comma, u.src, om, fm, tm);
    for (int o = 0; o < n_obj; ++o) om[o] = cb.obj_b[o];
    for (int l = 0; l < n_one; ++l) fm[l] = cb.one_g[l];
    for (int t = 0; t < n_two; ++t) tm[t] = cb.two_psi[t];
    cb.res.proj_tgt = make_strict(cb.res.comma, v.src, om, fm, tm);
  }
  return cb;
}

}  // namespace

CommaResult comma(const LaxFunctor& u, const LaxFunctor& v) {
  return build_comma(u, v).res;
}

namespace {

struct SliceBuild {
  SliceResult res;
  std::vector<int> one_src, one_tgt, two_src, two_tgt;
  std::map<std::pair<int, int>, int> obj_idx;                  // (a,p)
  std::map<std::tuple<int, int, int>, int> one_idx;            // (srcO,f,al)
  std::map<std::tuple<int, int, int>, int> two_idx;            // (src1,tgt1,beta)
};

// The reference implementation: the lax slice A // u \ b as the comma
// [u, b] against the point functor at b, with slice-shaped cells.
SliceBuild build_lax_over_slice(const LaxFunctor& u, int b) {
  const TwoCat& A = *u.src;
  const TwoCat& C = *u.tgt;
  SliceBuild sb;
  TwoCatBuilder bld;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int p : C.ones_from_to(u.ob(a), b)) {
      int idx = bld.add_object("(" + A.objects[a] + "|" + C.ones[p].name + ")");
      sb.res.obj_a.push_back(a);
      sb.res.obj_p.push_back(p);
      sb.obj_idx[{a, p}] = idx;
    }
  const int n_obj = bld.n_obj();
  for (int so = 0; so < n_obj; ++so)
    for (int to = 0; to < n_obj; ++to) {
      int a = sb.res.obj_a[so], p = sb.res.obj_p[so];
      int ap = sb.res.obj_a[to], pp = sb.res.obj_p[to];
      for (int f : A.ones_from_to(a, ap))
        for (int al : C.twos_from_to(p, C.comp1(pp, u.one(f)))) {
          int idx = bld.add_one("(" + A.ones[f].name + "|" + C.twos[al].name + ")#" +
                                    std::to_string(so) + "." + std::to_string(to),
                                so, to);
          sb.res.one_f.push_back(f);
          sb.res.one_al.push_back(al);
          sb.one_src.push_back(so);
          sb.one_tgt.push_back(to);
          sb.one_idx[{so, f, al}] = idx;
        }
    }
  const int n_one = bld.n_one();
  for (int o = 0; o < n_obj; ++o) {
    int a = sb.res.obj_a[o], p = sb.res.obj_p[o];
    bld.set_id1(o, sb.one_idx.at({o, A.id1(a), C.whisker_l(p, u.unit(a))}));
  }
  for (int l1 = 0; l1 < n_one; ++l1)
    for (int l2 = 0; l2 < n_one; ++l2) {
      if (!(sb.one_src[l1] == sb.one_src[l2] && sb.one_tgt[l1] == sb.one_tgt[l2])) continue;
      int f = sb.res.one_f[l1], al = sb.res.one_al[l1];
      int h = sb.res.one_f[l2], alp = sb.res.one_al[l2];
      int pp = sb.res.obj_p[sb.one_tgt[l1]];
      for (int beta : A.twos_from_to(f, h)) {
        // (p' o0 u(beta)) *1 alpha = alpha'
        if (C.vcomp(C.whisker_l(pp, u.two(beta)), al) != alp) continue;
        int idx = bld.add_two(A.twos[beta].name + "#" + std::to_string(l1) + "." +
                                  std::to_string(l2),
                              l1, l2);
        sb.res.two_beta.push_back(beta);
        sb.two_src.push_back(l1);
        sb.two_tgt.push_back(l2);
        sb.two_idx[{l1, l2, beta}] = idx;
      }
    }
  const int n_two = bld.n_two();
  for (int l = 0; l < n_one; ++l)
    bld.set_id2(l, sb.two_idx.at({l, l, A.id2(sb.res.one_f[l])}));

  for (int l1 = 0; l1 < n_one; ++l1)
    for (int l2 = 0; l2 < n_one; ++l2) {
      if (sb.one_tgt[l1] != sb.one_src[l2]) continue;
      int f = sb.res.one_f[l1], al = sb.res.one_al[l1];
      int fp = sb.res.one_f[l2], alp = sb.res.one_al[l2];
      int ppp = sb.res.obj_p[sb.one_tgt[l2]];
      // (p'' o0 u_{f',f}) *1 (alpha' o0 u(f)) *1 alpha
      int c = C.vcomp(C.whisker_l(ppp, u.comp(fp, f)),
                      C.vcomp(C.whisker_r(alp, u.one(f)), al));
      bld.set_comp1(l2, l1, sb.one_idx.at({sb.one_src[l1], A.comp1(fp, f), c}));
    }
  for (int t1 = 0; t1 < n_two; ++t1)
    for (int t2 = 0; t2 < n_two; ++t2) {
      if (sb.two_tgt[t1] == sb.two_src[t2])
        bld.set_vcomp(t2, t1,
                      sb.two_idx.at({sb.two_src[t1], sb.two_tgt[t2],
                                     A.vcomp(sb.res.two_beta[t2], sb.res.two_beta[t1])}));
      if (sb.one_tgt[sb.two_src[t1]] == sb.one_src[sb.two_src[t2]]) {
        const TwoCat& cur = bld.peek();
        int s1 = cur.comp1_tab.at(pair_key(sb.two_src[t2], sb.two_src[t1]));
        int s2 = cur.comp1_tab.at(pair_key(sb.two_tgt[t2], sb.two_tgt[t1]));
        bld.set_hcomp(t2, t1,
                      sb.two_idx.at({s1, s2, A.hcomp(sb.res.two_beta[t2], sb.res.two_beta[t1])}));
      }
    }
  sb.res.slice = bld.finalize();
  {
    std::vector<int> om(sb.res.obj_a), fm(sb.res.one_f), tm(sb.res.two_beta);
    sb.res.proj = make_strict(sb.res.slice, u.src, om, fm, tm);
  }
  return sb;
}

LaxFunctor require_direction(const LaxFunctor& u, Direction d, const char* ctx) {
  if (u.dir == d) return u;
  if (is_strict(u)) {
    LaxFunctor r = u;
    r.dir = d;
    return r;
  }
  throw Error("DirectionMismatch", ctx);
}

}  // namespace

SliceResult slice(const LaxFunctor& u, int b, SliceVariant variant) {
  switch (variant) {
    case SliceVariant::LaxOver: {
      LaxFunctor ul = require_direction(u, Direction::Lax, "slice lax_over needs a lax functor");
      return build_lax_over_slice(ul, b).res;
    }
    case SliceVariant::LaxUnder: {
      LaxFunctor ul = require_direction(u, Direction::Lax, "slice lax_under needs a lax functor");
      SliceResult core = slice(dual_functor(ul, DualKind::Op), b, SliceVariant::LaxOver);
      SliceResult r = core;
      r.slice = dual(core.slice, DualKind::Op);
      r.proj = dual_functor(core.proj, DualKind::Op);
      r.proj.src = r.slice;
      r.proj.tgt = u.src;
      return r;
    }
    case SliceVariant::ColaxOver: {
      LaxFunctor uc =
          require_direction(u, Direction::Colax, "slice colax_over needs a colax functor");
      SliceResult core = slice(dual_functor(uc, DualKind::Co), b, SliceVariant::LaxOver);
      SliceResult r = core;
      r.slice = dual(core.slice, DualKind::Co);
      r.proj = dual_functor(core.proj, DualKind::Co);
      r.proj.src = r.slice;
      r.proj.tgt = u.src;
      return r;
    }
    case SliceVariant::ColaxUnder: {
      LaxFunctor uc =
          require_direction(u, Direction::Colax, "slice colax_under needs a colax functor");
      SliceResult core = slice(dual_functor(uc, DualKind::Coop), b, SliceVariant::LaxOver);
      SliceResult r = core;
      r.slice = dual(core.slice, DualKind::Coop);
      r.proj = dual_functor(core.proj, DualKind::Coop);
      r.proj.src = r.slice;
      r.proj.tgt = u.src;
      return r;
    }
  }
  throw Error("VariantUnsupported", "slice");
}

LaxFunctor induced_comma_morphism(const Transformation& sigma, const LaxFunctor& v) {
  if (sigma.kind != TransKind::Colax && sigma.kind != TransKind::Strict)
    throw Error("KindUnsupported", "induced_comma_morphism needs a colax transformation");
  const LaxFunctor& u = sigma.from;
  const LaxFunctor& up = sigma.to;
  if (u.dir != Direction::Lax || up.dir != Direction::Lax)
    throw Error("DirectionMismatch", "induced_comma_morphism");
  if (!equal_presentation(*u.tgt, *v.tgt))
    throw Error("BoundaryMismatch", "induced_comma_morphism: targets differ");
  CommaBuild src = build_comma(up, v);
  CommaBuild tgt = build_comma(u, v);
  const TwoCat& C = *u.tgt;
  const TwoCat& S = *src.res.comma;

  std::vector<int> om(S.n_obj()), fm(S.n_one()), tm(S.n_two());
  for (int o = 0; o < S.n_obj(); ++o) {
    int a = src.obj_a[o], b = src.obj_b[o], r = src.res.obj_r[o];
    om[o] = tgt.obj_idx.at({a, b, C.comp1(r, sigma.comp_obj[a])});
  }
  for (int l = 0; l < S.n_one(); ++l) {
    int f = src.one_f[l], g = src.one_g[l], al = src.one_al[l];
    int a = src.obj_a[src.one_src[l]];
    int rp = src.res.obj_r[src.one_tgt[l]];
    // (r' o0 sigma_f) *1 (alpha o0 sigma_a)
    int c = C.vcomp(C.whisker_l(rp, sigma.comp_one[f]),
                    C.whisker_r(al, sigma.comp_obj[a]));
    fm[l] = tgt.one_idx.at({om[src.one_src[l]], f, g, c});
  }
  for (int t = 0; t < S.n_two(); ++t)
    tm[t] = tgt.two_idx.at(
        {fm[src.two_src[t]], fm[src.two_tgt[t]], src.two_phi[t], src.two_psi[t]});
  return make_strict(src.res.comma, tgt.res.comma, om, fm, tm);
}

namespace {

// The lax-over core of the induced slice morphism: u,v,w lax, sigma a colax
// transformation v.u => w, result lax A//w,c -> B//v,c.
LaxFunctor induced_slice_core(const LaxFunctor& u, const LaxFunctor& v, const LaxFunctor& w,
                              const Transformation& sigma, int c) {
  const TwoCat& C = *w.tgt;
  SliceBuild src = build_lax_over_slice(w, c);
  SliceBuild tgt = build_lax_over_slice(v, c);
  const TwoCat& S = *src.res.slice;
  LaxFunctor r;
  r.src = src.res.slice;
  r.tgt = tgt.res.slice;
  r.dir = Direction::Lax;
  r.ob_map.resize(S.n_obj());
  r.one_map.resize(S.n_one());
  r.two_map.resize(S.n_two());
  r.unit_cell.resize(S.n_obj());
  for (int o = 0; o < S.n_obj(); ++o) {
    int a = src.res.obj_a[o], p = src.res.obj_p[o];
    r.ob_map[o] = tgt.obj_idx.at({u.ob(a), C.comp1(p, sigma.comp_obj[a])});
  }
  for (int l = 0; l < S.n_one(); ++l) {
    int f = src.res.one_f[l], al = src.res.one_al[l];
    int a = src.res.obj_a[src.one_src[l]];
    int pp = src.res.obj_p[src.one_tgt[l]];
    // (p' o0 sigma_f) *1 (alpha o0 sigma_a)
    int cel = C.vcomp(C.whisker_l(pp, sigma.comp_one[f]),
                      C.whisker_r(al, sigma.comp_obj[a]));
    r.one_map[l] = tgt.one_idx.at({r.ob_map[src.one_src[l]], u.one(f), cel});
  }
  for (int t = 0; t < S.n_two(); ++t)
    r.two_map[t] = tgt.two_idx.at(
        {r.one_map[src.two_src[t]], r.one_map[src.two_tgt[t]], u.two(src.res.two_beta[t])});
  for (int o = 0; o < S.n_obj(); ++o) {
    int a = src.res.obj_a[o];
    r.unit_cell[o] = tgt.two_idx.at(
        {tgt.res.slice->id1(r.ob_map[o]), r.one_map[S.id1(o)], u.unit(a)});
  }
  for (int l1 = 0; l1 < S.n_one(); ++l1)
    for (int l2 = 0; l2 < S.n_one(); ++l2) {
      if (src.one_tgt[l1] != src.one_src[l2]) continue;
      int f = src.res.one_f[l1], fp = src.res.one_f[l2];
      int comp = S.comp1(l2, l1);
      r.comp_cell[pair_key(l2, l1)] =
          tgt.two_idx.at({tgt.res.slice->comp1(r.one_map[l2], r.one_map[l1]),
                          r.one_map[comp], u.comp(fp, f)});
    }
  return r;
}

}  // namespace

LaxFunctor induced_slice_morphism(const LaxFunctor& u, const LaxFunctor& v,
                                  const LaxFunctor& w, const Transformation& sigma, int c,
                                  SliceVariant variant) {
  switch (variant) {
    case SliceVariant::LaxOver: {
      if (u.dir != Direction::Lax || v.dir != Direction::Lax || w.dir != Direction::Lax)
        throw Error("VariantDirectionMismatch", "induced_slice_morphism lax_over");
      if (sigma.kind == TransKind::Lax)
        throw Error("VariantDirectionMismatch",
                    "lax_over induced morphism needs a colax transformation v.u => w");
      return induced_slice_core(u, v, w, sigma, c);
    }
    case SliceVariant::LaxUnder: {
      if (sigma.kind == TransKind::Colax)
        throw Error("VariantDirectionMismatch",
                    "lax_under induced morphism needs a lax transformation w => v.u");
      LaxFunctor core = induced_slice_core(
          dual_functor(u, DualKind::Op), dual_functor(v, DualKind::Op),
          dual_functor(w, DualKind::Op), dual_transformation(sigma, DualKind::Op), c);
      return dual_functor(core, DualKind::Op);
    }
    case SliceVariant::ColaxOver: {
      if (sigma.kind == TransKind::Colax)
        throw Error("VariantDirectionMismatch",
                    "colax_over induced morphism needs a lax transformation v.u => w");
      LaxFunctor core = induced_slice_core(
          dual_functor(u, DualKind::Co), dual_functor(v, DualKind::Co),
          dual_functor(w, DualKind::Co), dual_transformation(sigma, DualKind::Co), c);
      return dual_functor(core, DualKind::Co);
    }
    case SliceVariant::ColaxUnder: {
      if (sigma.kind == TransKind::Lax)
        throw Error("VariantDirectionMismatch",
                    "colax_under induced morphism needs a colax transformation w => v.u");
      LaxFunctor core = induced_slice_core(
          dual_functor(u, DualKind::Coop), dual_functor(v, DualKind::Coop),
          dual_functor(w, DualKind::Coop), dual_transformation(sigma, DualKind::Coop), c);
      return dual_functor(core, DualKind::Coop);
    }
  }
  throw Error("VariantUnsupported", "induced_slice_morphism");
}

FiberResult fiber(const LaxFunctor& u, int b) {
  if (!is_strict(u)) throw Error("NotStrict", "fiber needs a strict functor");
  const TwoCat& A = *u.src;
  const TwoCat& B = *u.tgt;
  FiberResult fr;
  TwoCatBuilder bld;
  std::vector<int> omap(A.n_obj(), -1), fmap(A.n_one(), -1), tmap(A.n_two(), -1);
  for (int a = 0; a < A.n_obj(); ++a)
    if (u.ob(a) == b) {
      omap[a] = bld.add_object(A.objects[a]);
      fr.obj_of.push_back(a);
    }
  for (int f = 0; f < A.n_one(); ++f)
    if (u.one(f) == B.id1(b) && omap[A.ones[f].src] >= 0 && omap[A.ones[f].tgt] >= 0) {
      fmap[f] = bld.add_one(A.ones[f].name, omap[A.ones[f].src], omap[A.ones[f].tgt]);
      fr.one_of.push_back(f);
    }
  for (int t = 0; t < A.n_two(); ++t)
    if (u.two(t) == B.id2(B.id1(b)) && fmap[A.twos[t].src] >= 0 && fmap[A.twos[t].tgt] >= 0) {
      tmap[t] = bld.add_two(A.twos[t].name, fmap[A.twos[t].src], fmap[A.twos[t].tgt]);
      fr.two_of.push_back(t);
    }
  for (int a = 0; a < A.n_obj(); ++a)
    if (omap[a] >= 0) bld.set_id1(omap[a], fmap.at(A.id1(a)));
  for (int f = 0; f < A.n_one(); ++f)
    if (fmap[f] >= 0) bld.set_id2(fmap[f], tmap.at(A.id2(f)));
  for (const auto& [k, gf] : A.comp1_tab) {
    int g = static_cast<int>(k >> 32), f = static_cast<int>(k & 0xffffffffu);
    if (fmap[g] >= 0 && fmap[f] >= 0) bld.set_comp1(fmap[g], fmap[f], fmap.at(gf));
  }
  for (const auto& [k, ba] : A.vcomp_tab) {
    int b2 = static_cast<int>(k >> 32), a2 = static_cast<int>(k & 0xffffffffu);
    if (tmap[b2] >= 0 && tmap[a2] >= 0) bld.set_vcomp(tmap[b2], tmap[a2], tmap.at(ba));
  }
  for (const auto& [k, ba] : A.hcomp_tab) {
    int b2 = static_cast<int>(k >> 32), a2 = static_cast<int>(k & 0xffffffffu);
    if (tmap[b2] >= 0 && tmap[a2] >= 0) bld.set_hcomp(tmap[b2], tmap[a2], tmap.at(ba));
  }
  fr.fiber = bld.finalize();
  return fr;
}

LaxFunctor fiber_inclusion(const LaxFunctor& u, int b, SliceVariant variant,
                           const FiberResult& fib, const SliceResult& sl) {
  const TwoCat& F = *fib.fiber;
  const TwoCat& B = *u.tgt;
  auto find_obj = [&](int a) {
    for (std::size_t i = 0; i < sl.obj_a.size(); ++i)
      if (sl.obj_a[i] == a && sl.obj_p[i] == B.id1(b)) return static_cast<int>(i);
    throw Error("BoundaryMismatch", "fiber_inclusion: slice object missing");
  };
  auto find_one = [&](int f, int so, int to) {
    for (std::size_t i = 0; i < sl.one_f.size(); ++i)
      if (sl.one_f[i] == f && sl.slice->ones[i].src == so && sl.slice->ones[i].tgt == to &&
          B.is_id2(sl.one_al[i]))
        return static_cast<int>(i);
    throw Error("BoundaryMismatch", "fiber_inclusion: slice 1-cell missing");
  };
  auto find_two = [&](int al, int s1, int t1) {
    for (std::size_t i = 0; i < sl.two_beta.size(); ++i)
      if (sl.two_beta[i] == al && sl.slice->twos[i].src == s1 && sl.slice->twos[i].tgt == t1)
        return static_cast<int>(i);
    throw Error("BoundaryMismatch", "fiber_inclusion: slice 2-cell missing");
  };
  std::vector<int> om(F.n_obj()), fm(F.n_one()), tm(F.n_two());
  for (int o = 0; o < F.n_obj(); ++o) om[o] = find_obj(fib.obj_of[o]);
  for (int l = 0; l < F.n_one(); ++l) {
    int f = fib.one_of[l];
    fm[l] = find_one(f, om[F.ones[l].src], om[F.ones[l].tgt]);
  }
  for (int t = 0; t < F.n_two(); ++t)
    tm[t] = find_two(fib.two_of[t], fm[F.twos[t].src], fm[F.twos[t].tgt]);
  (void)variant;
  return make_strict(fib.fiber, sl.slice, om, fm, tm);
}

std::optional<int> hom_final_object(const TwoCat& A, int a, int z) {
  auto objs = A.ones_from_to(a, z);
  for (int t : objs) {
    bool final_obj = true;
    for (int x : objs)
      if (A.twos_from_to(x, t).size() != 1) {
        final_obj = false;
        break;
      }
    if (final_obj) return t;
  }
  return std::nullopt;
}

std::optional<int> hom_initial_object(const TwoCat& A, int a, int z) {
  auto objs = A.ones_from_to(a, z);
  for (int t : objs) {
    bool initial = true;
    for (int x : objs)
      if (A.twos_from_to(t, x).size() != 1) {
        initial = false;
        break;
      }
    if (initial) return t;
  }
  return std::nullopt;
}

std::optional<FinalObjectWitness> has_object_admitting_final(const TwoCat& A) {
  for (int z = 0; z < A.n_obj(); ++z) {
    FinalObjectWitness w;
    w.z = z;
    w.final_one.assign(A.n_obj(), -1);
    bool good = true;
    for (int a = 0; a < A.n_obj() && good; ++a) {
      auto t = hom_final_object(A, a, z);
      if (!t) {
        good = false;
        break;
      }
      w.final_one[a] = *t;
      for (int f : A.ones_from_to(a, z)) w.unique_two[f] = A.twos_from_to(f, *t)[0];
    }
    if (good) return w;
  }
  return std::nullopt;
}

std::optional<FinalObjectWitness> has_object_admitting_initial(const TwoCat& A) {
  for (int z = 0; z < A.n_obj(); ++z) {
    FinalObjectWitness w;
    w.z = z;
    w.final_one.assign(A.n_obj(), -1);
    bool good = true;
    for (int a = 0; a < A.n_obj() && good; ++a) {
      auto t = hom_initial_object(A, a, z);
      if (!t) {
        good = false;
        break;
      }
      w.final_one[a] = *t;
      for (int f : A.ones_from_to(a, z)) w.unique_two[f] = A.twos_from_to(*t, f)[0];
    }
    if (good) return w;
  }
  return std::nullopt;
}

std::optional<FinalObjectWitness> op_admits_object_admitting_final(const TwoCat& A) {
  return has_object_admitting_final(*dual(A, DualKind::Op));
}
std::optional<FinalObjectWitness> op_admits_object_admitting_initial(const TwoCat& A) {
  return has_object_admitting_initial(*dual(A, DualKind::Op));
}

Transformation transformation_to_constant_final(const TwoCatPtr& a,
                                                const FinalObjectWitness& w) {
  const TwoCat& A = *a;
  Transformation s;
  s.kind = TransKind::Lax;
  s.from = identity_functor(a);
  s.to = constant_functor(a, a, w.z);
  s.comp_obj.resize(A.n_obj());
  s.comp_one.resize(A.n_one());
  for (int o = 0; o < A.n_obj(); ++o) s.comp_obj[o] = w.final_one[o];
  for (int f = 0; f < A.n_one(); ++f) {
    int ap = A.ones[f].tgt;
    // sigma_f : p_{a'} f => 1_z p_a is the unique 2-cell into the final p_a
    s.comp_one[f] = w.unique_two.at(A.comp1(w.final_one[ap], f));
  }
  return s;
}

PreadjointVerdict is_preadjoint(const LaxFunctor& u, Side side, Direction flavor) {
  LaxFunctor uu = require_direction(u, flavor, "is_preadjoint: direction of u must match flavor");
  PreadjointVerdict verdict;
  verdict.holds = true;
  const TwoCat& B = *u.tgt;
  verdict.witness_object.assign(B.n_obj(), -1);
  for (int b = 0; b < B.n_obj(); ++b) {
    std::optional<FinalObjectWitness> w;
    if (side == Side::Left && flavor == Direction::Colax)
      w = has_object_admitting_final(*slice(uu, b, SliceVariant::ColaxOver).slice);
    else if (side == Side::Left && flavor == Direction::Lax)
      w = has_object_admitting_initial(*slice(uu, b, SliceVariant::LaxOver).slice);
    else if (side == Side::Right && flavor == Direction::Colax)
      w = op_admits_object_admitting_final(*slice(uu, b, SliceVariant::ColaxUnder).slice);
    else
      w = op_admits_object_admitting_initial(*slice(uu, b, SliceVariant::LaxUnder).slice);
    if (!w) {
      verdict.holds = false;
      verdict.failure = "no witness over object " + B.objects[b];
      return verdict;
    }
    verdict.witness_object[b] = w->z;
  }
  return verdict;
}

PrefibrationVerdict is_prefibration(const LaxFunctor& u, FibrationVariant variant) {
  if (!is_strict(u)) throw Error("NotStrict", "is_prefibration needs a strict functor");
  PrefibrationVerdict verdict;
  verdict.holds = true;
  const TwoCat& B = *u.tgt;
  for (int b = 0; b < B.n_obj(); ++b) {
    SliceVariant sv;
    Side side;
    Direction flavor;
    switch (variant) {
      case FibrationVariant::Pre:
        sv = SliceVariant::ColaxUnder;
        side = Side::Left;
        flavor = Direction::Lax;
        break;
      case FibrationVariant::PreOp:
        sv = SliceVariant::ColaxOver;
        side = Side::Right;
        flavor = Direction::Lax;
        break;
      case FibrationVariant::PreCo:
        sv = SliceVariant::LaxUnder;
        side = Side::Left;
        flavor = Direction::Colax;
        break;
      case FibrationVariant::PreCoop:
      default:
        sv = SliceVariant::LaxOver;
        side = Side::Right;
        flavor = Direction::Colax;
        break;
    }
    FiberResult fib = fiber(u, b);
    SliceResult sl = slice(u, b, sv);
    LaxFunctor jb = fiber_inclusion(u, b, sv, fib, sl);
    auto pv = is_preadjoint(jb, side, flavor);
    if (!pv.holds) {
      verdict.holds = false;
      verdict.failure = "J_" + B.objects[b] + " fails: " + pv.failure;
      return verdict;
    }
  }
  return verdict;
}

ValidationReport validate_lax_colax_adjunction(const LaxColaxAdjunction& d) {
  ValidationReport rep;
  const LaxFunctor& u = d.u;
  const LaxFunctor& v = d.v;
  if (u.dir != Direction::Lax || (v.dir != Direction::Colax && !is_strict(v))) {
    rep.add("DirectionMismatch", "adjunction needs u lax and v colax");
    return rep;
  }
  const TwoCat& A = *u.src;
  const TwoCat& B = *u.tgt;
  if (!equal_presentation(*v.src, B) || !equal_presentation(*v.tgt, A)) {
    rep.add("BoundaryMismatch", "v must run opposite to u");
    return rep;
  }

  // boundary checks for the seven data families
  for (int b = 0; b < B.n_obj(); ++b) {
    const auto& c = B.ones[d.p_obj.at(b)];
    if (c.src != u.ob(v.ob(b)) || c.tgt != b) rep.add("BoundaryMismatch", "p_" + B.objects[b]);
  }
  for (int g = 0; g < B.n_one(); ++g) {
    int b = B.ones[g].src, bp = B.ones[g].tgt;
    const auto& c = B.twos[d.p_one.at(g)];
    if (c.src != B.comp1(g, d.p_obj[b]) ||
        c.tgt != B.comp1(d.p_obj[bp], u.one(v.one(g))))
      rep.add("BoundaryMismatch", "p_" + B.ones[g].name);
  }
  for (int a = 0; a < A.n_obj(); ++a) {
    const auto& c = A.ones[d.q_obj.at(a)];
    if (c.src != a || c.tgt != v.ob(u.ob(a))) rep.add("BoundaryMismatch", "q_" + A.objects[a]);
  }
  for (int f = 0; f < A.n_one(); ++f) {
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    const auto& c = A.twos[d.q_one.at(f)];
    if (c.src != A.comp1(v.one(u.one(f)), d.q_obj[a]) || c.tgt != A.comp1(d.q_obj[ap], f))
      rep.add("BoundaryMismatch", "q_" + A.ones[f].name);
  }
  for (int a = 0; a < A.n_obj(); ++a) {
    const auto& c = B.twos[d.sigma.at(a)];
    if (c.src != B.id1(u.ob(a)) ||
        c.tgt != B.comp1(d.p_obj[u.ob(a)], u.one(d.q_obj[a])))
      rep.add("BoundaryMismatch", "sigma_" + A.objects[a]);
  }
  for (int b = 0; b < B.n_obj(); ++b) {
    const auto& c = A.twos[d.tau.at(b)];
    if (c.src != A.comp1(v.one(d.p_obj[b]), d.q_obj[v.ob(b)]) || c.tgt != A.id1(v.ob(b)))
      rep.add("BoundaryMismatch", "tau_" + B.objects[b]);
  }
  if (!rep.ok()) return rep;

  // ALC 1
  for (int be = 0; be < B.n_two(); ++be) {
    int g = B.twos[be].src, gp = B.twos[be].tgt;
    int b = B.ones[g].src, bp = B.ones[g].tgt;
    int lhs = B.vcomp(B.whisker_l(d.p_obj[bp], u.two(v.two(be))), d.p_one[g]);
    int rhs = B.vcomp(d.p_one[gp], B.whisker_r(be, d.p_obj[b]));
    if (lhs != rhs) rep.add("ALC1", B.twos[be].name);
  }
  // ALC 2
  for (int gp = 0; gp < B.n_one(); ++gp)
    for (int g = 0; g < B.n_one(); ++g) {
      if (B.ones[g].tgt != B.ones[gp].src) continue;
      int bpp = B.ones[gp].tgt;
      int lhs = B.vcomp(
          B.whisker_l(d.p_obj[bpp], u.comp(v.one(gp), v.one(g))),
          B.vcomp(B.whisker_r(d.p_one[gp], u.one(v.one(g))), B.whisker_l(gp, d.p_one[g])));
      int rhs = B.vcomp(B.whisker_l(d.p_obj[bpp], u.two(v.comp(gp, g))),
                        d.p_one[B.comp1(gp, g)]);
      if (lhs != rhs) rep.add("ALC2", "(" + B.ones[gp].name + "," + B.ones[g].name + ")");
    }
  // ALC 3
  for (int b = 0; b < B.n_obj(); ++b) {
    int lhs = B.vcomp(B.whisker_l(d.p_obj[b], u.two(v.unit(b))), d.p_one[B.id1(b)]);
    int rhs = B.whisker_l(d.p_obj[b], u.unit(v.ob(b)));
    if (lhs != rhs) rep.add("ALC3", B.objects[b]);
  }
  // ALC 4
  for (int al = 0; al < A.n_two(); ++al) {
    int f = A.twos[al].src, fp = A.twos[al].tgt;
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    int lhs = A.vcomp(d.q_one[fp], A.whisker_r(v.two(u.two(al)), d.q_obj[a]));
    int rhs = A.vcomp(A.whisker_l(d.q_obj[ap], al), d.q_one[f]);
    if (lhs != rhs) rep.add("ALC4", A.twos[al].name);
  }
  // ALC 5
  for (int fp = 0; fp < A.n_one(); ++fp)
    for (int f = 0; f < A.n_one(); ++f) {
      if (A.ones[f].tgt != A.ones[fp].src) continue;
      int a = A.ones[f].src;
      int lhs = A.vcomp(
          A.whisker_r(d.q_one[fp], f),
          A.vcomp(A.whisker_l(v.one(u.one(fp)), d.q_one[f]),
                  A.whisker_r(v.comp(u.one(fp), u.one(f)), d.q_obj[a])));
      int rhs = A.vcomp(d.q_one[A.comp1(fp, f)],
                        A.whisker_r(v.two(u.comp(fp, f)), d.q_obj[a]));
      if (lhs != rhs) rep.add("ALC5", "(" + A.ones[fp].name + "," + A.ones[f].name + ")");
    }
  // ALC 6
  for (int a = 0; a < A.n_obj(); ++a) {
    int lhs = A.vcomp(d.q_one[A.id1(a)], A.whisker_r(v.two(u.unit(a)), d.q_obj[a]));
    int rhs = A.whisker_r(v.unit(u.ob(a)), d.q_obj[a]);
    if (lhs != rhs) rep.add("ALC6", A.objects[a]);
  }
  // ALC 7
  for (int f = 0; f < A.n_one(); ++f) {
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    int pua = d.p_obj[u.ob(ap)];
    int lhs = B.vcomp(
        B.whisker_l(pua, u.two(d.q_one[f])),
        B.vcomp(B.whisker_l(pua, u.comp(v.one(u.one(f)), d.q_obj[a])),
                B.vcomp(B.whisker_r(d.p_one[u.one(f)], u.one(d.q_obj[a])),
                        B.whisker_l(u.one(f), d.sigma[a]))));
    int rhs = B.vcomp(B.whisker_l(pua, u.comp(d.q_obj[ap], f)),
                      B.whisker_r(d.sigma[ap], u.one(f)));
    if (lhs != rhs) rep.add("ALC7", A.ones[f].name);
  }
  // ALC 8
  for (int g = 0; g < B.n_one(); ++g) {
    int b = B.ones[g].src, bp = B.ones[g].tgt;
    int lhs = A.vcomp(
        A.whisker_r(d.tau[bp], v.one(g)),
        A.vcomp(A.whisker_l(v.one(d.p_obj[bp]), d.q_one[v.one(g)]),
                A.vcomp(A.whisker_r(v.comp(d.p_obj[bp], u.one(v.one(g))), d.q_obj[v.ob(b)]),
                        A.whisker_r(v.two(d.p_one[g]), d.q_obj[v.ob(b)]))));
    int rhs = A.vcomp(A.whisker_l(v.one(g), d.tau[b]),
                      A.whisker_r(v.comp(g, d.p_obj[b]), d.q_obj[v.ob(b)]));
    if (lhs != rhs) rep.add("ALC8", B.ones[g].name);
  }
  // ALC 9
  for (int b = 0; b < B.n_obj(); ++b) {
    int pb = d.p_obj[b];
    int lhs = B.vcomp(
        B.whisker_l(pb, u.two(d.tau[b])),
        B.vcomp(B.whisker_l(pb, u.comp(v.one(pb), d.q_obj[v.ob(b)])),
                B.vcomp(B.whisker_r(d.p_one[pb], u.one(d.q_obj[v.ob(b)])),
                        B.whisker_l(pb, d.sigma[v.ob(b)]))));
    int rhs = B.whisker_l(pb, u.unit(v.ob(b)));
    if (lhs != rhs) rep.add("ALC9", B.objects[b]);
  }
  // ALC 10
  for (int a = 0; a < A.n_obj(); ++a) {
    int qa = d.q_obj[a];
    int pua = d.p_obj[u.ob(a)];
    int lhs = A.vcomp(
        A.whisker_r(d.tau[u.ob(a)], qa),
        A.vcomp(A.whisker_l(v.one(pua), d.q_one[qa]),
                A.vcomp(A.whisker_r(v.comp(pua, u.one(qa)), qa),
                        A.whisker_r(v.two(d.sigma[a]), qa))));
    int rhs = A.whisker_r(v.unit(u.ob(a)), qa);
    if (lhs != rhs) rep.add("ALC10", A.objects[a]);
  }
  return rep;
}

}  // namespace twocat
