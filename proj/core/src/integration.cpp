#include "twocat/integration.hpp"

#include <map>
#include <tuple>

namespace twocat {

namespace {

DualKind as_dual(Variance v) {
  switch (v) {
    case Variance::Op: return DualKind::Op;
    case Variance::Co: return DualKind::Co;
    case Variance::Coop: return DualKind::Coop;
    default: break;
  }
  throw Error("BadArgument", "as_dual(Cov)");
}

// The stored diagram, reread as an honest covariant diagram over the
// variance-dualized base (cell indices are shared between a presentation
// and its duals, so only the base presentation changes).
struct CovariantView {
  TwoCatPtr base;
  const Diagram* d;
};

CovariantView covariant_view(const Diagram& d) {
  CovariantView v;
  v.base = d.variance == Variance::Cov ? d.base : dual(d.base, as_dual(d.variance));
  v.d = &d;
  return v;
}

bool equal_strict_functor_maps(const LaxFunctor& a, const LaxFunctor& b) {
  return a.ob_map == b.ob_map && a.one_map == b.one_map && a.two_map == b.two_map;
}

}  // namespace

ValidationReport validate_diagram(const Diagram& d) {
  ValidationReport rep;
  const TwoCat& A0 = *d.base;
  if (static_cast<int>(d.ob_val.size()) != A0.n_obj() ||
      static_cast<int>(d.one_val.size()) != A0.n_one() ||
      static_cast<int>(d.two_val.size()) != A0.n_two()) {
    rep.add("DiagramInvalid", "value tables sized differently from the base");
    return rep;
  }
  CovariantView v = covariant_view(d);
  const TwoCat& A = *v.base;
  for (int f = 0; f < A.n_one(); ++f) {
    const LaxFunctor& u = d.one_val[f];
    if (!is_strict(u)) rep.add("DiagramInvalid", "one_val not strict at " + A.ones[f].name);
    if (!equal_presentation(*u.src, *d.ob_val[A.ones[f].src]) ||
        !equal_presentation(*u.tgt, *d.ob_val[A.ones[f].tgt])) {
      rep.add("DiagramInvalid", "one_val endpoints at " + A.ones[f].name);
      continue;
    }
    rep.absorb(validate_functor(u), "one_val(" + A.ones[f].name + "):");
  }
  if (!rep.ok()) return rep;
  for (int a = 0; a < A.n_obj(); ++a)
    if (!equal_strict_functor_maps(d.one_val[A.id1(a)], identity_functor(d.ob_val[a])))
      rep.add("DiagramInvalid", "one_val(id) not the identity at " + A.objects[a]);
  for (const auto& [k, gf] : A.comp1_tab) {
    int g = static_cast<int>(k >> 32), f = static_cast<int>(k & 0xffffffffu);
    LaxFunctor comp = d.one_val[f];
    const LaxFunctor& expect = d.one_val[gf];
    for (std::size_t i = 0; i < comp.ob_map.size(); ++i)
      comp.ob_map[i] = d.one_val[g].ob(d.one_val[f].ob(static_cast<int>(i)));
    for (std::size_t i = 0; i < comp.one_map.size(); ++i)
      comp.one_map[i] = d.one_val[g].one(d.one_val[f].one(static_cast<int>(i)));
    for (std::size_t i = 0; i < comp.two_map.size(); ++i)
      comp.two_map[i] = d.one_val[g].two(d.one_val[f].two(static_cast<int>(i)));
    if (!equal_strict_functor_maps(comp, expect))
      rep.add("DiagramInvalid",
              "one_val not functorial at (" + A.ones[g].name + "," + A.ones[f].name + ")");
  }
  for (int t = 0; t < A.n_two(); ++t) {
    const Transformation& s = d.two_val[t];
    if (s.kind != TransKind::Strict) {
      rep.add("DiagramInvalid", "two_val not strict at " + A.twos[t].name);
      continue;
    }
    if (!equal_strict_functor_maps(s.from, d.one_val[A.twos[t].src]) ||
        !equal_strict_functor_maps(s.to, d.one_val[A.twos[t].tgt]))
      rep.add("DiagramInvalid", "two_val endpoints at " + A.twos[t].name);
    rep.absorb(validate_transformation(s), "two_val(" + A.twos[t].name + "):");
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < A.n_one(); ++f)
    if (d.two_val[A.id2(f)].comp_obj != identity_transformation(d.one_val[f]).comp_obj)
      rep.add("DiagramInvalid", "two_val(id) not the identity at " + A.ones[f].name);
  for (const auto& [k, ba] : A.vcomp_tab) {
    int b2 = static_cast<int>(k >> 32), a2 = static_cast<int>(k & 0xffffffffu);
    const TwoCat& val = *d.one_val[A.twos[ba].src].tgt;
    const auto& sa = d.two_val[a2];
    const auto& sb = d.two_val[b2];
    for (std::size_t o = 0; o < sa.comp_obj.size(); ++o)
      if (d.two_val[ba].comp_obj[o] != val.comp1(sb.comp_obj[o], sa.comp_obj[o])) {
        rep.add("DiagramInvalid", "two_val not vcomp-functorial at (" + A.twos[b2].name +
                                      "," + A.twos[a2].name + ")");
        break;
      }
  }
  for (const auto& [k, ba] : A.hcomp_tab) {
    int b2 = static_cast<int>(k >> 32), a2 = static_cast<int>(k & 0xffffffffu);
    const auto& sa = d.two_val[a2];
    const auto& sb = d.two_val[b2];
    int f2t = A.twos[b2].tgt;
    const TwoCat& val = *d.one_val[f2t].tgt;
    for (std::size_t o = 0; o < sa.from.ob_map.size(); ++o) {
      int expect = val.comp1(sb.comp_obj[sa.to.ob(static_cast<int>(o))],
                             sb.from.one(sa.comp_obj[o]));
      if (d.two_val[ba].comp_obj[o] != expect) {
        rep.add("DiagramInvalid", "two_val not hcomp-functorial at (" + A.twos[b2].name +
                                      "," + A.twos[a2].name + ")");
        break;
      }
    }
  }
  return rep;
}

Diagram constant_diagram(const TwoCatPtr& base, const TwoCatPtr& value, Variance variance) {
  Diagram d;
  d.base = base;
  d.variance = variance;
  d.ob_val.assign(base->n_obj(), value);
  d.one_val.assign(base->n_one(), identity_functor(value));
  d.two_val.assign(base->n_two(), identity_transformation(identity_functor(value)));
  return d;
}

namespace {

struct IntegralBuild {
  IntegralResult res;
  std::map<std::pair<int, int>, int> obj_idx;
  std::map<std::tuple<int, int, int>, int> one_idx;
  std::map<std::tuple<int, int, int, int>, int> two_idx;
  std::vector<int> one_src, one_tgt, two_src, two_tgt;
};

// The covariant core; the diagram is read covariantly over A.
IntegralBuild integrate_core(const TwoCat& A, const Diagram& d) {
  IntegralBuild ib;
  TwoCatBuilder bld;
  for (int a = 0; a < A.n_obj(); ++a) {
    const TwoCat& F = *d.ob_val[a];
    for (int x = 0; x < F.n_obj(); ++x) {
      int idx = bld.add_object("(" + A.objects[a] + "|" + F.objects[x] + ")");
      ib.res.obj_a.push_back(a);
      ib.res.obj_x.push_back(x);
      ib.obj_idx[{a, x}] = idx;
    }
  }
  const int n_obj = bld.n_obj();
  for (int so = 0; so < n_obj; ++so)
    for (int to = 0; to < n_obj; ++to) {
      int a = ib.res.obj_a[so], x = ib.res.obj_x[so];
      int ap = ib.res.obj_a[to], xp = ib.res.obj_x[to];
      const TwoCat& Fp = *d.ob_val[ap];
      for (int f : A.ones_from_to(a, ap))
        for (int r : Fp.ones_from_to(d.one_val[f].ob(x), xp)) {
          int idx = bld.add_one("(" + A.ones[f].name + "|" + Fp.ones[r].name + ")#" +
                                    std::to_string(so) + "." + std::to_string(to),
                                so, to);
          ib.res.one_f.push_back(f);
          ib.res.one_r.push_back(r);
          ib.one_src.push_back(so);
          ib.one_tgt.push_back(to);
          ib.one_idx[{so, f, r}] = idx;
        }
    }
  const int n_one = bld.n_one();
  for (int o = 0; o < n_obj; ++o) {
    int a = ib.res.obj_a[o], x = ib.res.obj_x[o];
    bld.set_id1(o, ib.one_idx.at({o, A.id1(a), d.ob_val[a]->id1(x)}));
  }
  // 2-cells (gamma : f => g, phi : r => s (F(gamma))_x)
  for (int l1 = 0; l1 < n_one; ++l1)
    for (int l2 = 0; l2 < n_one; ++l2) {
      if (!(ib.one_src[l1] == ib.one_src[l2] && ib.one_tgt[l1] == ib.one_tgt[l2])) continue;
      int f = ib.res.one_f[l1], r = ib.res.one_r[l1];
      int g = ib.res.one_f[l2], s = ib.res.one_r[l2];
      int x = ib.res.obj_x[ib.one_src[l1]];
      int ap = ib.res.obj_a[ib.one_tgt[l1]];
      const TwoCat& Fp = *d.ob_val[ap];
      for (int gm : A.twos_from_to(f, g)) {
        int comp = Fp.comp1(s, d.two_val[gm].comp_obj[x]);
        for (int phi : Fp.twos_from_to(r, comp)) {
          int idx = bld.add_two("(" + A.twos[gm].name + "|" + Fp.twos[phi].name + ")#" +
                                    std::to_string(l1) + "." + std::to_string(l2),
                                l1, l2);
          ib.res.two_g.push_back(gm);
          ib.res.two_phi.push_back(phi);
          ib.two_src.push_back(l1);
          ib.two_tgt.push_back(l2);
          ib.two_idx[{l1, l2, gm, phi}] = idx;
        }
      }
    }
  const int n_two = bld.n_two();
  for (int l = 0; l < n_one; ++l) {
    int f = ib.res.one_f[l], r = ib.res.one_r[l];
    int ap = ib.res.obj_a[ib.one_tgt[l]];
    bld.set_id2(l, ib.two_idx.at({l, l, A.id2(f), d.ob_val[ap]->id2(r)}));
  }
  // (f',r')(f,r) = (f'f, r'.F(f')(r))
  for (int l1 = 0; l1 < n_one; ++l1)
    for (int l2 = 0; l2 < n_one; ++l2) {
      if (ib.one_tgt[l1] != ib.one_src[l2]) continue;
      int f = ib.res.one_f[l1], r = ib.res.one_r[l1];
      int fp = ib.res.one_f[l2], rp = ib.res.one_r[l2];
      int app = ib.res.obj_a[ib.one_tgt[l2]];
      const TwoCat& Fpp = *d.ob_val[app];
      int comp = Fpp.comp1(rp, d.one_val[fp].one(r));
      bld.set_comp1(l2, l1, ib.one_idx.at({ib.one_src[l1], A.comp1(fp, f), comp}));
    }
  // vertical: (delta,psi)*(gamma,phi) = (delta*gamma, (psi o0 (F(gamma))_x) *1 phi)
  // horizontal: (gamma',phi') o0 (gamma,phi) = (gamma' o0 gamma, phi' o0 F(f')(phi))
  for (int t1 = 0; t1 < n_two; ++t1)
    for (int t2 = 0; t2 < n_two; ++t2) {
      if (ib.two_tgt[t1] == ib.two_src[t2]) {
        int x = ib.res.obj_x[ib.one_src[ib.two_src[t1]]];
        int ap = ib.res.obj_a[ib.one_tgt[ib.two_src[t1]]];
        const TwoCat& Fp = *d.ob_val[ap];
        int gm = ib.res.two_g[t1], dl = ib.res.two_g[t2];
        int phi = ib.res.two_phi[t1], psi = ib.res.two_phi[t2];
        int val = Fp.vcomp(Fp.whisker_r(psi, d.two_val[gm].comp_obj[x]), phi);
        bld.set_vcomp(t2, t1,
                      ib.two_idx.at({ib.two_src[t1], ib.two_tgt[t2], A.vcomp(dl, gm), val}));
      }
      int l1s = ib.two_src[t1], l2s = ib.two_src[t2];
      if (ib.one_tgt[l1s] == ib.one_src[l2s]) {
        int gm = ib.res.two_g[t1], gmp = ib.res.two_g[t2];
        int phi = ib.res.two_phi[t1], phip = ib.res.two_phi[t2];
        int fp = ib.res.one_f[l2s];
        int app = ib.res.obj_a[ib.one_tgt[l2s]];
        const TwoCat& Fpp = *d.ob_val[app];
        int val = Fpp.hcomp(phip, d.one_val[fp].two(phi));
        const TwoCat& cur = bld.peek();
        int s1 = cur.comp1_tab.at(pair_key(l2s, l1s));
        int s2 = cur.comp1_tab.at(pair_key(ib.two_tgt[t2], ib.two_tgt[t1]));
        bld.set_hcomp(t2, t1, ib.two_idx.at({s1, s2, A.hcomp(gmp, gm), val}));
      }
    }
  auto total = bld.finalize();
  ib.res.total = total;
  {
    std::vector<int> om(ib.res.obj_a), fm(ib.res.one_f), tm(ib.res.two_g);
    ib.res.projection = make_strict(total, std::make_shared<TwoCat>(A), om, fm, tm);
  }
  return ib;
}

struct ConjSpec {
  bool base_co = false;
  DualKind value_dual = DualKind::Op;
  bool dual_values = false;
  DualKind out = DualKind::Op;
  bool out_dual = false;
};

ConjSpec conj_spec(Variance v, IntegralFlavor flavor) {
  // (kb, kv, out) relative to the covariant view base S = dual(A, variance);
  // kv/out encoding: 0 none, 1 op, 2 co, 3 coop
  auto spec = [](bool kb, int kv, int out) {
    ConjSpec s;
    s.base_co = kb;
    s.dual_values = kv != 0;
    if (kv) s.value_dual = kv == 1 ? DualKind::Op : (kv == 2 ? DualKind::Co : DualKind::Coop);
    s.out_dual = out != 0;
    if (out) s.out = out == 1 ? DualKind::Op : (out == 2 ? DualKind::Co : DualKind::Coop);
    return s;
  };
  switch (v) {
    case Variance::Cov:
      switch (flavor) {
        case IntegralFlavor::Primary: return spec(false, 0, 0);
        case IntegralFlavor::DualOp: return spec(true, 3, 2);
        case IntegralFlavor::DualCo: return spec(false, 2, 0);
        case IntegralFlavor::DualCoop: return spec(true, 1, 2);
      }
      break;
    case Variance::Op:
      switch (flavor) {
        case IntegralFlavor::Primary: return spec(true, 3, 3);
        case IntegralFlavor::DualOp: return spec(false, 0, 1);
        case IntegralFlavor::DualCo: return spec(true, 1, 3);
        case IntegralFlavor::DualCoop: return spec(false, 2, 1);
      }
      break;
    case Variance::Co:
      switch (flavor) {
        case IntegralFlavor::Primary: return spec(false, 2, 2);
        case IntegralFlavor::DualOp: return spec(true, 1, 0);
        case IntegralFlavor::DualCo: return spec(false, 0, 2);
        case IntegralFlavor::DualCoop: return spec(true, 3, 0);
      }
      break;
    case Variance::Coop:
      switch (flavor) {
        case IntegralFlavor::Primary: return spec(true, 1, 1);
        case IntegralFlavor::DualOp: return spec(false, 2, 3);
        case IntegralFlavor::DualCo: return spec(true, 3, 1);
        case IntegralFlavor::DualCoop: return spec(false, 0, 3);
      }
      break;
  }
  throw Error("VariantUnsupported", "integrate flavor");
}

Diagram conj_diagram(const CovariantView& view, const ConjSpec& spec, TwoCatPtr& core_base) {
  const TwoCat& S = *view.base;
  const Diagram& d = *view.d;
  core_base = spec.base_co ? dual(S, DualKind::Co) : view.base;
  Diagram core;
  core.base = core_base;
  core.variance = Variance::Cov;
  core.ob_val.resize(S.n_obj());
  core.one_val.resize(S.n_one());
  core.two_val.resize(S.n_two());
  for (int a = 0; a < S.n_obj(); ++a)
    core.ob_val[a] = spec.dual_values ? dual(d.ob_val[a], spec.value_dual) : d.ob_val[a];
  for (int f = 0; f < S.n_one(); ++f)
    core.one_val[f] =
        spec.dual_values ? dual_functor(d.one_val[f], spec.value_dual) : d.one_val[f];
  for (int t = 0; t < S.n_two(); ++t)
    core.two_val[t] =
        spec.dual_values ? dual_transformation(d.two_val[t], spec.value_dual) : d.two_val[t];
  return core;
}

}  // namespace

IntegralResult integrate(const Diagram& f, IntegralFlavor flavor) {
  CovariantView view = covariant_view(f);
  ConjSpec spec = conj_spec(f.variance, flavor);
  TwoCatPtr core_base;
  Diagram core = conj_diagram(view, spec, core_base);
  IntegralBuild ib = integrate_core(*core_base, core);
  IntegralResult res = std::move(ib.res);
  if (spec.out_dual) {
    res.total = dual(res.total, spec.out);
    LaxFunctor p = dual_functor(res.projection, spec.out);
    p.src = res.total;
    p.tgt = dual(core_base, spec.out);
    res.projection = p;
  }
  return res;
}

ValidationReport validate_diagram_morphism(const Diagram& from, const Diagram& to,
                                           const DiagramMorphism& m) {
  ValidationReport rep;
  if (!equal_presentation(*from.base, *to.base) || from.variance != to.variance) {
    rep.add("BaseMismatch", "diagram morphism endpoints");
    return rep;
  }
  CovariantView v = covariant_view(from);
  const TwoCat& A = *v.base;
  for (int a = 0; a < A.n_obj(); ++a) {
    const LaxFunctor& c = m.comp.at(a);
    if (!is_strict(c)) rep.add("NotStrict", "component at " + A.objects[a]);
    if (!equal_presentation(*c.src, *from.ob_val[a]) ||
        !equal_presentation(*c.tgt, *to.ob_val[a]))
      rep.add("BoundaryMismatch", "component at " + A.objects[a]);
    rep.absorb(validate_functor(c), "component(" + A.objects[a] + "):");
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < A.n_one(); ++f) {
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    const LaxFunctor& l = from.one_val[f];
    const LaxFunctor& r = to.one_val[f];
    const LaxFunctor& ca = m.comp[a];
    const LaxFunctor& cap = m.comp[ap];
    bool ok = true;
    for (int x = 0; x < from.ob_val[a]->n_obj(); ++x) ok &= cap.ob(l.ob(x)) == r.ob(ca.ob(x));
    for (int x = 0; x < from.ob_val[a]->n_one(); ++x)
      ok &= cap.one(l.one(x)) == r.one(ca.one(x));
    for (int x = 0; x < from.ob_val[a]->n_two(); ++x)
      ok &= cap.two(l.two(x)) == r.two(ca.two(x));
    if (!ok) rep.add("NaturalityViolation", "at " + A.ones[f].name);
  }
  for (int t = 0; t < A.n_two(); ++t) {
    int f = A.twos[t].src;
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    bool ok = true;
    for (int x = 0; x < from.ob_val[a]->n_obj(); ++x)
      ok &= m.comp[ap].one(from.two_val[t].comp_obj[x]) ==
            to.two_val[t].comp_obj[m.comp[a].ob(x)];
    if (!ok) rep.add("NaturalityViolation", "at " + A.twos[t].name);
  }
  return rep;
}

LaxFunctor integrate_transformation(const Diagram& from, const Diagram& to,
                                    const DiagramMorphism& m, const IntegralResult& ifrom,
                                    const IntegralResult& ito) {
  (void)to;
  if (from.variance != Variance::Cov)
    throw Error("VariantUnsupported", "integrate_transformation needs covariant diagrams");
  const TwoCat& S = *ifrom.total;
  const TwoCat& T = *ito.total;
  auto find_obj = [&](int a, int x) {
    for (int o = 0; o < T.n_obj(); ++o)
      if (ito.obj_a[o] == a && ito.obj_x[o] == x) return o;
    throw Error("BaseMismatch", "integrate_transformation object lookup");
  };
  auto find_one = [&](int so, int to_, int f, int r) {
    for (int l = 0; l < T.n_one(); ++l)
      if (T.ones[l].src == so && T.ones[l].tgt == to_ && ito.one_f[l] == f &&
          ito.one_r[l] == r)
        return l;
    throw Error("BaseMismatch", "integrate_transformation 1-cell lookup");
  };
  auto find_two = [&](int s1, int t1, int g, int phi) {
    for (int t = 0; t < T.n_two(); ++t)
      if (T.twos[t].src == s1 && T.twos[t].tgt == t1 && ito.two_g[t] == g &&
          ito.two_phi[t] == phi)
        return t;
    throw Error("BaseMismatch", "integrate_transformation 2-cell lookup");
  };
  std::vector<int> om(S.n_obj()), fm(S.n_one()), tm(S.n_two());
  for (int o = 0; o < S.n_obj(); ++o)
    om[o] = find_obj(ifrom.obj_a[o], m.comp[ifrom.obj_a[o]].ob(ifrom.obj_x[o]));
  for (int l = 0; l < S.n_one(); ++l) {
    int ap = ifrom.obj_a[S.ones[l].tgt];
    fm[l] = find_one(om[S.ones[l].src], om[S.ones[l].tgt], ifrom.one_f[l],
                     m.comp[ap].one(ifrom.one_r[l]));
  }
  for (int t = 0; t < S.n_two(); ++t) {
    int l1 = S.twos[t].src;
    int ap = ifrom.obj_a[S.ones[l1].tgt];
    tm[t] = find_two(fm[S.twos[t].src], fm[S.twos[t].tgt], ifrom.two_g[t],
                     m.comp[ap].two(ifrom.two_phi[t]));
  }
  return make_strict(ifrom.total, ito.total, om, fm, tm);
}

JKResult jk_pair(const Diagram& f, const IntegralResult& integral, int a) {
  if (f.variance != Variance::Cov) {
    // conjugate through the dualities: run the covariant core and dualize
    // every part by the outer dual of the primary flavor
    CovariantView view = covariant_view(f);
    ConjSpec spec = conj_spec(f.variance, IntegralFlavor::Primary);
    TwoCatPtr core_base;
    Diagram core = conj_diagram(view, spec, core_base);
    IntegralBuild ib = integrate_core(*core_base, core);
    JKResult c = jk_pair(core, ib.res, a);
    JKResult r;
    r.fib = c.fib;
    r.fib.fiber = dual(c.fib.fiber, spec.out);
    r.sl = c.sl;
    r.sl.slice = dual(c.sl.slice, spec.out);
    r.j = dual_functor(c.j, spec.out);
    r.j.src = r.fib.fiber;
    r.j.tgt = r.sl.slice;
    r.k = dual_functor(c.k, spec.out);
    r.k.src = r.sl.slice;
    r.k.tgt = r.fib.fiber;
    r.unit = dual_transformation(c.unit, spec.out);
    r.adj = c.adj;  // the ALC packaging lives in the covariant core world
    (void)integral;
    return r;
  }
  JKResult r;
  LaxFunctor p = integral.projection;
  r.fib = fiber(p, a);
  r.sl = slice(p, a, SliceVariant::LaxOver);
  r.j = fiber_inclusion(p, a, SliceVariant::LaxOver, r.fib, r.sl);

  const TwoCat& A = *p.tgt;
  const TwoCat& T = *integral.total;
  const TwoCat& SL = *r.sl.slice;
  const TwoCat& FB = *r.fib.fiber;

  std::vector<int> fib_obj(T.n_obj(), -1), fib_one(T.n_one(), -1), fib_two(T.n_two(), -1);
  for (int o = 0; o < FB.n_obj(); ++o) fib_obj[r.fib.obj_of[o]] = o;
  for (int l = 0; l < FB.n_one(); ++l) fib_one[r.fib.one_of[l]] = l;
  for (int t = 0; t < FB.n_two(); ++t) fib_two[r.fib.two_of[t]] = t;

  auto total_obj = [&](int aa, int xx) {
    for (int o = 0; o < T.n_obj(); ++o)
      if (integral.obj_a[o] == aa && integral.obj_x[o] == xx) return o;
    throw Error("BaseMismatch", "jk_pair total object lookup");
  };
  auto total_one = [&](int srcO, int tgtO, int ff, int rr) {
    for (int l = 0; l < T.n_one(); ++l)
      if (T.ones[l].src == srcO && T.ones[l].tgt == tgtO && integral.one_f[l] == ff &&
          integral.one_r[l] == rr)
        return l;
    throw Error("BaseMismatch", "jk_pair total 1-cell lookup");
  };
  auto total_two = [&](int s1, int t1, int gg, int pp) {
    for (int t = 0; t < T.n_two(); ++t)
      if (T.twos[t].src == s1 && T.twos[t].tgt == t1 && integral.two_g[t] == gg &&
          integral.two_phi[t] == pp)
        return t;
    throw Error("BaseMismatch", "jk_pair total 2-cell lookup");
  };

  // K_a : ((a',x'), p) -> (a, F(p)(x'));
  //       ((f,r), sigma) -> (1_a, F(p')(r) (F(sigma))_{x'});
  //       (gamma, phi) -> (1_{1_a}, F(p')(phi) o0 (F(sigma))_{x'})
  std::vector<int> om(SL.n_obj()), fm(SL.n_one()), tm(SL.n_two());
  const TwoCat& Fa = *f.ob_val[a];
  for (int o = 0; o < SL.n_obj(); ++o) {
    int tot = r.sl.obj_a[o];
    int pb = r.sl.obj_p[o];
    int xp = integral.obj_x[tot];
    om[o] = fib_obj[total_obj(a, f.one_val[pb].ob(xp))];
  }
  for (int l = 0; l < SL.n_one(); ++l) {
    int tl = r.sl.one_f[l];
    int sg = r.sl.one_al[l];
    int srcO = SL.ones[l].src, tgtO = SL.ones[l].tgt;
    int pb2 = r.sl.obj_p[tgtO];
    int xp = integral.obj_x[r.sl.obj_a[srcO]];
    int rr = integral.one_r[tl];
    int val = Fa.comp1(f.one_val[pb2].one(rr), f.two_val[sg].comp_obj[xp]);
    fm[l] = fib_one[total_one(r.fib.obj_of[om[srcO]], r.fib.obj_of[om[tgtO]], A.id1(a), val)];
  }
  for (int t = 0; t < SL.n_two(); ++t) {
    int tt = r.sl.two_beta[t];
    int l1 = SL.twos[t].src;
    int srcO = SL.ones[l1].src, tgtO = SL.ones[l1].tgt;
    int pb2 = r.sl.obj_p[tgtO];
    int sg = r.sl.one_al[l1];
    int xp = integral.obj_x[r.sl.obj_a[srcO]];
    int val =
        Fa.whisker_r(f.one_val[pb2].two(integral.two_phi[tt]), f.two_val[sg].comp_obj[xp]);
    tm[t] = fib_two[total_two(r.fib.one_of[fm[SL.twos[t].src]],
                              r.fib.one_of[fm[SL.twos[t].tgt]], A.id2(A.id1(a)), val)];
  }
  r.k = make_strict(r.sl.slice, r.fib.fiber, om, fm, tm);

  // canonical colax transformation 1 => J.K with components
  // alpha_{((a',x'),p)} = ((p, 1_{F(p)(x')}), 1_p)
  auto slice_obj = [&](int tot, int pb) {
    for (int o = 0; o < SL.n_obj(); ++o)
      if (r.sl.obj_a[o] == tot && r.sl.obj_p[o] == pb) return o;
    throw Error("BaseMismatch", "jk_pair slice object lookup");
  };
  auto slice_one = [&](int so, int to_, int tone, int sg) {
    for (int l = 0; l < SL.n_one(); ++l)
      if (SL.ones[l].src == so && SL.ones[l].tgt == to_ && r.sl.one_f[l] == tone &&
          r.sl.one_al[l] == sg)
        return l;
    throw Error("BaseMismatch", "jk_pair slice 1-cell lookup");
  };
  auto slice_two = [&](int s1, int t1, int t2cell) {
    for (int t = 0; t < SL.n_two(); ++t)
      if (SL.twos[t].src == s1 && SL.twos[t].tgt == t1 && r.sl.two_beta[t] == t2cell)
        return t;
    throw Error("BaseMismatch", "jk_pair slice 2-cell lookup");
  };

  LaxFunctor jk = compose_functors(r.j, r.k);
  Transformation unit;
  unit.kind = TransKind::Colax;
  unit.from = identity_functor(r.sl.slice);
  unit.to = jk;
  unit.comp_obj.resize(SL.n_obj());
  unit.comp_one.resize(SL.n_one());
  for (int o = 0; o < SL.n_obj(); ++o) {
    int tot = r.sl.obj_a[o];
    int pb = r.sl.obj_p[o];
    int xp = integral.obj_x[tot];
    int fpx = total_obj(a, f.one_val[pb].ob(xp));
    int tot1 = total_one(tot, fpx, pb, Fa.id1(f.one_val[pb].ob(xp)));
    unit.comp_obj[o] = slice_one(o, slice_obj(fpx, A.id1(a)), tot1, A.id2(pb));
  }
  for (int l = 0; l < SL.n_one(); ++l) {
    int srcO = SL.ones[l].src, tgtO = SL.ones[l].tgt;
    int sg = r.sl.one_al[l];
    int src1 = SL.comp1(jk.one_map[l], unit.comp_obj[srcO]);
    int tgt1 = SL.comp1(unit.comp_obj[tgtO], l);
    int tot_src = r.sl.one_f[src1];
    int phi = Fa.id2(integral.one_r[tot_src]);
    int tot2 = total_two(tot_src, r.sl.one_f[tgt1], sg, phi);
    unit.comp_one[l] = slice_two(src1, tgt1, tot2);
  }
  r.unit = unit;

  LaxColaxAdjunction adj;
  adj.u = r.k;
  adj.u.dir = Direction::Lax;
  adj.v = r.j;
  adj.v.dir = Direction::Colax;
  adj.p_obj.resize(FB.n_obj());
  adj.p_one.resize(FB.n_one());
  for (int b = 0; b < FB.n_obj(); ++b) adj.p_obj[b] = FB.id1(b);
  for (int g = 0; g < FB.n_one(); ++g)
    adj.p_one[g] = FB.id2(FB.comp1(g, FB.id1(FB.ones[g].src)));
  adj.q_obj = unit.comp_obj;
  adj.q_one = unit.comp_one;
  adj.sigma.resize(SL.n_obj());
  for (int o = 0; o < SL.n_obj(); ++o) adj.sigma[o] = FB.id2(FB.id1(r.k.ob(o)));
  adj.tau.resize(FB.n_obj());
  for (int b = 0; b < FB.n_obj(); ++b) adj.tau[b] = SL.id2(SL.id1(r.j.ob(b)));
  r.adj = adj;
  return r;
}

}  // namespace twocat
