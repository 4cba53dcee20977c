#include "twocat/functor.hpp"

#include <algorithm>

namespace twocat {

int LaxFunctor::comp(int fp, int f) const {
  auto it = comp_cell.find(pair_key(fp, f));
  if (it == comp_cell.end())
    throw Error("MissingTableEntry", "structural comp cell (" + src->ones.at(fp).name + "," +
                                         src->ones.at(f).name + ")");
  return it->second;
}

LaxFunctor identity_functor(const TwoCatPtr& a) {
  LaxFunctor u;
  u.src = u.tgt = a;
  u.dir = Direction::Lax;
  u.ob_map.resize(a->n_obj());
  u.one_map.resize(a->n_one());
  u.two_map.resize(a->n_two());
  for (int i = 0; i < a->n_obj(); ++i) u.ob_map[i] = i;
  for (int i = 0; i < a->n_one(); ++i) u.one_map[i] = i;
  for (int i = 0; i < a->n_two(); ++i) u.two_map[i] = i;
  for (int g = 0; g < a->n_one(); ++g)
    for (int f = 0; f < a->n_one(); ++f)
      if (a->ones[f].tgt == a->ones[g].src)
        u.comp_cell[pair_key(g, f)] = a->id2(a->comp1(g, f));
  u.unit_cell.resize(a->n_obj());
  for (int i = 0; i < a->n_obj(); ++i) u.unit_cell[i] = a->id2(a->id1(i));
  return u;
}

LaxFunctor constant_functor(const TwoCatPtr& a, const TwoCatPtr& b, int obj, Direction dir) {
  LaxFunctor u;
  u.src = a;
  u.tgt = b;
  u.dir = dir;
  int f0 = b->id1(obj), t0 = b->id2(f0);
  u.ob_map.assign(a->n_obj(), obj);
  u.one_map.assign(a->n_one(), f0);
  u.two_map.assign(a->n_two(), t0);
  for (int g = 0; g < a->n_one(); ++g)
    for (int f = 0; f < a->n_one(); ++f)
      if (a->ones[f].tgt == a->ones[g].src) u.comp_cell[pair_key(g, f)] = t0;
  u.unit_cell.assign(a->n_obj(), t0);
  return u;
}

LaxFunctor make_strict(const TwoCatPtr& src, const TwoCatPtr& tgt, std::vector<int> ob_map,
                       std::vector<int> one_map, std::vector<int> two_map, Direction dir) {
  LaxFunctor u;
  u.src = src;
  u.tgt = tgt;
  u.dir = dir;
  u.ob_map = std::move(ob_map);
  u.one_map = std::move(one_map);
  u.two_map = std::move(two_map);
  for (int g = 0; g < src->n_one(); ++g)
    for (int f = 0; f < src->n_one(); ++f)
      if (src->ones[f].tgt == src->ones[g].src)
        u.comp_cell[pair_key(g, f)] = tgt->id2(tgt->comp1(u.one_map[g], u.one_map[f]));
  u.unit_cell.resize(src->n_obj());
  for (int a = 0; a < src->n_obj(); ++a)
    u.unit_cell[a] = tgt->id2(tgt->id1(u.ob_map[a]));
  return u;
}

bool is_strict(const LaxFunctor& u) {
  for (const auto& [k, t] : u.comp_cell)
    if (t < 0 || t >= u.tgt->n_two() || !u.tgt->is_id2(t)) return false;
  for (int t : u.unit_cell)
    if (t < 0 || t >= u.tgt->n_two() || !u.tgt->is_id2(t)) return false;
  return true;
}

namespace {
bool two_invertible(const TwoCat& c, int t) {
  if (c.is_id2(t)) return true;
  int f = c.twos[t].src, g = c.twos[t].tgt;
  for (int s : c.twos_from_to(g, f))
    if (c.vcomp(s, t) == c.id2(f) && c.vcomp(t, s) == c.id2(g)) return true;
  return false;
}
}  // namespace

bool is_pseudo(const LaxFunctor& u) {
  for (const auto& [k, t] : u.comp_cell)
    if (!two_invertible(*u.tgt, t)) return false;
  for (int t : u.unit_cell)
    if (!two_invertible(*u.tgt, t)) return false;
  return true;
}

bool is_normalized(const LaxFunctor& u) {
  for (int a = 0; a < u.src->n_obj(); ++a)
    if (!u.tgt->is_id2(u.unit_cell[a])) return false;
  for (int f = 0; f < u.src->n_one(); ++f) {
    int a = u.src->ones[f].src, ap = u.src->ones[f].tgt;
    if (!u.tgt->is_id2(u.comp(f, u.src->id1(a)))) return false;
    if (!u.tgt->is_id2(u.comp(u.src->id1(ap), f))) return false;
  }
  return true;
}

LaxFunctor dual_functor(const LaxFunctor& u, DualKind kind) {
  if (kind == DualKind::Coop)
    return dual_functor(dual_functor(u, DualKind::Op), DualKind::Co);
  LaxFunctor r;
  r.src = dual(u.src, kind);
  r.tgt = dual(u.tgt, kind);
  r.dir = (kind == DualKind::Co)
              ? (u.dir == Direction::Lax ? Direction::Colax : Direction::Lax)
              : u.dir;
  r.ob_map = u.ob_map;
  r.one_map = u.one_map;
  r.two_map = u.two_map;
  r.unit_cell = u.unit_cell;
  if (kind == DualKind::Op) {
    for (const auto& [k, t] : u.comp_cell) {
      int fp = static_cast<int>(k >> 32), f = static_cast<int>(k & 0xffffffffu);
      r.comp_cell[pair_key(f, fp)] = t;
    }
  } else {
    r.comp_cell = u.comp_cell;
  }
  return r;
}

namespace {
// Boundary of the structural composition cell of u at (f', f), as
// (source 1-cell, target 1-cell) in u.tgt; lax orientation.
std::pair<int, int> comp_cell_boundary_lax(const LaxFunctor& u, int fp, int f) {
  int s = u.tgt->comp1(u.one(fp), u.one(f));
  int t = u.one(u.src->comp1(fp, f));
  return {s, t};
}
}  // namespace

ValidationReport validate_functor(const LaxFunctor& u) {
  if (u.dir == Direction::Colax) return validate_functor(dual_functor(u, DualKind::Co));
  ValidationReport rep;
  const TwoCat& A = *u.src;
  const TwoCat& B = *u.tgt;

  // map shapes and index ranges
  if (static_cast<int>(u.ob_map.size()) != A.n_obj() ||
      static_cast<int>(u.one_map.size()) != A.n_one() ||
      static_cast<int>(u.two_map.size()) != A.n_two() ||
      static_cast<int>(u.unit_cell.size()) != A.n_obj()) {
    rep.add("BoundaryMismatch", "assignment tables sized differently from the source");
    return rep;
  }
  for (int x : u.ob_map)
    if (x < 0 || x >= B.n_obj()) {
      rep.add("BoundaryMismatch", "object image out of range");
      return rep;
    }
  for (int x : u.one_map)
    if (x < 0 || x >= B.n_one()) {
      rep.add("BoundaryMismatch", "1-cell image out of range");
      return rep;
    }
  for (int x : u.two_map)
    if (x < 0 || x >= B.n_two()) {
      rep.add("BoundaryMismatch", "2-cell image out of range");
      return rep;
    }
  for (int x : u.unit_cell)
    if (x < 0 || x >= B.n_two()) {
      rep.add("BoundaryMismatch", "unit cell out of range");
      return rep;
    }
  for (const auto& [k, t] : u.comp_cell)
    if (t < 0 || t >= B.n_two()) {
      rep.add("BoundaryMismatch", "structural cell out of range");
      return rep;
    }

  // assignments respect src/tgt
  for (int f = 0; f < A.n_one(); ++f) {
    if (B.ones[u.one(f)].src != u.ob(A.ones[f].src) ||
        B.ones[u.one(f)].tgt != u.ob(A.ones[f].tgt))
      rep.add("BoundaryMismatch", "u(" + A.ones[f].name + ")");
  }
  for (int t = 0; t < A.n_two(); ++t) {
    if (B.twos[u.two(t)].src != u.one(A.twos[t].src) ||
        B.twos[u.two(t)].tgt != u.one(A.twos[t].tgt))
      rep.add("BoundaryMismatch", "u(" + A.twos[t].name + ")");
  }
  for (int g = 0; g < A.n_one(); ++g)
    for (int f = 0; f < A.n_one(); ++f) {
      if (A.ones[f].tgt != A.ones[g].src) continue;
      auto [s, t] = comp_cell_boundary_lax(u, g, f);
      int c = u.comp(g, f);
      if (B.twos[c].src != s || B.twos[c].tgt != t)
        rep.add("BoundaryMismatch", "u_{" + A.ones[g].name + "," + A.ones[f].name + "}");
    }
  for (int a = 0; a < A.n_obj(); ++a) {
    int c = u.unit(a);
    if (B.twos[c].src != B.id1(u.ob(a)) || B.twos[c].tgt != u.one(A.id1(a)))
      rep.add("BoundaryMismatch", "u_{" + A.objects[a] + "}");
  }
  if (!rep.ok()) return rep;

  // functoriality on 2-cells
  for (int f = 0; f < A.n_one(); ++f)
    if (u.two(A.id2(f)) != B.id2(u.one(f)))
      rep.add("TwoFunctorialityViolation", "u(1_" + A.ones[f].name + ")");
  for (const auto& [k, ba] : A.vcomp_tab) {
    int b2 = static_cast<int>(k >> 32), a2 = static_cast<int>(k & 0xffffffffu);
    if (u.two(ba) != B.vcomp(u.two(b2), u.two(a2)))
      rep.add("TwoFunctorialityViolation",
              "u(" + A.twos[b2].name + " *1 " + A.twos[a2].name + ")");
  }

  // cocycle on composable triples
  for (int h = 0; h < A.n_one(); ++h)
    for (int g = 0; g < A.n_one(); ++g) {
      if (A.ones[g].tgt != A.ones[h].src) continue;
      for (int f = 0; f < A.n_one(); ++f) {
        if (A.ones[f].tgt != A.ones[g].src) continue;
        int lhs = B.vcomp(u.comp(h, A.comp1(g, f)), B.whisker_l(u.one(h), u.comp(g, f)));
        int rhs = B.vcomp(u.comp(A.comp1(h, g), f), B.whisker_r(u.comp(h, g), u.one(f)));
        if (lhs != rhs)
          rep.add("CocycleViolation", "(" + A.ones[h].name + "," + A.ones[g].name + "," +
                                          A.ones[f].name + ")");
      }
    }

  // naturality of the composition cells
  for (const auto& [k, ba] : A.hcomp_tab) {
    int a2 = static_cast<int>(k >> 32), a1 = static_cast<int>(k & 0xffffffffu);
    int f = A.twos[a1].src, g = A.twos[a1].tgt;
    int fp = A.twos[a2].src, gp = A.twos[a2].tgt;
    int lhs = B.vcomp(u.comp(gp, g), B.hcomp(u.two(a2), u.two(a1)));
    int rhs = B.vcomp(u.two(A.hcomp(a2, a1)), u.comp(fp, f));
    (void)ba;
    if (lhs != rhs)
      rep.add("NaturalityViolation", "(" + A.twos[a2].name + "," + A.twos[a1].name + ")");
  }

  // unit constraints
  for (int f = 0; f < A.n_one(); ++f) {
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    int lhs = B.vcomp(u.comp(f, A.id1(a)), B.whisker_l(u.one(f), u.unit(a)));
    if (lhs != B.id2(u.one(f)))
      rep.add("UnitViolation", "u(" + A.ones[f].name + ") . unit");
    int rhs = B.vcomp(u.comp(A.id1(ap), f), B.whisker_r(u.unit(ap), u.one(f)));
    if (rhs != B.id2(u.one(f)))
      rep.add("UnitViolation", "unit . u(" + A.ones[f].name + ")");
  }
  return rep;
}

LaxFunctor compose_functors(const LaxFunctor& v, const LaxFunctor& u) {
  if (u.dir != v.dir) throw Error("DirectionMismatch", "compose_functors");
  if (!equal_presentation(*u.tgt, *v.src))
    throw Error("TargetMismatch", "compose_functors: target(u) != source(v)");
  LaxFunctor r;
  r.src = u.src;
  r.tgt = v.tgt;
  r.dir = u.dir;
  r.ob_map.resize(u.src->n_obj());
  r.one_map.resize(u.src->n_one());
  r.two_map.resize(u.src->n_two());
  for (int a = 0; a < u.src->n_obj(); ++a) r.ob_map[a] = v.ob(u.ob(a));
  for (int f = 0; f < u.src->n_one(); ++f) r.one_map[f] = v.one(u.one(f));
  for (int t = 0; t < u.src->n_two(); ++t) r.two_map[t] = v.two(u.two(t));
  r.unit_cell.resize(u.src->n_obj());
  const TwoCat& C = *v.tgt;
  if (u.dir == Direction::Lax) {
    for (int a = 0; a < u.src->n_obj(); ++a)
      r.unit_cell[a] = C.vcomp(v.two(u.unit(a)), v.unit(u.ob(a)));
    for (int g = 0; g < u.src->n_one(); ++g)
      for (int f = 0; f < u.src->n_one(); ++f)
        if (u.src->ones[f].tgt == u.src->ones[g].src)
          r.comp_cell[pair_key(g, f)] =
              C.vcomp(v.two(u.comp(g, f)), v.comp(u.one(g), u.one(f)));
  } else {
    for (int a = 0; a < u.src->n_obj(); ++a)
      r.unit_cell[a] = C.vcomp(v.unit(u.ob(a)), v.two(u.unit(a)));
    for (int g = 0; g < u.src->n_one(); ++g)
      for (int f = 0; f < u.src->n_one(); ++f)
        if (u.src->ones[f].tgt == u.src->ones[g].src)
          r.comp_cell[pair_key(g, f)] =
              C.vcomp(v.comp(u.one(g), u.one(f)), v.two(u.comp(g, f)));
  }
  return r;
}

bool equal_functor(const LaxFunctor& u, const LaxFunctor& v) {
  return u.dir == v.dir && equal_presentation(*u.src, *v.src) &&
         equal_presentation(*u.tgt, *v.tgt) && u.ob_map == v.ob_map &&
         u.one_map == v.one_map && u.two_map == v.two_map && u.comp_cell == v.comp_cell &&
         u.unit_cell == v.unit_cell;
}

Transformation identity_transformation(const LaxFunctor& u) {
  Transformation s;
  s.kind = TransKind::Strict;
  s.from = u;
  s.to = u;
  s.comp_obj.resize(u.src->n_obj());
  s.comp_one.resize(u.src->n_one());
  for (int a = 0; a < u.src->n_obj(); ++a) s.comp_obj[a] = u.tgt->id1(u.ob(a));
  for (int f = 0; f < u.src->n_one(); ++f) {
    int a = u.src->ones[f].src, ap = u.src->ones[f].tgt;
    s.comp_one[f] = u.tgt->id2(u.tgt->comp1(s.comp_obj[ap], u.one(f)));
    (void)a;
  }
  return s;
}

bool is_strict_transformation(const Transformation& s) {
  for (int t : s.comp_one)
    if (!s.from.tgt->is_id2(t)) return false;
  return true;
}

bool relative_to_objects(const Transformation& s) {
  for (int a = 0; a < s.from.src->n_obj(); ++a)
    if (s.comp_obj[a] != s.from.tgt->id1(s.from.ob(a))) return false;
  return true;
}

Transformation dual_transformation(const Transformation& s, DualKind kind) {
  if (kind == DualKind::Coop)
    return dual_transformation(dual_transformation(s, DualKind::Op), DualKind::Co);
  Transformation r;
  if (kind == DualKind::Op) {
    r.from = dual_functor(s.to, DualKind::Op);
    r.to = dual_functor(s.from, DualKind::Op);
    switch (s.kind) {
      case TransKind::Lax: r.kind = TransKind::Colax; break;
      case TransKind::Colax: r.kind = TransKind::Lax; break;
      case TransKind::Strict: r.kind = TransKind::Strict; break;
    }
  } else {  // Co
    r.from = dual_functor(s.from, DualKind::Co);
    r.to = dual_functor(s.to, DualKind::Co);
    switch (s.kind) {
      case TransKind::Lax: r.kind = TransKind::Colax; break;
      case TransKind::Colax: r.kind = TransKind::Lax; break;
      case TransKind::Strict: r.kind = TransKind::Strict; break;
    }
  }
  r.comp_obj = s.comp_obj;
  r.comp_one = s.comp_one;
  return r;
}

namespace {
// Expected (source, target) of comp_one(f) in the target presentation.
std::pair<int, int> trans_component_boundary(const Transformation& s, int f) {
  const TwoCat& B = *s.from.tgt;
  int a = s.from.src->ones[f].src, ap = s.from.src->ones[f].tgt;
  int pre = B.comp1(s.comp_obj[ap], s.from.one(f));  // sigma_{a'} u(f)
  int post = B.comp1(s.to.one(f), s.comp_obj[a]);    // v(f) sigma_a
  if (s.kind == TransKind::Colax) return {post, pre};
  return {pre, post};
}
}  // namespace

ValidationReport validate_transformation(const Transformation& s) {
  if (s.from.dir != s.to.dir) {
    ValidationReport rep;
    rep.add("DirectionMismatch", "transformation endpoints disagree");
    return rep;
  }
  if (s.from.dir == Direction::Colax) {
    // Dual identifications: a transformation between colax functors is
    // validated through its co-dual between lax functors.
    return validate_transformation(dual_transformation(s, DualKind::Co));
  }
  ValidationReport rep;
  const TwoCat& A = *s.from.src;
  const TwoCat& B = *s.from.tgt;
  const LaxFunctor& u = s.from;
  const LaxFunctor& v = s.to;
  if (!equal_presentation(*u.src, *v.src) || !equal_presentation(*u.tgt, *v.tgt)) {
    rep.add("BoundaryMismatch", "transformation endpoints not parallel");
    return rep;
  }
  for (int a = 0; a < A.n_obj(); ++a) {
    const auto& c = B.ones[s.comp_obj[a]];
    if (c.src != u.ob(a) || c.tgt != v.ob(a))
      rep.add("BoundaryMismatch", "sigma_" + A.objects[a]);
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < A.n_one(); ++f) {
    auto [from1, to1] = trans_component_boundary(s, f);
    const auto& c = B.twos[s.comp_one[f]];
    if (c.src != from1 || c.tgt != to1) rep.add("BoundaryMismatch", "sigma_" + A.ones[f].name);
  }
  if (!rep.ok()) return rep;
  if (s.kind == TransKind::Strict) {
    for (int f = 0; f < A.n_one(); ++f)
      if (!B.is_id2(s.comp_one[f]))
        rep.add("NotStrict", "sigma_" + A.ones[f].name + " not an identity");
  }
  const bool lax = (s.kind != TransKind::Colax);

  // naturality with respect to 2-cells
  for (int al = 0; al < A.n_two(); ++al) {
    int f = A.twos[al].src, g = A.twos[al].tgt;
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    int lhs, rhs;
    if (lax) {
      lhs = B.vcomp(B.whisker_r(v.two(al), s.comp_obj[a]), s.comp_one[f]);
      rhs = B.vcomp(s.comp_one[g], B.whisker_l(s.comp_obj[ap], u.two(al)));
    } else {
      lhs = B.vcomp(B.whisker_l(s.comp_obj[ap], u.two(al)), s.comp_one[f]);
      rhs = B.vcomp(s.comp_one[g], B.whisker_r(v.two(al), s.comp_obj[a]));
    }
    if (lhs != rhs) rep.add("NaturalityViolation", "at " + A.twos[al].name);
  }

  // compatibility with composition of 1-cells
  for (int fp = 0; fp < A.n_one(); ++fp)
    for (int f = 0; f < A.n_one(); ++f) {
      if (A.ones[f].tgt != A.ones[fp].src) continue;
      int a = A.ones[f].src, app = A.ones[fp].tgt;
      int lhs, rhs;
      if (lax) {
        // (v_{f',f} o0 sigma_a) *1 (v(f') o0 sigma_f) *1 (sigma_{f'} o0 u(f))
        //   = sigma_{f'f} *1 (sigma_{a''} o0 u_{f',f})
        lhs = B.vcomp(B.whisker_r(v.comp(fp, f), s.comp_obj[a]),
                      B.vcomp(B.whisker_l(v.one(fp), s.comp_one[f]),
                              B.whisker_r(s.comp_one[fp], u.one(f))));
        rhs = B.vcomp(s.comp_one[A.comp1(fp, f)],
                      B.whisker_l(s.comp_obj[app], u.comp(fp, f)));
      } else {
        // (sigma_{a''} o0 u_{f',f}) *1 (sigma_{f'} o0 u(f)) *1 (v(f') o0 sigma_f)
        //   = sigma_{f'f} *1 (v_{f',f} o0 sigma_a)
        lhs = B.vcomp(B.whisker_l(s.comp_obj[app], u.comp(fp, f)),
                      B.vcomp(B.whisker_r(s.comp_one[fp], u.one(f)),
                              B.whisker_l(v.one(fp), s.comp_one[f])));
        rhs = B.vcomp(s.comp_one[A.comp1(fp, f)],
                      B.whisker_r(v.comp(fp, f), s.comp_obj[a]));
      }
      if (lhs != rhs)
        rep.add("NaturalityViolation",
                "composition at (" + A.ones[fp].name + "," + A.ones[f].name + ")");
    }

  // unit compatibility
  for (int a = 0; a < A.n_obj(); ++a) {
    int f1 = A.id1(a);
    int lhs, rhs;
    if (lax) {
      lhs = B.vcomp(s.comp_one[f1], B.whisker_l(s.comp_obj[a], u.unit(a)));
      rhs = B.whisker_r(v.unit(a), s.comp_obj[a]);
    } else {
      lhs = B.vcomp(s.comp_one[f1], B.whisker_r(v.unit(a), s.comp_obj[a]));
      rhs = B.whisker_l(s.comp_obj[a], u.unit(a));
    }
    if (lhs != rhs) rep.add("NaturalityViolation", "unit at " + A.objects[a]);
  }
  return rep;
}

Transformation compose_transformations_v(const Transformation& t, const Transformation& s) {
  if (t.kind != TransKind::Strict || s.kind != TransKind::Strict)
    throw Error("KindUnsupported", "vertical composition needs strict transformations");
  if (!is_strict(s.from) || !is_strict(s.to) || !is_strict(t.to))
    throw Error("NotStrict", "vertical composition needs strict functors");
  if (!equal_functor(s.to, t.from))
    throw Error("BoundaryMismatch", "compose_transformations_v");
  Transformation r;
  r.kind = TransKind::Strict;
  r.from = s.from;
  r.to = t.to;
  const TwoCat& B = *s.from.tgt;
  r.comp_obj.resize(s.comp_obj.size());
  for (std::size_t a = 0; a < s.comp_obj.size(); ++a)
    r.comp_obj[a] = B.comp1(t.comp_obj[a], s.comp_obj[a]);
  r.comp_one.resize(s.comp_one.size());
  for (int f = 0; f < s.from.src->n_one(); ++f) {
    int ap = s.from.src->ones[f].tgt;
    r.comp_one[f] = B.id2(B.comp1(r.comp_obj[ap], s.from.one(f)));
  }
  return r;
}

Transformation compose_transformations_h(const Transformation& sp, const Transformation& s) {
  if (sp.kind != TransKind::Strict || s.kind != TransKind::Strict)
    throw Error("KindUnsupported", "horizontal composition needs strict transformations");
  if (!is_strict(s.from) || !is_strict(s.to) || !is_strict(sp.from) || !is_strict(sp.to))
    throw Error("NotStrict", "horizontal composition needs strict functors");
  if (!equal_presentation(*s.from.tgt, *sp.from.src))
    throw Error("BoundaryMismatch", "compose_transformations_h");
  Transformation r;
  r.kind = TransKind::Strict;
  r.from = compose_functors(sp.from, s.from);
  r.to = compose_functors(sp.to, s.to);
  const TwoCat& C = *sp.from.tgt;
  r.comp_obj.resize(s.comp_obj.size());
  for (std::size_t a = 0; a < s.comp_obj.size(); ++a)
    r.comp_obj[a] =
        C.comp1(sp.comp_obj[s.to.ob(static_cast<int>(a))], sp.from.one(s.comp_obj[a]));
  r.comp_one.resize(s.comp_one.size());
  for (int f = 0; f < s.from.src->n_one(); ++f) {
    int ap = s.from.src->ones[f].tgt;
    r.comp_one[f] = C.id2(C.comp1(r.comp_obj[ap], r.from.one(f)));
  }
  return r;
}

bool equal_transformation(const Transformation& a, const Transformation& b) {
  return a.kind == b.kind && equal_functor(a.from, b.from) && equal_functor(a.to, b.to) &&
         a.comp_obj == b.comp_obj && a.comp_one == b.comp_one;
}

ValidationReport validate_modification(const Modification& m) {
  ValidationReport rep;
  const Transformation& s = m.from;
  const Transformation& t = m.to;
  if (s.kind == TransKind::Colax || t.kind == TransKind::Colax) {
    Modification md;
    md.from = dual_transformation(s, DualKind::Co);
    md.to = dual_transformation(t, DualKind::Co);
    md.comp = m.comp;
    return validate_modification(md);
  }
  if (!equal_functor(s.from, t.from) || !equal_functor(s.to, t.to)) {
    rep.add("BoundaryMismatch", "modification endpoints not parallel");
    return rep;
  }
  const TwoCat& A = *s.from.src;
  const TwoCat& B = *s.from.tgt;
  for (int a = 0; a < A.n_obj(); ++a) {
    const auto& c = B.twos[m.comp.at(a)];
    if (c.src != s.comp_obj[a] || c.tgt != t.comp_obj[a])
      rep.add("BoundaryMismatch", "Gamma_" + A.objects[a]);
  }
  if (!rep.ok()) return rep;
  // exchange: tau_f *1 (Gamma_{a'} o0 u(f)) = (v(f) o0 Gamma_a) *1 sigma_f
  for (int f = 0; f < A.n_one(); ++f) {
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    int lhs = B.vcomp(t.comp_one[f], B.whisker_r(m.comp[ap], s.from.one(f)));
    int rhs = B.vcomp(B.whisker_l(s.to.one(f), m.comp[a]), s.comp_one[f]);
    if (lhs != rhs) rep.add("NaturalityViolation", "exchange at " + A.ones[f].name);
  }
  return rep;
}

Homotopy homotopy_from_transformation(const Transformation& s) {
  const LaxFunctor& u = s.from;
  const LaxFunctor& v = s.to;
  if (u.dir != Direction::Lax || v.dir != Direction::Lax)
    throw Error("DirectionMismatch", "homotopy needs lax functor endpoints");
  TwoCatPtr interval = ordinal(1);
  const TwoCat& A = *u.src;
  const TwoCat& B = *u.tgt;
  TwoCatPtr cyl = product(*interval, A);

  // index arithmetic for the product; [1] has 1-cells (0<=0, 0<=1, 1<=1)
  const int E00 = 0, E01 = 1, E11 = 2;
  auto oi = [&](int x, int a) { return x * A.n_obj() + a; };
  auto fi = [&](int e, int f) { return e * A.n_one() + f; };
  auto ti = [&](int e, int t) { return e * A.n_two() + t; };

  const bool colax_like = (s.kind != TransKind::Lax);

  LaxFunctor h;
  h.src = cyl;
  h.tgt = u.tgt;
  h.dir = Direction::Lax;
  h.ob_map.resize(cyl->n_obj());
  h.one_map.resize(cyl->n_one());
  h.two_map.resize(cyl->n_two());
  h.unit_cell.resize(cyl->n_obj());
  for (int a = 0; a < A.n_obj(); ++a) {
    h.ob_map[oi(0, a)] = u.ob(a);
    h.ob_map[oi(1, a)] = v.ob(a);
    h.unit_cell[oi(0, a)] = u.unit(a);
    h.unit_cell[oi(1, a)] = v.unit(a);
  }
  for (int f = 0; f < A.n_one(); ++f) {
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    h.one_map[fi(E00, f)] = u.one(f);
    h.one_map[fi(E11, f)] = v.one(f);
    h.one_map[fi(E01, f)] = colax_like ? B.comp1(s.comp_obj[ap], u.one(f))
                                       : B.comp1(v.one(f), s.comp_obj[a]);
  }
  for (int t = 0; t < A.n_two(); ++t) {
    int f = A.twos[t].src;
    int a = A.ones[f].src, ap = A.ones[f].tgt;
    h.two_map[ti(E00, t)] = u.two(t);
    h.two_map[ti(E11, t)] = v.two(t);
    h.two_map[ti(E01, t)] = colax_like ? B.whisker_l(s.comp_obj[ap], u.two(t))
                                       : B.whisker_r(v.two(t), s.comp_obj[a]);
  }
  for (int gp = 0; gp < cyl->n_one(); ++gp)
    for (int g = 0; g < cyl->n_one(); ++g) {
      if (cyl->ones[g].tgt != cyl->ones[gp].src) continue;
      int ep = gp / A.n_one(), fp = gp % A.n_one();
      int e = g / A.n_one(), f = g % A.n_one();
      int cell;
      if (ep == E00 && e == E00) {
        cell = u.comp(fp, f);
      } else if (ep == E11 && e == E11) {
        cell = v.comp(fp, f);
      } else if (colax_like) {
        int app = A.ones[fp].tgt;
        if (ep == E01 && e == E00) {
          cell = B.whisker_l(s.comp_obj[app], u.comp(fp, f));
        } else {  // ep == E11, e == E01
          cell = B.vcomp(B.whisker_l(s.comp_obj[app], u.comp(fp, f)),
                         B.whisker_r(s.comp_one[fp], u.one(f)));
        }
      } else {
        int a = A.ones[f].src;
        if (ep == E11 && e == E01) {
          cell = B.whisker_r(v.comp(fp, f), s.comp_obj[a]);
        } else {  // ep == E01, e == E00
          cell = B.vcomp(B.whisker_r(v.comp(fp, f), s.comp_obj[a]),
                         B.whisker_l(v.one(fp), s.comp_one[f]));
        }
      }
      h.comp_cell[pair_key(gp, g)] = cell;
    }
  return Homotopy{cyl, h};
}

int structural_cell_chain(const LaxFunctor& u, const std::vector<int>& chain,
                          int obj_if_empty) {
  const TwoCat& A = *u.src;
  const TwoCat& B = *u.tgt;
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (A.ones[chain[i - 1]].tgt != A.ones[chain[i]].src)
      throw Error("NotComposable", "structural_cell_chain");
  if (chain.empty()) return u.unit(obj_if_empty);
  if (chain.size() == 1) return B.id2(u.one(chain[0]));
  std::vector<int> init(chain.begin(), chain.end() - 1);
  int last = chain.back();
  int rest = structural_cell_chain(u, init, obj_if_empty);
  int init_comp = A.compose_chain(init, obj_if_empty);
  return B.vcomp(u.comp(last, init_comp), B.whisker_l(u.one(last), rest));
}

}  // namespace twocat
