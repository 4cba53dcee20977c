#include "twocat/benabou.hpp"

#include <algorithm>
#include <functional>

namespace twocat {

int ChainCell::obj_at(int i) const {
  if (i == 0) return src;
  return cat->ones.at(cells.at(i - 1)).tgt;
}

int ChainCell::segment(int i, int j) const {
  std::vector<int> part(cells.begin() + i, cells.begin() + j);
  return cat->compose_chain(part, obj_at(i));
}

bool chain_valid(const ChainCell& x) {
  if (!x.cat || x.src < 0 || x.src >= x.cat->n_obj()) return false;
  int at = x.src;
  for (int f : x.cells) {
    if (f < 0 || f >= x.cat->n_one() || x.cat->ones[f].src != at) return false;
    at = x.cat->ones[f].tgt;
  }
  return true;
}

bool operator==(const ChainCell& a, const ChainCell& b) {
  return a.src == b.src && a.cells == b.cells && equal_presentation(*a.cat, *b.cat);
}

bool interval_valid(const IntervalMap& phi) {
  if (phi.v.empty()) return false;
  if (phi.v.front() != 0) return false;
  for (std::size_t i = 1; i < phi.v.size(); ++i)
    if (phi.v[i] < phi.v[i - 1]) return false;
  return true;
}

std::vector<IntervalMap> enumerate_interval_maps(int n, int m) {
  std::vector<IntervalMap> out;
  if (n == 0) {
    if (m == 0) out.push_back(IntervalMap{{0}});
    return out;
  }
  IntervalMap cur;
  cur.v.assign(n + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n + 1) {
      if (cur.v.back() == m) out.push_back(cur);
      return;
    }
    for (int val = cur.v[i - 1]; val <= m; ++val) {
      cur.v[i] = val;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

IntervalMap interval_identity(int n) {
  IntervalMap r;
  r.v.resize(n + 1);
  for (int i = 0; i <= n; ++i) r.v[i] = i;
  return r;
}

IntervalMap interval_compose(const IntervalMap& phi, const IntervalMap& psi) {
  IntervalMap r;
  r.v.resize(psi.v.size());
  for (std::size_t i = 0; i < psi.v.size(); ++i) r.v[i] = phi(psi.v[i]);
  return r;
}

IntervalMap interval_tensor(const IntervalMap& phi, const IntervalMap& psi) {
  IntervalMap r;
  int n = psi.n(), np = psi.m();
  int p = phi.n();
  r.v.resize(n + p + 1);
  for (int i = 0; i <= n; ++i) r.v[i] = psi(i);
  for (int i = 1; i <= p; ++i) r.v[n + i] = phi(i) + np;
  return r;
}

ValidationReport validate_tilde_cell(const TildeTwoCell& t) {
  ValidationReport rep;
  const TwoCat& A = *t.from.cat;
  if (!chain_valid(t.from) || !chain_valid(t.to)) {
    rep.add("BoundaryMismatch", "invalid chain endpoints");
    return rep;
  }
  if (!interval_valid(t.phi) || t.phi.n() != t.to.length() || t.phi.m() != t.from.length()) {
    rep.add("BoundaryMismatch", "interval map shape");
    return rep;
  }
  for (int i = 0; i <= t.to.length(); ++i)
    if (t.from.obj_at(t.phi(i)) != t.to.obj_at(i)) {
      rep.add("BoundaryMismatch", "object mismatch under the interval map");
      return rep;
    }
  if (static_cast<int>(t.comps.size()) != t.to.length()) {
    rep.add("BoundaryMismatch", "component count");
    return rep;
  }
  for (int i = 1; i <= t.to.length(); ++i) {
    int c = t.comps[i - 1];
    int s = t.from.segment(t.phi(i - 1), t.phi(i));
    int e = t.to.cells[i - 1];
    if (A.twos.at(c).src != s || A.twos.at(c).tgt != e)
      rep.add("BoundaryMismatch", "component " + std::to_string(i));
  }
  return rep;
}

bool operator==(const TildeTwoCell& a, const TildeTwoCell& b) {
  return a.from == b.from && a.to == b.to && a.phi.v == b.phi.v && a.comps == b.comps;
}

int tilde_component_over(const TildeTwoCell& t, int i, int j) {
  const TwoCat& A = *t.from.cat;
  if (i == j) return A.id2(A.id1(t.to.obj_at(i)));
  int acc = t.comps[i];
  for (int k = i + 2; k <= j; ++k) {
    int uf = t.from.segment(t.phi(i), t.phi(k - 1));
    acc = A.vcomp(A.whisker_l(t.to.cells[k - 1], acc), A.whisker_r(t.comps[k - 1], uf));
  }
  return acc;
}

ChainCell tilde_compose_1(const ChainCell& c2, const ChainCell& c1) {
  if (c1.tgt() != c2.src) throw Error("NotComposable", "tilde_compose_1");
  ChainCell r = c1;
  r.cells.insert(r.cells.end(), c2.cells.begin(), c2.cells.end());
  return r;
}

TildeTwoCell tilde_identity(const ChainCell& x) {
  TildeTwoCell t;
  t.from = x;
  t.to = x;
  t.phi = interval_identity(x.length());
  t.comps.resize(x.length());
  for (int i = 0; i < x.length(); ++i) t.comps[i] = x.cat->id2(x.cells[i]);
  return t;
}

TildeTwoCell tilde_vcomp(const TildeTwoCell& b, const TildeTwoCell& a) {
  if (!(a.to == b.from)) throw Error("NotComposable", "tilde_vcomp");
  const TwoCat& A = *a.from.cat;
  TildeTwoCell r;
  r.from = a.from;
  r.to = b.to;
  r.phi = interval_compose(a.phi, b.phi);
  r.comps.resize(b.to.length());
  for (int i = 1; i <= b.to.length(); ++i)
    r.comps[i - 1] = A.vcomp(b.comps[i - 1], tilde_component_over(a, b.phi(i - 1), b.phi(i)));
  return r;
}

TildeTwoCell tilde_hcomp(const TildeTwoCell& b, const TildeTwoCell& a) {
  if (a.to.tgt() != b.to.src || a.from.tgt() != b.from.src)
    throw Error("NotComposable", "tilde_hcomp");
  TildeTwoCell r;
  r.from = tilde_compose_1(b.from, a.from);
  r.to = tilde_compose_1(b.to, a.to);
  r.phi = interval_tensor(b.phi, a.phi);
  r.comps = a.comps;
  r.comps.insert(r.comps.end(), b.comps.begin(), b.comps.end());
  return r;
}

ChainCell tilde_functor_chain(const LaxFunctor& u, const ChainCell& x) {
  ChainCell r;
  r.cat = u.tgt;
  r.src = u.ob(x.src);
  r.cells.resize(x.cells.size());
  for (std::size_t i = 0; i < x.cells.size(); ++i) r.cells[i] = u.one(x.cells[i]);
  return r;
}

TildeTwoCell tilde_functor_cell(const LaxFunctor& u, const TildeTwoCell& t) {
  const TwoCat& B = *u.tgt;
  TildeTwoCell r;
  r.from = tilde_functor_chain(u, t.from);
  r.to = tilde_functor_chain(u, t.to);
  r.phi = t.phi;
  r.comps.resize(t.to.length());
  for (int i = 1; i <= t.to.length(); ++i) {
    std::vector<int> seg(t.from.cells.begin() + t.phi(i - 1),
                         t.from.cells.begin() + t.phi(i));
    int str = structural_cell_chain(u, seg, t.from.obj_at(t.phi(i - 1)));
    r.comps[i - 1] = B.vcomp(u.two(t.comps[i - 1]), str);
  }
  return r;
}

ChainCell eta_one(const TwoCatPtr& a, int f) {
  ChainCell r;
  r.cat = a;
  r.src = a->ones.at(f).src;
  r.cells = {f};
  return r;
}

TildeTwoCell eta_two(const TwoCatPtr& a, int t) {
  TildeTwoCell r;
  r.from = eta_one(a, a->twos.at(t).src);
  r.to = eta_one(a, a->twos.at(t).tgt);
  r.phi = interval_identity(1);
  r.comps = {t};
  return r;
}

TildeTwoCell eta_unit(const TwoCatPtr& a, int obj) {
  TildeTwoCell r;
  r.from.cat = a;
  r.from.src = obj;
  r.to = eta_one(a, a->id1(obj));
  r.phi = IntervalMap{{0, 0}};
  r.comps = {a->id2(a->id1(obj))};
  return r;
}

TildeTwoCell eta_comp(const TwoCatPtr& a, int fp, int f) {
  TildeTwoCell r;
  r.from = eta_one(a, f);
  r.from.cells.push_back(fp);
  if (!chain_valid(r.from)) throw Error("NotComposable", "eta_comp");
  r.to = eta_one(a, a->comp1(fp, f));
  r.phi = IntervalMap{{0, 2}};
  r.comps = {a->id2(a->comp1(fp, f))};
  return r;
}

int epsilon_one(const ChainCell& x) { return x.composite(); }

int epsilon_two(const TildeTwoCell& t) {
  const TwoCat& A = *t.from.cat;
  return A.hcompose_chain(t.comps, A.id1(t.to.obj_at(0)));
}

int bar_one(const LaxFunctor& u, const ChainCell& x) {
  return epsilon_one(tilde_functor_chain(u, x));
}

int bar_two(const LaxFunctor& u, const TildeTwoCell& t) {
  return epsilon_two(tilde_functor_cell(u, t));
}

int bar_transformation_component(const Transformation& s, const ChainCell& x) {
  const LaxFunctor& u = s.from;
  const LaxFunctor& v = s.to;
  const TwoCat& B = *u.tgt;
  int m = x.length();
  if (m == 0) return B.id2(s.comp_obj[x.src]);
  if (m == 1) return s.comp_one[x.cells[0]];
  if (s.kind == TransKind::Colax) {
    // (sigma_{last} o0 u(init)) *1 (v(last) o0 bar_{init})
    ChainCell init = x;
    init.cells.pop_back();
    int last = x.cells.back();
    int rec = bar_transformation_component(s, init);
    return B.vcomp(B.whisker_r(s.comp_one[last], bar_one(u, init)),
                   B.whisker_l(v.one(last), rec));
  }
  // lax (strict treated as lax):
  // (v(tail) o0 sigma_{first}) *1 (bar_{tail} o0 u(first))
  ChainCell tail{x.cat, x.obj_at(1),
                 std::vector<int>(x.cells.begin() + 1, x.cells.end())};
  int first = x.cells.front();
  int rec = bar_transformation_component(s, tail);
  return B.vcomp(B.whisker_l(bar_one(v, tail), s.comp_one[first]),
                 B.whisker_r(rec, u.one(first)));
}

ValidationReport validate_bar_transformation(const Transformation& s, int max_len) {
  ValidationReport rep;
  const LaxFunctor& u = s.from;
  const LaxFunctor& v = s.to;
  const TwoCat& B = *u.tgt;
  const bool lax = (s.kind != TransKind::Colax);
  auto chains = enumerate_chains(u.src, max_len);
  for (const auto& c1 : chains)
    for (const auto& c2 : chains) {
      if (c1.tgt() != c2.src) continue;
      if (c1.length() + c2.length() > max_len) continue;
      ChainCell comp = tilde_compose_1(c2, c1);
      int expect = bar_transformation_component(s, comp);
      int s1 = bar_transformation_component(s, c1);
      int s2 = bar_transformation_component(s, c2);
      int got;
      if (lax) {
        got = B.vcomp(B.whisker_l(bar_one(v, c2), s1), B.whisker_r(s2, bar_one(u, c1)));
      } else {
        got = B.vcomp(B.whisker_r(s2, bar_one(u, c1)), B.whisker_l(bar_one(v, c2), s1));
      }
      if (got != expect) rep.add("NaturalityViolation", "composition of chains");
    }
  for (const auto& c1 : chains)
    for (const auto& c2 : chains) {
      if (c1.src != c2.src || c1.tgt() != c2.tgt()) continue;
      for (const auto& t : enumerate_tilde_cells(c1, c2)) {
        int ut = bar_two(u, t), vt = bar_two(v, t);
        int sa = bar_transformation_component(s, c1);
        int sb = bar_transformation_component(s, c2);
        int a0 = s.comp_obj[c1.src];
        int a1 = s.comp_obj[c1.tgt()];
        int lhs, rhs;
        if (lax) {
          lhs = B.vcomp(B.whisker_r(vt, a0), sa);
          rhs = B.vcomp(sb, B.whisker_l(a1, ut));
        } else {
          lhs = B.vcomp(B.whisker_l(a1, ut), sa);
          rhs = B.vcomp(sb, B.whisker_r(vt, a0));
        }
        if (lhs != rhs) rep.add("NaturalityViolation", "tilde 2-cell");
      }
    }
  return rep;
}

ChainCell tilde_op_chain(const TwoCatPtr& aop, const ChainCell& x) {
  ChainCell r;
  r.cat = aop;
  r.src = x.tgt();
  r.cells.assign(x.cells.rbegin(), x.cells.rend());
  return r;
}

TildeTwoCell tilde_op_cell(const TwoCatPtr& aop, const TildeTwoCell& t) {
  TildeTwoCell r;
  r.from = tilde_op_chain(aop, t.from);
  r.to = tilde_op_chain(aop, t.to);
  int n = t.phi.n(), m = t.phi.m();
  r.phi.v.resize(n + 1);
  for (int i = 0; i <= n; ++i) r.phi.v[i] = m - t.phi(n - i);
  r.comps.assign(t.comps.rbegin(), t.comps.rend());
  return r;
}

std::vector<ChainCell> enumerate_chains(const TwoCatPtr& a, int max_len) {
  std::vector<ChainCell> out;
  for (int o = 0; o < a->n_obj(); ++o) out.push_back(ChainCell{a, o, {}});
  std::size_t lo = 0, hi = out.size();
  for (int len = 1; len <= max_len; ++len) {
    for (std::size_t i = lo; i < hi; ++i) {
      ChainCell base = out[i];
      int at = base.tgt();
      for (int f = 0; f < a->n_one(); ++f)
        if (a->ones[f].src == at) {
          ChainCell ext = base;
          ext.cells.push_back(f);
          out.push_back(ext);
        }
    }
    lo = hi;
    hi = out.size();
  }
  return out;
}

std::vector<TildeTwoCell> enumerate_tilde_cells(const ChainCell& from, const ChainCell& to) {
  std::vector<TildeTwoCell> out;
  const TwoCat& A = *from.cat;
  if (from.src != to.src || from.tgt() != to.tgt()) return out;
  for (const auto& phi : enumerate_interval_maps(to.length(), from.length())) {
    bool ok = true;
    for (int i = 0; i <= to.length() && ok; ++i) ok = from.obj_at(phi(i)) == to.obj_at(i);
    if (!ok) continue;
    if (to.length() == 0) {
      out.push_back(TildeTwoCell{from, to, phi, {}});
      continue;
    }
    std::vector<std::vector<int>> choices(to.length());
    for (int i = 1; i <= to.length() && ok; ++i) {
      choices[i - 1] = A.twos_from_to(from.segment(phi(i - 1), phi(i)), to.cells[i - 1]);
      if (choices[i - 1].empty()) ok = false;
    }
    if (!ok) continue;
    std::vector<int> pick(to.length(), 0);
    while (true) {
      TildeTwoCell t;
      t.from = from;
      t.to = to;
      t.phi = phi;
      t.comps.resize(to.length());
      for (int i = 0; i < to.length(); ++i) t.comps[i] = choices[i][pick[i]];
      out.push_back(t);
      int i = 0;
      for (; i < to.length(); ++i) {
        if (++pick[i] < static_cast<int>(choices[i].size())) break;
        pick[i] = 0;
      }
      if (i == to.length()) break;
    }
  }
  return out;
}

std::vector<LaxFunctor> enumerate_lax_functors(const TwoCatPtr& a, const TwoCatPtr& b,
                                               long long budget) {
  const TwoCat& A = *a;
  const TwoCat& B = *b;
  std::vector<LaxFunctor> out;
  LaxFunctor cur;
  cur.src = a;
  cur.tgt = b;
  cur.dir = Direction::Lax;
  cur.ob_map.assign(A.n_obj(), -1);
  cur.one_map.assign(A.n_one(), -1);
  cur.two_map.assign(A.n_two(), -1);
  cur.unit_cell.assign(A.n_obj(), -1);
  if (A.n_obj() == 0) {
    out.push_back(cur);
    return out;
  }

  std::vector<std::pair<int, int>> comp_pairs;
  for (int g = 0; g < A.n_one(); ++g)
    for (int f = 0; f < A.n_one(); ++f)
      if (A.ones[f].tgt == A.ones[g].src) comp_pairs.push_back({g, f});

  long long visited = 0;
  auto tick = [&]() {
    if (++visited > budget)
      throw Error("EnumerationBudgetExceeded", "enumerate_lax_functors");
  };

  std::function<void(std::size_t)> fill_comp = [&](std::size_t i) {
    tick();
    if (i == comp_pairs.size()) {
      if (validate_functor(cur).ok()) out.push_back(cur);
      return;
    }
    auto [g, f] = comp_pairs[i];
    int s = B.comp1(cur.one_map[g], cur.one_map[f]);
    int e = cur.one_map[A.comp1(g, f)];
    for (int t : B.twos_from_to(s, e)) {
      cur.comp_cell[pair_key(g, f)] = t;
      fill_comp(i + 1);
    }
    cur.comp_cell.erase(pair_key(g, f));
  };
  std::function<void(int)> fill_unit = [&](int o) {
    tick();
    if (o == A.n_obj()) {
      fill_comp(0);
      return;
    }
    for (int t : B.twos_from_to(B.id1(cur.ob_map[o]), cur.one_map[A.id1(o)])) {
      cur.unit_cell[o] = t;
      fill_unit(o + 1);
    }
    cur.unit_cell[o] = -1;
  };
  std::function<void(int)> fill_two = [&](int t2) {
    tick();
    if (t2 == A.n_two()) {
      fill_unit(0);
      return;
    }
    for (int t : B.twos_from_to(cur.one_map[A.twos[t2].src], cur.one_map[A.twos[t2].tgt])) {
      cur.two_map[t2] = t;
      fill_two(t2 + 1);
    }
    cur.two_map[t2] = -1;
  };
  std::function<void(int)> fill_one = [&](int f) {
    tick();
    if (f == A.n_one()) {
      fill_two(0);
      return;
    }
    for (int g : B.ones_from_to(cur.ob_map[A.ones[f].src], cur.ob_map[A.ones[f].tgt])) {
      cur.one_map[f] = g;
      fill_one(f + 1);
    }
    cur.one_map[f] = -1;
  };
  std::function<void(int)> fill_ob = [&](int o) {
    tick();
    if (o == A.n_obj()) {
      fill_one(0);
      return;
    }
    for (int x = 0; x < B.n_obj(); ++x) {
      cur.ob_map[o] = x;
      fill_ob(o + 1);
    }
    cur.ob_map[o] = -1;
  };
  fill_ob(0);
  return out;
}

BijectionCheck strictification_bijection_check(const TwoCatPtr& a, const TwoCatPtr& b,
                                               int max_len, long long budget) {
  BijectionCheck r;
  auto functors = enumerate_lax_functors(a, b, budget);
  r.functor_count = static_cast<long long>(functors.size());
  auto chains = enumerate_chains(a, max_len);

  struct Eval {
    std::vector<int> ones, twos;
  };
  std::vector<Eval> evals;
  for (const auto& u : functors) {
    Eval e;
    for (const auto& c : chains) e.ones.push_back(bar_one(u, c));
    for (const auto& c1 : chains)
      for (const auto& c2 : chains)
        if (c1.src == c2.src && c1.tgt() == c2.tgt())
          for (const auto& t : enumerate_tilde_cells(c1, c2)) e.twos.push_back(bar_two(u, t));
    evals.push_back(std::move(e));
  }
  r.injective = true;
  for (std::size_t i = 0; i < evals.size(); ++i)
    for (std::size_t j = i + 1; j < evals.size(); ++j)
      if (evals[i].ones == evals[j].ones && evals[i].twos == evals[j].twos)
        r.injective = false;

  r.round_trip = true;
  for (const auto& u : functors) {
    const TwoCat& A = *a;
    for (int f = 0; f < A.n_one(); ++f)
      if (bar_one(u, eta_one(a, f)) != u.one(f)) r.round_trip = false;
    for (int t = 0; t < A.n_two(); ++t)
      if (bar_two(u, eta_two(a, t)) != u.two(t)) r.round_trip = false;
    for (int o = 0; o < A.n_obj(); ++o)
      if (bar_two(u, eta_unit(a, o)) != u.unit(o)) r.round_trip = false;
    for (int g = 0; g < A.n_one(); ++g)
      for (int f = 0; f < A.n_one(); ++f)
        if (A.ones[f].tgt == A.ones[g].src)
          if (bar_two(u, eta_comp(a, g, f)) != u.comp(g, f)) r.round_trip = false;
  }

  r.functorial = true;
  for (const auto& u : functors) {
    const TwoCat& B = *b;
    for (const auto& c1 : chains)
      for (const auto& c2 : chains) {
        if (c1.tgt() != c2.src || c1.length() + c2.length() > max_len) continue;
        if (bar_one(u, tilde_compose_1(c2, c1)) != B.comp1(bar_one(u, c2), bar_one(u, c1)))
          r.functorial = false;
      }
  }
  return r;
}

}  // namespace twocat
