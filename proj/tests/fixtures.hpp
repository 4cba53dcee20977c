#pragma once

#include "twocat/comma.hpp"
#include "twocat/functor.hpp"
#include "twocat/presentation.hpp"

#include <functional>
#include <random>

namespace twofix {

using namespace twocat;

// Normalized lax functor ordinal(n) -> cyclic_group_cat(p) determined by the
// composition cocycle c(i,j,k) on triples i<j<k (flat row-major upper array).
inline LaxFunctor chain_to_group(int n, int p,
                                 const std::function<int(int, int, int)>& c) {
  TwoCatPtr src = ordinal(n);
  TwoCatPtr tgt = cyclic_group_cat(p);
  LaxFunctor u;
  u.src = src;
  u.tgt = tgt;
  u.dir = Direction::Lax;
  u.ob_map.assign(src->n_obj(), 0);
  u.one_map.assign(src->n_one(), 0);
  u.two_map.resize(src->n_two());
  for (int t = 0; t < src->n_two(); ++t) u.two_map[t] = 0;  // identities to identity
  u.unit_cell.assign(src->n_obj(), 0);
  auto endpoints = [&](int f) {
    return std::pair<int, int>{src->ones[f].src, src->ones[f].tgt};
  };
  for (int g = 0; g < src->n_one(); ++g)
    for (int f = 0; f < src->n_one(); ++f) {
      if (src->ones[f].tgt != src->ones[g].src) continue;
      auto [i, j] = endpoints(f);
      auto [j2, k] = endpoints(g);
      int val = (i == j || j2 == k) ? 0 : c(i, j, k);
      u.comp_cell[pair_key(g, f)] = ((val % p) + p) % p;
    }
  return u;
}

// All random presentations used by the randomized suites are built from
// generators that are valid by construction.
inline TwoCatPtr random_presentation(std::mt19937& rng, int max_size = 24) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  for (int attempt = 0; attempt < 32; ++attempt) {
    TwoCatPtr c;
    switch (pick(7)) {
      case 0: c = ordinal(1 + pick(3)); break;
      case 1: c = cyclic_group_cat(2 + pick(2)); break;
      case 2: c = walking_two_cell(); break;
      case 3: {
        int k = 2 + pick(2);
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (i != j && pick(3) == 0) rel.push_back({i, j});
        c = bipartite_preorder_cat(k, rel);
        break;
      }
      case 4: c = product(*ordinal(1), *cyclic_group_cat(2)); break;
      case 5: c = coproduct(*ordinal(pick(2)), *walking_two_cell()); break;
      default: c = cyclic_monoid_cat(2 + pick(2)); break;
    }
    if (pick(4) == 0)
      c = dual(*c, pick(2) ? DualKind::Op : (pick(2) ? DualKind::Co : DualKind::Coop));
    if (c->n_two() <= max_size) return c;
  }
  return ordinal(1);
}

// Random normalized lax functor ordinal(n) -> BZ/p via a random cocycle:
// free values on adjacent triples, extended along the cocycle relation.
inline LaxFunctor random_chain_functor(std::mt19937& rng, int n, int p) {
  // c(i,j,k) for i<j<k with the 2-cocycle constraint
  // c(j,k,l)+c(i,j,l) = c(i,k,l)+c(i,j,k); choose c freely via a potential:
  // c(i,j,k) = b(i,j)+b(j,k)-b(i,k) is always a cocycle, and adding a free
  // value on (0,j,k) triples spans the rest. For test purposes a random
  // coboundary plus random "corner" values suffices.
  std::vector<std::vector<int>> bpot(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) bpot[i][j] = static_cast<int>(rng() % p);
  return chain_to_group(n, p, [bpot, p](int i, int j, int k) {
    return ((bpot[i][j] + bpot[j][k] - bpot[i][k]) % p + p) % p;
  });
}

// A colax transformation between two parallel normalized chain functors
// into BZ/p: free components on the generating arrows, forced elsewhere by
// the composition coherence.
inline Transformation random_colax_transformation(std::mt19937& rng, const LaxFunctor& u,
                                                  const LaxFunctor& v, int p) {
  const TwoCat& A = *u.src;
  int n = A.n_obj() - 1;
  std::vector<int> gen(n + 1, 0);
  for (int i = 1; i <= n; ++i) gen[i] = static_cast<int>(rng() % p);
  // tau_{j,i} determined by tau_{f'f} = tau_{f'} + tau_f + u_{f',f} - v_{f',f}
  std::vector<std::vector<int>> comp(n + 1, std::vector<int>(n + 1, 0));
  auto arrow = [&](int i, int j) {
    return A.one_index(std::to_string(i) + "<=" + std::to_string(j));
  };
  for (int i = 0; i < n; ++i) comp[i][i + 1] = gen[i + 1];
  for (int len = 2; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) {
      int j = i + len;
      int f = arrow(i, j - 1), fp = arrow(j - 1, j);
      // tau_{f'f} = u_{f',f} + tau_{f'} + tau_f - v_{f',f}
      comp[i][j] = ((comp[j - 1][j] + comp[i][j - 1] + u.comp(fp, f) - v.comp(fp, f)) % p +
                    p) %
                   p;
    }
  Transformation s;
  s.kind = TransKind::Colax;
  s.from = u;
  s.to = v;
  s.comp_obj.assign(A.n_obj(), 0);
  s.comp_one.resize(A.n_one());
  for (int f = 0; f < A.n_one(); ++f) {
    int i = A.ones[f].src, j = A.ones[f].tgt;
    s.comp_one[f] = (i == j) ? 0 : comp[i][j];
  }
  return s;
}

// Lax counterpart: sigma_{f'f} = sigma_{f'} + sigma_f + v_{f',f} - u_{f',f}.
inline Transformation random_lax_transformation(std::mt19937& rng, const LaxFunctor& u,
                                                const LaxFunctor& v, int p) {
  const TwoCat& A = *u.src;
  int n = A.n_obj() - 1;
  std::vector<int> gen(n + 1, 0);
  for (int i = 1; i <= n; ++i) gen[i] = static_cast<int>(rng() % p);
  std::vector<std::vector<int>> comp(n + 1, std::vector<int>(n + 1, 0));
  auto arrow = [&](int i, int j) {
    return A.one_index(std::to_string(i) + "<=" + std::to_string(j));
  };
  for (int i = 0; i < n; ++i) comp[i][i + 1] = gen[i + 1];
  for (int len = 2; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) {
      int j = i + len;
      int f = arrow(i, j - 1), fp = arrow(j - 1, j);
      // sigma_{f'f} = v_{f',f} + sigma_{f'} + sigma_f - u_{f',f}
      comp[i][j] = ((comp[j - 1][j] + comp[i][j - 1] + v.comp(fp, f) - u.comp(fp, f)) % p +
                    p) %
                   p;
    }
  Transformation s;
  s.kind = TransKind::Lax;
  s.from = u;
  s.to = v;
  s.comp_obj.assign(A.n_obj(), 0);
  s.comp_one.resize(A.n_one());
  for (int f = 0; f < A.n_one(); ++f) {
    int i = A.ones[f].src, j = A.ones[f].tgt;
    s.comp_one[f] = (i == j) ? 0 : comp[i][j];
  }
  return s;
}

// Explicit descriptions of the four slice variants, built independently of
// the production conjugation path; used as oracles.
struct ExplicitSlice {
  std::vector<std::pair<int, int>> objs;                  // (a, p)
  std::vector<std::tuple<int, int, int, int>> ones;       // (srcO,tgtO,f,alpha)
  int n_twos = 0;
};

ExplicitSlice explicit_slice(const LaxFunctor& u, int b, SliceVariant variant) {
  const TwoCat& A = *u.src;
  const TwoCat& B = *u.tgt;
  ExplicitSlice es;
  bool over = (variant == SliceVariant::LaxOver || variant == SliceVariant::ColaxOver);
  for (int a = 0; a < A.n_obj(); ++a) {
    auto ps = over ? B.ones_from_to(u.ob(a), b) : B.ones_from_to(b, u.ob(a));
    for (int p : ps) es.objs.push_back({a, p});
  }
  for (std::size_t so = 0; so < es.objs.size(); ++so)
    for (std::size_t to = 0; to < es.objs.size(); ++to) {
      auto [a, p] = es.objs[so];
      auto [ap, pp] = es.objs[to];
      for (int f : A.ones_from_to(a, ap)) {
        std::vector<int> als;
        switch (variant) {
          case SliceVariant::LaxOver:  // alpha : p => p' u(f)
            als = B.twos_from_to(p, B.comp1(pp, u.one(f)));
            break;
          case SliceVariant::LaxUnder:  // alpha : p' => u(f) p
            als = B.twos_from_to(pp, B.comp1(u.one(f), p));
            break;
          case SliceVariant::ColaxOver:  // alpha : p' u(f) => p
            als = B.twos_from_to(B.comp1(pp, u.one(f)), p);
            break;
          case SliceVariant::ColaxUnder:  // alpha : u(f) p => p'
            als = B.twos_from_to(B.comp1(u.one(f), p), pp);
            break;
        }
        for (int al : als)
          es.ones.push_back({static_cast<int>(so), static_cast<int>(to), f, al});
      }
    }
  // 2-cells: beta : f => f' with the variant's compatibility equation
  for (auto& [so1, to1, f1, al1] : es.ones)
    for (auto& [so2, to2, f2, al2] : es.ones) {
      if (so1 != so2 || to1 != to2) continue;
      int pp = es.objs[to1].second, p = es.objs[so1].second;
      for (int beta : A.twos_from_to(f1, f2)) {
        bool ok = false;
        switch (variant) {
          case SliceVariant::LaxOver:
            ok = B.vcomp(B.whisker_l(pp, u.two(beta)), al1) == al2;
            break;
          case SliceVariant::LaxUnder:
            ok = B.vcomp(B.whisker_r(u.two(beta), p), al1) == al2;
            break;
          case SliceVariant::ColaxOver:
            ok = B.vcomp(al2, B.whisker_l(pp, u.two(beta))) == al1;
            break;
          case SliceVariant::ColaxUnder:
            ok = B.vcomp(al2, B.whisker_r(u.two(beta), p)) == al1;
            break;
        }
        if (ok) ++es.n_twos;
      }
    }
  return es;
}

}  // namespace twofix
