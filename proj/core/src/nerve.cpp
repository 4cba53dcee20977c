#include "twocat/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace twocat {

int pair_index(int i, int j) { return j * (j + 1) / 2 + i; }
int triple_index(int i, int j, int k) {
  return k * (k + 1) * (k + 2) / 6 + pair_index(i, j);
}
int n_pairs(int m) { return (m + 1) * (m + 2) / 2; }
int n_triples(int m) { return (m + 1) * (m + 2) * (m + 3) / 6; }

std::vector<int> Simplex::key() const {
  std::vector<int> k;
  k.push_back(m);
  k.insert(k.end(), obs.begin(), obs.end());
  k.insert(k.end(), one.begin(), one.end());
  k.insert(k.end(), two.begin(), two.end());
  k.insert(k.end(), unit.begin(), unit.end());
  return k;
}

Simplex simplex_precompose(const Simplex& x, const std::vector<int>& phi) {
  Simplex r;
  r.m = static_cast<int>(phi.size()) - 1;
  r.obs.resize(r.m + 1);
  r.unit.resize(r.m + 1);
  r.one.resize(n_pairs(r.m));
  r.two.resize(n_triples(r.m));
  for (int i = 0; i <= r.m; ++i) {
    r.obs[i] = x.obs.at(phi[i]);
    r.unit[i] = x.unit.at(phi[i]);
  }
  for (int j = 0; j <= r.m; ++j)
    for (int i = 0; i <= j; ++i) r.one[pair_index(i, j)] = x.one.at(pair_index(phi[i], phi[j]));
  for (int k = 0; k <= r.m; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i)
        r.two[triple_index(i, j, k)] = x.two.at(triple_index(phi[i], phi[j], phi[k]));
  return r;
}

int TruncatedSSet::nondegenerate_count(int m) const {
  int c = 0;
  for (bool b : degenerate.at(m))
    if (!b) ++c;
  return c;
}

int TruncatedSSet::act(const std::vector<int>& phi_in, int n, int idx) const {
  std::vector<int> phi = phi_in;
  int cur = idx, curdim = n;
  // remove codomain points outside the image, largest first
  for (int j = curdim; j >= 0;) {
    bool in_image = false;
    for (int v : phi) in_image |= (v == j);
    if (in_image) {
      --j;
      continue;
    }
    cur = face.at(curdim).at(j).at(cur);
    --curdim;
    for (int& v : phi)
      if (v > j) --v;
    j = std::min(j, curdim);
  }
  // now phi is surjective onto [curdim]; peel collapses from the left
  std::function<int(std::vector<int>, int)> surj = [&](std::vector<int> s, int x) -> int {
    int mm = static_cast<int>(s.size()) - 1;
    if (mm == curdim) return x;
    int p = 0;
    while (s[p] != s[p + 1]) ++p;
    std::vector<int> sp;
    for (int i = 0; i <= mm; ++i)
      if (i != p) sp.push_back(s[i]);
    int inner = surj(sp, x);
    return degen.at(mm - 1).at(p).at(inner);
  };
  return surj(phi, cur);
}

ValidationReport validate_sset(const TruncatedSSet& x) {
  ValidationReport rep;
  // simplicial identities on all defined composites
  for (int m = 2; m <= x.dim; ++m)
    for (int idx = 0; idx < x.count(m); ++idx)
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j <= m; ++j)
          if (x.face[m - 1][i][x.face[m][j][idx]] != x.face[m - 1][j - 1][x.face[m][i][idx]])
            rep.add("SimplicialIdentityViolation",
                    "d_i d_j at dim " + std::to_string(m) + " #" + std::to_string(idx));
  for (int m = 0; m + 1 <= x.dim; ++m)
    for (int idx = 0; idx < x.count(m); ++idx)
      for (int i = 0; i <= m; ++i) {
        int s = x.degen[m][i][idx];
        if (x.face[m + 1][i][s] != idx || x.face[m + 1][i + 1][s] != idx)
          rep.add("SimplicialIdentityViolation",
                  "d s at dim " + std::to_string(m) + " #" + std::to_string(idx));
      }
  for (int m = 1; m + 1 <= x.dim; ++m)
    for (int idx = 0; idx < x.count(m); ++idx)
      for (int i = 0; i <= m; ++i) {
        int s = x.degen[m][i][idx];
        for (int j = 0; j < i; ++j)
          if (x.face[m + 1][j][s] != x.degen[m - 1][i - 1][x.face[m][j][idx]])
            rep.add("SimplicialIdentityViolation", "d_j s_i at dim " + std::to_string(m));
        for (int j = i + 2; j <= m + 1; ++j)
          if (x.face[m + 1][j][s] != x.degen[m - 1][i][x.face[m][j - 1][idx]])
            rep.add("SimplicialIdentityViolation", "d_j s_i (j>i+1) at dim " + std::to_string(m));
      }
  return rep;
}

namespace {

std::string simplex_name(const Simplex& s) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= s.m; ++i) os << (i ? "," : "") << s.obs[i];
  os << ";";
  for (std::size_t i = 0; i < s.one.size(); ++i) os << (i ? "," : "") << s.one[i];
  os << ";";
  for (std::size_t i = 0; i < s.two.size(); ++i) os << (i ? "," : "") << s.two[i];
  os << ";";
  for (std::size_t i = 0; i < s.unit.size(); ++i) os << (i ? "," : "") << s.unit[i];
  os << "]";
  return os.str();
}

// coherence scan of a single simplex as a (normalized) lax functor
bool simplex_coherent(const TwoCat& A, const Simplex& s, bool normalized) {
  // boundaries
  for (int j = 0; j <= s.m; ++j)
    for (int i = 0; i <= j; ++i) {
      int f = s.one[pair_index(i, j)];
      if (A.ones[f].src != s.obs[i] || A.ones[f].tgt != s.obs[j]) return false;
    }
  for (int i = 0; i <= s.m; ++i) {
    int u = s.unit[i];
    if (A.twos[u].src != A.id1(s.obs[i]) || A.twos[u].tgt != s.one[pair_index(i, i)])
      return false;
    if (normalized && !A.is_id2(u)) return false;
  }
  for (int k = 0; k <= s.m; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i) {
        int t = s.two[triple_index(i, j, k)];
        int src = A.comp1(s.one[pair_index(j, k)], s.one[pair_index(i, j)]);
        if (A.twos[t].src != src || A.twos[t].tgt != s.one[pair_index(i, k)]) return false;
        if (normalized && (i == j || j == k) && !A.is_id2(t)) return false;
      }
  // unit constraints (non-normalized case; automatic when normalized)
  for (int j = 0; j <= s.m; ++j)
    for (int i = 0; i <= j; ++i) {
      int f = s.one[pair_index(i, j)];
      int lhs = A.vcomp(s.two[triple_index(i, i, j)], A.whisker_l(f, s.unit[i]));
      if (lhs != A.id2(f)) return false;
      int rhs = A.vcomp(s.two[triple_index(i, j, j)], A.whisker_r(s.unit[j], f));
      if (rhs != A.id2(f)) return false;
    }
  // cocycle on all quadruples
  for (int l = 0; l <= s.m; ++l)
    for (int k = 0; k <= l; ++k)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i) {
          int lhs = A.vcomp(s.two[triple_index(i, k, l)],
                            A.whisker_l(s.one[pair_index(k, l)], s.two[triple_index(i, j, k)]));
          int rhs = A.vcomp(s.two[triple_index(i, j, l)],
                            A.whisker_r(s.two[triple_index(j, k, l)], s.one[pair_index(i, j)]));
          if (lhs != rhs) return false;
        }
  return true;
}

// all (normalized) lax m-simplices extending base (an (m-1)-simplex)
void extend_simplices(const TwoCat& A, const Simplex& base, bool normalized,
                      std::vector<Simplex>& out, long long budget, long long& visited) {
  int m = base.m + 1;
  Simplex s;
  s.m = m;
  s.obs = base.obs;
  s.obs.push_back(-1);
  s.unit = base.unit;
  s.unit.push_back(-1);
  s.one.assign(n_pairs(m), -1);
  s.two.assign(n_triples(m), -1);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i <= j; ++i) s.one[pair_index(i, j)] = base.one[pair_index(i, j)];
  for (int k = 0; k < m; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i)
        s.two[triple_index(i, j, k)] = base.two[triple_index(i, j, k)];

  auto tick = [&]() {
    if (++visited > budget) throw Error("BudgetExceeded", "nerve enumeration");
  };

  // fill the free two-cells with top index m, then check the quadruples
  std::function<void(int, int)> fill_two = [&](int i, int j) {
    tick();
    if (j > m) {
      // all constraints among indices with top m
      for (int l = m, k = 0; k <= l; ++k)
        for (int jj = 0; jj <= k; ++jj)
          for (int ii = 0; ii <= jj; ++ii) {
            int lhs = A.vcomp(
                s.two[triple_index(ii, k, l)],
                A.whisker_l(s.one[pair_index(k, l)], s.two[triple_index(ii, jj, k)]));
            int rhs = A.vcomp(
                s.two[triple_index(ii, jj, l)],
                A.whisker_r(s.two[triple_index(jj, k, l)], s.one[pair_index(ii, jj)]));
            if (lhs != rhs) return;
          }
      if (!normalized) {
        for (int ii = 0; ii <= m; ++ii) {
          int f = s.one[pair_index(ii, m)];
          if (A.vcomp(s.two[triple_index(ii, ii, m)], A.whisker_l(f, s.unit[ii])) != A.id2(f))
            return;
          if (A.vcomp(s.two[triple_index(ii, m, m)], A.whisker_r(s.unit[m], f)) != A.id2(f))
            return;
        }
      }
      out.push_back(s);
      return;
    }
    int ni = i, nj = j;
    if (ni == nj) {
      ++nj;
      ni = 0;
    } else {
      ++ni;
    }
    int idx = triple_index(i, j, m);
    int src = A.comp1(s.one[pair_index(j, m)], s.one[pair_index(i, j)]);
    int tgt = s.one[pair_index(i, m)];
    if (normalized && (i == j || j == m)) {
      if (src != tgt) return;
      s.two[idx] = A.id2(src);
      fill_two(ni, nj);
      s.two[idx] = -1;
      return;
    }
    for (int t : A.twos_from_to(src, tgt)) {
      s.two[idx] = t;
      fill_two(ni, nj);
    }
    s.two[idx] = -1;
  };

  std::function<void(int)> fill_one = [&](int i) {
    tick();
    if (i > m) {
      // unit at m
      if (normalized) {
        if (s.one[pair_index(m, m)] != A.id1(s.obs[m])) return;
        s.unit[m] = A.id2(A.id1(s.obs[m]));
        fill_two(0, 0);
        s.unit[m] = -1;
        return;
      }
      for (int t : A.twos_from_to(A.id1(s.obs[m]), s.one[pair_index(m, m)])) {
        s.unit[m] = t;
        fill_two(0, 0);
      }
      s.unit[m] = -1;
      return;
    }
    if (i == m && normalized) {
      s.one[pair_index(m, m)] = A.id1(s.obs[m]);
      fill_one(i + 1);
      s.one[pair_index(m, m)] = -1;
      return;
    }
    for (int f : A.ones_from_to(s.obs[i], s.obs[m])) {
      s.one[pair_index(i, m)] = f;
      fill_one(i + 1);
    }
    s.one[pair_index(i, m)] = -1;
    return;
  };

  for (int a = 0; a < A.n_obj(); ++a) {
    s.obs[m] = a;
    fill_one(0);
  }
}

std::vector<Simplex> zero_simplices(const TwoCat& A, bool normalized, long long budget,
                                    long long& visited) {
  std::vector<Simplex> out;
  for (int a = 0; a < A.n_obj(); ++a) {
    Simplex s;
    s.m = 0;
    s.obs = {a};
    if (normalized) {
      s.one = {A.id1(a)};
      s.unit = {A.id2(A.id1(a))};
      s.two = {A.id2(A.id1(a))};
      out.push_back(s);
      continue;
    }
    for (int f : A.ones_from_to(a, a))
      for (int u : A.twos_from_to(A.id1(a), f))
        for (int t : A.twos_from_to(A.comp1(f, f), f)) {
          if (++visited > budget) throw Error("BudgetExceeded", "nerve enumeration");
          Simplex c = s;
          c.one = {f};
          c.unit = {u};
          c.two = {t};
          if (simplex_coherent(A, c, false)) out.push_back(c);
        }
  }
  return out;
}

NerveResult assemble_nerve(const TwoCatPtr&, std::vector<std::vector<Simplex>> cells,
                           int dim) {
  // canonical order per dimension
  for (auto& v : cells)
    std::sort(v.begin(), v.end(),
              [](const Simplex& x, const Simplex& y) { return x.key() < y.key(); });
  NerveResult nr;
  nr.simplices = std::move(cells);
  nr.sset.dim = dim;
  nr.sset.names.resize(dim + 1);
  nr.sset.face.resize(dim + 1);
  nr.sset.degen.resize(dim + 1);
  nr.sset.degenerate.resize(dim + 1);
  std::vector<std::map<std::vector<int>, int>> index(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    for (std::size_t i = 0; i < nr.simplices[m].size(); ++i) {
      nr.sset.names[m].push_back(simplex_name(nr.simplices[m][i]));
      index[m][nr.simplices[m][i].key()] = static_cast<int>(i);
    }
    nr.sset.degenerate[m].assign(nr.simplices[m].size(), false);
  }
  for (int m = 1; m <= dim; ++m) {
    nr.sset.face[m].assign(m + 1, std::vector<int>(nr.simplices[m].size(), -1));
    for (int i = 0; i <= m; ++i) {
      std::vector<int> phi;
      for (int k = 0; k <= m; ++k)
        if (k != i) phi.push_back(k);
      for (std::size_t idx = 0; idx < nr.simplices[m].size(); ++idx) {
        Simplex f = simplex_precompose(nr.simplices[m][idx], phi);
        nr.sset.face[m][i][idx] = index[m - 1].at(f.key());
      }
    }
  }
  for (int m = 0; m < dim; ++m) {
    nr.sset.degen[m].assign(m + 1, std::vector<int>(nr.simplices[m].size(), -1));
    for (int i = 0; i <= m; ++i) {
      std::vector<int> phi;
      for (int k = 0; k <= m + 1; ++k) phi.push_back(k <= i ? k : k - 1);
      for (std::size_t idx = 0; idx < nr.simplices[m].size(); ++idx) {
        Simplex d = simplex_precompose(nr.simplices[m][idx], phi);
        int di = index[m + 1].at(d.key());
        nr.sset.degen[m][i][idx] = di;
        nr.sset.degenerate[m + 1][di] = true;
      }
    }
  }
  return nr;
}

}  // namespace

NerveResult nerve(const TwoCatPtr& a, NerveVariant variant, int dim, long long budget) {
  bool normalized = (variant == NerveVariant::LaxNor);
  long long visited = 0;
  std::vector<std::vector<Simplex>> cells(dim + 1);
  cells[0] = zero_simplices(*a, normalized, budget, visited);
  for (int m = 1; m <= dim; ++m)
    for (const Simplex& base : cells[m - 1])
      extend_simplices(*a, base, normalized, cells[m], budget, visited);
  return assemble_nerve(a, std::move(cells), dim);
}

NerveResult classical_nerve(const TwoCatPtr& c, int dim) {
  if (!is_category(*c)) throw Error("BadArgument", "classical_nerve needs a 1-category");
  const TwoCat& A = *c;
  std::vector<std::vector<Simplex>> cells(dim + 1);
  for (int a = 0; a < A.n_obj(); ++a) {
    Simplex s;
    s.m = 0;
    s.obs = {a};
    s.one = {A.id1(a)};
    s.unit = {A.id2(A.id1(a))};
    s.two = {A.id2(A.id1(a))};
    cells[0].push_back(s);
  }
  for (int m = 1; m <= dim; ++m)
    for (const Simplex& base : cells[m - 1])
      for (int f = 0; f < A.n_one(); ++f) {
        if (A.ones[f].src != base.obs[m - 1]) continue;
        Simplex s;
        s.m = m;
        s.obs = base.obs;
        s.obs.push_back(A.ones[f].tgt);
        s.unit.assign(m + 1, -1);
        s.one.assign(n_pairs(m), -1);
        s.two.assign(n_triples(m), -1);
        for (int j = 0; j < m; ++j)
          for (int i = 0; i <= j; ++i) s.one[pair_index(i, j)] = base.one[pair_index(i, j)];
        for (int i = 0; i < m; ++i)
          s.one[pair_index(i, m)] = A.comp1(f, base.one[pair_index(i, m - 1)]);
        s.one[pair_index(m, m)] = A.id1(s.obs[m]);
        for (int i = 0; i <= m; ++i) s.unit[i] = A.id2(A.id1(s.obs[i]));
        for (int k = 0; k <= m; ++k)
          for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= j; ++i)
              s.two[triple_index(i, j, k)] = A.id2(s.one[pair_index(i, k)]);
        cells[m].push_back(s);
      }
  return assemble_nerve(c, std::move(cells), dim);
}

// ---------------------------------------------------------------------------
// strict Cat-valued nerve

namespace {

struct BiCell {
  std::vector<Simplex> verts;          // n+1 strict m-simplices
  std::vector<std::vector<int>> edges;  // n edges, m components each
  std::vector<int> key() const {
    std::vector<int> k;
    for (const auto& v : verts) {
      auto kk = v.key();
      k.insert(k.end(), kk.begin(), kk.end());
    }
    for (const auto& e : edges) k.insert(k.end(), e.begin(), e.end());
    return k;
  }
};

// component of a relative-to-objects transformation over the composite
// arrow i -> j, between strict simplices
int edge_component_over(const TwoCat& A, const Simplex& from, const Simplex& to,
                        const std::vector<int>& comps, int i, int j) {
  if (i == j) return A.id2(A.id1(to.obs[i]));
  int acc = comps[i];
  for (int k = i + 2; k <= j; ++k) {
    int uf = from.one[pair_index(i, k - 1)];
    acc = A.vcomp(A.whisker_l(to.one[pair_index(k - 1, k)], acc),
                  A.whisker_r(comps[k - 1], uf));
  }
  return acc;
}

std::string bicell_name(const BiCell& c) {
  std::ostringstream os;
  for (const auto& k : c.key()) os << k << ".";
  return os.str();
}

}  // namespace

TruncatedBiSSet nerve_strict(const TwoCatPtr& ap, int dim, long long budget) {
  const TwoCat& A = *ap;
  long long visited = 0;
  auto tick = [&]() {
    if (++visited > budget) throw Error("BudgetExceeded", "nerve_strict enumeration");
  };
  // strict m-simplices (chains)
  std::vector<std::vector<Simplex>> strict(dim + 1);
  {
    auto cn = [&]() {
      std::vector<std::vector<Simplex>> cells(dim + 1);
      for (int a = 0; a < A.n_obj(); ++a) {
        Simplex s;
        s.m = 0;
        s.obs = {a};
        s.one = {A.id1(a)};
        s.unit = {A.id2(A.id1(a))};
        s.two = {A.id2(A.id1(a))};
        cells[0].push_back(s);
      }
      for (int m = 1; m <= dim; ++m)
        for (const Simplex& base : cells[m - 1])
          for (int f = 0; f < A.n_one(); ++f) {
            if (A.ones[f].src != base.obs[m - 1]) continue;
            tick();
            Simplex s;
            s.m = m;
            s.obs = base.obs;
            s.obs.push_back(A.ones[f].tgt);
            s.unit.assign(m + 1, -1);
            s.one.assign(n_pairs(m), -1);
            s.two.assign(n_triples(m), -1);
            for (int j = 0; j < m; ++j)
              for (int i = 0; i <= j; ++i)
                s.one[pair_index(i, j)] = base.one[pair_index(i, j)];
            for (int i = 0; i < m; ++i)
              s.one[pair_index(i, m)] = A.comp1(f, base.one[pair_index(i, m - 1)]);
            s.one[pair_index(m, m)] = A.id1(s.obs[m]);
            for (int i = 0; i <= m; ++i) s.unit[i] = A.id2(A.id1(s.obs[i]));
            for (int k = 0; k <= m; ++k)
              for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= j; ++i)
                  s.two[triple_index(i, j, k)] = A.id2(s.one[pair_index(i, k)]);
            cells[m].push_back(s);
          }
      return cells;
    };
    strict = cn();
  }

  TruncatedBiSSet bs;
  bs.dim = dim;
  std::vector<std::vector<std::vector<BiCell>>> cells(dim + 1);
  std::vector<std::vector<std::map<std::vector<int>, int>>> index(dim + 1);
  bs.names.resize(dim + 1);
  bs.face_h.resize(dim + 1);
  bs.face_v.resize(dim + 1);
  bs.degen_h.resize(dim + 1);
  bs.degen_v.resize(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    cells[m].resize(dim + 1);
    index[m].resize(dim + 1);
    bs.names[m].resize(dim + 1);
    bs.face_h[m].resize(dim + 1);
    bs.face_v[m].resize(dim + 1);
    bs.degen_h[m].resize(dim + 1);
    bs.degen_v[m].resize(dim + 1);
  }

  // edges between strict m-simplices need equal object rows
  auto edges_between = [&](const Simplex& x, const Simplex& y) {
    std::vector<std::vector<int>> out;
    if (x.obs != y.obs) return out;
    std::vector<std::vector<int>> choices(x.m);
    for (int i = 1; i <= x.m; ++i) {
      choices[i - 1] =
          A.twos_from_to(x.one[pair_index(i - 1, i)], y.one[pair_index(i - 1, i)]);
      if (choices[i - 1].empty()) return out;
    }
    std::vector<int> pick(x.m, 0);
    while (true) {
      tick();
      std::vector<int> e(x.m);
      for (int i = 0; i < x.m; ++i) e[i] = choices[i][pick[i]];
      out.push_back(e);
      int i = 0;
      for (; i < x.m; ++i) {
        if (++pick[i] < static_cast<int>(choices[i].size())) break;
        pick[i] = 0;
      }
      if (i == x.m) break;
    }
    return out;
  };

  // build (m,n) cells: n-chains in the level category
  for (int m = 0; m <= dim; ++m) {
    // n = 0
    for (const auto& v : strict[m]) {
      BiCell c;
      c.verts = {v};
      cells[m][0].push_back(c);
    }
    for (int n = 1; n <= dim; ++n) {
      for (const auto& base : cells[m][n - 1])
        for (const auto& w : strict[m]) {
          for (const auto& e : edges_between(base.verts.back(), w)) {
            BiCell c = base;
            c.verts.push_back(w);
            c.edges.push_back(e);
            cells[m][n].push_back(c);
          }
        }
    }
  }
  // canonical sort + names + index
  for (int m = 0; m <= dim; ++m)
    for (int n = 0; n <= dim; ++n) {
      std::sort(cells[m][n].begin(), cells[m][n].end(),
                [](const BiCell& a, const BiCell& b) { return a.key() < b.key(); });
      for (std::size_t i = 0; i < cells[m][n].size(); ++i) {
        bs.names[m][n].push_back(bicell_name(cells[m][n][i]));
        index[m][n][cells[m][n][i].key()] = static_cast<int>(i);
      }
    }

  auto h_precompose = [&](const BiCell& c, const std::vector<int>& phi) {
    BiCell r;
    for (const auto& v : c.verts) r.verts.push_back(simplex_precompose(v, phi));
    int mm = static_cast<int>(phi.size()) - 1;
    for (std::size_t t = 0; t < c.edges.size(); ++t) {
      std::vector<int> e(mm);
      for (int j = 1; j <= mm; ++j)
        e[j - 1] = edge_component_over(A, c.verts[t], c.verts[t + 1], c.edges[t],
                                       phi[j - 1], phi[j]);
      r.edges.push_back(e);
    }
    return r;
  };

  for (int m = 0; m <= dim; ++m)
    for (int n = 0; n <= dim; ++n) {
      auto sz = cells[m][n].size();
      // horizontal faces/degeneracies
      if (m >= 1) {
        bs.face_h[m][n].assign(m + 1, std::vector<int>(sz, -1));
        for (int i = 0; i <= m; ++i) {
          std::vector<int> phi;
          for (int k = 0; k <= m; ++k)
            if (k != i) phi.push_back(k);
          for (std::size_t idx = 0; idx < sz; ++idx)
            bs.face_h[m][n][i][idx] =
                index[m - 1][n].at(h_precompose(cells[m][n][idx], phi).key());
        }
      }
      if (m < dim) {
        bs.degen_h[m][n].assign(m + 1, std::vector<int>(sz, -1));
        for (int i = 0; i <= m; ++i) {
          std::vector<int> phi;
          for (int k = 0; k <= m + 1; ++k) phi.push_back(k <= i ? k : k - 1);
          for (std::size_t idx = 0; idx < sz; ++idx)
            bs.degen_h[m][n][i][idx] =
                index[m + 1][n].at(h_precompose(cells[m][n][idx], phi).key());
        }
      }
      // vertical faces/degeneracies (nerve of the level category)
      if (n >= 1) {
        bs.face_v[m][n].assign(n + 1, std::vector<int>(sz, -1));
        for (int t = 0; t <= n; ++t)
          for (std::size_t idx = 0; idx < sz; ++idx) {
            const BiCell& c = cells[m][n][idx];
            BiCell r;
            if (t == 0) {
              r.verts.assign(c.verts.begin() + 1, c.verts.end());
              r.edges.assign(c.edges.begin() + 1, c.edges.end());
            } else if (t == n) {
              r.verts.assign(c.verts.begin(), c.verts.end() - 1);
              r.edges.assign(c.edges.begin(), c.edges.end() - 1);
            } else {
              r = c;
              r.verts.erase(r.verts.begin() + t);
              std::vector<int> merged(m);
              for (int j = 0; j < m; ++j)
                merged[j] = A.vcomp(c.edges[t][j], c.edges[t - 1][j]);
              r.edges.erase(r.edges.begin() + t);
              r.edges[t - 1] = merged;
            }
            bs.face_v[m][n][t][idx] = index[m][n - 1].at(r.key());
          }
      }
      if (n < dim) {
        bs.degen_v[m][n].assign(n + 1, std::vector<int>(sz, -1));
        for (int t = 0; t <= n; ++t)
          for (std::size_t idx = 0; idx < sz; ++idx) {
            BiCell r = cells[m][n][idx];
            std::vector<int> ide(m);
            for (int j = 0; j < m; ++j)
              ide[j] = A.id2(r.verts[t].one[pair_index(j, j + 1)]);
            r.verts.insert(r.verts.begin() + t, r.verts[t]);
            r.edges.insert(r.edges.begin() + t, ide);
            bs.degen_v[m][n][t][idx] = index[m][n + 1].at(r.key());
          }
      }
    }
  return bs;
}

ValidationReport validate_bisset(const TruncatedBiSSet& x) {
  ValidationReport rep;
  // the two directions commute
  for (int m = 1; m <= x.dim; ++m)
    for (int n = 1; n <= x.dim; ++n)
      for (std::size_t idx = 0; idx < x.names[m][n].size(); ++idx)
        for (int i = 0; i <= m; ++i)
          for (int t = 0; t <= n; ++t) {
            int a = x.face_v[m - 1][n][t][x.face_h[m][n][i][idx]];
            int b = x.face_h[m][n - 1][i][x.face_v[m][n][t][idx]];
            if (a != b) rep.add("BisimplicialIdentityViolation", "commutation");
          }
  return rep;
}

TruncatedSSet diagonal(const TruncatedBiSSet& x) {
  TruncatedSSet d;
  d.dim = x.dim;
  d.names.resize(x.dim + 1);
  d.face.resize(x.dim + 1);
  d.degen.resize(x.dim + 1);
  d.degenerate.resize(x.dim + 1);
  for (int n = 0; n <= x.dim; ++n) {
    d.names[n] = x.names[n][n];
    d.degenerate[n].assign(d.names[n].size(), false);
  }
  for (int n = 1; n <= x.dim; ++n) {
    d.face[n].assign(n + 1, std::vector<int>(d.names[n].size(), -1));
    for (int i = 0; i <= n; ++i)
      for (std::size_t idx = 0; idx < d.names[n].size(); ++idx)
        d.face[n][i][idx] = x.face_v[n - 1][n][i][x.face_h[n][n][i][idx]];
  }
  for (int n = 0; n < x.dim; ++n) {
    d.degen[n].assign(n + 1, std::vector<int>(d.names[n].size(), -1));
    for (int i = 0; i <= n; ++i)
      for (std::size_t idx = 0; idx < d.names[n].size(); ++idx) {
        int s = x.degen_v[n + 1][n][i][x.degen_h[n][n][i][idx]];
        d.degen[n][i][idx] = s;
        d.degenerate[n + 1][s] = true;
      }
  }
  return d;
}

// ---------------------------------------------------------------------------
// category of simplices

namespace {
std::vector<std::vector<int>> monotone_maps(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == m + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = (i ? cur[i - 1] : 0); v <= n; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}
}  // namespace

SimplexCategory category_of_simplices(const TruncatedSSet& x) {
  SimplexCategory sc;
  TwoCatBuilder bld;
  std::map<std::pair<int, int>, int> obj_idx;
  for (int m = 0; m <= x.dim; ++m)
    for (int i = 0; i < x.count(m); ++i) {
      int o = bld.add_object("(" + std::to_string(m) + "|" + x.names[m][i] + ")");
      sc.obj.push_back({m, i});
      obj_idx[{m, i}] = o;
    }
  // 1-cells: monotone maps phi with X(phi)(y) = x
  struct OneRec {
    int src, tgt;
    std::vector<int> phi;
  };
  std::vector<OneRec> ones;
  for (std::size_t so = 0; so < sc.obj.size(); ++so)
    for (std::size_t to = 0; to < sc.obj.size(); ++to) {
      auto [m, xi] = sc.obj[so];
      auto [n, yi] = sc.obj[to];
      for (const auto& phi : monotone_maps(m, n))
        if (x.act(phi, n, yi) == xi)
          ones.push_back({static_cast<int>(so), static_cast<int>(to), phi});
    }
  std::map<std::tuple<int, int, std::vector<int>>, int> one_idx;
  for (const auto& r : ones) {
    std::ostringstream os;
    os << "phi[";
    for (std::size_t i = 0; i < r.phi.size(); ++i) os << (i ? "," : "") << r.phi[i];
    os << "]#" << r.src << "." << r.tgt;
    int l = bld.add_one(os.str(), r.src, r.tgt);
    one_idx[{r.src, r.tgt, r.phi}] = l;
    sc.one_map.push_back(r.phi);
  }
  for (std::size_t o = 0; o < sc.obj.size(); ++o) {
    auto [m, xi] = sc.obj[o];
    std::vector<int> id(m + 1);
    for (int i = 0; i <= m; ++i) id[i] = i;
    bld.set_id1(static_cast<int>(o), one_idx.at({static_cast<int>(o), static_cast<int>(o), id}));
  }
  for (std::size_t l1 = 0; l1 < ones.size(); ++l1)
    for (std::size_t l2 = 0; l2 < ones.size(); ++l2) {
      if (ones[l1].tgt != ones[l2].src) continue;
      std::vector<int> comp(ones[l1].phi.size());
      for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = ones[l2].phi[ones[l1].phi[i]];
      bld.set_comp1(static_cast<int>(l2), static_cast<int>(l1),
                    one_idx.at({ones[l1].src, ones[l2].tgt, comp}));
    }
  for (std::size_t l = 0; l < ones.size(); ++l)
    bld.set_id2(static_cast<int>(l),
                bld.add_two("id#" + std::to_string(l), static_cast<int>(l),
                            static_cast<int>(l)));
  const TwoCat& cur = bld.peek();
  for (int t2 = 0; t2 < bld.n_two(); ++t2)
    for (int t1 = 0; t1 < bld.n_two(); ++t1) {
      if (cur.twos[t1].tgt == cur.twos[t2].src) bld.set_vcomp(t2, t1, t1);
      int f1 = cur.twos[t1].src, f2 = cur.twos[t2].src;
      if (cur.ones[f1].tgt == cur.ones[f2].src)
        bld.set_hcomp(t2, t1, cur.id2_tab[cur.comp1_tab.at(pair_key(f2, f1))]);
    }
  sc.cat = bld.finalize();
  return sc;
}

// ---------------------------------------------------------------------------
// sup morphisms

namespace {

// source category for SupCatLaxNor / SupHom: objects are simplices, 1-cells
// are pairs (phi, family) of a monotone map and a relative-to-objects
// transformation x => y.phi
struct CatNerveCategory {
  TwoCatPtr cat;
  std::vector<std::pair<int, int>> obj;           // (dim, idx)
  std::vector<std::vector<int>> one_phi;          // monotone map
  std::vector<std::vector<int>> one_fam;          // components on all pairs i<j of [m]
};

int fam_component(const std::vector<int>& fam, int m, int i, int j) {
  (void)m;
  // fam stores components for pairs i<j in pair-lex order
  int idx = 0;
  for (int jj = 1; jj <= j; ++jj)
    for (int ii = 0; ii < jj; ++ii) {
      if (ii == i && jj == j) return fam[idx];
      ++idx;
    }
  throw Error("BadArgument", "fam_component");
}

}  // namespace

SupResult sup(const TwoCatPtr& ap, SupVariant variant, int dim, long long budget) {
  const TwoCat& A = *ap;
  SupResult sr;
  if (variant == SupVariant::Sup1 || variant == SupVariant::SupLax ||
      variant == SupVariant::SupLaxNor) {
    NerveResult nr;
    if (variant == SupVariant::Sup1)
      nr = classical_nerve(ap, dim);
    else
      nr = nerve(ap, variant == SupVariant::SupLax ? NerveVariant::Lax : NerveVariant::LaxNor,
                 dim, budget);
    sr.simplices = category_of_simplices(nr.sset);
    sr.source = sr.simplices.cat;
    const TwoCat& C = *sr.source;
    LaxFunctor u;
    u.src = sr.source;
    u.tgt = ap;
    u.dir = Direction::Lax;
    u.ob_map.resize(C.n_obj());
    u.one_map.resize(C.n_one());
    u.two_map.resize(C.n_two());
    u.unit_cell.resize(C.n_obj());
    auto simplex_of = [&](int o) -> const Simplex& {
      auto [m, i] = sr.simplices.obj[o];
      return nr.simplices[m][i];
    };
    for (int o = 0; o < C.n_obj(); ++o) {
      const Simplex& s = simplex_of(o);
      u.ob_map[o] = s.obs[s.m];
      u.unit_cell[o] = s.unit[s.m];  // identity for Sup1/SupLaxNor
    }
    for (int l = 0; l < C.n_one(); ++l) {
      const Simplex& y = simplex_of(C.ones[l].tgt);
      const auto& phi = sr.simplices.one_map[l];
      int m = static_cast<int>(phi.size()) - 1;
      u.one_map[l] = y.one[pair_index(phi[m], y.m)];
    }
    for (int t = 0; t < C.n_two(); ++t) u.two_map[t] = A.id2(u.one_map[C.twos[t].src]);
    for (int l1 = 0; l1 < C.n_one(); ++l1)
      for (int l2 = 0; l2 < C.n_one(); ++l2) {
        if (C.ones[l1].tgt != C.ones[l2].src) continue;
        const Simplex& z = simplex_of(C.ones[l2].tgt);
        const auto& phi = sr.simplices.one_map[l1];
        const auto& psi = sr.simplices.one_map[l2];
        int m = static_cast<int>(phi.size()) - 1;
        int n = static_cast<int>(psi.size()) - 1;
        u.comp_cell[pair_key(l2, l1)] =
            z.two[triple_index(psi[phi[m]], psi[n], z.m)];
      }
    sr.functor = u;
    return sr;
  }

  // SupCatLaxNor / SupHom
  bool hom = (variant == SupVariant::SupHom);
  NerveResult nr = nerve(ap, NerveVariant::LaxNor, dim, budget);
  std::vector<std::vector<Simplex>> cells(dim + 1);
  if (hom) {
    // strict simplices only
    for (int m = 0; m <= dim; ++m)
      for (const auto& s : nr.simplices[m]) {
        bool strict = true;
        for (int t : s.two) strict &= A.is_id2(t);
        if (strict) cells[m].push_back(s);
      }
  } else {
    cells = nr.simplices;
  }
  CatNerveCategory cn;
  TwoCatBuilder bld;
  long long visited = 0;
  auto tick = [&]() {
    if (++visited > budget) throw Error("BudgetExceeded", "sup enumeration");
  };
  for (int m = 0; m <= dim; ++m)
    for (std::size_t i = 0; i < cells[m].size(); ++i) {
      bld.add_object("(" + std::to_string(m) + "#" + std::to_string(i) + ")");
      cn.obj.push_back({m, static_cast<int>(i)});
    }
  struct OneRec {
    int src, tgt;
    std::vector<int> phi, fam;
  };
  std::vector<OneRec> ones;
  for (std::size_t so = 0; so < cn.obj.size(); ++so)
    for (std::size_t to = 0; to < cn.obj.size(); ++to) {
      auto [m, xi] = cn.obj[so];
      auto [n, yi] = cn.obj[to];
      const Simplex& x = cells[m][xi];
      const Simplex& y = cells[n][yi];
      for (const auto& phi : monotone_maps(m, n)) {
        // objects must match along phi
        bool ok = true;
        for (int i = 0; i <= m && ok; ++i) ok = (x.obs[i] == y.obs[phi[i]]);
        if (!ok) continue;
        // families on pairs i<j, coherence-filtered
        std::vector<std::vector<int>> choices;
        for (int j = 1; j <= m; ++j)
          for (int i = 0; i < j; ++i) {
            choices.push_back(
                A.twos_from_to(x.one[pair_index(i, j)], y.one[pair_index(phi[i], phi[j])]));
          }
        bool empty = false;
        for (auto& c : choices) empty |= c.empty();
        if (empty) continue;
        std::vector<int> pick(choices.size(), 0);
        while (true) {
          tick();
          std::vector<int> fam(choices.size());
          for (std::size_t i = 0; i < choices.size(); ++i) fam[i] = choices[i][pick[i]];
          // coherence on triples i<j<k:
          // y.phi_{jk} o0 sigma_{ij} then sigma_{jk} ... against x's comp cells
          bool good = true;
          for (int k = 0; k <= m && good; ++k)
            for (int j = 0; j < k && good; ++j)
              for (int i = 0; i < j && good; ++i) {
                int sij = fam_component(fam, m, i, j);
                int sjk = fam_component(fam, m, j, k);
                int sik = fam_component(fam, m, i, k);
                int lhs = A.vcomp(
                    y.two[triple_index(phi[i], phi[j], phi[k])],
                    A.vcomp(A.whisker_l(y.one[pair_index(phi[j], phi[k])], sij),
                            A.whisker_r(sjk, x.one[pair_index(i, j)])));
                int rhs = A.vcomp(sik, x.two[triple_index(i, j, k)]);
                good = (lhs == rhs);
              }
          if (good)
            ones.push_back({static_cast<int>(so), static_cast<int>(to), phi, fam});
          std::size_t i = 0;
          for (; i < choices.size(); ++i) {
            if (++pick[i] < static_cast<int>(choices[i].size())) break;
            pick[i] = 0;
          }
          if (i == choices.size()) break;
        }
      }
    }
  std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int> one_idx;
  for (const auto& r : ones) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < r.phi.size(); ++i) os << (i ? "," : "") << r.phi[i];
    os << "|";
    for (std::size_t i = 0; i < r.fam.size(); ++i) os << (i ? "," : "") << r.fam[i];
    os << ")#" << r.src << "." << r.tgt;
    bld.add_one(os.str(), r.src, r.tgt);
    one_idx[{r.src, r.tgt, r.phi, r.fam}] = static_cast<int>(cn.one_phi.size());
    cn.one_phi.push_back(r.phi);
    cn.one_fam.push_back(r.fam);
  }
  for (std::size_t o = 0; o < cn.obj.size(); ++o) {
    auto [m, xi] = cn.obj[o];
    std::vector<int> id(m + 1);
    for (int i = 0; i <= m; ++i) id[i] = i;
    std::vector<int> fam;
    const Simplex& x = cells[m][xi];
    for (int j = 1; j <= m; ++j)
      for (int i = 0; i < j; ++i) fam.push_back(A.id2(x.one[pair_index(i, j)]));
    bld.set_id1(static_cast<int>(o),
                one_idx.at({static_cast<int>(o), static_cast<int>(o), id, fam}));
  }
  for (std::size_t l1 = 0; l1 < ones.size(); ++l1)
    for (std::size_t l2 = 0; l2 < ones.size(); ++l2) {
      if (ones[l1].tgt != ones[l2].src) continue;
      auto [m, xi] = cn.obj[ones[l1].src];
      std::vector<int> comp(ones[l1].phi.size());
      for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = ones[l2].phi[ones[l1].phi[i]];
      // composite family: tau_{phi(i) phi(j)} *1 sigma_{ij}
      std::vector<int> fam;
      for (int j = 1; j <= m; ++j)
        for (int i = 0; i < j; ++i) {
          int sij = fam_component(ones[l1].fam, m, i, j);
          int pi = ones[l1].phi[i], pj = ones[l1].phi[j];
          int tij = (pi == pj)
                        ? A.id2(cells[cn.obj[ones[l1].tgt].first][cn.obj[ones[l1].tgt].second]
                                    .one[pair_index(pi, pj)])
                        : fam_component(ones[l2].fam, cn.obj[ones[l2].src].first, pi, pj);
          fam.push_back(A.vcomp(tij, sij));
        }
      bld.set_comp1(static_cast<int>(l2), static_cast<int>(l1),
                    one_idx.at({ones[l1].src, ones[l2].tgt, comp, fam}));
      (void)xi;
    }
  for (std::size_t l = 0; l < ones.size(); ++l)
    bld.set_id2(static_cast<int>(l),
                bld.add_two("id#" + std::to_string(l), static_cast<int>(l),
                            static_cast<int>(l)));
  {
    const TwoCat& cur = bld.peek();
    for (int t2 = 0; t2 < bld.n_two(); ++t2)
      for (int t1 = 0; t1 < bld.n_two(); ++t1) {
        if (cur.twos[t1].tgt == cur.twos[t2].src) bld.set_vcomp(t2, t1, t1);
        int f1 = cur.twos[t1].src, f2 = cur.twos[t2].src;
        if (cur.ones[f1].tgt == cur.ones[f2].src)
          bld.set_hcomp(t2, t1, cur.id2_tab[cur.comp1_tab.at(pair_key(f2, f1))]);
      }
  }
  cn.cat = bld.finalize();
  sr.source = cn.cat;
  const TwoCat& C = *cn.cat;
  LaxFunctor u;
  u.src = cn.cat;
  u.tgt = ap;
  u.dir = Direction::Lax;
  u.ob_map.resize(C.n_obj());
  u.one_map.resize(C.n_one());
  u.two_map.resize(C.n_two());
  u.unit_cell.resize(C.n_obj());
  for (int o = 0; o < C.n_obj(); ++o) {
    auto [m, xi] = cn.obj[o];
    u.ob_map[o] = cells[m][xi].obs[m];
    u.unit_cell[o] = A.id2(A.id1(u.ob_map[o]));
  }
  for (int l = 0; l < C.n_one(); ++l) {
    auto [n, yi] = cn.obj[C.ones[l].tgt];
    auto [m, xi] = cn.obj[C.ones[l].src];
    (void)xi;
    u.one_map[l] = cells[n][yi].one[pair_index(cn.one_phi[l][m], n)];
  }
  for (int t = 0; t < C.n_two(); ++t) u.two_map[t] = A.id2(u.one_map[C.twos[t].src]);
  for (int l1 = 0; l1 < C.n_one(); ++l1)
    for (int l2 = 0; l2 < C.n_one(); ++l2) {
      if (C.ones[l1].tgt != C.ones[l2].src) continue;
      auto [m, xi] = cn.obj[C.ones[l1].src];
      auto [n, yi] = cn.obj[C.ones[l2].src];
      auto [p, zi] = cn.obj[C.ones[l2].tgt];
      (void)xi;
      (void)yi;
      const Simplex& z = cells[p][zi];
      int phim = cn.one_phi[l1][m];
      int psin = cn.one_phi[l2][n];
      int psiphim = cn.one_phi[l2][phim];
      int beta = (phim == n) ? A.id2(cells[n][cn.obj[C.ones[l2].src].second]
                                         .one[pair_index(phim, n)])
                             : fam_component(cn.one_fam[l2], n, phim, n);
      // z_{p,psi(n),psi(phi(m))} *1 (z_{p,psi(n)} o0 beta_{n,phi(m)})
      int cell = A.vcomp(z.two[triple_index(psiphim, psin, p)],
                         A.whisker_l(z.one[pair_index(psin, p)], beta));
      u.comp_cell[pair_key(l2, l1)] = cell;
    }
  sr.functor = u;
  return sr;
}

// ---------------------------------------------------------------------------
// decalage

DecalageResult decalage(const TwoCatPtr& ap, const FinalObjectWitness& w, int dim,
                        long long budget) {
  const TwoCat& A = *ap;
  if (w.z < 0) throw Error("NoWitness", "decalage");
  NerveResult nr = nerve(ap, NerveVariant::LaxNor, dim, budget);
  SimplexCategory full = category_of_simplices(nr.sset);
  // full subcategory on dimensions <= dim-1
  if (dim < 1) throw Error("DegreeOutOfRange", "decalage needs dim >= 1");
  TruncatedSSet lower = nr.sset;
  lower.dim = dim - 1;
  lower.names.resize(dim);
  lower.face.resize(dim);
  lower.degen.resize(dim - 1);
  lower.degenerate.resize(dim);
  SimplexCategory sub = category_of_simplices(lower);

  DecalageResult dr;
  dr.full = full.cat;
  dr.sub = sub.cat;

  const TwoCat& SUB = *sub.cat;
  const TwoCat& FULL = *full.cat;
  auto full_obj = [&](int m, int i) {
    for (std::size_t o = 0; o < full.obj.size(); ++o)
      if (full.obj[o].first == m && full.obj[o].second == i) return static_cast<int>(o);
    throw Error("BadArgument", "decalage full object lookup");
  };
  auto full_one = [&](int so, int to, const std::vector<int>& phi) {
    for (int l = 0; l < FULL.n_one(); ++l)
      if (FULL.ones[l].src == so && FULL.ones[l].tgt == to && full.one_map[l] == phi)
        return l;
    throw Error("BadArgument", "decalage full 1-cell lookup");
  };

  // inclusion
  {
    std::vector<int> om(SUB.n_obj()), fm(SUB.n_one()), tm(SUB.n_two());
    for (int o = 0; o < SUB.n_obj(); ++o)
      om[o] = full_obj(sub.obj[o].first, sub.obj[o].second);
    for (int l = 0; l < SUB.n_one(); ++l)
      fm[l] = full_one(om[SUB.ones[l].src], om[SUB.ones[l].tgt], sub.one_map[l]);
    for (int t = 0; t < SUB.n_two(); ++t) tm[t] = FULL.id2(fm[SUB.twos[t].src]);
    dr.incl = make_strict(sub.cat, full.cat, om, fm, tm);
  }

  // D: append the witness vertex
  std::vector<std::map<std::vector<int>, int>> index(dim + 1);
  for (int m = 0; m <= dim; ++m)
    for (std::size_t i = 0; i < nr.simplices[m].size(); ++i)
      index[m][nr.simplices[m][i].key()] = static_cast<int>(i);
  auto dsimplex = [&](const Simplex& x) {
    Simplex s;
    s.m = x.m + 1;
    s.obs = x.obs;
    s.obs.push_back(w.z);
    s.unit = x.unit;
    s.unit.push_back(A.id2(A.id1(w.z)));
    s.one.assign(n_pairs(s.m), -1);
    s.two.assign(n_triples(s.m), -1);
    for (int j = 0; j <= x.m; ++j)
      for (int i = 0; i <= j; ++i) s.one[pair_index(i, j)] = x.one[pair_index(i, j)];
    for (int i = 0; i <= x.m; ++i) s.one[pair_index(i, s.m)] = w.final_one[x.obs[i]];
    s.one[pair_index(s.m, s.m)] = A.id1(w.z);
    for (int k = 0; k <= x.m; ++k)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i) s.two[triple_index(i, j, k)] = x.two[triple_index(i, j, k)];
    for (int j = 0; j <= x.m; ++j)
      for (int i = 0; i <= j; ++i) {
        int comp = A.comp1(w.final_one[x.obs[j]], x.one[pair_index(i, j)]);
        s.two[triple_index(i, j, s.m)] = w.unique_two.at(comp);
      }
    for (int i = 0; i <= x.m; ++i)
      s.two[triple_index(i, s.m, s.m)] = A.id2(w.final_one[x.obs[i]]);
    s.two[triple_index(s.m, s.m, s.m)] = A.id2(A.id1(w.z));
    return s;
  };
  {
    std::vector<int> om(SUB.n_obj()), fm(SUB.n_one()), tm(SUB.n_two());
    for (int o = 0; o < SUB.n_obj(); ++o) {
      auto [m, i] = sub.obj[o];
      Simplex ds = dsimplex(nr.simplices[m][i]);
      om[o] = full_obj(m + 1, index[m + 1].at(ds.key()));
    }
    for (int l = 0; l < SUB.n_one(); ++l) {
      auto phi = sub.one_map[l];
      int m = static_cast<int>(phi.size()) - 1;
      auto [n, yi] = sub.obj[SUB.ones[l].tgt];
      (void)yi;
      std::vector<int> dphi(m + 2);
      for (int i = 0; i <= m; ++i) dphi[i] = phi[i];
      dphi[m + 1] = n + 1;
      fm[l] = full_one(om[SUB.ones[l].src], om[SUB.ones[l].tgt], dphi);
    }
    for (int t = 0; t < SUB.n_two(); ++t) tm[t] = FULL.id2(fm[SUB.twos[t].src]);
    dr.d = make_strict(sub.cat, full.cat, om, fm, tm);
  }
  // Z: constant at ([0], z)
  {
    Simplex zs;
    zs.m = 0;
    zs.obs = {w.z};
    zs.one = {A.id1(w.z)};
    zs.unit = {A.id2(A.id1(w.z))};
    zs.two = {A.id2(A.id1(w.z))};
    int zobj = full_obj(0, index[0].at(zs.key()));
    std::vector<int> om(SUB.n_obj(), zobj);
    std::vector<int> fm(SUB.n_one(), FULL.id1(zobj));
    std::vector<int> tm(SUB.n_two(), FULL.id2(FULL.id1(zobj)));
    dr.z = make_strict(sub.cat, full.cat, om, fm, tm);
  }
  // iota : incl => D and omega : Z => D
  {
    Transformation iota;
    iota.kind = TransKind::Strict;
    iota.from = dr.incl;
    iota.to = dr.d;
    iota.comp_obj.resize(SUB.n_obj());
    iota.comp_one.resize(SUB.n_one());
    Transformation omega = iota;
    omega.from = dr.z;
    for (int o = 0; o < SUB.n_obj(); ++o) {
      auto [m, i] = sub.obj[o];
      (void)i;
      std::vector<int> inc(m + 1);
      for (int k = 0; k <= m; ++k) inc[k] = k;
      iota.comp_obj[o] = full_one(dr.incl.ob(o), dr.d.ob(o), inc);
      omega.comp_obj[o] = full_one(dr.z.ob(o), dr.d.ob(o), {m + 1});
    }
    for (int l = 0; l < SUB.n_one(); ++l) {
      int ap2 = SUB.ones[l].tgt;
      iota.comp_one[l] = FULL.id2(FULL.comp1(iota.comp_obj[ap2], dr.incl.one(l)));
      omega.comp_one[l] = FULL.id2(FULL.comp1(omega.comp_obj[ap2], dr.z.one(l)));
    }
    dr.iota = iota;
    dr.omega = omega;
  }
  return dr;
}

// ---------------------------------------------------------------------------
// slice over a simplex

SimplexSliceResult slice_over_simplex(const LaxFunctor& u, const Simplex& b,
                                      long long budget) {
  if (!is_strict(u)) throw Error("NotStrict", "slice_over_simplex");
  const TwoCat& A = *u.src;
  const TwoCat& B = *u.tgt;
  const int m = b.m;
  long long visited = 0;
  auto tick = [&]() {
    if (++visited > budget) throw Error("BudgetExceeded", "slice_over_simplex");
  };

  // an object (a, x) is determined by the 1-cells q_i : u(a) -> b_i and the
  // comp cells x_{j+1,i+1,0}; assemble the (m+1)-simplex and re-check it
  struct Obj {
    int a;
    Simplex x;
  };
  auto assemble_obj = [&](int a, const std::vector<int>& q, const std::vector<int>& zeta) {
    Simplex x;
    x.m = m + 1;
    x.obs.resize(m + 2);
    x.obs[0] = u.ob(a);
    for (int i = 0; i <= m; ++i) x.obs[i + 1] = b.obs[i];
    x.unit.resize(m + 2);
    for (int i = 0; i <= m + 1; ++i) x.unit[i] = B.id2(B.id1(x.obs[i]));
    x.one.assign(n_pairs(m + 1), -1);
    x.two.assign(n_triples(m + 1), -1);
    x.one[pair_index(0, 0)] = B.id1(x.obs[0]);
    for (int i = 0; i <= m; ++i) x.one[pair_index(0, i + 1)] = q[i];
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= j; ++i)
        x.one[pair_index(i + 1, j + 1)] = b.one[pair_index(i, j)];
    // comp cells: normalized slots identity, b-slots copied, zeta free
    for (int k = 0; k <= m + 1; ++k)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i) {
          int idx = triple_index(i, j, k);
          if (i >= 1) {
            x.two[idx] = b.two[triple_index(i - 1, j - 1, k - 1)];
          } else if (j == 0) {
            // (0,0,k): unit-adjacent, identity on q
            x.two[idx] = B.id2(x.one[pair_index(0, k)]);
          } else if (j == k) {
            x.two[idx] = B.id2(x.one[pair_index(0, k)]);
          } else {
            x.two[idx] = -1;  // filled from zeta below
          }
        }
    // fill zeta properly: pairs (j,k) with 1 <= j < k <= m+1 map to b pairs
    int zi = 0;
    for (int k = 1; k <= m + 1; ++k)
      for (int j = 1; j < k; ++j) {
        x.two[triple_index(0, j, k)] = zeta[zi++];
      }
    return x;
  };

  std::vector<Obj> objs;
  for (int a = 0; a < A.n_obj(); ++a) {
    // enumerate q vectors and zeta choices
    std::vector<std::vector<int>> qs;
    {
      std::vector<std::vector<int>> choice(m + 1);
      bool empty = false;
      for (int i = 0; i <= m; ++i) {
        choice[i] = B.ones_from_to(u.ob(a), b.obs[i]);
        empty |= choice[i].empty();
      }
      if (empty) continue;
      std::vector<int> pick(m + 1, 0);
      while (true) {
        std::vector<int> q(m + 1);
        for (int i = 0; i <= m; ++i) q[i] = choice[i][pick[i]];
        qs.push_back(q);
        int i = 0;
        for (; i <= m; ++i) {
          if (++pick[i] < static_cast<int>(choice[i].size())) break;
          pick[i] = 0;
        }
        if (i == m + 1) break;
      }
    }
    for (const auto& q : qs) {
      // zeta for pairs 1 <= j < k <= m+1: 2-cells b_{j-1..k-1} q_{j-1} => q_{k-1}
      std::vector<std::vector<int>> choice;
      for (int k = 1; k <= m + 1; ++k)
        for (int j = 1; j < k; ++j)
          choice.push_back(B.twos_from_to(
              B.comp1(b.one[pair_index(j - 1, k - 1)], q[j - 1]), q[k - 1]));
      bool empty = false;
      for (auto& cc : choice) empty |= cc.empty();
      if (empty && !choice.empty()) continue;
      std::vector<int> pick(choice.size(), 0);
      while (true) {
        tick();
        std::vector<int> zeta(choice.size());
        for (std::size_t i = 0; i < choice.size(); ++i) zeta[i] = choice[i][pick[i]];
        Simplex x = assemble_obj(a, q, zeta);
        if (simplex_coherent(B, x, true)) objs.push_back({a, x});
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
          if (++pick[i] < static_cast<int>(choice[i].size())) break;
          pick[i] = 0;
        }
        if (i == choice.size()) break;
      }
    }
  }

  TwoCatBuilder bld;
  for (std::size_t o = 0; o < objs.size(); ++o)
    bld.add_object("(" + A.objects[objs[o].a] + "#" + std::to_string(o) + ")");

  // 1-cells: (f, eta) with eta_i : x'_{i+1,0} u(f) => x_{i+1,0}
  struct One {
    int so, to, f;
    std::vector<int> eta;
  };
  std::vector<One> ones;
  for (std::size_t so = 0; so < objs.size(); ++so)
    for (std::size_t to = 0; to < objs.size(); ++to)
      for (int f : A.ones_from_to(objs[so].a, objs[to].a)) {
        const Simplex& x = objs[so].x;
        const Simplex& xp = objs[to].x;
        std::vector<std::vector<int>> choice(m + 1);
        bool empty = false;
        for (int i = 0; i <= m; ++i) {
          choice[i] = B.twos_from_to(B.comp1(xp.one[pair_index(0, i + 1)], u.one(f)),
                                     x.one[pair_index(0, i + 1)]);
          empty |= choice[i].empty();
        }
        if (empty) continue;
        std::vector<int> pick(m + 1, 0);
        while (true) {
          tick();
          std::vector<int> eta(m + 1);
          for (int i = 0; i <= m; ++i) eta[i] = choice[i][pick[i]];
          // the (m+2)-simplex y must cohere
          Simplex y;
          y.m = m + 2;
          y.obs.resize(m + 3);
          y.obs[0] = u.ob(objs[so].a);
          y.obs[1] = u.ob(objs[to].a);
          for (int i = 0; i <= m; ++i) y.obs[i + 2] = b.obs[i];
          y.unit.resize(m + 3);
          for (int i = 0; i <= m + 2; ++i) y.unit[i] = B.id2(B.id1(y.obs[i]));
          y.one.assign(n_pairs(m + 2), -1);
          y.two.assign(n_triples(m + 2), -1);
          y.one[pair_index(0, 0)] = B.id1(y.obs[0]);
          y.one[pair_index(1, 1)] = B.id1(y.obs[1]);
          y.one[pair_index(0, 1)] = u.one(f);
          for (int i = 0; i <= m; ++i) {
            y.one[pair_index(0, i + 2)] = x.one[pair_index(0, i + 1)];
            y.one[pair_index(1, i + 2)] = xp.one[pair_index(0, i + 1)];
          }
          for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= j; ++i)
              y.one[pair_index(i + 2, j + 2)] = b.one[pair_index(i, j)];
          for (int k = 0; k <= m + 2; ++k)
            for (int j = 0; j <= k; ++j)
              for (int i = 0; i <= j; ++i) {
                int idx = triple_index(i, j, k);
                if (i >= 2)
                  y.two[idx] = b.two[triple_index(i - 2, j - 2, k - 2)];
                else if (i == 1 && j >= 2)
                  y.two[idx] = xp.two[triple_index(0, j - 1, k - 1)];
                else if (i == 0 && j >= 2)
                  y.two[idx] = x.two[triple_index(0, j - 1, k - 1)];
                else if (i == 0 && j == 1 && k >= 2)
                  y.two[idx] = eta[k - 2];
                else
                  y.two[idx] = B.id2(y.one[pair_index(std::min(i, j), k)]);
              }
          // normalized slots for (0,0,k), (1,1,k) and (j,k,k)
          for (int k = 0; k <= m + 2; ++k) {
            y.two[triple_index(0, 0, k)] = B.id2(y.one[pair_index(0, k)]);
            if (k >= 1) y.two[triple_index(1, 1, k)] = B.id2(y.one[pair_index(1, k)]);
            for (int j = 0; j <= k; ++j)
              y.two[triple_index(j, k, k)] = B.id2(y.one[pair_index(j, k)]);
          }
          if (simplex_coherent(B, y, true)) ones.push_back({(int)so, (int)to, f, eta});
          std::size_t i = 0;
          for (; i < static_cast<std::size_t>(m + 1); ++i) {
            if (++pick[i] < static_cast<int>(choice[i].size())) break;
            pick[i] = 0;
          }
          if (i == static_cast<std::size_t>(m + 1)) break;
        }
      }

  std::map<std::tuple<int, int, std::vector<int>>, int> one_idx;
  for (std::size_t l = 0; l < ones.size(); ++l) {
    std::ostringstream os;
    os << A.ones[ones[l].f].name << "|";
    for (int e : ones[l].eta) os << e << ".";
    os << "#" << ones[l].so << "." << ones[l].to;
    bld.add_one(os.str(), ones[l].so, ones[l].to);
    std::vector<int> kk = ones[l].eta;
    kk.push_back(ones[l].f);
    one_idx[{ones[l].so, ones[l].to, kk}] = static_cast<int>(l);
  }
  auto find_one = [&](int so, int to, int f, const std::vector<int>& eta) {
    std::vector<int> kk = eta;
    kk.push_back(f);
    auto it = one_idx.find({so, to, kk});
    if (it == one_idx.end()) throw Error("BaseMismatch", "slice_over_simplex 1-cell");
    return it->second;
  };
  for (std::size_t o = 0; o < objs.size(); ++o) {
    std::vector<int> eta(m + 1);
    for (int i = 0; i <= m; ++i)
      eta[i] = B.id2(objs[o].x.one[pair_index(0, i + 1)]);
    bld.set_id1(static_cast<int>(o),
                find_one(static_cast<int>(o), static_cast<int>(o), A.id1(objs[o].a), eta));
  }
  for (std::size_t l1 = 0; l1 < ones.size(); ++l1)
    for (std::size_t l2 = 0; l2 < ones.size(); ++l2) {
      if (ones[l1].to != ones[l2].so) continue;
      std::vector<int> eta(m + 1);
      for (int i = 0; i <= m; ++i)
        eta[i] = B.vcomp(ones[l1].eta[i], B.whisker_r(ones[l2].eta[i], u.one(ones[l1].f)));
      bld.set_comp1(static_cast<int>(l2), static_cast<int>(l1),
                    find_one(ones[l1].so, ones[l2].to, A.comp1(ones[l2].f, ones[l1].f), eta));
    }
  // 2-cells: alpha : f => f' with eta'_i *1 (x'_{i+1,0} o0 u(alpha)) = eta_i
  struct Two {
    int l1, l2, al;
  };
  std::vector<Two> twos;
  for (std::size_t l1 = 0; l1 < ones.size(); ++l1)
    for (std::size_t l2 = 0; l2 < ones.size(); ++l2) {
      if (ones[l1].so != ones[l2].so || ones[l1].to != ones[l2].to) continue;
      const Simplex& xp = objs[ones[l1].to].x;
      for (int al : A.twos_from_to(ones[l1].f, ones[l2].f)) {
        bool ok = true;
        for (int i = 0; i <= m && ok; ++i) {
          int lhs = B.vcomp(ones[l2].eta[i],
                            B.whisker_l(xp.one[pair_index(0, i + 1)], u.two(al)));
          ok = (lhs == ones[l1].eta[i]);
        }
        if (ok) twos.push_back({(int)l1, (int)l2, al});
      }
    }
  std::map<std::tuple<int, int, int>, int> two_idx;
  for (std::size_t t = 0; t < twos.size(); ++t) {
    bld.add_two("al" + std::to_string(twos[t].al) + "#" + std::to_string(twos[t].l1) + "." +
                    std::to_string(twos[t].l2),
                twos[t].l1, twos[t].l2);
    two_idx[{twos[t].l1, twos[t].l2, twos[t].al}] = static_cast<int>(t);
  }
  for (std::size_t l = 0; l < ones.size(); ++l)
    bld.set_id2(static_cast<int>(l),
                two_idx.at({(int)l, (int)l, A.id2(ones[l].f)}));
  {
    const TwoCat& cur = bld.peek();
    for (std::size_t t1 = 0; t1 < twos.size(); ++t1)
      for (std::size_t t2 = 0; t2 < twos.size(); ++t2) {
        if (twos[t1].l2 == twos[t2].l1)
          bld.set_vcomp(static_cast<int>(t2), static_cast<int>(t1),
                        two_idx.at({twos[t1].l1, twos[t2].l2,
                                    A.vcomp(twos[t2].al, twos[t1].al)}));
        if (ones[twos[t1].l1].to == ones[twos[t2].l1].so) {
          int s1 = cur.comp1_tab.at(pair_key(twos[t2].l1, twos[t1].l1));
          int s2 = cur.comp1_tab.at(pair_key(twos[t2].l2, twos[t1].l2));
          bld.set_hcomp(static_cast<int>(t2), static_cast<int>(t1),
                        two_idx.at({s1, s2, A.hcomp(twos[t2].al, twos[t1].al)}));
        }
      }
  }
  SimplexSliceResult res;
  res.slice = bld.finalize();

  // the colax slice over b_0
  LaxFunctor uc = u;
  uc.dir = Direction::Colax;
  res.point_slice = slice(uc, b.obs[0], SliceVariant::ColaxOver);
  const TwoCat& PS = *res.point_slice.slice;
  auto ps_obj = [&](int a, int p) {
    for (std::size_t i = 0; i < res.point_slice.obj_a.size(); ++i)
      if (res.point_slice.obj_a[i] == a && res.point_slice.obj_p[i] == p)
        return static_cast<int>(i);
    throw Error("BaseMismatch", "slice_over_simplex point-slice object");
  };
  auto ps_one = [&](int so, int to, int f, int al) {
    for (int l = 0; l < PS.n_one(); ++l)
      if (PS.ones[l].src == so && PS.ones[l].tgt == to && res.point_slice.one_f[l] == f &&
          res.point_slice.one_al[l] == al)
        return l;
    throw Error("BaseMismatch", "slice_over_simplex point-slice 1-cell");
  };
  auto ps_two = [&](int s1, int t1, int al) {
    for (int t = 0; t < PS.n_two(); ++t)
      if (PS.twos[t].src == s1 && PS.twos[t].tgt == t1 && res.point_slice.two_beta[t] == al)
        return t;
    throw Error("BaseMismatch", "slice_over_simplex point-slice 2-cell");
  };

  // R : (a,x) -> (a, x_{1,0}); (f,y) -> (f, eta_0); gamma -> gamma
  {
    const TwoCat& S = *res.slice;
    std::vector<int> om(S.n_obj()), fm(S.n_one()), tm(S.n_two());
    for (int o = 0; o < S.n_obj(); ++o)
      om[o] = ps_obj(objs[o].a, objs[o].x.one[pair_index(0, 1)]);
    for (int l = 0; l < S.n_one(); ++l)
      fm[l] = ps_one(om[ones[l].so], om[ones[l].to], ones[l].f, ones[l].eta[0]);
    for (int t = 0; t < S.n_two(); ++t)
      tm[t] = ps_two(fm[twos[t].l1], fm[twos[t].l2], twos[t].al);
    res.r = make_strict(res.slice, res.point_slice.slice, om, fm, tm);
  }
  // I : (a,p) -> (a, x) with x_{i+1,0} = b_{i,0} p, zeta = b o0 p
  {
    std::vector<int> om(PS.n_obj()), fm(PS.n_one()), tm(PS.n_two());
    auto s_obj = [&](int a, const Simplex& x) {
      for (std::size_t o = 0; o < objs.size(); ++o)
        if (objs[o].a == a && objs[o].x.key() == x.key()) return static_cast<int>(o);
      throw Error("BaseMismatch", "slice_over_simplex I object");
    };
    for (int o = 0; o < PS.n_obj(); ++o) {
      int a = res.point_slice.obj_a[o];
      int p = res.point_slice.obj_p[o];
      std::vector<int> q(m + 1), zeta;
      for (int i = 0; i <= m; ++i) q[i] = B.comp1(b.one[pair_index(0, i)], p);
      for (int k = 1; k <= m + 1; ++k)
        for (int j = 1; j < k; ++j)
          zeta.push_back(B.whisker_r(b.two[triple_index(0, j - 1, k - 1)], p));
      om[o] = s_obj(a, assemble_obj(a, q, zeta));
    }
    for (int l = 0; l < PS.n_one(); ++l) {
      int f = res.point_slice.one_f[l];
      int al = res.point_slice.one_al[l];
      std::vector<int> eta(m + 1);
      for (int i = 0; i <= m; ++i) eta[i] = B.whisker_l(b.one[pair_index(0, i)], al);
      fm[l] = find_one(om[PS.ones[l].src], om[PS.ones[l].tgt], f, eta);
    }
    for (int t = 0; t < PS.n_two(); ++t)
      tm[t] = two_idx.at(
          {fm[PS.twos[t].src], fm[PS.twos[t].tgt], res.point_slice.two_beta[t]});
    res.i = make_strict(res.point_slice.slice, res.slice, om, fm, tm);
  }
  // sigma : 1 => I.R with components (1_a, x~), x~_{i+2,1,0} = x_{i+1,1,0}
  {
    const TwoCat& S = *res.slice;
    LaxFunctor ir = compose_functors(res.i, res.r);
    Transformation sg;
    sg.kind = TransKind::Strict;
    sg.from = identity_functor(res.slice);
    sg.to = ir;
    sg.comp_obj.resize(S.n_obj());
    sg.comp_one.resize(S.n_one());
    for (int o = 0; o < S.n_obj(); ++o) {
      std::vector<int> eta(m + 1);
      for (int i = 0; i <= m; ++i)
        eta[i] = objs[o].x.two[triple_index(0, 1, i + 1)];
      sg.comp_obj[o] = find_one(o, ir.ob(o), A.id1(objs[o].a), eta);
    }
    for (int l = 0; l < S.n_one(); ++l) {
      int ap2 = S.ones[l].tgt;
      sg.comp_one[l] = S.id2(S.comp1(sg.comp_obj[ap2], l));
    }
    res.sigma = sg;
  }
  return res;
}

}  // namespace twocat
