#include "twocat/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twocat {

ChainComplex normalized_chains(const TruncatedSSet& x, int k_max) {
  if (k_max + 1 > x.dim) throw Error("DegreeOutOfRange", "normalized_chains");
  ChainComplex cc;
  // indices of nondegenerate simplices per degree, with back-mapping
  std::vector<std::vector<int>> nd(k_max + 2);
  std::vector<std::vector<int>> back(k_max + 2);
  for (int k = 0; k <= k_max + 1; ++k) {
    back[k].assign(x.count(k), -1);
    for (int i = 0; i < x.count(k); ++i)
      if (!x.degenerate[k][i]) {
        back[k][i] = static_cast<int>(nd[k].size());
        nd[k].push_back(i);
      }
  }
  cc.dims.resize(k_max + 2);
  for (int k = 0; k <= k_max + 1; ++k) cc.dims[k] = static_cast<int>(nd[k].size());
  cc.boundary.resize(k_max + 2);
  for (int k = 1; k <= k_max + 1; ++k) {
    cc.boundary[k].assign(cc.dims[k - 1], std::vector<long long>(cc.dims[k], 0));
    for (std::size_t col = 0; col < nd[k].size(); ++col) {
      int idx = nd[k][col];
      for (int i = 0; i <= k; ++i) {
        int f = x.face[k][i][idx];
        if (x.degenerate[k - 1][f]) continue;
        cc.boundary[k][back[k - 1][f]][col] += (i % 2 == 0) ? 1 : -1;
      }
    }
  }
  return cc;
}

std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m) {
  std::vector<long long> diag;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0, c = 0;
  auto abs64 = [](long long v) { return v < 0 ? -v : v; };
  while (r < rows && c < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pr = r, pc = c;
    long long best = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = c; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || abs64(m[i][j]) < best)) {
          best = abs64(m[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[r], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        long long q = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) {
          std::swap(m[r], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        long long q = m[r][j] / m[r][c];
        for (std::size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
        if (m[r][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: fold in any entry the pivot does not divide
      for (std::size_t i = r + 1; i < rows && clean; ++i)
        for (std::size_t j = c + 1; j < cols && clean; ++j)
          if (m[i][j] % m[r][c] != 0) {
            for (std::size_t jj = c; jj < cols; ++jj) m[r][jj] += m[i][jj];
            clean = false;
          }
    }
    diag.push_back(abs64(m[r][c]));
    ++r;
    ++c;
  }
  return diag;
}

bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

std::string to_string(const HomologyGroup& g) {
  std::ostringstream os;
  bool first = true;
  if (g.free_rank == 1) {
    os << "Z";
    first = false;
  } else if (g.free_rank > 1) {
    os << "Z^" << g.free_rank;
    first = false;
  }
  for (long long t : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

HomologyResult homology(const TruncatedSSet& x, int k_max) {
  ChainComplex cc = normalized_chains(x, k_max);
  HomologyResult hr;
  std::vector<std::vector<long long>> snf(k_max + 2);
  std::vector<int> rank(k_max + 2, 0);
  for (int k = 1; k <= k_max + 1; ++k) {
    snf[k] = smith_normal_form(cc.boundary[k]);
    snf[k].erase(std::remove(snf[k].begin(), snf[k].end(), 0LL), snf[k].end());
    rank[k] = static_cast<int>(snf[k].size());
  }
  hr.groups.resize(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    int cycles = cc.dims[k] - (k >= 1 ? rank[k] : 0);
    hr.groups[k].free_rank = cycles - rank[k + 1];
    for (long long d : snf[k + 1])
      if (d > 1) hr.groups[k].torsion.push_back(d);
    std::sort(hr.groups[k].torsion.begin(), hr.groups[k].torsion.end());
  }
  return hr;
}

int pi0_sset(const TruncatedSSet& x) {
  int n = x.count(0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  if (x.dim >= 1)
    for (int e = 0; e < x.count(1); ++e)
      parent[find(x.face[1][0][e])] = find(x.face[1][1][e]);
  int comps = 0;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) ++comps;
  return comps;
}

ProbeResult we_probe(const LaxFunctor& u, int dim, int k_max, NerveVariant variant,
                     long long budget) {
  ProbeResult pr;
  // pi0 bijectivity of the object-level map
  auto pa = pi0(*u.src);
  auto pb = pi0(*u.tgt);
  std::vector<int> cls_a(u.src->n_obj(), -1), cls_b(u.tgt->n_obj(), -1);
  for (std::size_t c = 0; c < pa.size(); ++c)
    for (int o : pa[c]) cls_a[o] = static_cast<int>(c);
  for (std::size_t c = 0; c < pb.size(); ++c)
    for (int o : pb[c]) cls_b[o] = static_cast<int>(c);
  std::vector<int> image(pa.size(), -1);
  std::vector<bool> hit(pb.size(), false);
  bool injective = true;
  for (int o = 0; o < u.src->n_obj(); ++o) image[cls_a[o]] = cls_b[u.ob(o)];
  std::vector<bool> seen(pb.size(), false);
  for (std::size_t c = 0; c < pa.size(); ++c) {
    if (image[c] >= 0) {
      if (seen[image[c]]) injective = false;
      seen[image[c]] = true;
      hit[image[c]] = true;
    }
  }
  bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  if (!injective || !surjective) {
    pr.verdict = ProbeVerdict::Refuted;
    pr.detail = "pi0 not bijective";
    return pr;
  }
  auto na = nerve(u.src, variant, dim, budget);
  auto nb = nerve(u.tgt, variant, dim, budget);
  pr.src_h = homology(na.sset, k_max);
  pr.tgt_h = homology(nb.sset, k_max);
  for (int k = 0; k <= k_max; ++k) {
    if (!(pr.src_h.groups[k] == pr.tgt_h.groups[k])) {
      pr.verdict = ProbeVerdict::Refuted;
      pr.detail = "H_" + std::to_string(k) + " differs: " + to_string(pr.src_h.groups[k]) +
                  " vs " + to_string(pr.tgt_h.groups[k]);
      return pr;
    }
  }
  pr.verdict = ProbeVerdict::Consistent;
  pr.detail = "pi0 bijective and H_0..H_" + std::to_string(k_max) + " isomorphic";
  return pr;
}

}  // namespace twocat
