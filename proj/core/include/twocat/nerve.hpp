#pragma once

#include "twocat/comma.hpp"

namespace twocat {

// A (possibly weak) functor [m] -> A with every pairwise datum materialized:
// obs[i], one[pair(i,j)] for i<=j, two[triple(i,j,k)] for i<=j<=k, unit[i].
// Normalized simplices store identities in the forced slots.
struct Simplex {
  int m = 0;
  std::vector<int> obs, one, two, unit;
  std::vector<int> key() const;
};

int pair_index(int i, int j);
int triple_index(int i, int j, int k);
int n_pairs(int m);
int n_triples(int m);

// re-index along a monotone map phi : [n] -> [m] (precomposition)
Simplex simplex_precompose(const Simplex& x, const std::vector<int>& phi);

// Dimension-bounded simplicial set with explicit face/degeneracy tables.
struct TruncatedSSet {
  int dim = 0;
  std::vector<std::vector<std::string>> names;          // per dimension
  std::vector<std::vector<std::vector<int>>> face;      // face[m][i][idx], m>=1
  std::vector<std::vector<std::vector<int>>> degen;     // degen[m][i][idx], m<dim
  std::vector<std::vector<bool>> degenerate;

  int count(int m) const { return static_cast<int>(names.at(m).size()); }
  int nondegenerate_count(int m) const;
  // the contravariant action of a monotone map phi : [m] -> [n]
  int act(const std::vector<int>& phi, int n, int idx) const;
};

ValidationReport validate_sset(const TruncatedSSet& x);

enum class NerveVariant { Lax, LaxNor };

struct NerveResult {
  TruncatedSSet sset;
  std::vector<std::vector<Simplex>> simplices;  // aligned with sset cells
};

// m-simplices = validated (normalized) lax functors [m] -> A, faces and
// degeneracies by precomposition with the ordinal maps.
NerveResult nerve(const TwoCatPtr& a, NerveVariant variant, int dim,
                  long long budget = 2000000);

NerveResult classical_nerve(const TwoCatPtr& c, int dim);

// Cat-valued strict nerve, flattened to a bisimplicial set.
struct TruncatedBiSSet {
  int dim = 0;
  // cell (m,n) indexed as cells[m][n]
  std::vector<std::vector<std::vector<std::string>>> names;
  // face_h[m][n][i][idx] : (m,n) -> (m-1,n); face_v: (m,n) -> (m,n-1)
  std::vector<std::vector<std::vector<std::vector<int>>>> face_h, face_v;
  std::vector<std::vector<std::vector<std::vector<int>>>> degen_h, degen_v;
};

ValidationReport validate_bisset(const TruncatedBiSSet& x);

TruncatedBiSSet nerve_strict(const TwoCatPtr& a, int dim, long long budget = 2000000);

TruncatedSSet diagonal(const TruncatedBiSSet& x);

// 1-category of pairs ([m], simplex) with the ordinal maps over X.
struct SimplexCategory {
  TwoCatPtr cat;
  std::vector<std::pair<int, int>> obj;                  // (dim, index)
  std::vector<std::vector<int>> one_map;                 // monotone map per 1-cell
};
SimplexCategory category_of_simplices(const TruncatedSSet& x);

enum class SupVariant { Sup1, SupLax, SupLaxNor, SupCatLaxNor, SupHom };

struct SupResult {
  TwoCatPtr source;     // the category of simplices the functor is defined on
  LaxFunctor functor;   // into A
  SimplexCategory simplices;  // only for Sup1/SupLax/SupLaxNor
};

SupResult sup(const TwoCatPtr& a, SupVariant variant, int dim, long long budget = 2000000);

// Simplex-appending endofunctor on the category of simplices of the
// normalized lax nerve, defined away from the top dimension, with the two
// comparison transformations.
struct DecalageResult {
  TwoCatPtr sub;       // full subcategory on dimensions <= dim-1
  TwoCatPtr full;      // the whole category of simplices
  LaxFunctor incl;     // sub -> full
  LaxFunctor d;        // sub -> full, raising dimension by one
  LaxFunctor z;        // constant at ([0], z)
  Transformation iota;  // incl => d
  Transformation omega; // z => d
};

DecalageResult decalage(const TwoCatPtr& a, const FinalObjectWitness& w, int dim,
                        long long budget = 2000000);

// Slice of a strict functor over a simplex of the normalized lax nerve of
// its target, with the retraction R, section I and comparison sigma.
struct SimplexSliceResult {
  TwoCatPtr slice;
  SliceResult point_slice;  // the colax slice over b_0
  LaxFunctor r;             // slice -> point_slice
  LaxFunctor i;             // point_slice -> slice
  Transformation sigma;     // 1 => i.r
};

SimplexSliceResult slice_over_simplex(const LaxFunctor& u, const Simplex& b,
                                      long long budget = 2000000);

}  // namespace twocat
