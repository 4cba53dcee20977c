#pragma once

#include "twocat/functor.hpp"

namespace twocat {

// A 1-cell of the strictification of A: a chain of m >= 0 composable
// 1-cells, listed source-first; the empty chain carries only its object.
struct ChainCell {
  TwoCatPtr cat;
  int src = -1;
  std::vector<int> cells;

  int length() const { return static_cast<int>(cells.size()); }
  int obj_at(int i) const;  // the i-th object along the chain
  int tgt() const { return obj_at(length()); }
  // composite 1-cell of the segment i..j
  int segment(int i, int j) const;
  int composite() const { return segment(0, length()); }
};

bool chain_valid(const ChainCell& x);
bool operator==(const ChainCell& a, const ChainCell& b);

// monotone endpoint-preserving map [n] -> [m]; v[i] = phi(i)
struct IntervalMap {
  std::vector<int> v;
  int n() const { return static_cast<int>(v.size()) - 1; }
  int m() const { return v.empty() ? -1 : v.back(); }
  int operator()(int i) const { return v.at(i); }
};

bool interval_valid(const IntervalMap& phi);
std::vector<IntervalMap> enumerate_interval_maps(int n, int m);
IntervalMap interval_identity(int n);
IntervalMap interval_compose(const IntervalMap& phi, const IntervalMap& psi);  // phi o psi
// tensor: [n]+[m] with psi acting on the lower block and phi shifted
IntervalMap interval_tensor(const IntervalMap& phi, const IntervalMap& psi);

// A 2-cell ([m],x) => ([n],y) of the strictification: an interval map
// phi : [n] -> [m] with x.phi = y on objects, plus one component 2-cell
// per generating arrow of [n].
struct TildeTwoCell {
  ChainCell from, to;
  IntervalMap phi;
  std::vector<int> comps;  // comps[i-1] : (x phi)_{i,i-1} => y_{i,i-1}
};

ValidationReport validate_tilde_cell(const TildeTwoCell& t);
bool operator==(const TildeTwoCell& a, const TildeTwoCell& b);

// component over the composite arrow i -> j of [n]
int tilde_component_over(const TildeTwoCell& t, int i, int j);

ChainCell tilde_compose_1(const ChainCell& c2, const ChainCell& c1);  // c2 after c1
TildeTwoCell tilde_identity(const ChainCell& x);
TildeTwoCell tilde_vcomp(const TildeTwoCell& b, const TildeTwoCell& a);
TildeTwoCell tilde_hcomp(const TildeTwoCell& b, const TildeTwoCell& a);

// cell-wise action of the strictification on a lax functor
ChainCell tilde_functor_chain(const LaxFunctor& u, const ChainCell& x);
TildeTwoCell tilde_functor_cell(const LaxFunctor& u, const TildeTwoCell& t);

// the structural lax functor A -> ~A, cell-wise
ChainCell eta_one(const TwoCatPtr& a, int f);
TildeTwoCell eta_two(const TwoCatPtr& a, int t);
TildeTwoCell eta_unit(const TwoCatPtr& a, int obj);
TildeTwoCell eta_comp(const TwoCatPtr& a, int fp, int f);

// the strict evaluation ~A -> A
int epsilon_one(const ChainCell& x);
int epsilon_two(const TildeTwoCell& t);

// bar u = epsilon_B . ~u, cell-wise
int bar_one(const LaxFunctor& u, const ChainCell& x);
int bar_two(const LaxFunctor& u, const TildeTwoCell& t);

// transport of a lax/colax transformation to the strictified functors
int bar_transformation_component(const Transformation& s, const ChainCell& x);
// bounded coherence scan of the transported transformation
ValidationReport validate_bar_transformation(const Transformation& s, int max_len);

// the canonical isomorphism op(~A) -> ~(A^op) on cells (aop = dual(A,op))
ChainCell tilde_op_chain(const TwoCatPtr& aop, const ChainCell& x);
TildeTwoCell tilde_op_cell(const TwoCatPtr& aop, const TildeTwoCell& t);

std::vector<ChainCell> enumerate_chains(const TwoCatPtr& a, int max_len);
std::vector<TildeTwoCell> enumerate_tilde_cells(const ChainCell& from, const ChainCell& to);

// exhaustive enumeration of the lax functors A -> B (budget-capped)
std::vector<LaxFunctor> enumerate_lax_functors(const TwoCatPtr& a, const TwoCatPtr& b,
                                               long long budget = 2000000);

struct BijectionCheck {
  long long functor_count = 0;
  bool injective = false;   // distinct u give distinct evaluations up to L
  bool round_trip = false;  // bar(u) . eta = u as lax functors
  bool functorial = false;  // bar(u) respects composition on cells up to L
};

BijectionCheck strictification_bijection_check(const TwoCatPtr& a, const TwoCatPtr& b,
                                               int max_len, long long budget = 2000000);

}  // namespace twocat
