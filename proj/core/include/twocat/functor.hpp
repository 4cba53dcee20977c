#pragma once

#include "twocat/presentation.hpp"

namespace twocat {

enum class Direction { Lax, Colax };

// Object/1-cell/2-cell assignments plus structural composition and unit
// 2-cells. For a lax functor the structural cells run
//   comp(f',f): u(f')u(f) => u(f'f),   unit(a): 1_{u(a)} => u(1_a);
// a colax functor stores the reversed orientations under the same keys.
struct LaxFunctor {
  TwoCatPtr src, tgt;
  Direction dir = Direction::Lax;
  std::vector<int> ob_map;   // per source object
  std::vector<int> one_map;  // per source 1-cell
  std::vector<int> two_map;  // per source 2-cell
  Table comp_cell;           // (f',f) -> structural 2-cell in tgt
  std::vector<int> unit_cell;  // per source object

  int ob(int a) const { return ob_map.at(a); }
  int one(int f) const { return one_map.at(f); }
  int two(int t) const { return two_map.at(t); }
  int comp(int fp, int f) const;
  int unit(int a) const { return unit_cell.at(a); }
};

LaxFunctor identity_functor(const TwoCatPtr& a);
LaxFunctor constant_functor(const TwoCatPtr& a, const TwoCatPtr& b, int obj,
                            Direction dir = Direction::Lax);
// Builds a strict functor from plain cell maps (structural cells become the
// appropriate identities).
LaxFunctor make_strict(const TwoCatPtr& src, const TwoCatPtr& tgt, std::vector<int> ob_map,
                       std::vector<int> one_map, std::vector<int> two_map,
                       Direction dir = Direction::Lax);

bool is_strict(const LaxFunctor& u);
bool is_pseudo(const LaxFunctor& u);      // structural cells invertible
bool is_normalized(const LaxFunctor& u);  // units and unit-adjacent comps identities

// Coherence scan: functoriality on 2-cells, naturality of the structural
// composition cells, cocycle on all composable triples, unit constraints.
ValidationReport validate_functor(const LaxFunctor& u);

// Composite v.u with the structural cells
//   (vu)_{f',f} = v(u_{f',f}) *1 v_{u(f'),u(f)},  (vu)_a = v(u_a) *1 v_{u(a)}.
LaxFunctor compose_functors(const LaxFunctor& v, const LaxFunctor& u);

// Kind-dependent reorientation; co and coop exchange lax and colax.
LaxFunctor dual_functor(const LaxFunctor& u, DualKind kind);

bool equal_functor(const LaxFunctor& u, const LaxFunctor& v);

enum class TransKind { Lax, Colax, Strict };

// Component 1-cells and comparison 2-cells of a transformation. For lax
// source/target functors the boundary of comp_one(f : a -> a') is
//   lax kind:    sigma_{a'} u(f) => v(f) sigma_a
//   colax kind:  v(f) sigma_a => sigma_{a'} u(f);
// between colax functors the same orientations are kept and the coherence
// conditions are taken through the dual identifications.
struct Transformation {
  TransKind kind = TransKind::Strict;
  LaxFunctor from, to;        // parallel functors, same direction tag
  std::vector<int> comp_obj;  // per source object: 1-cell of the target 2-cat
  std::vector<int> comp_one;  // per source 1-cell: 2-cell of the target 2-cat
};

Transformation identity_transformation(const LaxFunctor& u);
bool is_strict_transformation(const Transformation& s);
bool relative_to_objects(const Transformation& s);

ValidationReport validate_transformation(const Transformation& s);

// Remark-level dualities: op sends a lax transformation u => v to a colax
// transformation v^op => u^op with the same components; co/coop exchange
// the functor direction tags through the dual identifications.
Transformation dual_transformation(const Transformation& s, DualKind kind);

// Vertical/horizontal composites, defined for strict transformations
// between strict functors.
Transformation compose_transformations_v(const Transformation& t, const Transformation& s);
Transformation compose_transformations_h(const Transformation& sp, const Transformation& s);

bool equal_transformation(const Transformation& a, const Transformation& b);

// Modification between parallel transformations: per-object 2-cells
// Gamma_a : sigma_a => tau_a subject to the exchange equation.
struct Modification {
  Transformation from, to;
  std::vector<int> comp;  // per source object: 2-cell of the target 2-cat
};

ValidationReport validate_modification(const Modification& m);

// Turns a lax or colax transformation u => v into a lax functor
// h : [1] x A -> B restricting to u and v on the two ends.
struct Homotopy {
  TwoCatPtr cylinder;  // product(ordinal(1), A)
  LaxFunctor h;
};
Homotopy homotopy_from_transformation(const Transformation& s);

// The generalized structural cell u_x : u(x_n)...u(x_1) => u(x_n...x_1) of a
// chain of composable 1-cells (source-first); n = 0 takes an object and
// yields the unit cell.
int structural_cell_chain(const LaxFunctor& u, const std::vector<int>& chain,
                          int obj_if_empty);

}  // namespace twocat
