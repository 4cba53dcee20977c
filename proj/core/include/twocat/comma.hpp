#pragma once

#include "twocat/functor.hpp"

namespace twocat {

// Comma 2-category [u,v] of a lax functor u : A -> C by a colax functor
// v : B -> C, with its two canonical projections and the canonical colax
// transformation u.p => v.q.
struct CommaResult {
  TwoCatPtr comma;
  LaxFunctor proj_src;  // strict, to A
  LaxFunctor proj_tgt;  // strict, to B
  // per comma object: the 1-cell r; per comma 1-cell: the 2-cell alpha
  std::vector<int> obj_r;
  std::vector<int> one_alpha;
};

CommaResult comma(const LaxFunctor& u, const LaxFunctor& v);

enum class SliceVariant { LaxOver, LaxUnder, ColaxOver, ColaxUnder };

// Slice 2-category of the source of u over/under the object b; lax_over is
// the comma [u,b], the other variants are its duality conjugates.
struct SliceResult {
  TwoCatPtr slice;
  // components of every slice cell, in terms of the source/target data
  std::vector<int> obj_a, obj_p;    // object (a, p)
  std::vector<int> one_f, one_al;   // 1-cell (f, alpha)
  std::vector<int> two_beta;        // 2-cell beta
  LaxFunctor proj;                  // strict projection to A
};

SliceResult slice(const LaxFunctor& u, int b, SliceVariant variant);

// Strict functor [sigma,v] : [u',v] -> [u,v] induced by a colax
// transformation sigma : u => u'.
LaxFunctor induced_comma_morphism(const Transformation& sigma, const LaxFunctor& v);

// The lax (resp. colax) functor between slices induced by a triangle
// v.u => w (orientations per variant); strict when u is strict.
LaxFunctor induced_slice_morphism(const LaxFunctor& u, const LaxFunctor& v,
                                  const LaxFunctor& w, const Transformation& sigma, int c,
                                  SliceVariant variant);

// Fiber of a strict functor over an object of its target.
struct FiberResult {
  TwoCatPtr fiber;
  std::vector<int> obj_of, one_of, two_of;  // inclusions into the source cells
};
FiberResult fiber(const LaxFunctor& u, int b);

// Canonical inclusion J_b : fiber -> slice(u, b, variant), a ↦ (a, 1_b).
LaxFunctor fiber_inclusion(const LaxFunctor& u, int b, SliceVariant variant,
                           const FiberResult& fib, const SliceResult& sl);

// Witness for "z admits a final object": the chosen final 1-cell p_a of
// Hom(a, z) for every object a, plus the unique 2-cells into it.
struct FinalObjectWitness {
  int z = -1;
  std::vector<int> final_one;                 // per object a: p_a : a -> z
  std::unordered_map<int, int> unique_two;    // per 1-cell f : a -> z: phi_f : f => p_a
};

// Final object of the hom-category Hom(a, z); ties broken by cell order.
std::optional<int> hom_final_object(const TwoCat& A, int a, int z);
std::optional<int> hom_initial_object(const TwoCat& A, int a, int z);

std::optional<FinalObjectWitness> has_object_admitting_final(const TwoCat& A);
std::optional<FinalObjectWitness> has_object_admitting_initial(const TwoCat& A);
// op-variants: the property for the 1-opposite ("op-admits").
std::optional<FinalObjectWitness> op_admits_object_admitting_final(const TwoCat& A);
std::optional<FinalObjectWitness> op_admits_object_admitting_initial(const TwoCat& A);

// The transformation from the identity to the constant endofunctor at the
// witness object, with components the chosen final 1-cells; lax per the
// orientation of the unique comparison 2-cells.
Transformation transformation_to_constant_final(const TwoCatPtr& a,
                                                const FinalObjectWitness& w);

enum class Side { Left, Right };

struct PreadjointVerdict {
  bool holds = false;
  // per target object b: the distinguished slice object index (or -1)
  std::vector<int> witness_object;
  std::string failure;  // first failing b, for diagnostics
};

// Per-object-of-the-target witness scan per the four dual flavours.
PreadjointVerdict is_preadjoint(const LaxFunctor& u, Side side, Direction flavor);

enum class FibrationVariant { Pre, PreOp, PreCo, PreCoop };

struct PrefibrationVerdict {
  bool holds = false;
  std::string failure;
};

PrefibrationVerdict is_prefibration(const LaxFunctor& u, FibrationVariant variant);

// Lax-colax adjunction data (u lax, v colax, unit/counit-like families).
struct LaxColaxAdjunction {
  LaxFunctor u;  // lax,   A -> B
  LaxFunctor v;  // colax, B -> A
  std::vector<int> p_obj;               // per b: p_b : u(v(b)) -> b
  std::vector<int> p_one;               // per g: p_g : g p_b => p_{b'} u(v(g))
  std::vector<int> q_obj;               // per a: q_a : a -> v(u(a))
  std::vector<int> q_one;               // per f: q_f : v(u(f)) q_a => q_{a'} f
  std::vector<int> sigma;               // per a: 1_{u(a)} => p_{u(a)} u(q_a)
  std::vector<int> tau;                 // per b: v(p_b) q_{v(b)} => 1_{v(b)}
};

// Scans the ten coherence families ALC1..ALC10.
ValidationReport validate_lax_colax_adjunction(const LaxColaxAdjunction& d);

}  // namespace twocat
