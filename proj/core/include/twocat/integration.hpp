#pragma once

#include "twocat/comma.hpp"

namespace twocat {

enum class Variance { Cov, Op, Co, Coop };

// A strict 2Cat-valued 2-functor on base (or on one of its duals, per the
// variance tag). Values are indexed by the cells of `base`; for op/coop the
// 1-cell actions run backwards, for co/coop the 2-cell actions do.
struct Diagram {
  TwoCatPtr base;
  Variance variance = Variance::Cov;
  std::vector<TwoCatPtr> ob_val;        // per base object
  std::vector<LaxFunctor> one_val;      // per base 1-cell, strict
  std::vector<Transformation> two_val;  // per base 2-cell, strict
};

// Strict 2-functoriality scan: one_val respects comp1/id1 exactly, two_val
// respects vcomp/hcomp/id2 exactly, all values validate.
ValidationReport validate_diagram(const Diagram& d);

Diagram constant_diagram(const TwoCatPtr& base, const TwoCatPtr& value,
                         Variance variance = Variance::Cov);

enum class IntegralFlavor { Primary, DualOp, DualCo, DualCoop };

struct IntegralResult {
  TwoCatPtr total;
  LaxFunctor projection;  // strict, onto (a rebuild of) the base of interest
  // cell decompositions of the total 2-category
  std::vector<int> obj_a, obj_x;           // object (a, x)
  std::vector<int> one_f, one_r;           // 1-cell (f, r)
  std::vector<int> two_g, two_phi;         // 2-cell (gamma, phi)
};

// The Grothendieck integral of F; the variance tag of F selects the primary
// variant, built by duality conjugation of the covariant core. The flavor
// argument additionally produces the op/co/coop companions of the total.
IntegralResult integrate(const Diagram& f, IntegralFlavor flavor = IntegralFlavor::Primary);

// Strict morphism of diagrams over a common base: per-object strict functors
// commuting with the one_val/two_val actions on the nose.
struct DiagramMorphism {
  std::vector<LaxFunctor> comp;  // per base object
};

ValidationReport validate_diagram_morphism(const Diagram& from, const Diagram& to,
                                           const DiagramMorphism& m);

// The strict functor between totals, (a,x) -> (a, sigma_a(x)); commutes with
// the projections.
LaxFunctor integrate_transformation(const Diagram& from, const Diagram& to,
                                    const DiagramMorphism& m, const IntegralResult& ifrom,
                                    const IntegralResult& ito);

// The canonical retraction pair over an object of the base.
struct JKResult {
  FiberResult fib;       // fiber of the projection over a
  SliceResult sl;        // the variant slice of the projection at a
  LaxFunctor j;          // strict inclusion fiber -> slice
  LaxFunctor k;          // strict retraction slice -> fiber
  Transformation unit;   // canonical comparison between 1 and j.k; its kind
                         // and direction follow the variance
  LaxColaxAdjunction adj;  // (K,J) packaged for the ALC validator, always in
                           // the covariant core world
};

// The covariant case is built directly (lax over-slice); the op/co/coop
// variances conjugate it, giving the colax-under / colax-over / lax-under
// slices with the comparison transformation of the matching kind.
JKResult jk_pair(const Diagram& f, const IntegralResult& integral, int a);

// Twisted cylinders.
struct CylinderResult {
  TwoCatPtr cyl;
  LaxFunctor s;  // to the op (S1) / co (S2) dual of A
  LaxFunctor t;  // to A
  std::vector<int> obj_k;                    // object = 1-cell k of A
  std::vector<int> one_f, one_g, one_al;     // 1-cell (f,g,alpha)
  std::vector<int> two_phi, two_gam;         // 2-cell (phi,gamma)
};

CylinderResult cylinder_s1(const TwoCatPtr& a);
CylinderResult cylinder_s2(const TwoCatPtr& a);

// S_i(u) on strict functors: the square with s_i and t_i commutes.
LaxFunctor cylinder_s1_map(const CylinderResult& ca, const CylinderResult& cb,
                           const LaxFunctor& u);
LaxFunctor cylinder_s2_map(const CylinderResult& ca, const CylinderResult& cb,
                           const LaxFunctor& u);

// The two integral presentations of S1 (resp. S2) together with the canonical
// mutually inverse strict functors.
struct CylinderIntegralCheck {
  IntegralResult integral;
  LaxFunctor to_integral, from_integral;
};
CylinderIntegralCheck cylinder_s1_integral_src(const TwoCatPtr& a, const CylinderResult& c);
CylinderIntegralCheck cylinder_s1_integral_tgt(const TwoCatPtr& a, const CylinderResult& c);
CylinderIntegralCheck cylinder_s2_integral_src(const TwoCatPtr& a, const CylinderResult& c);
CylinderIntegralCheck cylinder_s2_integral_tgt(const TwoCatPtr& a, const CylinderResult& c);

// Cylinder of a strict functor u : A -> B, with projections onto B^op and A.
struct MorphismCylinder {
  TwoCatPtr cyl;
  LaxFunctor s;  // to B^op
  LaxFunctor t;  // to A
  std::vector<int> obj_b, obj_a, obj_k;
  std::vector<int> one_f, one_g, one_al;
  std::vector<int> two_phi, two_gam;
};

MorphismCylinder cylinder_of_morphism(const LaxFunctor& u);

// S(v,w) for a commuting square w.u = u'.v.
LaxFunctor cylinder_morphism_map(const MorphismCylinder& cu, const MorphismCylinder& cup,
                                 const LaxFunctor& v, const LaxFunctor& w);

}  // namespace twocat
