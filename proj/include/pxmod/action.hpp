#ifndef PXMOD_ACTION_HPP
#define PXMOD_ACTION_HPP

#include "pxmod/algebra.hpp"
#include "pxmod/group.hpp"

namespace pxmod {

// ---------------------------------------------------------------- groups --

/// A left action of acting on acted: table[b][x] is the index of b.x.
struct GroupAction {
  GroupRef acting;  // B
  GroupRef acted;   // X
  std::vector<std::vector<Elt>> table;

  Elt act(Elt b, Elt x) const { return table[b][x]; }
  bool is_trivial() const;
};

/// Checks 1.x = x, b.(xx') = (b.x)(b.x'), b.(b'.x) = (bb').x.
/// Throws ValidationError naming the violated identity and witness.
GroupAction action_validate(const GroupRef& acting, const GroupRef& acted,
                            const std::vector<std::vector<Elt>>& table);

GroupAction trivial_action(const GroupRef& acting, const GroupRef& acted);

/// Composite action (a,x) -> f(a).x along f: A -> B.
GroupAction pullback_action(const GroupMorphism& f, const GroupAction& xi);

/// Conjugation action of g on a normal subgroup (as its own group).
struct ConjugationAction {
  SubgroupGroup sub;
  GroupAction action;  // g acting on sub.group
};

ConjugationAction conjugation_action(const GroupRef& g, const EltSet& normal_sub);

/// Conjugation of g on itself.
GroupAction self_conjugation(const GroupRef& g);

/// Semidirect product X x| Y for an action of Y on X, with pair encoding
/// (x,y) -> x*|Y| + y and product (x,y)(x',y') = (x . (y.x'), yy').
struct SemidirectGroup {
  GroupRef group;
  GroupMorphism inj_x;   // j: X -> X x| Y, kernel embedding of proj
  GroupMorphism inj_y;   // i: Y -> X x| Y, section of proj
  GroupMorphism proj_y;  // p: X x| Y -> Y
  GroupAction action;    // the acting data used

  Elt encode(Elt x, Elt y) const;
  std::pair<Elt, Elt> decode(Elt e) const;
};

SemidirectGroup semidirect(const GroupRef& x, const GroupRef& y, const GroupAction& y_on_x);

// -------------------------------------------------------------- algebras --

/// A pair of bilinear tensors: lambda[b][x] = b.x and rho[x][b] = x.b,
/// coordinates in the acted algebra.
struct AlgebraAction {
  AlgebraRef acting;  // B
  AlgebraRef acted;   // X
  std::vector<Mat> lambda;  // dim B x dim X x dim X
  std::vector<Mat> rho;     // dim X x dim B x dim X

  Vec act_left(const Vec& b, const Vec& x) const;   // b . x
  Vec act_right(const Vec& x, const Vec& b) const;  // x . b
  bool is_trivial() const;
};

/// Checks the six action identities of the variety on all basis triples.
AlgebraAction action_validate(const AlgebraRef& acting, const AlgebraRef& acted,
                              const std::vector<Mat>& lambda, const std::vector<Mat>& rho);

AlgebraAction trivial_action(const AlgebraRef& acting, const AlgebraRef& acted);

AlgebraAction pullback_action(const LinearMap& f, const AlgebraAction& xi);

/// Multiplication action of a on a two-sided ideal (as its own algebra).
struct IdealAction {
  SubalgebraAlgebra sub;
  AlgebraAction action;
};

IdealAction conjugation_action(const AlgebraRef& a, const Subspace& ideal);

/// Multiplication of a on itself.
AlgebraAction self_conjugation(const AlgebraRef& a);

/// Semidirect sum X (+) Y with block basis (X first) and product
/// (x,y)(x',y') = (xx' + y.x' + x.y', yy').
struct SemidirectAlgebra {
  AlgebraRef algebra;
  LinearMap inj_x;
  LinearMap inj_y;
  LinearMap proj_y;
  AlgebraAction action;

  Vec encode(const Vec& x, const Vec& y) const;
  std::pair<Vec, Vec> decode(const Vec& v) const;
};

SemidirectAlgebra semidirect(const AlgebraRef& x, const AlgebraRef& y,
                             const AlgebraAction& y_on_x);

}  // namespace pxmod

#endif
