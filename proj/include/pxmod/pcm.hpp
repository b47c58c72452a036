#ifndef PXMOD_PCM_HPP
#define PXMOD_PCM_HPP

#include "pxmod/action.hpp"

#include <string>
#include <vector>

namespace pxmod {

/// Verdict of a crossed-module check; witness names the violating pair when
/// crossed is false.
struct CrossedCheck {
  bool crossed = false;
  std::string witness;
};

// ---------------------------------------------------------------- groups --

/// A pre-crossed module over a group B: delta: X -> B equivariant over
/// conjugation, xi an action of B on X.
struct GroupPcm {
  std::string name;
  GroupRef x;
  GroupRef b;
  GroupMorphism delta;
  GroupAction xi;
};

using GroupPcmRef = std::shared_ptr<const GroupPcm>;

/// Checks delta and xi and the pre-crossed condition
/// delta(b.x) = b delta(x) b^-1; throws with the violating pair.
GroupPcmRef pcm_validate(const GroupRef& x, const GroupRef& b, const GroupMorphism& delta,
                         const GroupAction& xi, const std::string& name = "");

/// The identity crossed module (1_B, conjugation).
GroupPcmRef identity_pcm(const GroupRef& b);

/// delta = trivial, action trivial.
GroupPcmRef trivial_pcm(const GroupRef& x, const GroupRef& b);

/// Peiffer identity delta(x).x' = x x' x^-1 on all pairs.
CrossedCheck is_crossed(const GroupPcm& p);

struct GroupPXMorphism {
  GroupPcmRef source;
  GroupPcmRef target;
  GroupMorphism f;
};

/// Checks same base, over-B (delta' f = delta) and equivariance
/// (f(b.x) = b.f(x)); the error message distinguishes the two.
GroupPXMorphism px_morphism_validate(const GroupPcmRef& src, const GroupPcmRef& tgt,
                                     const std::vector<Elt>& map);

GroupPXMorphism px_compose(const GroupPXMorphism& g, const GroupPXMorphism& f);
GroupPXMorphism px_identity(const GroupPcmRef& p);

/// All pre-crossed module morphisms src -> tgt (hom enumeration + filter).
std::vector<GroupPXMorphism> all_px_morphisms(const GroupPcmRef& src, const GroupPcmRef& tgt);

/// A sub-pre-crossed module: subgroup of the ambient carrier, stable under
/// the B-action (so delta restricts).
struct GroupSubPcm {
  GroupPcmRef ambient;
  EltSet elems;
};

GroupSubPcm sub_pcm_validate(const GroupPcmRef& ambient, const EltSet& elems);

/// Closure of a generating set to a sub-pre-crossed module: subgroup
/// generation and B-stabilization, iterated to a fixed point.
GroupSubPcm sub_pcm_generate(const GroupPcmRef& ambient, const EltSet& gens);

GroupSubPcm whole_sub_pcm(const GroupPcmRef& ambient);
bool sub_pcm_is_b_stable(const GroupPcm& p, const EltSet& elems);

/// A SubPCM extracted as a pre-crossed module with its inclusion.
struct GroupSubAsPcm {
  GroupPcmRef pcm;
  GroupPXMorphism inclusion;
  SubgroupGroup carrier;
};

GroupSubAsPcm sub_as_pcm(const GroupSubPcm& s, const std::string& name = "");

GroupSubPcm px_kernel(const GroupPXMorphism& f);
GroupSubPcm px_image(const GroupPXMorphism& f);

/// (regular epi, mono) factorization through the image.
struct GroupFactorization {
  GroupPcmRef image;
  GroupPXMorphism epi;   // source ->> image
  GroupPXMorphism mono;  // image >-> target
};

GroupFactorization px_factorize(const GroupPXMorphism& f);

struct GroupPullback {
  GroupPcmRef pcm;       // carrier {(x,y) : f(x) = g(y)}
  GroupPXMorphism proj1;
  GroupPXMorphism proj2;
  std::vector<std::pair<Elt, Elt>> pairs;  // carrier index -> (x, y)
};

GroupPullback px_pullback(const GroupPXMorphism& f, const GroupPXMorphism& g);

/// Join of two sub-pre-crossed modules of the same ambient object.
GroupSubPcm px_join(const GroupSubPcm& a, const GroupSubPcm& b);

/// Quotient by a normal, delta-vanishing, B-stable SubPCM; the induced
/// action is computed on coset representatives and verified well defined.
struct GroupCokernel {
  GroupPcmRef pcm;
  GroupPXMorphism projection;
  std::vector<Elt> reps;  // section: quotient element -> ambient representative
};

GroupCokernel px_cokernel_of_kernel(const GroupSubPcm& k);

// -------------------------------------------------------------- algebras --

struct AlgebraPcm {
  std::string name;
  AlgebraRef x;
  AlgebraRef b;
  LinearMap delta;
  AlgebraAction xi;
};

using AlgebraPcmRef = std::shared_ptr<const AlgebraPcm>;

/// Pre-crossed condition: delta(b.a) = b delta(a) and delta(a.b) = delta(a) b
/// (products resp. brackets in B), on all basis pairs.
AlgebraPcmRef pcm_validate(const AlgebraRef& x, const AlgebraRef& b, const LinearMap& delta,
                           const AlgebraAction& xi, const std::string& name = "");

AlgebraPcmRef identity_pcm(const AlgebraRef& b);
AlgebraPcmRef trivial_pcm(const AlgebraRef& x, const AlgebraRef& b);

/// delta(a).a' = aa' and a.delta(a') = aa' on basis pairs.
CrossedCheck is_crossed(const AlgebraPcm& p);

struct AlgebraPXMorphism {
  AlgebraPcmRef source;
  AlgebraPcmRef target;
  LinearMap f;
};

AlgebraPXMorphism px_morphism_validate(const AlgebraPcmRef& src, const AlgebraPcmRef& tgt,
                                       const Mat& matrix);

AlgebraPXMorphism px_compose(const AlgebraPXMorphism& g, const AlgebraPXMorphism& f);
AlgebraPXMorphism px_identity(const AlgebraPcmRef& p);

/// All pre-crossed module morphisms src -> tgt over a prime field.
std::vector<AlgebraPXMorphism> all_px_morphisms(const AlgebraPcmRef& src,
                                                const AlgebraPcmRef& tgt);

struct AlgebraSubPcm {
  AlgebraPcmRef ambient;
  Subspace space;
};

AlgebraSubPcm sub_pcm_validate(const AlgebraPcmRef& ambient, const Subspace& space);
AlgebraSubPcm sub_pcm_generate(const AlgebraPcmRef& ambient, const Mat& gens);
AlgebraSubPcm whole_sub_pcm(const AlgebraPcmRef& ambient);
bool sub_pcm_is_b_stable(const AlgebraPcm& p, const Subspace& space);

struct AlgebraSubAsPcm {
  AlgebraPcmRef pcm;
  AlgebraPXMorphism inclusion;
  SubalgebraAlgebra carrier;
};

AlgebraSubAsPcm sub_as_pcm(const AlgebraSubPcm& s, const std::string& name = "");

AlgebraSubPcm px_kernel(const AlgebraPXMorphism& f);
AlgebraSubPcm px_image(const AlgebraPXMorphism& f);

struct AlgebraFactorization {
  AlgebraPcmRef image;
  AlgebraPXMorphism epi;
  AlgebraPXMorphism mono;
};

AlgebraFactorization px_factorize(const AlgebraPXMorphism& f);

struct AlgebraPullback {
  AlgebraPcmRef pcm;
  AlgebraPXMorphism proj1;
  AlgebraPXMorphism proj2;
  Mat carrier_basis;  // rows in X (+) Y coordinates
};

AlgebraPullback px_pullback(const AlgebraPXMorphism& f, const AlgebraPXMorphism& g);

AlgebraSubPcm px_join(const AlgebraSubPcm& a, const AlgebraSubPcm& b);

struct AlgebraCokernel {
  AlgebraPcmRef pcm;
  AlgebraPXMorphism projection;
  std::vector<std::size_t> rep_coords;  // quotient basis j <- ambient basis index
};

AlgebraCokernel px_cokernel_of_kernel(const AlgebraSubPcm& k);

}  // namespace pxmod

#endif
