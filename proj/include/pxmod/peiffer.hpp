#ifndef PXMOD_PEIFFER_HPP
#define PXMOD_PEIFFER_HPP

#include "pxmod/pcm.hpp"

#include <optional>
#include <stdexcept>

namespace pxmod {

/// A verified internal postcondition failed. Unlike ValidationError (bad
/// input), this means a construction produced something the theory forbids;
/// it should be surfaced as a discrepancy, never swallowed.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- groups --

/// One Peiffer word with its generating pair. swapped = false is the
/// x-first orientation x y x^-1 (^{delta x} y)^-1.
struct GroupPeifferWord {
  Elt word;
  Elt x;
  Elt y;
  bool swapped;
};

struct GroupPeifferWordSet {
  GroupPcmRef ambient;
  std::vector<GroupPeifferWord> words;
};

/// Words over all element pairs of two sub-pre-crossed modules of the same
/// ambient object; every word is checked to map to the identity under delta.
GroupPeifferWordSet peiffer_words(const GroupSubPcm& x, const GroupSubPcm& y);

/// <X,Y>: normal closure of the Peiffer words inside the join X v Y,
/// B-stabilized. delta vanishes on the result (checked).
GroupSubPcm peiffer_commutator(const GroupSubPcm& x, const GroupSubPcm& y);

/// X |x| Y, computed as a quotient of the semidirect product X x| Y by the
/// closure of the relations making the X-on-Y action a conjugation.
struct GroupPeifferProduct {
  GroupPcmRef pcm;            // the product, a pre-crossed module over B
  GroupPXMorphism lx;         // X -> product
  GroupPXMorphism ly;         // Y -> product
  GroupPcmRef sem;            // the intermediate semidirect pre-crossed module
  SemidirectGroup sem_data;
  GroupSubPcm relations;      // the quotiented subobject of sem
  GroupPXMorphism proj;       // sem ->> product
  std::vector<Elt> reps;      // section of proj
};

/// Postconditions verified: result is a valid pcm over B, both pulled-back
/// actions are realized by conjugation in it, and the images of lx, ly
/// jointly generate it.
GroupPeifferProduct peiffer_product(const GroupPcmRef& xp, const GroupPcmRef& yp);

/// Mediator out of a Peiffer product, or the obstruction <f(X), g(Y)> != 0.
struct GroupInduced {
  std::optional<GroupPXMorphism> phi;
  std::optional<GroupSubPcm> obstruction;
};

GroupInduced induced_morphism(const GroupPeifferProduct& p, const GroupPXMorphism& f,
                              const GroupPXMorphism& g);

/// The unit of the reflection onto crossed modules: quotient by <X,X>.
struct GroupReflection {
  GroupPcmRef pcm;       // crossed (checked)
  GroupPXMorphism eta;   // source ->> pcm
  std::vector<Elt> reps;
};

GroupReflection reflect(const GroupPcmRef& p);

/// Factorization of f through the reflection of its source; f must kill
/// <X,X> (automatic when the target is crossed).
GroupPXMorphism reflect_induced(const GroupReflection& r, const GroupPXMorphism& f);

/// Coproduct in the crossed modules over B: the Peiffer product of two
/// crossed factors, asserted crossed.
GroupPeifferProduct coproduct_xmod(const GroupPcmRef& xc, const GroupPcmRef& yc);

/// Isomorphism over B between X |x| Y and Y |x| X: the canonical mediator
/// (x,y) -> l'_X(x) l'_Y(y), verified bijective.
std::optional<GroupPXMorphism> symmetric_product_isomorphism(const GroupPeifferProduct& pxy,
                                                             const GroupPeifferProduct& pyx);

// -------------------------------------------------------------- algebras --

/// orientation 0: xy - delta(x).y   1: xy - x.delta(y)
///             2: yx - delta(y).x   3: yx - y.delta(x)
struct AlgebraPeifferWord {
  Vec word;  // ambient coordinates
  std::size_t x;
  std::size_t y;  // basis indices into the two subspaces
  int orientation;
};

struct AlgebraPeifferWordSet {
  AlgebraPcmRef ambient;
  std::vector<AlgebraPeifferWord> words;
};

AlgebraPeifferWordSet peiffer_words(const AlgebraSubPcm& x, const AlgebraSubPcm& y);

/// <X,Y>: two-sided ideal closure of the words inside the join, B-stabilized.
AlgebraSubPcm peiffer_commutator(const AlgebraSubPcm& x, const AlgebraSubPcm& y);

struct AlgebraPeifferProduct {
  AlgebraPcmRef pcm;
  AlgebraPXMorphism lx;
  AlgebraPXMorphism ly;
  AlgebraPcmRef sem;
  SemidirectAlgebra sem_data;
  AlgebraSubPcm relations;
  AlgebraPXMorphism proj;
  std::vector<std::size_t> rep_coords;
};

AlgebraPeifferProduct peiffer_product(const AlgebraPcmRef& xp, const AlgebraPcmRef& yp);

struct AlgebraInduced {
  std::optional<AlgebraPXMorphism> phi;
  std::optional<AlgebraSubPcm> obstruction;
};

AlgebraInduced induced_morphism(const AlgebraPeifferProduct& p, const AlgebraPXMorphism& f,
                                const AlgebraPXMorphism& g);

struct AlgebraReflection {
  AlgebraPcmRef pcm;
  AlgebraPXMorphism eta;
  std::vector<std::size_t> rep_coords;
};

AlgebraReflection reflect(const AlgebraPcmRef& p);

AlgebraPXMorphism reflect_induced(const AlgebraReflection& r, const AlgebraPXMorphism& f);

AlgebraPeifferProduct coproduct_xmod(const AlgebraPcmRef& xc, const AlgebraPcmRef& yc);

std::optional<AlgebraPXMorphism> symmetric_product_isomorphism(const AlgebraPeifferProduct& pxy,
                                                               const AlgebraPeifferProduct& pyx);

}  // namespace pxmod

#endif
