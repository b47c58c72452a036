#ifndef PXMOD_GROUP_HPP
#define PXMOD_GROUP_HPP

#include "pxmod/field.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pxmod {

/// Global size guards; closure loops and product constructions abort with a
/// ValidationError past these caps.
struct Caps {
  std::size_t max_group_order = 64;
  std::size_t max_algebra_dim = 12;
};

Caps& caps();

using Elt = int;
using EltSet = std::vector<Elt>;  // sorted, canonical

/// A finite group given by its multiplication table. Element 0 is the
/// identity by convention.
struct FiniteGroup {
  std::string name;
  std::size_t order = 0;
  std::vector<std::vector<Elt>> mult;
  std::vector<Elt> inv;

  Elt op(Elt a, Elt b) const { return mult[a][b]; }
  Elt inverse(Elt a) const { return inv[a]; }
  Elt conj(Elt g, Elt x) const { return op(op(g, x), inv[g]); }
  bool is_abelian() const;
  int elt_order(Elt a) const;
  bool operator==(const FiniteGroup& o) const { return order == o.order && mult == o.mult; }
};

/// Shared immutable reference; every constructed object lives behind one so
/// morphisms and actions can point at their endpoints safely.
using GroupRef = std::shared_ptr<const FiniteGroup>;

/// Validates a multiplication table (associativity, two-sided identity at
/// index 0, inverses) and builds the group. Throws ValidationError naming
/// the first violated axiom.
GroupRef group_validate(const std::vector<std::vector<Elt>>& table,
                        const std::string& name = "");

struct GroupMorphism {
  GroupRef source;
  GroupRef target;
  std::vector<Elt> map;

  Elt operator()(Elt x) const { return map[x]; }
  bool is_injective() const;
  bool is_surjective() const;
};

/// Checks map(xy) = map(x)map(y) on all pairs and map(1) = 1.
GroupMorphism morphism_validate(const GroupRef& src, const GroupRef& tgt,
                                const std::vector<Elt>& map);

GroupMorphism compose(const GroupMorphism& g, const GroupMorphism& f);  // g after f
GroupMorphism identity_morphism(const GroupRef& g);

/// Smallest subgroup containing gens.
EltSet subgroup_generate(const FiniteGroup& g, const EltSet& gens);

/// Smallest normal subgroup containing s.
EltSet normal_closure(const FiniteGroup& g, const EltSet& s);

bool is_subgroup(const FiniteGroup& g, const EltSet& s);
bool is_normal(const FiniteGroup& g, const EltSet& s);

EltSet kernel(const GroupMorphism& f);
EltSet image(const GroupMorphism& f);

/// A subgroup extracted as a group in its own right, with the index
/// translation back and forth. Elements of the subgroup are relabelled
/// 0..k-1 in increasing ambient order (the identity stays at 0).
struct SubgroupGroup {
  GroupRef group;
  EltSet elements;               // ambient indices, sorted
  std::vector<Elt> to_sub;       // ambient index -> sub index, -1 if absent
};

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const EltSet& s,
                                const std::string& name = "");

/// Quotient by a normal subgroup. Coset representatives are the minimal
/// ambient indices, sorted, so the identity coset is index 0.
struct QuotientGroup {
  GroupRef group;
  GroupMorphism projection;      // ambient -> quotient
  std::vector<Elt> reps;         // quotient index -> ambient representative
};

QuotientGroup quotient_group(const GroupRef& g, const EltSet& normal_sub);

/// All homomorphisms src -> tgt, found by backtracking over the images of a
/// generating sequence. Intended for desk-scale orders only.
std::vector<GroupMorphism> all_morphisms(const GroupRef& src, const GroupRef& tgt);

/// Automorphisms of g, as bijective morphisms g -> g.
std::vector<GroupMorphism> automorphisms(const GroupRef& g);

/// An isomorphism src -> tgt if one exists (backtracking search).
std::optional<GroupMorphism> find_isomorphism(const GroupRef& src, const GroupRef& tgt);

/// A short generating sequence (greedy).
EltSet generating_set(const FiniteGroup& g);

/// Direct product X x Y with x-major pair encoding (x,y) -> x*|Y|+y.
GroupRef direct_product(const FiniteGroup& x, const FiniteGroup& y);

}  // namespace pxmod

#endif
