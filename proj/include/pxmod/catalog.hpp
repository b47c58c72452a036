#ifndef PXMOD_CATALOG_HPP
#define PXMOD_CATALOG_HPP

#include "pxmod/pcm.hpp"

#include <cstdint>

namespace pxmod {

/// Deterministic, platform-independent generator (splitmix64).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  /// Uniform-ish draw in [0, n).
  std::size_t below(std::size_t n);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
};

/// Curated base objects. All entries validate; names are stable identifiers.
std::vector<GroupRef> catalog_groups(std::size_t max_order);
std::vector<AlgebraRef> catalog_algebras(std::size_t max_dim);

/// Curated pre-crossed modules (a mix of crossed and properly pre-crossed).
std::vector<GroupPcmRef> catalog_group_pcms(std::size_t max_order);
std::vector<AlgebraPcmRef> catalog_algebra_pcms(std::size_t max_dim);

/// Crossed modules over the given base, for use as probe targets.
std::vector<GroupPcmRef> catalog_group_crossed(const GroupRef& b, std::size_t max_order);
std::vector<AlgebraPcmRef> catalog_algebra_crossed(const AlgebraRef& b, std::size_t max_dim);

/// Exhaustively generated valid instances over catalog carriers: actions are
/// enumerated as homomorphisms into the automorphism group, deltas filtered
/// by the equivariance condition. Deterministic order.
std::vector<GroupPcmRef> generate_group_pcms(std::size_t max_order, std::size_t budget);

/// Algebra instances over prime fields: small action tensors by exhaustive
/// search, larger ones from structured families (trivial, multiplication
/// pulled back along a multiplicative map, ideal inclusions). Every emitted
/// instance has passed validation.
std::vector<AlgebraPcmRef> generate_algebra_pcms(std::size_t max_dim, std::size_t budget);

/// Seeded random sample (without replacement, then cycling) of size count.
std::vector<GroupPcmRef> random_group_pcms(std::uint64_t seed, std::size_t count,
                                           std::size_t max_order);
std::vector<AlgebraPcmRef> random_algebra_pcms(std::uint64_t seed, std::size_t count,
                                               std::size_t max_dim);

/// The automorphisms of g as a group (identity at index 0) together with the
/// realizing maps, in table order.
struct AutomorphismGroup {
  GroupRef group;
  std::vector<GroupMorphism> elements;
};

AutomorphismGroup automorphism_group(const GroupRef& g);

}  // namespace pxmod

#endif
