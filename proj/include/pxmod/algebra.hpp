#ifndef PXMOD_ALGEBRA_HPP
#define PXMOD_ALGEBRA_HPP

#include "pxmod/field.hpp"
#include "pxmod/group.hpp"  // Caps

#include <memory>
#include <string>
#include <vector>

namespace pxmod {

enum class AlgVariety { Associative, Leibniz };

/// Finite-dimensional algebra given by structure constants over an exact
/// field: e_i e_j = sum_k c[i][j][k] e_k. For the Leibniz variety the
/// product is the bracket and the right Leibniz identity is enforced;
/// lie additionally requires antisymmetry (and alternation, so that the
/// Lie axioms survive characteristic 2).
struct StructAlgebra {
  std::string name;
  Field field;
  std::size_t dim = 0;
  AlgVariety variety = AlgVariety::Associative;
  bool lie = false;
  std::vector<Mat> c;  // c[i][j] is the coordinate vector of e_i e_j

  Vec mul(const Vec& a, const Vec& b) const;
  Vec basis_vec(std::size_t i) const;
  bool operator==(const StructAlgebra& o) const {
    return field == o.field && dim == o.dim && variety == o.variety && c == o.c;
  }
};

using AlgebraRef = std::shared_ptr<const StructAlgebra>;

/// Validates the variety identities on all basis triples and builds the
/// algebra. Throws ValidationError naming the violated axiom instance.
AlgebraRef algebra_validate(const Field& field, std::size_t dim, AlgVariety variety, bool lie,
                            const std::vector<Mat>& c, const std::string& name = "");

struct LinearMap {
  AlgebraRef source;
  AlgebraRef target;
  Mat matrix;  // target-dim x source-dim

  Vec operator()(const Vec& v) const;
  bool is_injective() const;
  bool is_surjective() const;
};

/// Checks f(e_i e_j) = f(e_i) f(e_j) on all basis pairs.
LinearMap linear_map_validate(const AlgebraRef& src, const AlgebraRef& tgt, const Mat& matrix);

LinearMap compose(const LinearMap& g, const LinearMap& f);  // g after f
LinearMap identity_map(const AlgebraRef& a);
LinearMap zero_map(const AlgebraRef& src, const AlgebraRef& tgt);

/// Subspace of an ambient algebra in reduced row echelon form.
struct Subspace {
  Mat basis;                        // rref rows, ambient coordinates
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.size(); }
  bool operator==(const Subspace& o) const { return basis == o.basis; }
};

Subspace subspace_span(const Field& k, const Mat& vectors, std::size_t ambient_dim);
bool subspace_contains(const Field& k, const Subspace& s, const Vec& v);
bool subspace_leq(const Field& k, const Subspace& a, const Subspace& b);

/// Smallest subspace containing vecs that absorbs left and right
/// multiplication by the whole ambient algebra.
Subspace ideal_closure(const StructAlgebra& a, const Mat& vecs);

/// Smallest subspace containing vecs closed under products of its own
/// elements.
Subspace subalgebra_generate(const StructAlgebra& a, const Mat& vecs);

bool is_subalgebra(const StructAlgebra& a, const Subspace& s);
bool is_ideal(const StructAlgebra& a, const Subspace& s);

Subspace map_kernel(const LinearMap& f);
Subspace map_image(const LinearMap& f);

/// A subalgebra extracted as an algebra in its own right; inclusion maps the
/// i-th basis row into the ambient object.
struct SubalgebraAlgebra {
  AlgebraRef algebra;
  Subspace space;
  LinearMap inclusion;  // sub -> ambient
};

SubalgebraAlgebra subalgebra_as_algebra(const AlgebraRef& a, const Subspace& s,
                                        const std::string& name = "");

/// Quotient by a two-sided ideal, on the complement (non-pivot) coordinates.
struct QuotientAlgebra {
  AlgebraRef algebra;
  LinearMap projection;                  // ambient -> quotient
  std::vector<std::size_t> rep_coords;   // quotient basis index -> ambient coordinate
};

QuotientAlgebra quotient_algebra(const AlgebraRef& a, const Subspace& ideal);

/// Direct sum X (+) Y with block basis (X first).
AlgebraRef direct_sum(const StructAlgebra& x, const StructAlgebra& y);

/// All multiplicative linear maps src -> tgt over a prime field, by
/// exhaustive matrix enumeration. Throws if the field is Q or the matrix
/// has too many entries to enumerate.
std::vector<LinearMap> all_linear_maps(const AlgebraRef& src, const AlgebraRef& tgt);

}  // namespace pxmod

#endif
