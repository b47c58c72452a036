#include "pxmod/algebra.hpp"

#include <algorithm>

namespace pxmod {

Vec StructAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r(dim, Scalar(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      Scalar coef = fmul(field, a[i], b[j]);
      for (std::size_t k = 0; k < dim; ++k)
        r[k] = fadd(field, r[k], fmul(field, coef, c[i][j][k]));
    }
  }
  return r;
}

Vec StructAlgebra::basis_vec(std::size_t i) const {
  Vec v(dim, Scalar(0));
  v[i] = 1;
  return v;
}

namespace {

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

AlgebraRef algebra_validate(const Field& field, std::size_t dim, AlgVariety variety, bool lie,
                            const std::vector<Mat>& c, const std::string& name) {
  if (dim > caps().max_algebra_dim)
    throw ValidationError("algebra dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(caps().max_algebra_dim));
  if (c.size() != dim) throw ValidationError("structure tensor has wrong shape");
  StructAlgebra a;
  a.name = name;
  a.field = field;
  a.dim = dim;
  a.variety = variety;
  a.lie = lie;
  a.c.assign(dim, Mat(dim, Vec(dim, Scalar(0))));
  for (std::size_t i = 0; i < dim; ++i) {
    if (c[i].size() != dim) throw ValidationError("structure tensor has wrong shape");
    for (std::size_t j = 0; j < dim; ++j) {
      if (c[i][j].size() != dim) throw ValidationError("structure tensor has wrong shape");
      for (std::size_t k = 0; k < dim; ++k) a.c[i][j][k] = fcanon(field, c[i][j][k]);
    }
  }
  if (lie && variety != AlgVariety::Leibniz)
    throw ValidationError("lie flag requires the leibniz variety");
  if (lie) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (!is_zero(a.c[i][i]))
        throw ValidationError("lie bracket is not alternating at basis index " + std::to_string(i));
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (a.c[i][j][k] != fneg(field, a.c[j][i][k]))
            throw ValidationError("lie bracket is not antisymmetric at " + triple_str(i, j, k));
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Vec ei = a.basis_vec(i), ej = a.basis_vec(j), ek = a.basis_vec(k);
        if (variety == AlgVariety::Associative) {
          if (a.mul(a.mul(ei, ej), ek) != a.mul(ei, a.mul(ej, ek)))
            throw ValidationError("associativity fails at basis triple " + triple_str(i, j, k));
        } else {
          // right Leibniz: [[a,a'],a''] = [[a,a''],a'] + [a,[a',a'']]
          Vec lhs = a.mul(a.mul(ei, ej), ek);
          Vec rhs = vadd(field, a.mul(a.mul(ei, ek), ej), a.mul(ei, a.mul(ej, ek)));
          if (lhs != rhs)
            throw ValidationError("Leibniz identity fails at basis triple " + triple_str(i, j, k));
        }
      }
  return std::make_shared<StructAlgebra>(std::move(a));
}

Vec LinearMap::operator()(const Vec& v) const { return mat_apply(source->field, matrix, v); }

bool LinearMap::is_injective() const {
  return mat_rank(source->field, matrix) == source->dim;
}

bool LinearMap::is_surjective() const {
  return mat_rank(source->field, matrix) == target->dim;
}

LinearMap linear_map_validate(const AlgebraRef& src, const AlgebraRef& tgt, const Mat& matrix) {
  if (!(src->field == tgt->field))
    throw ValidationError("linear map endpoints have different fields");
  if (matrix.size() != tgt->dim)
    throw ValidationError("linear map matrix has wrong row count");
  LinearMap f{src, tgt, matrix};
  for (auto& row : f.matrix) {
    if (row.size() != src->dim) throw ValidationError("linear map matrix has wrong column count");
    for (auto& e : row) e = fcanon(src->field, e);
  }
  for (std::size_t i = 0; i < src->dim; ++i)
    for (std::size_t j = 0; j < src->dim; ++j) {
      Vec lhs = f(src->mul(src->basis_vec(i), src->basis_vec(j)));
      Vec rhs = tgt->mul(f(src->basis_vec(i)), f(src->basis_vec(j)));
      if (lhs != rhs)
        throw ValidationError("linear map is not multiplicative at basis pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return f;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  return LinearMap{f.source, g.target, mat_mul(f.source->field, g.matrix, f.matrix)};
}

LinearMap identity_map(const AlgebraRef& a) {
  return LinearMap{a, a, mat_identity(a->dim)};
}

LinearMap zero_map(const AlgebraRef& src, const AlgebraRef& tgt) {
  return LinearMap{src, tgt, Mat(tgt->dim, Vec(src->dim, Scalar(0)))};
}

Subspace subspace_span(const Field& k, const Mat& vectors, std::size_t ambient_dim) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw ValidationError("vector dimension mismatch");
  Subspace s;
  s.basis = vectors;
  for (auto& row : s.basis)
    for (auto& e : row) e = fcanon(k, e);
  s.pivots = rref(k, s.basis);
  return s;
}

bool subspace_contains(const Field& k, const Subspace& s, const Vec& v) {
  return in_span(k, s.basis, s.pivots, v);
}

bool subspace_leq(const Field& k, const Subspace& a, const Subspace& b) {
  return std::all_of(a.basis.begin(), a.basis.end(),
                     [&](const Vec& v) { return subspace_contains(k, b, v); });
}

namespace {

Subspace saturate(const StructAlgebra& a, const Mat& vecs, bool ideal) {
  Subspace s = subspace_span(a.field, vecs, a.dim);
  for (;;) {
    Mat next = s.basis;
    for (const Vec& v : s.basis) {
      if (ideal) {
        for (std::size_t i = 0; i < a.dim; ++i) {
          next.push_back(a.mul(a.basis_vec(i), v));
          next.push_back(a.mul(v, a.basis_vec(i)));
        }
      } else {
        for (const Vec& w : s.basis) next.push_back(a.mul(v, w));
      }
    }
    Subspace grown = subspace_span(a.field, next, a.dim);
    if (grown.dim() == s.dim()) return s;
    s = std::move(grown);
  }
}

}  // namespace

Subspace ideal_closure(const StructAlgebra& a, const Mat& vecs) {
  return saturate(a, vecs, true);
}

Subspace subalgebra_generate(const StructAlgebra& a, const Mat& vecs) {
  return saturate(a, vecs, false);
}

bool is_subalgebra(const StructAlgebra& a, const Subspace& s) {
  for (const Vec& v : s.basis)
    for (const Vec& w : s.basis)
      if (!subspace_contains(a.field, s, a.mul(v, w))) return false;
  return true;
}

bool is_ideal(const StructAlgebra& a, const Subspace& s) {
  for (const Vec& v : s.basis)
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (!subspace_contains(a.field, s, a.mul(a.basis_vec(i), v))) return false;
      if (!subspace_contains(a.field, s, a.mul(v, a.basis_vec(i)))) return false;
    }
  return true;
}

Subspace map_kernel(const LinearMap& f) {
  Subspace s;
  s.basis = null_space(f.source->field, f.matrix, f.source->dim);
  Mat tmp = s.basis;
  s.pivots = rref(f.source->field, tmp);
  return s;
}

Subspace map_image(const LinearMap& f) {
  Mat cols;
  for (std::size_t j = 0; j < f.source->dim; ++j) {
    Vec col(f.target->dim);
    for (std::size_t i = 0; i < f.target->dim; ++i) col[i] = f.matrix[i][j];
    cols.push_back(std::move(col));
  }
  return subspace_span(f.source->field, cols, f.target->dim);
}

SubalgebraAlgebra subalgebra_as_algebra(const AlgebraRef& a, const Subspace& s,
                                        const std::string& name) {
  if (!is_subalgebra(*a, s)) throw ValidationError("subspace is not a subalgebra");
  std::size_t k = s.dim();
  std::vector<Mat> c(k, Mat(k, Vec(k, Scalar(0))));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      c[i][j] = span_coords(a->field, s.basis, s.pivots, a->mul(s.basis[i], s.basis[j]));
  SubalgebraAlgebra sub;
  // lie flag is not inherited: a subalgebra of a Lie algebra is Lie, but the
  // restricted tensor is revalidated anyway
  sub.algebra = algebra_validate(a->field, k, a->variety, a->lie, c, name);
  sub.space = s;
  Mat incl(a->dim, Vec(k, Scalar(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < a->dim; ++i) incl[i][j] = s.basis[j][i];
  sub.inclusion = linear_map_validate(sub.algebra, a, incl);
  return sub;
}

QuotientAlgebra quotient_algebra(const AlgebraRef& a, const Subspace& ideal) {
  if (!is_ideal(*a, ideal)) throw ValidationError("subspace is not a two-sided ideal");
  std::vector<bool> is_pivot(a->dim, false);
  for (std::size_t p : ideal.pivots) is_pivot[p] = true;
  QuotientAlgebra q;
  for (std::size_t j = 0; j < a->dim; ++j)
    if (!is_pivot[j]) q.rep_coords.push_back(j);
  std::size_t m = q.rep_coords.size();
  // residue of v modulo the ideal, in quotient coordinates
  auto project = [&](const Vec& v) {
    Vec r = reduce_mod(a->field, ideal.basis, ideal.pivots, v);
    Vec out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = r[q.rep_coords[j]];
    return out;
  };
  std::vector<Mat> c(m, Mat(m, Vec(m, Scalar(0))));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec ei = vzero(a->dim), ej = vzero(a->dim);
      ei[q.rep_coords[i]] = 1;
      ej[q.rep_coords[j]] = 1;
      c[i][j] = project(a->mul(ei, ej));
    }
  bool lie = a->lie;
  if (lie) {
    // quotients of Lie algebras stay Lie; verify rather than assume
    for (std::size_t i = 0; i < m && lie; ++i)
      for (std::size_t j = 0; j < m && lie; ++j)
        for (std::size_t k = 0; k < m; ++k)
          if (c[i][j][k] != fneg(a->field, c[j][i][k]) || (i == j && c[i][j][k] != 0)) {
            lie = false;
            break;
          }
  }
  q.algebra = algebra_validate(a->field, m, a->variety, lie, c,
                               a->name.empty() ? "" : a->name + "/I");
  Mat proj(m, Vec(a->dim));
  for (std::size_t j = 0; j < a->dim; ++j) {
    Vec col = project(a->basis_vec(j));
    for (std::size_t i = 0; i < m; ++i) proj[i][j] = col[i];
  }
  q.projection = linear_map_validate(a, q.algebra, proj);
  return q;
}

AlgebraRef direct_sum(const StructAlgebra& x, const StructAlgebra& y) {
  if (!(x.field == y.field)) throw ValidationError("direct sum over different fields");
  if (x.variety != y.variety) throw ValidationError("direct sum across varieties");
  std::size_t n = x.dim + y.dim;
  std::vector<Mat> c(n, Mat(n, Vec(n, Scalar(0))));
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      for (std::size_t k = 0; k < x.dim; ++k) c[i][j][k] = x.c[i][j][k];
  for (std::size_t i = 0; i < y.dim; ++i)
    for (std::size_t j = 0; j < y.dim; ++j)
      for (std::size_t k = 0; k < y.dim; ++k) c[x.dim + i][x.dim + j][x.dim + k] = y.c[i][j][k];
  return algebra_validate(x.field, n, x.variety, x.lie && y.lie, c, x.name + "+" + y.name);
}

std::vector<LinearMap> all_linear_maps(const AlgebraRef& src, const AlgebraRef& tgt) {
  const Field& k = src->field;
  if (k.kind != Field::Kind::Prime)
    throw ValidationError("exhaustive map enumeration requires a prime field");
  std::size_t entries = src->dim * tgt->dim;
  double total = 1;
  for (std::size_t i = 0; i < entries; ++i) total *= static_cast<double>(k.p);
  if (total > 2e6) throw ValidationError("map enumeration space too large");
  std::vector<LinearMap> out;
  std::vector<long> digits(entries, 0);
  for (;;) {
    Mat m(tgt->dim, Vec(src->dim));
    for (std::size_t i = 0; i < tgt->dim; ++i)
      for (std::size_t j = 0; j < src->dim; ++j) m[i][j] = Scalar(digits[i * src->dim + j]);
    try {
      out.push_back(linear_map_validate(src, tgt, m));
    } catch (const ValidationError&) {
    }
    std::size_t pos = 0;
    while (pos < entries && ++digits[pos] == k.p) digits[pos++] = 0;
    if (pos == entries) break;
  }
  return out;
}

}  // namespace pxmod
