#ifndef PXMOD_FIELD_HPP
#define PXMOD_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pxmod {

/// Error thrown by validators and parsers; the message names the first
/// violated axiom or the malformed token.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact coefficient field: the rationals, or a prime field F_p.
/// Scalars are stored as Rational values; over F_p they are kept as
/// canonical integer residues in 0..p-1.
struct Field {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  long p = 0;  // modulus, only for Kind::Prime

  static Field rationals() { return Field{Kind::Rationals, 0}; }
  static Field prime(long p);

  bool operator==(const Field&) const = default;

  /// "Q" or "Fp".
  std::string name() const;
  /// Inverse of name(); throws ValidationError on unknown spec or composite p.
  static Field parse(const std::string& spec);
};

using Scalar = Rational;
using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Scalar fadd(const Field& k, const Scalar& a, const Scalar& b);
Scalar fsub(const Field& k, const Scalar& a, const Scalar& b);
Scalar fmul(const Field& k, const Scalar& a, const Scalar& b);
Scalar fneg(const Field& k, const Scalar& a);
Scalar finv(const Field& k, const Scalar& a);  // throws on zero

/// Canonical form of a scalar in the field (residue reduction over F_p);
/// throws if a rational with denominator divisible by p is given.
Scalar fcanon(const Field& k, const Scalar& a);

/// Serialize as "a" (integer) or "a/b" with b>0, gcd(a,b)=1; residues over
/// F_p print as decimal 0..p-1.
std::string scalar_to_string(const Scalar& a);
Scalar scalar_parse(const Field& k, const std::string& s);

// -- vectors and matrices -----------------------------------------------

Vec vzero(std::size_t n);
bool is_zero(const Vec& v);
Vec vadd(const Field& k, const Vec& a, const Vec& b);
Vec vsub(const Field& k, const Vec& a, const Vec& b);
Vec vscale(const Field& k, const Scalar& c, const Vec& v);

/// y = M v  (M is rows x cols, v has cols entries).
Vec mat_apply(const Field& k, const Mat& m, const Vec& v);
Mat mat_mul(const Field& k, const Mat& a, const Mat& b);
Mat mat_identity(std::size_t n);

/// In-place reduced row echelon form; returns the pivot columns.
/// Zero rows are removed, so the result has exactly rank(m) rows.
std::vector<std::size_t> rref(const Field& k, Mat& m);

/// Rank of the matrix (m is copied).
std::size_t mat_rank(const Field& k, Mat m);

/// Basis of the right null space of m (rows are basis vectors).
Mat null_space(const Field& k, const Mat& m, std::size_t cols);

/// Whether v lies in the row span of an rref basis with the given pivots.
bool in_span(const Field& k, const Mat& basis, const std::vector<std::size_t>& pivots,
             const Vec& v);

/// Residue of v modulo the row span (pivot coordinates eliminated).
Vec reduce_mod(const Field& k, const Mat& basis, const std::vector<std::size_t>& pivots,
               const Vec& v);

/// Solve coords * basis = v for a vector in the span of an rref basis;
/// throws if v is not in the span.
Vec span_coords(const Field& k, const Mat& basis, const std::vector<std::size_t>& pivots,
                const Vec& v);

}  // namespace pxmod

#endif
