#include "pxmod/field.hpp"

#include <algorithm>
#include <sstream>

namespace pxmod {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Scalar mod_reduce(long p, const Scalar& a) {
  // a must be an integer residue class mod p: denominator coprime to p.
  BigInt num = boost::multiprecision::numerator(a);
  BigInt den = boost::multiprecision::denominator(a);
  if (den % p == 0)
    throw ValidationError("scalar has denominator divisible by the field characteristic");
  // invert den mod p by scanning (p is small)
  BigInt d = den % p;
  if (d < 0) d += p;
  long dinv = -1;
  for (long t = 1; t < p; ++t)
    if ((d * t) % p == 1) { dinv = t; break; }
  if (dinv < 0) throw ValidationError("non-invertible denominator in F_p");
  BigInt r = (num % p) * dinv % p;
  if (r < 0) r += p;
  return Scalar(r);
}

}  // namespace

Field Field::prime(long p) {
  if (!is_prime(p)) throw ValidationError("field modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::Prime, p};
}

std::string Field::name() const {
  return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.size() >= 2 && spec[0] == 'F') {
    try {
      std::size_t pos = 0;
      long p = std::stol(spec.substr(1), &pos);
      if (pos == spec.size() - 1) return prime(p);
    } catch (const std::logic_error&) {
    }
  }
  throw ValidationError("unknown field spec: " + spec);
}

Scalar fcanon(const Field& k, const Scalar& a) {
  return k.kind == Field::Kind::Prime ? mod_reduce(k.p, a) : a;
}

Scalar fadd(const Field& k, const Scalar& a, const Scalar& b) { return fcanon(k, a + b); }
Scalar fsub(const Field& k, const Scalar& a, const Scalar& b) { return fcanon(k, a - b); }
Scalar fmul(const Field& k, const Scalar& a, const Scalar& b) { return fcanon(k, a * b); }
Scalar fneg(const Field& k, const Scalar& a) { return fcanon(k, -a); }

Scalar finv(const Field& k, const Scalar& a) {
  Scalar c = fcanon(k, a);
  if (c == 0) throw ValidationError("division by zero");
  if (k.kind == Field::Kind::Rationals) return 1 / c;
  BigInt r = boost::multiprecision::numerator(c);
  for (long t = 1; t < k.p; ++t)
    if ((r * t) % k.p == 1) return Scalar(t);
  throw ValidationError("no inverse in F_p");  // unreachable for prime p
}

std::string scalar_to_string(const Scalar& a) {
  BigInt num = boost::multiprecision::numerator(a);
  BigInt den = boost::multiprecision::denominator(a);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar scalar_parse(const Field& k, const std::string& s) {
  if (s.empty()) throw ValidationError("empty scalar");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return fcanon(k, Scalar(BigInt(s)));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in scalar: " + s);
    return fcanon(k, Scalar(num) / Scalar(den));
  } catch (const std::runtime_error& e) {
    throw ValidationError("malformed scalar '" + s + "': " + e.what());
  }
}

Vec vzero(std::size_t n) { return Vec(n, Scalar(0)); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vec vadd(const Field& k, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fadd(k, a[i], b[i]);
  return r;
}

Vec vsub(const Field& k, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fsub(k, a[i], b[i]);
  return r;
}

Vec vscale(const Field& k, const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = fmul(k, c, v[i]);
  return r;
}

Vec mat_apply(const Field& k, const Mat& m, const Vec& v) {
  Vec r(m.size(), Scalar(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    r[i] = fcanon(k, acc);
  }
  return r;
}

Mat mat_mul(const Field& k, const Mat& a, const Mat& b) {
  std::size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
  Mat r(rows, Vec(cols, Scalar(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Scalar acc(0);
      for (std::size_t t = 0; t < inner; ++t) acc += a[i][t] * b[t][j];
      r[i][j] = fcanon(k, acc);
    }
  return r;
}

Mat mat_identity(std::size_t n) {
  Mat m(n, Vec(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::size_t> rref(const Field& k, Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = finv(k, m[row][col]);
    for (std::size_t j = col; j < cols; ++j) m[row][j] = fmul(k, inv, m[row][j]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Scalar f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = fsub(k, m[i][j], fmul(k, f, m[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t mat_rank(const Field& k, Mat m) { return rref(k, m).size(); }

Mat null_space(const Field& k, const Mat& m, std::size_t cols) {
  Mat r = m;
  std::vector<std::size_t> pivots = rref(k, r);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = fneg(k, r[i][free]);
    basis.push_back(std::move(v));
  }
  rref(k, basis);  // canonical form
  return basis;
}

Vec reduce_mod(const Field& k, const Mat& basis, const std::vector<std::size_t>& pivots,
               const Vec& v) {
  Vec r = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Scalar c = r[pivots[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j)
      r[j] = fsub(k, r[j], fmul(k, c, basis[i][j]));
  }
  return r;
}

bool in_span(const Field& k, const Mat& basis, const std::vector<std::size_t>& pivots,
             const Vec& v) {
  return is_zero(reduce_mod(k, basis, pivots, v));
}

Vec span_coords(const Field& k, const Mat& basis, const std::vector<std::size_t>& pivots,
                const Vec& v) {
  Vec coords(basis.size(), Scalar(0));
  Vec r = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Scalar c = r[pivots[i]];
    coords[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j)
      r[j] = fsub(k, r[j], fmul(k, c, basis[i][j]));
  }
  if (!is_zero(r)) throw ValidationError("vector is not in the subspace span");
  return coords;
}

}  // namespace pxmod
