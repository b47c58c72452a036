#ifndef PXMOD_TEST_HELPERS_HPP
#define PXMOD_TEST_HELPERS_HPP

#include "pxmod/action.hpp"
#include "pxmod/algebra.hpp"
#include "pxmod/group.hpp"

#include <algorithm>
#include <map>
#include <vector>

// Independent instance builders for tests: groups are produced from explicit
// permutation or modular-arithmetic models, not from the library's own
// constructions, so they can serve as oracles.
namespace pxtest {

using namespace pxmod;

inline std::vector<std::vector<Elt>> cyclic_table(int n) {
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

/// Multiplication table of the symmetric group on `n` letters, elements
/// enumerated with the identity first (composition: (p*q)(i) = p(q(i))).
inline std::vector<std::vector<Elt>> symmetric_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // identity is the first permutation in lexicographic order already
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::size_t m = perms.size();
  std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> comp(n);
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      t[a][b] = index[comp];
    }
  return t;
}

inline GroupRef c2() { return group_validate(cyclic_table(2), "C2"); }
inline GroupRef c4() { return group_validate(cyclic_table(4), "C4"); }
inline GroupRef s3() { return group_validate(symmetric_table(3), "S3"); }

/// F2[t]/(t^2): basis (1, t).
inline AlgebraRef dual_numbers_f2() {
  Field f2 = Field::prime(2);
  std::vector<Mat> c(2, Mat(2, vzero(2)));
  c[0][0] = {Scalar(1), Scalar(0)};
  c[0][1] = {Scalar(0), Scalar(1)};
  c[1][0] = {Scalar(0), Scalar(1)};
  c[1][1] = {Scalar(0), Scalar(0)};
  return algebra_validate(f2, 2, AlgVariety::Associative, false, c, "F2[t]/(t^2)");
}

/// F2 as a 1-dim algebra.
inline AlgebraRef f2_alg() {
  std::vector<Mat> c(1, Mat(1, vzero(1)));
  c[0][0] = {Scalar(1)};
  return algebra_validate(Field::prime(2), 1, AlgVariety::Associative, false, c, "F2");
}

/// 2-dim non-abelian Lie algebra over Q: [e1,e2] = e1.
inline AlgebraRef lie2_q() {
  std::vector<Mat> c(2, Mat(2, vzero(2)));
  c[0][1] = {Scalar(1), Scalar(0)};
  c[1][0] = {Scalar(-1), Scalar(0)};
  return algebra_validate(Field::rationals(), 2, AlgVariety::Leibniz, true, c, "lie2");
}

/// C2 acting on C4 by inversion.
inline GroupAction inversion_action(const GroupRef& two, const GroupRef& four) {
  std::vector<std::vector<Elt>> t(2, std::vector<Elt>(4));
  for (int x = 0; x < 4; ++x) {
    t[0][x] = x;
    t[1][x] = (4 - x) % 4;
  }
  return action_validate(two, four, t);
}

}  // namespace pxtest

#endif
