#include "doctest.h"
#include "helpers.hpp"
#include "pxmod/action.hpp"

using namespace pxmod;
using namespace pxtest;

TEST_CASE("group action validation") {
  auto g2 = c2();
  auto g4 = c4();
  SUBCASE("trivial action validates") {
    auto a = action_validate(g2, g4, trivial_action(g2, g4).table);
    CHECK(a.is_trivial());
  }
  SUBCASE("inversion is a valid involutive action") {
    auto a = inversion_action(c2(), c4());
    CHECK(a.act(1, 1) == 3);
    CHECK(a.act(1, 3) == 1);
  }
  SUBCASE("x -> x^2 is rejected (squaring twice is not the identity)") {
    std::vector<std::vector<Elt>> t = {{0, 1, 2, 3}, {0, 2, 0, 2}};
    CHECK_THROWS_WITH_AS(action_validate(g2, g4, t), doctest::Contains("(bb').x"),
                         ValidationError);
  }
  SUBCASE("wrong shape") {
    CHECK_THROWS_AS(action_validate(g2, g4, {{0, 1, 2, 3}}), ValidationError);
  }
}

TEST_CASE("pullback of group actions") {
  auto g2 = c2();
  auto g4 = c4();
  auto inv = inversion_action(g2, g4);
  SUBCASE("along the identity") {
    CHECK(pullback_action(identity_morphism(g2), inv).table == inv.table);
  }
  SUBCASE("along the trivial morphism") {
    auto z = morphism_validate(g4, g2, {0, 0, 0, 0});
    CHECK(pullback_action(z, inv).is_trivial());
  }
  SUBCASE("along the surjection C4 -> C2 the generator acts by inversion") {
    auto delta = morphism_validate(g4, g2, {0, 1, 0, 1});
    auto pulled = pullback_action(delta, inv);
    CHECK(pulled.act(1, 1) == 3);
    CHECK(pulled.act(2, 1) == 1);
  }
  SUBCASE("functoriality: pullback along a composite") {
    auto delta = morphism_validate(g4, g2, {0, 1, 0, 1});
    auto idm = identity_morphism(g2);
    CHECK(pullback_action(delta, pullback_action(idm, inv)).table ==
          pullback_action(compose(idm, delta), inv).table);
  }
}

TEST_CASE("semidirect product of groups") {
  SUBCASE("trivial action gives the direct product") {
    auto x = c4();
    auto y = c2();
    auto s = semidirect(x, y, trivial_action(y, x));
    CHECK(*s.group == *direct_product(*x, *y));
  }
  SUBCASE("C4 x| C2 with inversion is dihedral of order 8") {
    auto s = semidirect(c4(), c2(), inversion_action(c2(), c4()));
    REQUIRE(s.group->order == 8);
    CHECK(!s.group->is_abelian());
    int order4 = 0;
    for (Elt e = 0; e < 8; ++e)
      if (s.group->elt_order(e) == 4) ++order4;
    CHECK(order4 == 2);
  }
  SUBCASE("injections and projection satisfy the splitting identities") {
    auto s = semidirect(c4(), c2(), inversion_action(c2(), c4()));
    CHECK(compose(s.proj_y, s.inj_y).map == identity_morphism(c2()).map);
    CHECK(kernel(s.proj_y) == image(s.inj_x));
    // the action becomes conjugation: i(y) j(x) i(y)^-1 = j(y.x)
    for (Elt y = 0; y < 2; ++y)
      for (Elt x = 0; x < 4; ++x)
        CHECK(s.group->conj(s.inj_y.map[y], s.inj_x.map[x]) ==
              s.inj_x.map[s.action.act(y, x)]);
  }
}

TEST_CASE("conjugation action of S3 on its 3-cycle subgroup") {
  auto g = s3();
  Elt r = 1;
  while (g->elt_order(r) != 3) ++r;
  auto conj = conjugation_action(g, subgroup_generate(*g, {r}));
  REQUIRE(conj.sub.group->order == 3);
  // transpositions invert the 3-cycles
  for (Elt t = 0; t < 6; ++t) {
    if (g->elt_order(t) != 2) continue;
    for (std::size_t n = 0; n < 3; ++n)
      CHECK(conj.action.act(t, static_cast<Elt>(n)) ==
            conj.sub.group->inv[static_cast<Elt>(n)]);
  }
}

TEST_CASE("algebra action validation") {
  auto b = f2_alg();
  auto d = dual_numbers_f2();
  SUBCASE("trivial action validates") {
    auto t = trivial_action(b, d);
    CHECK(!action_validate(b, d, t.lambda, t.rho).lambda.empty());
  }
  SUBCASE("multiplication action of F2 on dual numbers") {
    // b . (x0 + x1 t) = b x0 + b x1 t
    std::vector<Mat> lambda(1, Mat(2, vzero(2)));
    lambda[0][0] = {Scalar(1), Scalar(0)};
    lambda[0][1] = {Scalar(0), Scalar(1)};
    std::vector<Mat> rho(2, Mat(1, vzero(2)));
    rho[0][0] = {Scalar(1), Scalar(0)};
    rho[1][0] = {Scalar(0), Scalar(1)};
    auto a = action_validate(b, d, lambda, rho);
    CHECK(a.act_left({Scalar(1)}, {Scalar(1), Scalar(1)}) == Vec{Scalar(1), Scalar(1)});
  }
  SUBCASE("a broken tensor is rejected with a witness") {
    // b . 1 = t is not compatible with (b.a)a' = b.(aa')
    std::vector<Mat> lambda(1, Mat(2, vzero(2)));
    lambda[0][0] = {Scalar(0), Scalar(1)};
    std::vector<Mat> rho(2, Mat(1, vzero(2)));
    CHECK_THROWS_AS(action_validate(b, d, lambda, rho), ValidationError);
  }
}

TEST_CASE("self conjugation and ideal actions") {
  auto d = dual_numbers_f2();
  auto selfact = self_conjugation(d);
  CHECK(selfact.act_left(d->basis_vec(0), d->basis_vec(1)) == d->basis_vec(1));
  auto i = ideal_closure(*d, {{Scalar(0), Scalar(1)}});
  auto ia = conjugation_action(d, i);
  CHECK(ia.sub.algebra->dim == 1);
  // 1 . t = t, t . t = 0
  CHECK(ia.action.act_left(d->basis_vec(0), {Scalar(1)}) == Vec{Scalar(1)});
  CHECK(ia.action.act_left(d->basis_vec(1), {Scalar(1)}) == Vec{Scalar(0)});
}

TEST_CASE("semidirect sum of algebras") {
  auto b = f2_alg();
  auto d = dual_numbers_f2();
  SUBCASE("trivial action gives the direct sum") {
    auto s = semidirect(d, b, trivial_action(b, d));
    CHECK(*s.algebra == *direct_sum(*d, *b));
  }
  SUBCASE("zero algebra factor gives the other factor back") {
    auto zero = algebra_validate(Field::prime(2), 0, AlgVariety::Associative, false, {}, "0");
    auto s = semidirect(zero, d, trivial_action(d, zero));
    CHECK(s.algebra->dim == d->dim);
    CHECK(s.algebra->c == d->c);
  }
  SUBCASE("multiplication action assembles the expected product") {
    std::vector<Mat> lambda(1, Mat(2, vzero(2)));
    lambda[0][0] = {Scalar(1), Scalar(0)};
    lambda[0][1] = {Scalar(0), Scalar(1)};
    std::vector<Mat> rho(2, Mat(1, vzero(2)));
    rho[0][0] = {Scalar(1), Scalar(0)};
    rho[1][0] = {Scalar(0), Scalar(1)};
    auto act = action_validate(b, d, lambda, rho);
    auto s = semidirect(d, b, act);
    REQUIRE(s.algebra->dim == 3);
    // (t, 0)(0, 1) = (t . 1, 0) = (t, 0)
    Vec t0 = s.encode({Scalar(0), Scalar(1)}, {Scalar(0)});
    Vec o1 = s.encode({Scalar(0), Scalar(0)}, {Scalar(1)});
    CHECK(s.algebra->mul(t0, o1) == t0);
    // splitting identities
    CHECK(compose(s.proj_y, s.inj_y).matrix == mat_identity(1));
    CHECK(map_kernel(s.proj_y).basis == map_image(s.inj_x).basis);
  }
}

TEST_CASE("semidirect of two Lie algebras with the adjoint-style action stays Lie") {
  auto l = lie2_q();
  auto i = ideal_closure(*l, {{Scalar(1), Scalar(0)}});
  auto ia = conjugation_action(l, i);
  auto s = semidirect(ia.sub.algebra, l, ia.action);
  CHECK(s.algebra->dim == 3);
  CHECK(s.algebra->variety == AlgVariety::Leibniz);
}
