#include "doctest.h"
#include "helpers.hpp"
#include "pxmod/pcm.hpp"

using namespace pxmod;
using namespace pxtest;

namespace {

// C4 -> C2 with the surjection as delta and C2 acting by inversion
GroupPcmRef c4_over_c2() {
  auto x = c4();
  auto b = c2();
  return pcm_validate(x, b, morphism_validate(x, b, {0, 1, 0, 1}), inversion_action(b, x),
                      "c4/c2");
}

AlgebraAction mult_action(const AlgebraRef& b, const AlgebraRef& d) {
  // F2 acting on the dual numbers by scalar multiplication on both sides
  std::vector<Mat> lambda(1, Mat(2, vzero(2)));
  lambda[0][0] = {Scalar(1), Scalar(0)};
  lambda[0][1] = {Scalar(0), Scalar(1)};
  std::vector<Mat> rho(2, Mat(1, vzero(2)));
  rho[0][0] = {Scalar(1), Scalar(0)};
  rho[1][0] = {Scalar(0), Scalar(1)};
  return action_validate(b, d, lambda, rho);
}

// F2[t]/(t^2) -> F2 with delta(a + bt) = a
AlgebraPcmRef dual_over_f2() {
  auto d = dual_numbers_f2();
  auto b = f2_alg();
  return pcm_validate(d, b, linear_map_validate(d, b, {{Scalar(1), Scalar(0)}}),
                      mult_action(b, d), "dual/f2");
}

}  // namespace

TEST_CASE("group pre-crossed module validation") {
  auto p = c4_over_c2();
  CHECK(p->x->order == 4);
  SUBCASE("equivariance failure is rejected with a witness") {
    // inclusion of the 3-cycles into S3 with the trivial action: conjugation
    // by a transposition moves the image, so the pre-crossed condition fails
    auto g = s3();
    Elt r = 1;
    while (g->elt_order(r) != 3) ++r;
    auto sub = subgroup_as_group(*g, subgroup_generate(*g, {r}), "C3");
    std::vector<Elt> incl(3);
    for (std::size_t i = 0; i < 3; ++i) incl[i] = sub.elements[i];
    CHECK_THROWS_WITH_AS(pcm_validate(sub.group, g, morphism_validate(sub.group, g, incl),
                                      trivial_action(g, sub.group)),
                         doctest::Contains("pre-crossed"), ValidationError);
  }
  SUBCASE("identity object is crossed") {
    CHECK(is_crossed(*identity_pcm(s3())).crossed);
  }
  SUBCASE("trivial object is crossed exactly for abelian carriers") {
    CHECK(is_crossed(*trivial_pcm(c4(), c2())).crossed);
    CHECK(!is_crossed(*trivial_pcm(s3(), c2())).crossed);
  }
  SUBCASE("inversion instance is pre-crossed but not crossed") {
    auto chk = is_crossed(*p);
    CHECK(!chk.crossed);
    CHECK(chk.witness.find("(1,1)") != std::string::npos);
  }
}

TEST_CASE("group pre-crossed module morphisms") {
  auto p = c4_over_c2();
  auto id2 = identity_pcm(c2());
  SUBCASE("delta itself is a morphism to the identity object") {
    auto f = px_morphism_validate(p, id2, {0, 1, 0, 1});
    CHECK(f.f.is_surjective());
    CHECK(px_compose(px_identity(id2), f).f.map == f.f.map);
  }
  SUBCASE("the zero map is not over B") {
    CHECK_THROWS_WITH_AS(px_morphism_validate(p, id2, {0, 0, 0, 0}),
                         doctest::Contains("over B"), ValidationError);
  }
  SUBCASE("enumeration finds exactly the over-B homs") {
    CHECK(all_px_morphisms(p, id2).size() == 1);
    CHECK(all_px_morphisms(p, p).size() == 2);  // identity and x -> x^-1
  }
}

TEST_CASE("group sub-pre-crossed modules") {
  auto p = c4_over_c2();
  SUBCASE("generation closes under the action") {
    CHECK(sub_pcm_generate(p, {2}).elems == EltSet{0, 2});
    CHECK(sub_pcm_generate(p, {1}).elems.size() == 4);
    CHECK(sub_pcm_generate(p, {}).elems == EltSet{0});
  }
  SUBCASE("validation rejects non-subgroups") {
    CHECK_THROWS_AS(sub_pcm_validate(p, {0, 1}), ValidationError);
  }
  SUBCASE("extraction of {0,2} has trivial delta") {
    auto s = sub_as_pcm(sub_pcm_validate(p, {0, 2}), "K");
    CHECK(s.pcm->x->order == 2);
    CHECK(s.pcm->delta.map == std::vector<Elt>{0, 0});
    CHECK(is_crossed(*s.pcm).crossed);
    CHECK(s.inclusion.f.is_injective());
  }
  SUBCASE("join") {
    auto a = sub_pcm_validate(p, {0, 2});
    CHECK(px_join(a, sub_pcm_validate(p, {0})).elems == EltSet{0, 2});
    CHECK(px_join(a, whole_sub_pcm(p)).elems.size() == 4);
  }
}

TEST_CASE("group kernel, image, factorization") {
  auto p = c4_over_c2();
  auto f = px_morphism_validate(p, identity_pcm(c2()), {0, 1, 0, 1});
  CHECK(px_kernel(f).elems == EltSet{0, 2});
  CHECK(px_image(f).elems == EltSet{0, 1});
  auto fac = px_factorize(f);
  CHECK(fac.image->x->order == 2);
  CHECK(fac.epi.f.is_surjective());
  CHECK(fac.mono.f.is_injective());
  for (Elt x = 0; x < 4; ++x)
    CHECK(fac.mono.f.map[fac.epi.f.map[x]] == f.f.map[x]);
}

TEST_CASE("group pullback") {
  auto p = c4_over_c2();
  auto f = px_morphism_validate(p, identity_pcm(c2()), {0, 1, 0, 1});
  auto pb = px_pullback(f, f);
  CHECK(pb.pcm->x->order == 8);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(f.f.map[pb.proj1.f.map[i]] == f.f.map[pb.proj2.f.map[i]]);
}

TEST_CASE("group cokernel of a kernel") {
  auto p = c4_over_c2();
  auto k = sub_pcm_validate(p, {0, 2});
  auto q = px_cokernel_of_kernel(k);
  CHECK(q.pcm->x->order == 2);
  CHECK(q.pcm->delta.map == std::vector<Elt>{0, 1});
  CHECK(q.pcm->xi.is_trivial());
  CHECK(is_crossed(*q.pcm).crossed);
  CHECK(kernel(q.projection.f) == k.elems);
  // delta does not vanish on the whole carrier, so it is not a kernel
  CHECK_THROWS_WITH_AS(px_cokernel_of_kernel(whole_sub_pcm(p)),
                       doctest::Contains("vanish"), ValidationError);
}

TEST_CASE("algebra pre-crossed module validation") {
  auto p = dual_over_f2();
  SUBCASE("dual numbers instance is pre-crossed but not crossed") {
    auto chk = is_crossed(*p);
    CHECK(!chk.crossed);
    // 1 * t = t but 1 . delta(t) = 0
    CHECK(chk.witness.find("a.delta(a')") != std::string::npos);
    CHECK(chk.witness.find("(0,1)") != std::string::npos);
  }
  SUBCASE("identity object is crossed") {
    CHECK(is_crossed(*identity_pcm(dual_numbers_f2())).crossed);
  }
  SUBCASE("trivial object over the dual numbers") {
    // delta = 0 and trivial action: crossed iff the carrier multiplies to zero
    auto zero2 = algebra_validate(Field::prime(2), 2, AlgVariety::Associative, false,
                                  std::vector<Mat>(2, Mat(2, vzero(2))), "z2");
    CHECK(is_crossed(*trivial_pcm(zero2, f2_alg())).crossed);
    CHECK(!is_crossed(*trivial_pcm(dual_numbers_f2(), f2_alg())).crossed);
  }
}

TEST_CASE("algebra pre-crossed module morphisms") {
  auto p = dual_over_f2();
  auto id1 = identity_pcm(f2_alg());
  auto f = px_morphism_validate(p, id1, {{Scalar(1), Scalar(0)}});
  CHECK(f.f.is_surjective());
  CHECK_THROWS_WITH_AS(px_morphism_validate(p, id1, {{Scalar(0), Scalar(0)}}),
                       doctest::Contains("over B"), ValidationError);
  CHECK(all_px_morphisms(p, id1).size() == 1);
}

TEST_CASE("algebra sub-pre-crossed modules and cokernel") {
  auto p = dual_over_f2();
  auto id1 = identity_pcm(f2_alg());
  auto f = px_morphism_validate(p, id1, {{Scalar(1), Scalar(0)}});
  auto k = px_kernel(f);
  REQUIRE(k.space.dim() == 1);
  CHECK(k.space.basis[0] == Vec{Scalar(0), Scalar(1)});
  SUBCASE("extraction of the kernel has trivial delta and zero product") {
    auto s = sub_as_pcm(k, "K");
    CHECK(s.pcm->x->dim == 1);
    CHECK(is_zero(s.pcm->delta(s.pcm->x->basis_vec(0))));
    CHECK(is_crossed(*s.pcm).crossed);
  }
  SUBCASE("generation closes under the action") {
    CHECK(sub_pcm_generate(p, {{Scalar(0), Scalar(1)}}).space.dim() == 1);
    CHECK(sub_pcm_generate(p, {{Scalar(1), Scalar(1)}}).space.dim() == 2);
    CHECK(px_join(k, whole_sub_pcm(p)).space.dim() == 2);
  }
  SUBCASE("factorization through the image") {
    auto fac = px_factorize(f);
    CHECK(fac.image->x->dim == 1);
    CHECK(fac.epi.f.is_surjective());
    CHECK(fac.mono.f.is_injective());
  }
  SUBCASE("pullback carrier has the fiber-product dimension") {
    auto pb = px_pullback(f, f);
    CHECK(pb.pcm->x->dim == 3);
    for (std::size_t j = 0; j < 3; ++j) {
      Vec v = pb.pcm->x->basis_vec(j);
      CHECK(f.f(pb.proj1.f(v)) == f.f(pb.proj2.f(v)));
    }
  }
  SUBCASE("cokernel of the kernel recovers the base") {
    auto q = px_cokernel_of_kernel(k);
    CHECK(q.pcm->x->dim == 1);
    CHECK(q.pcm->delta.matrix == Mat{{Scalar(1)}});
    CHECK(is_crossed(*q.pcm).crossed);
    CHECK(map_kernel(q.projection.f).basis == k.space.basis);
  }
  SUBCASE("the whole carrier is not a kernel (delta nonzero)") {
    CHECK_THROWS_WITH_AS(px_cokernel_of_kernel(whole_sub_pcm(p)),
                         doctest::Contains("vanish"), ValidationError);
  }
}
