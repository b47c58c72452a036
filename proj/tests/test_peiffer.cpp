#include "doctest.h"
#include "helpers.hpp"
#include "pxmod/peiffer.hpp"

using namespace pxmod;
using namespace pxtest;

namespace {

GroupPcmRef c4_over_c2() {
  auto x = c4();
  auto b = c2();
  return pcm_validate(x, b, morphism_validate(x, b, {0, 1, 0, 1}), inversion_action(b, x),
                      "c4/c2");
}

AlgebraPcmRef dual_over_f2() {
  auto d = dual_numbers_f2();
  auto b = f2_alg();
  std::vector<Mat> lambda(1, Mat(2, vzero(2)));
  lambda[0][0] = {Scalar(1), Scalar(0)};
  lambda[0][1] = {Scalar(0), Scalar(1)};
  std::vector<Mat> rho(2, Mat(1, vzero(2)));
  rho[0][0] = {Scalar(1), Scalar(0)};
  rho[1][0] = {Scalar(0), Scalar(1)};
  return pcm_validate(d, b, linear_map_validate(d, b, {{Scalar(1), Scalar(0)}}),
                      action_validate(b, d, lambda, rho), "dual/f2");
}

AlgebraRef zero_alg(std::size_t dim, const std::string& name) {
  return algebra_validate(Field::prime(2), dim, AlgVariety::Associative, false,
                          std::vector<Mat>(dim, Mat(dim, vzero(dim))), name);
}

}  // namespace

TEST_CASE("group Peiffer words") {
  auto p = c4_over_c2();
  auto all = whole_sub_pcm(p);
  auto ws = peiffer_words(all, all);
  CHECK(ws.words.size() == 32);
  // at (gen, gen): 1 + 1 - 1 - (-1) = 2 in additive C4
  bool found = false;
  for (const auto& w : ws.words)
    if (w.x == 1 && w.y == 1 && !w.swapped) {
      CHECK(w.word == 2);
      found = true;
    }
  CHECK(found);
  SUBCASE("crossed ambient gives only neutral words") {
    auto idp = identity_pcm(s3());
    for (const auto& w : peiffer_words(whole_sub_pcm(idp), whole_sub_pcm(idp)).words)
      CHECK(w.word == 0);
  }
  SUBCASE("trivial delta and action reduce words to commutators") {
    auto tp = trivial_pcm(s3(), c2());
    auto g = s3();
    for (const auto& w : peiffer_words(whole_sub_pcm(tp), whole_sub_pcm(tp)).words)
      CHECK(w.word == g->mult[g->conj(w.x, w.y)][g->inv[w.y]]);
  }
}

TEST_CASE("group Peiffer commutator") {
  SUBCASE("inversion instance: <X,X> has order 2") {
    auto p = c4_over_c2();
    auto c = peiffer_commutator(whole_sub_pcm(p), whole_sub_pcm(p));
    CHECK(c.elems == EltSet{0, 2});
  }
  SUBCASE("identity crossed module: <B,B> trivial") {
    auto idp = identity_pcm(s3());
    CHECK(peiffer_commutator(whole_sub_pcm(idp), whole_sub_pcm(idp)).elems == EltSet{0});
  }
  SUBCASE("trivial delta and action: <X,X> is the derived subgroup") {
    auto tp = trivial_pcm(s3(), c2());
    auto c = peiffer_commutator(whole_sub_pcm(tp), whole_sub_pcm(tp));
    CHECK(c.elems.size() == 3);  // A3
    for (Elt e : c.elems) CHECK(s3()->elt_order(e) % 2 == 1);
  }
  SUBCASE("characterization: crossed iff trivial commutator") {
    for (const auto& p : {c4_over_c2(), identity_pcm(s3()), trivial_pcm(c4(), c2())}) {
      bool trivial = peiffer_commutator(whole_sub_pcm(p), whole_sub_pcm(p)).elems.size() == 1;
      CHECK(trivial == is_crossed(*p).crossed);
    }
  }
}

TEST_CASE("group Peiffer product") {
  SUBCASE("trivial factors give the direct product") {
    auto p = peiffer_product(trivial_pcm(c4(), c2()), trivial_pcm(c2(), c2()));
    CHECK(p.pcm->x->order == 8);
    CHECK(p.pcm->x->is_abelian());
    CHECK(p.relations.elems == EltSet{0});
    CHECK(p.lx.f.is_injective());
    CHECK(p.ly.f.is_injective());
  }
  SUBCASE("identity crossed module with itself: carrier C2 x C2, delta multiplies") {
    auto id2 = identity_pcm(c2());
    auto p = coproduct_xmod(id2, id2);
    CHECK(p.pcm->x->order == 4);
    CHECK(is_crossed(*p.pcm).crossed);
    Elt mixed = p.pcm->x->mult[p.lx.f.map[1]][p.ly.f.map[1]];
    CHECK(p.pcm->delta.map[mixed] == 0);  // x y with delta(xy) = 1*1 = 0 in C2
    CHECK(p.pcm->delta.map[p.lx.f.map[1]] == 1);
  }
  SUBCASE("one-point factor gives the other factor back") {
    auto one = group_validate({{0}}, "1");
    auto p = peiffer_product(trivial_pcm(one, c2()), c4_over_c2());
    CHECK(p.pcm->x->order == 4);
    CHECK(p.ly.f.is_injective());
    CHECK(p.ly.f.is_surjective());
  }
  SUBCASE("symmetry over B") {
    auto a = c4_over_c2();
    auto b = identity_pcm(c2());
    auto iso = symmetric_product_isomorphism(peiffer_product(a, b), peiffer_product(b, a));
    REQUIRE(iso.has_value());
    CHECK(iso->f.is_injective());
  }
}

TEST_CASE("group induced morphism") {
  auto id2 = identity_pcm(c2());
  auto p = coproduct_xmod(id2, id2);
  SUBCASE("mediator to the product itself is the identity") {
    auto med = induced_morphism(p, p.lx, p.ly);
    REQUIRE(med.phi.has_value());
    CHECK(med.phi->f.map == identity_morphism(p.pcm->x).map);
  }
  SUBCASE("folding cospan to the identity crossed module") {
    auto med = induced_morphism(p, px_identity(id2), px_identity(id2));
    REQUIRE(med.phi.has_value());
    CHECK(med.phi->f.is_surjective());
  }
  SUBCASE("non-crossed target can obstruct") {
    auto z = c4_over_c2();
    auto pz = peiffer_product(z, z);
    auto med = induced_morphism(pz, px_identity(z), px_identity(z));
    CHECK(!med.phi.has_value());
    REQUIRE(med.obstruction.has_value());
    CHECK(med.obstruction->elems == EltSet{0, 2});
  }
}

TEST_CASE("group reflection") {
  SUBCASE("inversion instance reflects to C2 over C2") {
    auto r = reflect(c4_over_c2());
    CHECK(r.pcm->x->order == 2);
    CHECK(r.pcm->delta.map == std::vector<Elt>{0, 1});
    CHECK(is_crossed(*r.pcm).crossed);
  }
  SUBCASE("already crossed: the unit is an isomorphism") {
    auto r = reflect(identity_pcm(s3()));
    CHECK(r.eta.f.is_injective());
    CHECK(r.eta.f.is_surjective());
  }
  SUBCASE("universal property: morphisms to crossed targets factor through") {
    auto p = c4_over_c2();
    auto r = reflect(p);
    auto f = px_morphism_validate(p, identity_pcm(c2()), {0, 1, 0, 1});
    auto fbar = reflect_induced(r, f);
    for (Elt x = 0; x < 4; ++x) CHECK(fbar.f.map[r.eta.f.map[x]] == f.f.map[x]);
  }
}

TEST_CASE("algebra Peiffer words and commutator") {
  auto p = dual_over_f2();
  SUBCASE("dual numbers: <X,X> = span{t}") {
    auto c = peiffer_commutator(whole_sub_pcm(p), whole_sub_pcm(p));
    REQUIRE(c.space.dim() == 1);
    CHECK(c.space.basis[0] == Vec{Scalar(0), Scalar(1)});
  }
  SUBCASE("identity crossed module: trivial") {
    auto idp = identity_pcm(dual_numbers_f2());
    CHECK(peiffer_commutator(whole_sub_pcm(idp), whole_sub_pcm(idp)).space.dim() == 0);
  }
  SUBCASE("trivial delta and action: ideal generated by products") {
    auto tp = trivial_pcm(dual_numbers_f2(), f2_alg());
    // 1*1 = 1 is a word, so the ideal is everything
    CHECK(peiffer_commutator(whole_sub_pcm(tp), whole_sub_pcm(tp)).space.dim() == 2);
    auto zp = trivial_pcm(zero_alg(2, "z2"), f2_alg());
    CHECK(peiffer_commutator(whole_sub_pcm(zp), whole_sub_pcm(zp)).space.dim() == 0);
  }
  SUBCASE("Leibniz variety words use the bracket") {
    auto l = lie2_q();
    auto tp = trivial_pcm(l, l);
    auto c = peiffer_commutator(whole_sub_pcm(tp), whole_sub_pcm(tp));
    CHECK(c.space.dim() == 1);  // the derived ideal span{e1}
  }
}

TEST_CASE("algebra Peiffer product") {
  SUBCASE("trivial factors give the direct sum") {
    auto x = trivial_pcm(dual_numbers_f2(), f2_alg());
    auto y = trivial_pcm(zero_alg(1, "z1"), f2_alg());
    auto p = peiffer_product(x, y);
    CHECK(p.pcm->x->dim == 3);
    CHECK(p.relations.space.dim() == 0);
    CHECK(p.lx.f.is_injective());
    CHECK(p.ly.f.is_injective());
  }
  SUBCASE("identity crossed module with itself collapses onto the base") {
    auto id1 = identity_pcm(f2_alg());
    auto p = coproduct_xmod(id1, id1);
    CHECK(p.pcm->x->dim == 1);
    CHECK(is_crossed(*p.pcm).crossed);
    auto med = induced_morphism(p, px_identity(id1), px_identity(id1));
    REQUIRE(med.phi.has_value());
    CHECK(med.phi->f.is_injective());
  }
  SUBCASE("symmetry over B") {
    auto a = dual_over_f2();
    auto b = identity_pcm(f2_alg());
    auto iso = symmetric_product_isomorphism(peiffer_product(a, b), peiffer_product(b, a));
    CHECK(iso.has_value());
  }
  SUBCASE("non-crossed target can obstruct the mediator") {
    auto z = dual_over_f2();
    auto pz = peiffer_product(z, z);
    auto med = induced_morphism(pz, px_identity(z), px_identity(z));
    CHECK(!med.phi.has_value());
    REQUIRE(med.obstruction.has_value());
    CHECK(med.obstruction->space.dim() == 1);
  }
}

TEST_CASE("algebra reflection") {
  SUBCASE("dual numbers reflect to the base field") {
    auto r = reflect(dual_over_f2());
    CHECK(r.pcm->x->dim == 1);
    CHECK(r.pcm->delta.matrix == Mat{{Scalar(1)}});
    CHECK(is_crossed(*r.pcm).crossed);
  }
  SUBCASE("already crossed: the unit is an isomorphism") {
    auto r = reflect(identity_pcm(dual_numbers_f2()));
    CHECK(r.eta.f.is_injective());
    CHECK(r.eta.f.is_surjective());
  }
  SUBCASE("universal property") {
    auto p = dual_over_f2();
    auto r = reflect(p);
    auto f = px_morphism_validate(p, identity_pcm(f2_alg()), {{Scalar(1), Scalar(0)}});
    auto fbar = reflect_induced(r, f);
    CHECK(mat_mul(p->x->field, fbar.f.matrix, r.eta.f.matrix) == f.f.matrix);
  }
}
