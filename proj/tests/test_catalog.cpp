#include "doctest.h"
#include "pxmod/catalog.hpp"
#include "pxmod/peiffer.hpp"

using namespace pxmod;

TEST_CASE("curated groups validate and respect the bound") {
  auto gs = catalog_groups(16);
  CHECK(gs.size() >= 10);
  bool has_q8 = false, has_d4 = false;
  for (const auto& g : gs) {
    CHECK(g->order <= 16);
    if (g->name == "Q8") {
      has_q8 = true;
      CHECK(g->order == 8);
      CHECK(!g->is_abelian());
      int order4 = 0;
      for (Elt e = 0; e < 8; ++e)
        if (g->elt_order(e) == 4) ++order4;
      CHECK(order4 == 6);  // distinguishes Q8 from D4
    }
    if (g->name == "D4") has_d4 = true;
  }
  CHECK(has_q8);
  CHECK(has_d4);
}

TEST_CASE("curated algebras validate and cover both varieties") {
  auto as = catalog_algebras(4);
  bool assoc = false, leib = false, lie = false;
  for (const auto& a : as) {
    CHECK(a->dim <= 4);
    assoc = assoc || a->variety == AlgVariety::Associative;
    leib = leib || (a->variety == AlgVariety::Leibniz && !a->lie);
    lie = lie || a->lie;
  }
  CHECK(assoc);
  CHECK(leib);
  CHECK(lie);
}

TEST_CASE("curated pre-crossed modules include both crossed and non-crossed") {
  auto ps = catalog_group_pcms(8);
  int crossed = 0, not_crossed = 0;
  for (const auto& p : ps) (is_crossed(*p).crossed ? crossed : not_crossed)++;
  CHECK(crossed >= 5);
  CHECK(not_crossed >= 3);
  auto pa = catalog_algebra_pcms(4);
  crossed = not_crossed = 0;
  for (const auto& p : pa) (is_crossed(*p).crossed ? crossed : not_crossed)++;
  CHECK(crossed >= 5);
  CHECK(not_crossed >= 3);
}

TEST_CASE("generators produce validated instances and expected examples") {
  SUBCASE("groups with |B| = 2, |X| = 4 include the inversion instance") {
    auto pool = generate_group_pcms(4, 500);
    bool found = false;
    for (const auto& p : pool) {
      if (p->x->order != 4 || p->b->order != 2) continue;
      if (p->delta.map == std::vector<Elt>{0, 1, 0, 1} && !p->xi.is_trivial() &&
          p->xi.act(1, 1) == 3)
        found = true;
    }
    CHECK(found);
  }
  SUBCASE("algebras over F2 of dim <= 2 include the dual-numbers instance") {
    auto pool = generate_algebra_pcms(2, 2000);
    bool found = false;
    for (const auto& p : pool) {
      if (p->x->dim != 2 || p->b->dim != 1 || p->x->field.p != 2) continue;
      if (p->delta.matrix == Mat{{Scalar(1), Scalar(0)}} && !p->xi.is_trivial() &&
          p->x->name.substr(0, 4) == "dual")
        found = true;
    }
    CHECK(found);
  }
  SUBCASE("budget zero gives an empty set") {
    CHECK(generate_group_pcms(8, 0).empty());
  }
}

TEST_CASE("seeded sampling is deterministic") {
  auto a = random_group_pcms(42, 20, 8);
  auto b = random_group_pcms(42, 20, 8);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK(a[i]->name == b[i]->name);
  auto c = random_group_pcms(43, 20, 8);
  bool differs = false;
  for (std::size_t i = 0; i < 20; ++i) differs = differs || a[i]->name != c[i]->name;
  CHECK(differs);
}

TEST_CASE("automorphism group construction") {
  auto s3 = catalog_groups(6).back();  // C6 or S3 depending on order; find by name
  for (const auto& g : catalog_groups(8)) {
    if (g->name != "S3") continue;
    auto aut = automorphism_group(g);
    CHECK(aut.group->order == 6);
    CHECK(!aut.group->is_abelian());
  }
  (void)s3;
}
