#include "pxmod/theorems.hpp"

#include "pxmod/io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace pxmod {

namespace {

bool wants_groups(const CheckConfig& c) { return c.variety == "mixed" || c.variety == "group"; }

bool wants_algebra(const CheckConfig& c, const AlgebraPcmRef& p) {
  if (c.variety == "mixed") return true;
  if (c.variety == "assoc") return p->x->variety == AlgVariety::Associative;
  if (c.variety == "leibniz") return p->x->variety == AlgVariety::Leibniz;
  return false;
}

/// Runs body, timing it; a nonempty return or any exception is a failure
/// witness.
void record(std::vector<TheoremReport>& out, const std::string& check,
            const std::string& instance, const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport r;
  r.check = check;
  r.instance = instance;
  try {
    r.witness = body();
    r.pass = r.witness.empty();
  } catch (const std::exception& e) {
    r.pass = false;
    r.witness = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.push_back(std::move(r));
}

std::vector<GroupPcmRef> group_instances(const CheckConfig& cfg) {
  std::vector<GroupPcmRef> v = catalog_group_pcms(cfg.max_order);
  for (auto& p : random_group_pcms(cfg.seed, cfg.count, cfg.max_order)) v.push_back(p);
  return v;
}

std::vector<AlgebraPcmRef> algebra_instances(const CheckConfig& cfg) {
  std::vector<AlgebraPcmRef> v;
  for (auto& p : catalog_algebra_pcms(cfg.max_dim))
    if (wants_algebra(cfg, p)) v.push_back(p);
  for (auto& p : random_algebra_pcms(cfg.seed, cfg.count, cfg.max_dim))
    if (wants_algebra(cfg, p)) v.push_back(p);
  return v;
}

std::string tag(const std::string& name, std::size_t i) {
  return name + "@" + std::to_string(i);
}

/// Normal closure of a generating set under conjugation by a fixed subgroup.
EltSet closure_under_conj(const FiniteGroup& g, const EltSet& by, const EltSet& gens) {
  EltSet cur = subgroup_generate(g, gens);
  for (;;) {
    std::set<Elt> next(cur.begin(), cur.end());
    for (Elt j : by)
      for (Elt n : cur) next.insert(g.conj(j, n));
    EltSet grown = subgroup_generate(g, EltSet(next.begin(), next.end()));
    if (grown.size() == cur.size()) return cur;
    cur = std::move(grown);
  }
}

/// Ideal generated by gens inside the span of `by`.
Subspace ideal_within(const StructAlgebra& a, const Subspace& by, Mat gens) {
  const Field& k = a.field;
  Subspace cur = subspace_span(k, gens, a.dim);
  for (;;) {
    Mat next = cur.basis;
    for (const Vec& j : by.basis)
      for (const Vec& v : cur.basis) {
        next.push_back(a.mul(j, v));
        next.push_back(a.mul(v, j));
      }
    Subspace grown = subspace_span(k, next, a.dim);
    if (grown.dim() == cur.dim()) return cur;
    cur = std::move(grown);
  }
}

GroupSubPcm random_group_sub(Rng& rng, const GroupPcmRef& p, std::size_t n_gens) {
  EltSet gens;
  for (std::size_t i = 0; i < n_gens; ++i)
    gens.push_back(static_cast<Elt>(rng.below(p->x->order)));
  return sub_pcm_generate(p, gens);
}

AlgebraSubPcm random_algebra_sub(Rng& rng, const AlgebraPcmRef& p, std::size_t n_gens) {
  Mat gens;
  for (std::size_t i = 0; i < n_gens && p->x->dim > 0; ++i)
    gens.push_back(p->x->basis_vec(rng.below(p->x->dim)));
  return sub_pcm_generate(p, gens);
}

bool subset(const EltSet& a, const EltSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

EltSet image_set(const std::vector<Elt>& f, const EltSet& s) {
  std::set<Elt> out;
  for (Elt e : s) out.insert(f[e]);
  return EltSet(out.begin(), out.end());
}

GroupPcmRef cyclic_inversion_instance() {
  auto groups = catalog_groups(4);
  GroupRef c2, c4;
  for (auto& g : groups) {
    if (g->name == "C2") c2 = g;
    if (g->name == "C4") c4 = g;
  }
  std::vector<std::vector<Elt>> inv = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  return pcm_validate(c4, c2, morphism_validate(c4, c2, {0, 1, 0, 1}),
                      action_validate(c2, c4, inv), "c4/c2-inv");
}

AlgebraPcmRef dual_numbers_instance() {
  for (auto& p : catalog_algebra_pcms(2))
    if (p->name == "dual/F2") return p;
  throw ValidationError("dual-numbers instance missing from the catalog");
}

}  // namespace

std::string report_line(const TheoremReport& r) {
  json j{{"check", r.check},
         {"instance", r.instance},
         {"verdict", r.pass ? "pass" : "fail"},
         {"witness", r.witness}};
  return j.dump();
}

void check_characterization(std::vector<TheoremReport>& out, const CheckConfig& cfg) {
  const std::string id = "crossed-iff-peiffer-commutator-trivial";
  if (wants_groups(cfg)) {
    auto pcms = group_instances(cfg);
    if (cfg.corrupt) {
      // a deliberately broken record: delta is not a homomorphism, so the
      // word set cannot vanish under it
      GroupPcmRef good = cyclic_inversion_instance();
      GroupPcm bad = *good;
      bad.name = "corrupted";
      bad.delta.map = {0, 1, 1, 1};
      pcms.push_back(std::make_shared<GroupPcm>(bad));
    }
    for (std::size_t i = 0; i < pcms.size(); ++i) {
      const auto& p = pcms[i];
      record(out, id, tag(p->name, i), [&] {
        bool crossed = is_crossed(*p).crossed;
        auto c = peiffer_commutator(whole_sub_pcm(p), whole_sub_pcm(p));
        if (crossed != (c.elems.size() == 1))
          return "disagreement: is_crossed=" + std::to_string(crossed) +
                 " but commutator " + subobject_to_json(c)["elements"].dump();
        return std::string();
      });
    }
  }
  auto apcms = algebra_instances(cfg);
  for (std::size_t i = 0; i < apcms.size(); ++i) {
    const auto& p = apcms[i];
    record(out, id, tag(p->name, i), [&] {
      bool crossed = is_crossed(*p).crossed;
      auto c = peiffer_commutator(whole_sub_pcm(p), whole_sub_pcm(p));
      if (crossed != (c.space.dim() == 0))
        return "disagreement: is_crossed=" + std::to_string(crossed) + " but commutator " +
               subobject_to_json(c)["basis"].dump();
      return std::string();
    });
  }
}

void check_reflection(std::vector<TheoremReport>& out, const CheckConfig& cfg) {
  if (wants_groups(cfg)) {
    auto pcms = group_instances(cfg);
    for (std::size_t i = 0; i < pcms.size(); ++i) {
      const auto& p = pcms[i];
      record(out, "reflection-unit-crossed", tag(p->name, i), [&] {
        GroupReflection r = reflect(p);  // throws if the quotient is not crossed
        if (!r.eta.f.is_surjective()) return std::string("unit is not surjective");
        return std::string();
      });
      if (p->x->order > 8) continue;
      record(out, "reflection-universal-property", tag(p->name, i), [&] {
        GroupReflection r = reflect(p);
        for (const auto& z : catalog_group_crossed(p->b, 8)) {
          if (z->x->order > 8) continue;
          for (const GroupPXMorphism& f : all_px_morphisms(p, z)) {
            GroupPXMorphism fbar = reflect_induced(r, f);
            std::size_t matching = 0;
            for (const GroupPXMorphism& h : all_px_morphisms(r.pcm, z))
              if (px_compose(h, r.eta).f.map == f.f.map) ++matching;
            if (matching != 1)
              return "factorizations through unit into " + z->name + ": " +
                     std::to_string(matching);
            (void)fbar;
          }
        }
        return std::string();
      });
    }
  }
  auto apcms = algebra_instances(cfg);
  for (std::size_t i = 0; i < apcms.size(); ++i) {
    const auto& p = apcms[i];
    record(out, "reflection-unit-crossed", tag(p->name, i), [&] {
      AlgebraReflection r = reflect(p);
      if (!r.eta.f.is_surjective()) return std::string("unit is not surjective");
      return std::string();
    });
  }
}

void check_coproduct(std::vector<TheoremReport>& out, const CheckConfig& cfg) {
  if (wants_groups(cfg)) {
    for (const auto& b : catalog_groups(std::min<std::size_t>(cfg.max_order, 4))) {
      auto crossed = catalog_group_crossed(b, 8);
      if (crossed.size() > 6) crossed.resize(6);
      for (std::size_t i = 0; i < crossed.size(); ++i)
        for (std::size_t j = i; j < crossed.size(); ++j) {
          const auto &x = crossed[i], &y = crossed[j];
          if (x->x->order * y->x->order > caps().max_group_order) continue;
          record(out, "coproduct-crossed",
                 tag(b->name + ":" + x->name + "+" + y->name, i * 16 + j), [&] {
                   coproduct_xmod(x, y);
                   return std::string();
                 });
          record(out, "coproduct-mediator-unique",
                 tag(b->name + ":" + x->name + "+" + y->name, i * 16 + j), [&] {
                   GroupPeifferProduct p = coproduct_xmod(x, y);
                   if (p.pcm->x->order > 16) return std::string();
                   for (const auto& z : crossed) {
                     if (z->x->order > 8) continue;
                     auto fs = all_px_morphisms(x, z);
                     auto gs = all_px_morphisms(y, z);
                     // h -> (h lx, h ly) must be a bijection onto the cospans:
                     // that is existence and uniqueness of the mediator at once
                     std::vector<std::pair<std::vector<Elt>, std::vector<Elt>>> legs;
                     for (const GroupPXMorphism& h : all_px_morphisms(p.pcm, z))
                       legs.emplace_back(px_compose(h, p.lx).f.map,
                                         px_compose(h, p.ly).f.map);
                     std::sort(legs.begin(), legs.end());
                     if (std::adjacent_find(legs.begin(), legs.end()) != legs.end())
                       return "two mediators share a cospan into " + z->name;
                     if (legs.size() != fs.size() * gs.size())
                       return "mediator count into " + z->name + ": " +
                              std::to_string(legs.size()) + " for " +
                              std::to_string(fs.size() * gs.size()) + " cospans";
                     // exercise the constructive mediator on a sample of cospans
                     std::size_t sampled = 0;
                     for (const auto& f : fs)
                       for (const auto& g : gs) {
                         if (sampled++ >= 10) break;
                         GroupInduced med = induced_morphism(p, f, g);
                         if (!med.phi) return std::string("mediator missing into " + z->name);
                       }
                   }
                   return std::string();
                 });
        }
    }
  }
  if (cfg.variety != "group") {
    std::size_t adim = std::min<std::size_t>(cfg.max_dim, 2);
    for (const auto& b : catalog_algebras(adim)) {
      auto crossed = catalog_algebra_crossed(b, adim);
      if (crossed.size() > 4) crossed.resize(4);
      for (std::size_t i = 0; i < crossed.size(); ++i)
        for (std::size_t j = i; j < crossed.size(); ++j) {
          const auto &x = crossed[i], &y = crossed[j];
          if (x->x->dim + y->x->dim > 8) continue;
          record(out, "coproduct-crossed",
                 tag(b->name + ":" + x->name + "+" + y->name, i * 16 + j), [&] {
                   coproduct_xmod(x, y);
                   return std::string();
                 });
          record(out, "coproduct-mediator-unique",
                 tag(b->name + ":" + x->name + "+" + y->name, i * 16 + j), [&] {
                   AlgebraPeifferProduct p = coproduct_xmod(x, y);
                   for (const auto& z : crossed) {
                     if (z->x->dim > 2) continue;
                     std::vector<AlgebraPXMorphism> fs, gs;
                     try {
                       fs = all_px_morphisms(x, z);
                       gs = all_px_morphisms(y, z);
                     } catch (const ValidationError&) {
                       continue;  // enumeration too large for this pair
                     }
                     const Field& k = p.pcm->x->field;
                     std::vector<std::pair<Mat, Mat>> legs;
                     for (const AlgebraPXMorphism& h : all_px_morphisms(p.pcm, z))
                       legs.emplace_back(mat_mul(k, h.f.matrix, p.lx.f.matrix),
                                         mat_mul(k, h.f.matrix, p.ly.f.matrix));
                     std::sort(legs.begin(), legs.end());
                     if (std::adjacent_find(legs.begin(), legs.end()) != legs.end())
                       return "two mediators share a cospan into " + z->name;
                     if (legs.size() != fs.size() * gs.size())
                       return "mediator count into " + z->name + ": " +
                              std::to_string(legs.size()) + " for " +
                              std::to_string(fs.size() * gs.size()) + " cospans";
                     std::size_t sampled = 0;
                     for (const auto& f : fs)
                       for (const auto& g : gs) {
                         if (sampled++ >= 10) break;
                         AlgebraInduced med = induced_morphism(p, f, g);
                         if (!med.phi) return std::string("mediator missing into " + z->name);
                       }
                   }
                   return std::string();
                 });
        }
    }
  }
}

void check_degenerations(std::vector<TheoremReport>& out, const CheckConfig& cfg) {
  Rng rng(cfg.seed + 7);
  if (wants_groups(cfg)) {
    auto groups = catalog_groups(std::min<std::size_t>(cfg.max_order, 8));
    GroupRef c2, one;
    for (auto& g : groups) {
      if (g->name == "C2") c2 = g;
      if (g->name == "1") one = g;
    }
    std::size_t made = 0;
    for (const auto& g : groups) {
      GroupPcmRef amb = trivial_pcm(g, c2);
      for (std::size_t rep = 0; rep < 3; ++rep, ++made) {
        GroupSubPcm x = random_group_sub(rng, amb, 1);
        GroupSubPcm y = random_group_sub(rng, amb, 1);
        record(out, "degeneration-trivial-action-commutator", tag(g->name, made), [&] {
          GroupSubPcm c = peiffer_commutator(x, y);
          GroupSubPcm join = px_join(x, y);
          std::set<Elt> comm;
          for (Elt a : x.elems)
            for (Elt b : y.elems)
              comm.insert(g->mult[g->conj(a, b)][g->inv[b]]);
          EltSet higgins =
              closure_under_conj(*g, join.elems, EltSet(comm.begin(), comm.end()));
          if (c.elems != higgins) return std::string("commutator differs from Higgins form");
          return std::string();
        });
      }
    }
    // trivial factors: the Peiffer product is the direct product elementwise
    std::size_t k = 0;
    for (const auto& gx : groups)
      for (const auto& gy : groups) {
        if (gx->order * gy->order > 32 || k >= 24) continue;
        record(out, "degeneration-trivial-action-product",
               tag(gx->name + "x" + gy->name, k++), [&] {
                 GroupPeifferProduct p =
                     peiffer_product(trivial_pcm(gx, c2), trivial_pcm(gy, c2));
                 if (p.pcm->x->mult != direct_product(*gx, *gy)->mult)
                   return std::string("product table differs from the direct product");
                 return std::string();
               });
      }
    // trivial base: the commutator is the derived subgroup
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto& g = groups[i];
      record(out, "degeneration-trivial-base-derived", tag(g->name, i), [&] {
        GroupPcmRef amb = trivial_pcm(g, one);
        GroupSubPcm c = peiffer_commutator(whole_sub_pcm(amb), whole_sub_pcm(amb));
        std::set<Elt> comm;
        for (std::size_t a = 0; a < g->order; ++a)
          for (std::size_t b = 0; b < g->order; ++b)
            comm.insert(
                g->mult[g->conj(static_cast<Elt>(a), static_cast<Elt>(b))][g->inv[b]]);
        EltSet all(g->order);
        for (std::size_t e = 0; e < g->order; ++e) all[e] = static_cast<Elt>(e);
        EltSet derived = closure_under_conj(*g, all, EltSet(comm.begin(), comm.end()));
        if (c.elems != derived) return std::string("commutator differs from derived subgroup");
        return std::string();
      });
    }
  }
  if (cfg.variety != "group") {
    auto algebras = catalog_algebras(std::min<std::size_t>(cfg.max_dim, 3));
    std::size_t made = 0;
    for (const auto& a : algebras) {
      Field k = a->field;
      AlgebraRef zero0 = algebra_validate(k, 0, a->variety, a->lie, {}, "0");
      AlgebraRef base1 =
          a->variety == AlgVariety::Leibniz
              ? algebra_validate(k, 1, AlgVariety::Leibniz, true,
                                 std::vector<Mat>(1, Mat(1, vzero(1))), "b1")
              : algebra_validate(k, 1, AlgVariety::Associative, false,
                                 std::vector<Mat>(1, Mat(1, vzero(1))), "b1");
      record(out, "degeneration-trivial-action-commutator", tag(a->name, made++), [&] {
        AlgebraPcmRef amb = trivial_pcm(a, base1);
        AlgebraSubPcm x = random_algebra_sub(rng, amb, 1);
        AlgebraSubPcm y = random_algebra_sub(rng, amb, 1);
        AlgebraSubPcm c = peiffer_commutator(x, y);
        AlgebraSubPcm join = px_join(x, y);
        Mat prods;
        for (const Vec& u : x.space.basis)
          for (const Vec& v : y.space.basis) {
            prods.push_back(a->mul(u, v));
            prods.push_back(a->mul(v, u));
          }
        Subspace higgins = ideal_within(*a, join.space, prods);
        if (c.space.basis != higgins.basis)
          return std::string("commutator differs from the product ideal");
        return std::string();
      });
      record(out, "degeneration-trivial-base-derived", tag(a->name, made++), [&] {
        AlgebraPcmRef amb = trivial_pcm(a, zero0);
        AlgebraSubPcm c = peiffer_commutator(whole_sub_pcm(amb), whole_sub_pcm(amb));
        Mat prods;
        for (std::size_t i = 0; i < a->dim; ++i)
          for (std::size_t j = 0; j < a->dim; ++j)
            prods.push_back(a->mul(a->basis_vec(i), a->basis_vec(j)));
        Subspace derived =
            ideal_within(*a, subspace_span(k, mat_identity(a->dim), a->dim), prods);
        if (c.space.basis != derived.basis)
          return std::string("commutator differs from the derived ideal");
        return std::string();
      });
      // trivial factors degenerate to the direct sum
      for (const auto& b2 : algebras) {
        if (!(b2->field == k) || b2->variety != a->variety || a->dim + b2->dim > 6) continue;
        if (made >= 60) break;
        record(out, "degeneration-trivial-action-product",
               tag(a->name + "+" + b2->name, made++), [&] {
                 AlgebraPeifferProduct p =
                     peiffer_product(trivial_pcm(a, base1), trivial_pcm(b2, base1));
                 if (p.pcm->x->dim != a->dim + b2->dim || p.relations.space.dim() != 0)
                   return std::string("product differs from the direct sum");
                 if (p.pcm->x->c != direct_sum(*a, *b2)->c)
                   return std::string("product tensor differs from the direct sum");
                 return std::string();
               });
      }
    }
  }
}

void check_corollaries(std::vector<TheoremReport>& out, const CheckConfig& cfg) {
  Rng rng(cfg.seed + 13);
  std::size_t triples = 0;
  if (wants_groups(cfg)) {
    auto pcms = group_instances(cfg);
    for (std::size_t i = 0; i < pcms.size() && triples < 60; ++i) {
      const auto& p = pcms[i];
      GroupSubPcm xp = random_group_sub(rng, p, 2);
      GroupSubPcm yp = random_group_sub(rng, p, 2);
      GroupSubPcm x = sub_pcm_generate(p, {xp.elems[rng.below(xp.elems.size())]});
      GroupSubPcm y = sub_pcm_generate(p, {yp.elems[rng.below(yp.elems.size())]});
      ++triples;
      std::string inst = tag(p->name, i);
      record(out, "commutator-monotone", inst, [&] {
        if (!subset(peiffer_commutator(x, y).elems, peiffer_commutator(xp, yp).elems))
          return std::string("smaller pair has larger commutator");
        return std::string();
      });
      record(out, "commutator-delta-vanishes", inst, [&] {
        for (Elt e : peiffer_commutator(xp, yp).elems)
          if (p->delta.map[e] != 0) return std::string("delta nonzero on commutator");
        return std::string();
      });
      record(out, "commutator-image-vanishes", inst, [&] {
        GroupSubPcm c = peiffer_commutator(xp, yp);
        GroupSubAsPcm join = sub_as_pcm(px_join(xp, yp), "J");
        EltSet c_in;
        for (Elt e : c.elems) c_in.push_back(join.carrier.to_sub[e]);
        std::sort(c_in.begin(), c_in.end());
        GroupCokernel q = px_cokernel_of_kernel(sub_pcm_validate(join.pcm, c_in));
        EltSet qx, qy;
        for (Elt e : xp.elems) qx.push_back(q.projection.f.map[join.carrier.to_sub[e]]);
        for (Elt e : yp.elems) qy.push_back(q.projection.f.map[join.carrier.to_sub[e]]);
        std::sort(qx.begin(), qx.end());
        qx.erase(std::unique(qx.begin(), qx.end()), qx.end());
        std::sort(qy.begin(), qy.end());
        qy.erase(std::unique(qy.begin(), qy.end()), qy.end());
        GroupSubPcm c2 = peiffer_commutator(sub_pcm_validate(q.pcm, qx),
                                            sub_pcm_validate(q.pcm, qy));
        if (c2.elems.size() != 1)
          return std::string("commutator of projected images is nontrivial");
        return std::string();
      });
      record(out, "commutator-epi-half", inst, [&] {
        GroupReflection r = reflect(p);
        EltSet lhs = image_set(r.eta.f.map, peiffer_commutator(xp, yp).elems);
        GroupSubPcm fx = sub_pcm_validate(r.pcm, image_set(r.eta.f.map, xp.elems));
        GroupSubPcm fy = sub_pcm_validate(r.pcm, image_set(r.eta.f.map, yp.elems));
        if (lhs != peiffer_commutator(fx, fy).elems)
          return std::string("image of commutator differs from commutator of images");
        return std::string();
      });
      record(out, "commutator-mono-half", inst, [&] {
        GroupSubAsPcm s = sub_as_pcm(px_join(xp, yp), "S");
        EltSet xs, ys;
        for (Elt e : xp.elems) xs.push_back(s.carrier.to_sub[e]);
        for (Elt e : yp.elems) ys.push_back(s.carrier.to_sub[e]);
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        GroupSubPcm cs = peiffer_commutator(sub_pcm_validate(s.pcm, xs),
                                            sub_pcm_validate(s.pcm, ys));
        EltSet mapped;
        for (Elt e : cs.elems) mapped.push_back(s.carrier.elements[e]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != peiffer_commutator(xp, yp).elems)
          return std::string("commutator in the subobject differs from the ambient one");
        return std::string();
      });
    }
  }
  auto apcms = algebra_instances(cfg);
  for (std::size_t i = 0; i < apcms.size() && triples < 120; ++i) {
    const auto& p = apcms[i];
    if (p->x->dim == 0) continue;
    AlgebraSubPcm xp = random_algebra_sub(rng, p, 2);
    AlgebraSubPcm yp = random_algebra_sub(rng, p, 2);
    AlgebraSubPcm x = random_algebra_sub(rng, p, 1);
    AlgebraSubPcm y = random_algebra_sub(rng, p, 1);
    // force containment
    xp = px_join(xp, x);
    yp = px_join(yp, y);
    ++triples;
    std::string inst = tag(p->name, i);
    const Field& k = p->x->field;
    record(out, "commutator-monotone", inst, [&] {
      AlgebraSubPcm small = peiffer_commutator(x, y);
      AlgebraSubPcm big = peiffer_commutator(xp, yp);
      for (const Vec& v : small.space.basis)
        if (!subspace_contains(k, big.space, v))
          return std::string("smaller pair has larger commutator");
      return std::string();
    });
    record(out, "commutator-delta-vanishes", inst, [&] {
      for (const Vec& v : peiffer_commutator(xp, yp).space.basis)
        if (!is_zero(p->delta(v))) return std::string("delta nonzero on commutator");
      return std::string();
    });
    record(out, "commutator-image-vanishes", inst, [&] {
      AlgebraSubPcm c = peiffer_commutator(xp, yp);
      AlgebraSubAsPcm join = sub_as_pcm(px_join(xp, yp), "J");
      Mat c_in;
      for (const Vec& v : c.space.basis)
        c_in.push_back(span_coords(k, join.carrier.space.basis, join.carrier.space.pivots, v));
      AlgebraCokernel q =
          px_cokernel_of_kernel(sub_pcm_validate(join.pcm, subspace_span(k, c_in,
                                                                         join.pcm->x->dim)));
      Mat qx, qy;
      for (const Vec& v : xp.space.basis)
        qx.push_back(q.projection.f(
            span_coords(k, join.carrier.space.basis, join.carrier.space.pivots, v)));
      for (const Vec& v : yp.space.basis)
        qy.push_back(q.projection.f(
            span_coords(k, join.carrier.space.basis, join.carrier.space.pivots, v)));
      AlgebraSubPcm c2 = peiffer_commutator(
          sub_pcm_generate(q.pcm, qx), sub_pcm_generate(q.pcm, qy));
      if (c2.space.dim() != 0)
        return std::string("commutator of projected images is nontrivial");
      return std::string();
    });
    record(out, "commutator-epi-half", inst, [&] {
      AlgebraReflection r = reflect(p);
      Mat lhs;
      for (const Vec& v : peiffer_commutator(xp, yp).space.basis) lhs.push_back(r.eta.f(v));
      Mat fxb, fyb;
      for (const Vec& v : xp.space.basis) fxb.push_back(r.eta.f(v));
      for (const Vec& v : yp.space.basis) fyb.push_back(r.eta.f(v));
      AlgebraSubPcm fx = sub_pcm_generate(r.pcm, fxb);
      AlgebraSubPcm fy = sub_pcm_generate(r.pcm, fyb);
      if (subspace_span(k, lhs, r.pcm->x->dim).basis !=
          peiffer_commutator(fx, fy).space.basis)
        return std::string("image of commutator differs from commutator of images");
      return std::string();
    });
    record(out, "commutator-mono-half", inst, [&] {
      AlgebraSubAsPcm s = sub_as_pcm(px_join(xp, yp), "S");
      Mat xs, ys;
      for (const Vec& v : xp.space.basis)
        xs.push_back(span_coords(k, s.carrier.space.basis, s.carrier.space.pivots, v));
      for (const Vec& v : yp.space.basis)
        ys.push_back(span_coords(k, s.carrier.space.basis, s.carrier.space.pivots, v));
      AlgebraSubPcm cs =
          peiffer_commutator(sub_pcm_generate(s.pcm, xs), sub_pcm_generate(s.pcm, ys));
      Mat mapped;
      for (const Vec& v : cs.space.basis) mapped.push_back(s.inclusion.f(v));
      if (subspace_span(k, mapped, p->x->dim).basis !=
          peiffer_commutator(xp, yp).space.basis)
        return std::string("commutator in the subobject differs from the ambient one");
      return std::string();
    });
  }
}

void check_product_consistency(std::vector<TheoremReport>& out, const CheckConfig& cfg) {
  if (wants_groups(cfg)) {
    auto pcms = group_instances(cfg);
    std::size_t made = 0;
    for (std::size_t i = 0; i < pcms.size() && made < 30; ++i)
      for (std::size_t j = i; j < pcms.size() && made < 30; ++j) {
        const auto &x = pcms[i], &y = pcms[j];
        if (!(*x->b == *y->b) || x->xi.table.size() != y->xi.table.size()) continue;
        if (x->x->order * y->x->order > 16) continue;
        std::string inst = tag(x->name + "|x|" + y->name, made++);
        record(out, "product-conjugation-realization", inst, [&] {
          peiffer_product(x, y);  // realization identities are verified inside
          return std::string();
        });
        record(out, "product-symmetry", inst, [&] {
          auto iso =
              symmetric_product_isomorphism(peiffer_product(x, y), peiffer_product(y, x));
          if (!iso) return std::string("no isomorphism over B between the two orders");
          return std::string();
        });
      }
  }
  auto apcms = algebra_instances(cfg);
  std::size_t made = 0;
  for (std::size_t i = 0; i < apcms.size() && made < 30; ++i)
    for (std::size_t j = i; j < apcms.size() && made < 30; ++j) {
      const auto &x = apcms[i], &y = apcms[j];
      if (!(*x->b == *y->b)) continue;
      if (x->x->dim + y->x->dim > 8) continue;
      std::string inst = tag(x->name + "|x|" + y->name, made++);
      record(out, "product-conjugation-realization", inst, [&] {
        peiffer_product(x, y);
        return std::string();
      });
      record(out, "product-symmetry", inst, [&] {
        auto iso =
            symmetric_product_isomorphism(peiffer_product(x, y), peiffer_product(y, x));
        if (!iso) return std::string("no isomorphism over B between the two orders");
        return std::string();
      });
    }
}

void check_worked_examples(std::vector<TheoremReport>& out, const CheckConfig& cfg) {
  (void)cfg;
  record(out, "worked-example-cyclic-inversion", "c4/c2-inv", [&] {
    GroupPcmRef p = cyclic_inversion_instance();
    GroupSubPcm c = peiffer_commutator(whole_sub_pcm(p), whole_sub_pcm(p));
    if (c.elems != EltSet{0, 2}) return std::string("commutator is not {0, 2}");
    GroupReflection r = reflect(p);
    if (r.pcm->x->order != 2 || r.pcm->delta.map != std::vector<Elt>{0, 1})
      return std::string("reflection is not the identity map on C2");
    return std::string();
  });
  record(out, "worked-example-dual-numbers", "dual/F2", [&] {
    AlgebraPcmRef p = dual_numbers_instance();
    AlgebraSubPcm c = peiffer_commutator(whole_sub_pcm(p), whole_sub_pcm(p));
    if (c.space.basis != Mat{{Scalar(0), Scalar(1)}})
      return std::string("commutator is not span{t}");
    AlgebraReflection r = reflect(p);
    if (r.pcm->x->dim != 1 || r.pcm->delta.matrix != Mat{{Scalar(1)}})
      return std::string("reflection is not the identity map on F2");
    return std::string();
  });
}

std::vector<TheoremReport> run_theorem_checks(const CheckConfig& cfg) {
  std::vector<TheoremReport> out;
  check_characterization(out, cfg);
  check_reflection(out, cfg);
  check_coproduct(out, cfg);
  check_degenerations(out, cfg);
  check_corollaries(out, cfg);
  check_product_consistency(out, cfg);
  check_worked_examples(out, cfg);
  return out;
}

}  // namespace pxmod
