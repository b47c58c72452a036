#include "pxmod/catalog.hpp"

#include "pxmod/action.hpp"

#include <map>
#include <set>

namespace pxmod {

std::uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t Rng::below(std::size_t n) { return n ? static_cast<std::size_t>(next() % n) : 0; }

namespace {

std::vector<std::vector<Elt>> cyclic_table(std::size_t n) {
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Elt>((i + j) % n);
  return t;
}

/// Elements x^i y^j (encode i + n*j) with y x = x^-1 y and y^2 = x^t.
/// t = 0 gives the dihedral group of order 2n, (n,t) = (4,2) the quaternions.
std::vector<std::vector<Elt>> bicyclic_table(std::size_t n, std::size_t t) {
  std::vector<std::vector<Elt>> m(2 * n, std::vector<Elt>(2 * n));
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t b = 0; b < 2 * n; ++b) {
      std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
      std::size_t ii = (i + (j ? n - k : k)) % n;
      if (j && l) ii = (ii + t) % n;
      m[a][b] = static_cast<Elt>(ii + n * ((j + l) % 2));
    }
  return m;
}

GroupRef make(const std::vector<std::vector<Elt>>& t, const std::string& name) {
  return group_validate(t, name);
}

std::vector<EltSet> proper_normal_subgroups(const FiniteGroup& g) {
  std::set<EltSet> seen;
  for (Elt e = 1; e < static_cast<Elt>(g.order); ++e) {
    EltSet n = normal_closure(g, {e});
    if (n.size() < g.order) seen.insert(n);
  }
  return std::vector<EltSet>(seen.begin(), seen.end());
}

/// (N -> G, inclusion, conjugation): always a crossed module.
GroupPcmRef inclusion_pcm(const GroupRef& g, const EltSet& normal_sub, const std::string& name) {
  ConjugationAction ca = conjugation_action(g, normal_sub);
  std::vector<Elt> incl(ca.sub.elements.begin(), ca.sub.elements.end());
  return pcm_validate(ca.sub.group, g, morphism_validate(ca.sub.group, g, incl), ca.action,
                      name);
}

AlgebraRef zero_algebra(long p, std::size_t dim, const std::string& name) {
  return algebra_validate(Field::prime(p), dim, AlgVariety::Associative, false,
                          std::vector<Mat>(dim, Mat(dim, vzero(dim))), name);
}

AlgebraRef ground_field(long p) {
  std::vector<Mat> c(1, Mat(1, Vec{Scalar(1)}));
  return algebra_validate(Field::prime(p), 1, AlgVariety::Associative, false, c,
                          "F" + std::to_string(p));
}

AlgebraRef dual_numbers(long p) {
  std::vector<Mat> c(2, Mat(2, vzero(2)));
  c[0][0] = {Scalar(1), Scalar(0)};
  c[0][1] = {Scalar(0), Scalar(1)};
  c[1][0] = {Scalar(0), Scalar(1)};
  return algebra_validate(Field::prime(p), 2, AlgVariety::Associative, false, c,
                          "dual" + std::to_string(p));
}

AlgebraRef truncated_poly3(long p) {
  // k[t]/(t^3), basis 1, t, t^2
  std::vector<Mat> c(3, Mat(3, vzero(3)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i + j < 3) c[i][j][i + j] = Scalar(1);
  return algebra_validate(Field::prime(p), 3, AlgVariety::Associative, false, c,
                          "trunc" + std::to_string(p));
}

AlgebraRef split_pair(long p) {
  // k x k componentwise
  std::vector<Mat> c(2, Mat(2, vzero(2)));
  c[0][0] = {Scalar(1), Scalar(0)};
  c[1][1] = {Scalar(0), Scalar(1)};
  return algebra_validate(Field::prime(p), 2, AlgVariety::Associative, false, c,
                          "split" + std::to_string(p));
}

AlgebraRef nonabelian_lie2(long p) {
  // [e0, e1] = e0
  std::vector<Mat> c(2, Mat(2, vzero(2)));
  c[0][1] = {Scalar(1), Scalar(0)};
  c[1][0] = {Scalar(-1), Scalar(0)};
  return algebra_validate(Field::prime(p), 2, AlgVariety::Leibniz, true, c,
                          "lie2_" + std::to_string(p));
}

AlgebraRef heisenberg3(long p) {
  // [e0, e1] = e2 central
  std::vector<Mat> c(3, Mat(3, vzero(3)));
  c[0][1] = {Scalar(0), Scalar(0), Scalar(1)};
  c[1][0] = {Scalar(0), Scalar(0), Scalar(-1)};
  return algebra_validate(Field::prime(p), 3, AlgVariety::Leibniz, true, c,
                          "heis" + std::to_string(p));
}

AlgebraRef leibniz2(long p) {
  // [e0, e0] = e1, a non-Lie Leibniz algebra
  std::vector<Mat> c(2, Mat(2, vzero(2)));
  c[0][0] = {Scalar(0), Scalar(1)};
  return algebra_validate(Field::prime(p), 2, AlgVariety::Leibniz, false, c,
                          "leib2_" + std::to_string(p));
}

AlgebraRef leibniz3(long p) {
  std::vector<Mat> c(3, Mat(3, vzero(3)));
  c[0][0] = {Scalar(0), Scalar(1), Scalar(0)};
  return algebra_validate(Field::prime(p), 3, AlgVariety::Leibniz, false, c,
                          "leib3_" + std::to_string(p));
}

AlgebraRef zero_leibniz(long p, std::size_t dim) {
  return algebra_validate(Field::prime(p), dim, AlgVariety::Leibniz, true,
                          std::vector<Mat>(dim, Mat(dim, vzero(dim))),
                          "abelian" + std::to_string(dim) + "_" + std::to_string(p));
}

AlgebraAction multiplication_action(const AlgebraRef& b, const AlgebraRef& x,
                                    const LinearMap& f) {
  return pullback_action(f, self_conjugation(x));
}

/// (I -> A, inclusion, multiplication): always a crossed module.
AlgebraPcmRef ideal_pcm(const AlgebraRef& a, const Subspace& ideal, const std::string& name) {
  IdealAction ia = conjugation_action(a, ideal);
  LinearMap incl = ia.sub.inclusion;
  return pcm_validate(ia.sub.algebra, a, incl, ia.action, name);
}

std::vector<Subspace> proper_ideals(const AlgebraRef& a) {
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < a->dim; ++i) {
    Subspace s = ideal_closure(*a, {a->basis_vec(i)});
    if (s.dim() == 0 || s.dim() == a->dim) continue;
    bool dup = false;
    for (const Subspace& t : out) dup = dup || t.basis == s.basis;
    if (!dup) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<GroupRef> catalog_groups(std::size_t max_order) {
  std::vector<GroupRef> all = {
      make(cyclic_table(1), "1"),       make(cyclic_table(2), "C2"),
      make(cyclic_table(3), "C3"),      make(cyclic_table(4), "C4"),
      direct_product(*make(cyclic_table(2), "C2"), *make(cyclic_table(2), "C2")),
      make(cyclic_table(6), "C6"),      make(bicyclic_table(3, 0), "S3"),
      make(cyclic_table(8), "C8"),      make(bicyclic_table(4, 0), "D4"),
      make(bicyclic_table(4, 2), "Q8"), make(cyclic_table(16), "C16"),
      make(bicyclic_table(8, 0), "D8")};
  std::vector<GroupRef> out;
  for (auto& g : all)
    if (g->order <= max_order) out.push_back(g);
  return out;
}

std::vector<AlgebraRef> catalog_algebras(std::size_t max_dim) {
  std::vector<AlgebraRef> all = {
      zero_algebra(2, 1, "z1_2"), zero_algebra(2, 2, "z2_2"), ground_field(2),
      dual_numbers(2),            split_pair(2),              truncated_poly3(2),
      ground_field(3),            dual_numbers(3),            zero_algebra(3, 1, "z1_3"),
      zero_leibniz(2, 1),         zero_leibniz(2, 2),         leibniz2(2),
      leibniz3(2),                heisenberg3(2),             nonabelian_lie2(3),
      heisenberg3(3),             leibniz2(3),                zero_leibniz(3, 1)};
  std::vector<AlgebraRef> out;
  for (auto& a : all)
    if (a->dim <= max_dim) out.push_back(a);
  return out;
}

AutomorphismGroup automorphism_group(const GroupRef& g) {
  std::vector<GroupMorphism> elems = automorphisms(g);
  std::vector<Elt> idmap = identity_morphism(g).map;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].map == idmap) {
      std::swap(elems[0], elems[i]);
      break;
    }
  std::map<std::vector<Elt>, Elt> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].map] = static_cast<Elt>(i);
  std::vector<std::vector<Elt>> table(elems.size(), std::vector<Elt>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      table[i][j] = index.at(compose(elems[i], elems[j]).map);
  return {group_validate(table, "Aut(" + g->name + ")"), elems};
}

std::vector<GroupPcmRef> catalog_group_pcms(std::size_t max_order) {
  std::vector<GroupPcmRef> out;
  auto groups = catalog_groups(std::min<std::size_t>(max_order, 8));
  for (const auto& g : groups) out.push_back(identity_pcm(g));
  auto c2 = make(cyclic_table(2), "C2");
  auto c4 = make(cyclic_table(4), "C4");
  out.push_back(trivial_pcm(c4, c2));
  out.push_back(trivial_pcm(make(bicyclic_table(3, 0), "S3"), c2));  // not crossed
  // C4 -> C2 with inversion: pre-crossed, not crossed
  std::vector<std::vector<Elt>> inv_table = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  out.push_back(pcm_validate(c4, c2, morphism_validate(c4, c2, {0, 1, 0, 1}),
                             action_validate(c2, c4, inv_table), "c4/c2-inv"));
  if (max_order >= 8) {
    // C8 -> C2 with inversion
    auto c8 = make(cyclic_table(8), "C8");
    std::vector<std::vector<Elt>> inv8(2, std::vector<Elt>(8));
    for (Elt e = 0; e < 8; ++e) {
      inv8[0][e] = e;
      inv8[1][e] = static_cast<Elt>((8 - e) % 8);
    }
    out.push_back(pcm_validate(c8, c2, morphism_validate(c8, c2, {0, 1, 0, 1, 0, 1, 0, 1}),
                               action_validate(c2, c8, inv8), "c8/c2-inv"));
    // D4 -> C2 counting reflections, trivial action: pre-crossed, not crossed
    auto d4 = make(bicyclic_table(4, 0), "D4");
    std::vector<Elt> refl(8);
    for (Elt e = 0; e < 8; ++e) refl[e] = static_cast<Elt>(e / 4);
    out.push_back(pcm_validate(d4, c2, morphism_validate(d4, c2, refl),
                               trivial_action(c2, d4), "d4/c2"));
  }
  for (const auto& g : groups) {
    if (g->order < 4) continue;
    for (const EltSet& n : proper_normal_subgroups(*g)) {
      if (n.size() == 1) continue;
      out.push_back(inclusion_pcm(g, n, g->name + "-incl" + std::to_string(n.size())));
    }
  }
  return out;
}

std::vector<GroupPcmRef> catalog_group_crossed(const GroupRef& b, std::size_t max_order) {
  std::vector<GroupPcmRef> out = {identity_pcm(b)};
  for (const auto& x : catalog_groups(max_order)) {
    if (!x->is_abelian()) continue;
    for (const GroupMorphism& d : all_morphisms(x, b)) {
      try {
        GroupPcmRef p = pcm_validate(x, b, d, trivial_action(b, x));
        if (is_crossed(*p).crossed) out.push_back(p);
      } catch (const ValidationError&) {
      }
    }
    if (out.size() > 24) break;  // probes, not a census
  }
  for (const EltSet& n : proper_normal_subgroups(*b))
    out.push_back(inclusion_pcm(b, n, b->name + "-incl"));
  return out;
}

std::vector<AlgebraPcmRef> catalog_algebra_pcms(std::size_t max_dim) {
  std::vector<AlgebraPcmRef> out;
  for (const auto& a : catalog_algebras(max_dim)) out.push_back(identity_pcm(a));
  for (long p : {2L, 3L}) {
    auto d = dual_numbers(p);
    auto k = ground_field(p);
    // delta(a + bt) = a with the multiplication action: pre-crossed, not crossed
    LinearMap f = linear_map_validate(d, k, {{Scalar(1), Scalar(0)}});
    LinearMap sect = linear_map_validate(k, d, {{Scalar(1)}, {Scalar(0)}});
    out.push_back(pcm_validate(d, k, f, multiplication_action(k, d, sect), "dual/F" +
                                                                               std::to_string(p)));
    out.push_back(trivial_pcm(zero_algebra(p, 2, "z"), k));
  }
  // trivial delta + trivial action on a non-abelian Leibniz carrier: not crossed
  out.push_back(trivial_pcm(leibniz2(2), zero_leibniz(2, 1)));
  for (const auto& a : catalog_algebras(max_dim))
    for (const Subspace& i : proper_ideals(a))
      out.push_back(ideal_pcm(a, i, a->name + "-ideal"));
  return out;
}

std::vector<AlgebraPcmRef> catalog_algebra_crossed(const AlgebraRef& b, std::size_t max_dim) {
  std::vector<AlgebraPcmRef> out = {identity_pcm(b)};
  for (std::size_t dim = 1; dim + 0 <= std::min<std::size_t>(max_dim, 2); ++dim) {
    AlgebraRef z = b->variety == AlgVariety::Leibniz
                       ? algebra_validate(b->field, dim, AlgVariety::Leibniz, true,
                                          std::vector<Mat>(dim, Mat(dim, vzero(dim))), "z")
                       : algebra_validate(b->field, dim, AlgVariety::Associative, false,
                                          std::vector<Mat>(dim, Mat(dim, vzero(dim))), "z");
    out.push_back(trivial_pcm(z, b));
  }
  for (const Subspace& i : proper_ideals(b)) out.push_back(ideal_pcm(b, i, b->name + "-ideal"));
  return out;
}

std::vector<GroupPcmRef> generate_group_pcms(std::size_t max_order, std::size_t budget) {
  std::vector<GroupPcmRef> out;
  if (budget == 0) return out;
  auto groups = catalog_groups(max_order);
  for (const auto& b : groups) {
    for (const auto& x : groups) {
      AutomorphismGroup aut = automorphism_group(x);
      std::vector<GroupMorphism> deltas = all_morphisms(x, b);
      for (const GroupMorphism& h : all_morphisms(b, aut.group)) {
        std::vector<std::vector<Elt>> table(b->order, std::vector<Elt>(x->order));
        for (std::size_t bi = 0; bi < b->order; ++bi) table[bi] = aut.elements[h.map[bi]].map;
        GroupAction xi = action_validate(b, x, table);
        for (const GroupMorphism& d : deltas) {
          try {
            out.push_back(pcm_validate(x, b, d, xi,
                                       x->name + "/" + b->name + "#" +
                                           std::to_string(out.size())));
          } catch (const ValidationError&) {
          }
          if (out.size() >= budget) return out;
        }
      }
    }
  }
  return out;
}

std::vector<AlgebraPcmRef> generate_algebra_pcms(std::size_t max_dim, std::size_t budget) {
  std::vector<AlgebraPcmRef> out;
  if (budget == 0) return out;
  auto algebras = catalog_algebras(max_dim);
  for (const auto& b : algebras) {
    for (const auto& x : algebras) {
      if (!(b->field == x->field) || b->variety != x->variety) continue;
      std::vector<LinearMap> deltas;
      try {
        deltas = all_linear_maps(x, b);
      } catch (const ValidationError&) {
        continue;  // enumeration too large
      }
      std::vector<AlgebraAction> actions = {trivial_action(b, x)};
      try {
        for (const LinearMap& f : all_linear_maps(b, x)) {
          try {
            actions.push_back(multiplication_action(b, x, f));
          } catch (const ValidationError&) {
          }
        }
      } catch (const ValidationError&) {
      }
      for (const AlgebraAction& xi : actions) {
        for (const LinearMap& d : deltas) {
          try {
            out.push_back(pcm_validate(x, b, d, xi,
                                       x->name + "/" + b->name + "#" +
                                           std::to_string(out.size())));
          } catch (const ValidationError&) {
          }
          if (out.size() >= budget) return out;
        }
      }
    }
  }
  for (const auto& a : algebras)
    for (const Subspace& i : proper_ideals(a)) {
      out.push_back(ideal_pcm(a, i, a->name + "-ideal"));
      if (out.size() >= budget) return out;
    }
  return out;
}

std::vector<GroupPcmRef> random_group_pcms(std::uint64_t seed, std::size_t count,
                                           std::size_t max_order) {
  std::vector<GroupPcmRef> pool = generate_group_pcms(max_order, 4 * count + 64);
  for (auto& p : catalog_group_pcms(max_order)) pool.push_back(p);
  Rng rng(seed);
  rng.shuffle(pool);
  std::vector<GroupPcmRef> out;
  for (std::size_t i = 0; i < count && !pool.empty(); ++i) out.push_back(pool[i % pool.size()]);
  return out;
}

std::vector<AlgebraPcmRef> random_algebra_pcms(std::uint64_t seed, std::size_t count,
                                               std::size_t max_dim) {
  std::vector<AlgebraPcmRef> pool = generate_algebra_pcms(max_dim, 4 * count + 64);
  for (auto& p : catalog_algebra_pcms(max_dim)) pool.push_back(p);
  Rng rng(seed ^ 0xa15ebfa5ULL);
  rng.shuffle(pool);
  std::vector<AlgebraPcmRef> out;
  for (std::size_t i = 0; i < count && !pool.empty(); ++i) out.push_back(pool[i % pool.size()]);
  return out;
}

}  // namespace pxmod
