#include "pxmod/peiffer.hpp"

#include <algorithm>
#include <set>

namespace pxmod {

namespace {

void require_same_ambient(const GroupSubPcm& x, const GroupSubPcm& y) {
  if (x.ambient.get() == y.ambient.get()) return;
  if (!(*x.ambient->x == *y.ambient->x) || x.ambient->delta.map != y.ambient->delta.map ||
      x.ambient->xi.table != y.ambient->xi.table)
    throw ValidationError("subobjects live in different ambient objects");
}

void require_same_ambient(const AlgebraSubPcm& x, const AlgebraSubPcm& y) {
  if (x.ambient.get() == y.ambient.get()) return;
  if (!(*x.ambient->x == *y.ambient->x) || x.ambient->delta.matrix != y.ambient->delta.matrix ||
      x.ambient->xi.lambda != y.ambient->xi.lambda || x.ambient->xi.rho != y.ambient->xi.rho)
    throw ValidationError("subobjects live in different ambient objects");
}

/// Smallest subgroup containing gens that is closed under conjugation by the
/// join and under the B-action.
EltSet stable_normal_closure(const GroupPcm& amb, const EltSet& join, const EltSet& gens) {
  EltSet cur = subgroup_generate(*amb.x, gens);
  for (;;) {
    std::set<Elt> next(cur.begin(), cur.end());
    for (Elt j : join)
      for (Elt n : cur) next.insert(amb.x->conj(j, n));
    for (std::size_t b = 0; b < amb.b->order; ++b)
      for (Elt n : cur) next.insert(amb.xi.act(static_cast<Elt>(b), n));
    EltSet grown = subgroup_generate(*amb.x, EltSet(next.begin(), next.end()));
    if (grown.size() == cur.size()) return cur;
    cur = std::move(grown);
  }
}

/// Smallest subspace containing gens that is a two-sided ideal of the join
/// and stable under the B-action.
Subspace stable_ideal_closure(const AlgebraPcm& amb, const Subspace& join, const Mat& gens) {
  const Field& k = amb.x->field;
  Subspace cur = subspace_span(k, gens, amb.x->dim);
  for (;;) {
    Mat next = cur.basis;
    for (const Vec& j : join.basis)
      for (const Vec& v : cur.basis) {
        next.push_back(amb.x->mul(j, v));
        next.push_back(amb.x->mul(v, j));
      }
    for (std::size_t b = 0; b < amb.b->dim; ++b)
      for (const Vec& v : cur.basis) {
        next.push_back(amb.xi.act_left(amb.b->basis_vec(b), v));
        next.push_back(amb.xi.act_right(v, amb.b->basis_vec(b)));
      }
    Subspace grown = subspace_span(k, next, amb.x->dim);
    if (grown.dim() == cur.dim()) return cur;
    cur = std::move(grown);
  }
}

Mat mat_canon(const Field& k, Mat m) {
  for (Vec& row : m)
    for (Scalar& s : row) s = fcanon(k, s);
  return m;
}

}  // namespace

// ---------------------------------------------------------------- groups --

GroupPeifferWordSet peiffer_words(const GroupSubPcm& x, const GroupSubPcm& y) {
  require_same_ambient(x, y);
  const GroupPcm& a = *x.ambient;
  const FiniteGroup& g = *a.x;
  GroupPeifferWordSet out;
  out.ambient = x.ambient;
  auto word = [&](Elt u, Elt v) {
    // u v u^-1 (^{delta u} v)^-1
    return g.mult[g.conj(u, v)][g.inv[a.xi.act(a.delta.map[u], v)]];
  };
  for (Elt u : x.elems)
    for (Elt v : y.elems) {
      out.words.push_back({word(u, v), u, v, false});
      out.words.push_back({word(v, u), v, u, true});
    }
  for (const GroupPeifferWord& w : out.words)
    if (a.delta.map[w.word] != 0)
      throw ConsistencyError("Peiffer word does not vanish under delta");
  return out;
}

GroupSubPcm peiffer_commutator(const GroupSubPcm& x, const GroupSubPcm& y) {
  GroupSubPcm join = px_join(x, y);
  GroupPeifferWordSet ws = peiffer_words(x, y);
  std::set<Elt> gens;
  for (const GroupPeifferWord& w : ws.words) gens.insert(w.word);
  EltSet closed =
      stable_normal_closure(*x.ambient, join.elems, EltSet(gens.begin(), gens.end()));
  for (Elt e : closed)
    if (x.ambient->delta.map[e] != 0)
      throw ConsistencyError("delta does not vanish on the Peiffer commutator");
  return sub_pcm_validate(x.ambient, closed);
}

GroupPeifferProduct peiffer_product(const GroupPcmRef& xp, const GroupPcmRef& yp) {
  if (!(*xp->b == *yp->b)) throw ValidationError("factors have different bases");
  GroupRef b = xp->b;
  GroupPeifferProduct out;
  out.sem_data = semidirect(xp->x, yp->x, pullback_action(yp->delta, xp->xi));
  const SemidirectGroup& sd = out.sem_data;
  const FiniteGroup& g = *sd.group;
  std::vector<Elt> dmap(g.order);
  std::vector<std::vector<Elt>> act(b->order, std::vector<Elt>(g.order));
  for (std::size_t s = 0; s < g.order; ++s) {
    auto [x, y] = sd.decode(static_cast<Elt>(s));
    dmap[s] = b->mult[xp->delta.map[x]][yp->delta.map[y]];
    for (std::size_t bi = 0; bi < b->order; ++bi)
      act[bi][s] = sd.encode(xp->xi.act(static_cast<Elt>(bi), x),
                             yp->xi.act(static_cast<Elt>(bi), y));
  }
  out.sem = pcm_validate(sd.group, b, morphism_validate(sd.group, b, dmap),
                         action_validate(b, sd.group, act), "sem");
  // relations making the X-on-Y action a conjugation:
  // j(x) i(y) j(x)^-1 (i(^{delta x} y))^-1
  std::set<Elt> gens;
  for (std::size_t x = 0; x < xp->x->order; ++x)
    for (std::size_t y = 0; y < yp->x->order; ++y) {
      Elt w = g.mult[g.conj(sd.inj_x.map[x], sd.inj_y.map[y])]
                    [g.inv[sd.inj_y.map[yp->xi.act(xp->delta.map[x], static_cast<Elt>(y))]]];
      if (w != 0) gens.insert(w);
    }
  EltSet whole(g.order);
  for (std::size_t i = 0; i < g.order; ++i) whole[i] = static_cast<Elt>(i);
  EltSet closed = stable_normal_closure(*out.sem, whole, EltSet(gens.begin(), gens.end()));
  for (Elt e : closed)
    if (out.sem->delta.map[e] != 0)
      throw ConsistencyError("delta does not vanish on the product relations");
  out.relations = sub_pcm_validate(out.sem, closed);
  GroupCokernel cok = px_cokernel_of_kernel(out.relations);
  out.pcm = cok.pcm;
  out.proj = cok.projection;
  out.reps = cok.reps;
  std::vector<Elt> lxm(xp->x->order), lym(yp->x->order);
  for (std::size_t x = 0; x < xp->x->order; ++x) lxm[x] = out.proj.f.map[sd.inj_x.map[x]];
  for (std::size_t y = 0; y < yp->x->order; ++y) lym[y] = out.proj.f.map[sd.inj_y.map[y]];
  out.lx = px_morphism_validate(xp, out.pcm, lxm);
  out.ly = px_morphism_validate(yp, out.pcm, lym);
  // both pulled-back actions must be realized by conjugation in the result
  const FiniteGroup& p = *out.pcm->x;
  for (std::size_t x = 0; x < xp->x->order; ++x)
    for (std::size_t y = 0; y < yp->x->order; ++y) {
      if (p.conj(lxm[x], lym[y]) != lym[yp->xi.act(xp->delta.map[x], static_cast<Elt>(y))])
        throw ConsistencyError("X-action on Y is not realized by conjugation in the product");
      if (p.conj(lym[y], lxm[x]) != lxm[xp->xi.act(yp->delta.map[y], static_cast<Elt>(x))])
        throw ConsistencyError("Y-action on X is not realized by conjugation in the product");
    }
  EltSet imgs = lxm;
  imgs.insert(imgs.end(), lym.begin(), lym.end());
  if (subgroup_generate(p, imgs).size() != p.order)
    throw ConsistencyError("factor images do not generate the product");
  return out;
}

GroupInduced induced_morphism(const GroupPeifferProduct& p, const GroupPXMorphism& f,
                              const GroupPXMorphism& g) {
  if (!(*f.target->x == *g.target->x) || f.target->delta.map != g.target->delta.map ||
      f.target->xi.table != g.target->xi.table)
    throw ValidationError("cospan legs land in different objects");
  if (!(*f.source->x == *p.lx.source->x) || !(*g.source->x == *p.ly.source->x))
    throw ValidationError("cospan legs do not start at the product factors");
  GroupSubPcm comm = peiffer_commutator(px_image(f), px_image(g));
  if (comm.elems.size() > 1) return {std::nullopt, comm};
  const SemidirectGroup& sd = p.sem_data;
  const GroupPcmRef& z = f.target;
  std::vector<Elt> psi(sd.group->order);
  for (std::size_t s = 0; s < sd.group->order; ++s) {
    auto [x, y] = sd.decode(static_cast<Elt>(s));
    psi[s] = z->x->mult[f.f.map[x]][g.f.map[y]];
  }
  std::vector<Elt> phi(p.pcm->x->order);
  for (std::size_t q = 0; q < phi.size(); ++q) phi[q] = psi[p.reps[q]];
  for (std::size_t s = 0; s < sd.group->order; ++s)
    if (psi[s] != phi[p.proj.f.map[s]])
      throw ConsistencyError("mediator is not constant on cosets");
  GroupPXMorphism m = px_morphism_validate(p.pcm, z, phi);
  for (std::size_t x = 0; x < p.lx.f.map.size(); ++x)
    if (phi[p.lx.f.map[x]] != f.f.map[x])
      throw ConsistencyError("mediator does not restrict to the first leg");
  for (std::size_t y = 0; y < p.ly.f.map.size(); ++y)
    if (phi[p.ly.f.map[y]] != g.f.map[y])
      throw ConsistencyError("mediator does not restrict to the second leg");
  return {m, std::nullopt};
}

GroupReflection reflect(const GroupPcmRef& p) {
  GroupSubPcm all = whole_sub_pcm(p);
  GroupSubPcm comm = peiffer_commutator(all, all);
  GroupCokernel cok = px_cokernel_of_kernel(comm);
  CrossedCheck chk = is_crossed(*cok.pcm);
  if (!chk.crossed)
    throw ConsistencyError("reflection is not crossed: " + chk.witness);
  return {cok.pcm, cok.projection, cok.reps};
}

GroupPXMorphism reflect_induced(const GroupReflection& r, const GroupPXMorphism& f) {
  if (!(*f.source->x == *r.eta.source->x))
    throw ValidationError("morphism does not start at the reflected object");
  std::vector<Elt> phi(r.pcm->x->order);
  for (std::size_t q = 0; q < phi.size(); ++q) phi[q] = f.f.map[r.reps[q]];
  for (std::size_t x = 0; x < f.f.map.size(); ++x)
    if (f.f.map[x] != phi[r.eta.f.map[x]])
      throw ValidationError("morphism does not factor through the reflection");
  return px_morphism_validate(r.pcm, f.target, phi);
}

GroupPeifferProduct coproduct_xmod(const GroupPcmRef& xc, const GroupPcmRef& yc) {
  CrossedCheck cx = is_crossed(*xc), cy = is_crossed(*yc);
  if (!cx.crossed) throw ValidationError("first factor is not crossed: " + cx.witness);
  if (!cy.crossed) throw ValidationError("second factor is not crossed: " + cy.witness);
  GroupPeifferProduct p = peiffer_product(xc, yc);
  CrossedCheck cp = is_crossed(*p.pcm);
  if (!cp.crossed)
    throw ConsistencyError("coproduct of crossed modules is not crossed: " + cp.witness);
  return p;
}

std::optional<GroupPXMorphism> symmetric_product_isomorphism(const GroupPeifferProduct& pxy,
                                                             const GroupPeifferProduct& pyx) {
  GroupInduced med = induced_morphism(pxy, pyx.ly, pyx.lx);
  if (!med.phi) return std::nullopt;
  if (!med.phi->f.is_injective() || !med.phi->f.is_surjective()) return std::nullopt;
  return med.phi;
}

// -------------------------------------------------------------- algebras --

AlgebraPeifferWordSet peiffer_words(const AlgebraSubPcm& x, const AlgebraSubPcm& y) {
  require_same_ambient(x, y);
  const AlgebraPcm& a = *x.ambient;
  AlgebraPeifferWordSet out;
  out.ambient = x.ambient;
  const Field& k = a.x->field;
  for (std::size_t i = 0; i < x.space.dim(); ++i)
    for (std::size_t j = 0; j < y.space.dim(); ++j) {
      const Vec& u = x.space.basis[i];
      const Vec& v = y.space.basis[j];
      Vec uv = a.x->mul(u, v), vu = a.x->mul(v, u);
      out.words.push_back({vsub(k, uv, a.xi.act_left(a.delta(u), v)), i, j, 0});
      out.words.push_back({vsub(k, uv, a.xi.act_right(u, a.delta(v))), i, j, 1});
      out.words.push_back({vsub(k, vu, a.xi.act_left(a.delta(v), u)), i, j, 2});
      out.words.push_back({vsub(k, vu, a.xi.act_right(v, a.delta(u))), i, j, 3});
    }
  for (const AlgebraPeifferWord& w : out.words)
    if (!is_zero(a.delta(w.word)))
      throw ConsistencyError("Peiffer word does not vanish under delta");
  return out;
}

AlgebraSubPcm peiffer_commutator(const AlgebraSubPcm& x, const AlgebraSubPcm& y) {
  AlgebraSubPcm join = px_join(x, y);
  AlgebraPeifferWordSet ws = peiffer_words(x, y);
  Mat gens;
  for (const AlgebraPeifferWord& w : ws.words) gens.push_back(w.word);
  Subspace closed = stable_ideal_closure(*x.ambient, join.space, gens);
  for (const Vec& v : closed.basis)
    if (!is_zero(x.ambient->delta(v)))
      throw ConsistencyError("delta does not vanish on the Peiffer commutator");
  return sub_pcm_validate(x.ambient, closed);
}

AlgebraPeifferProduct peiffer_product(const AlgebraPcmRef& xp, const AlgebraPcmRef& yp) {
  if (!(*xp->b == *yp->b)) throw ValidationError("factors have different bases");
  AlgebraRef b = xp->b;
  const Field& k = xp->x->field;
  std::size_t nx = xp->x->dim, ny = yp->x->dim;
  AlgebraPeifferProduct out;
  out.sem_data = semidirect(xp->x, yp->x, pullback_action(yp->delta, xp->xi));
  const SemidirectAlgebra& sd = out.sem_data;
  std::size_t n = nx + ny;
  Mat dmat(b->dim, vzero(n));
  for (std::size_t i = 0; i < nx; ++i) {
    Vec img = xp->delta(xp->x->basis_vec(i));
    for (std::size_t r = 0; r < b->dim; ++r) dmat[r][i] = img[r];
  }
  for (std::size_t j = 0; j < ny; ++j) {
    Vec img = yp->delta(yp->x->basis_vec(j));
    for (std::size_t r = 0; r < b->dim; ++r) dmat[r][nx + j] = img[r];
  }
  std::vector<Mat> lambda(b->dim, Mat(n, vzero(n)));
  std::vector<Mat> rho(n, Mat(b->dim, vzero(n)));
  for (std::size_t bi = 0; bi < b->dim; ++bi) {
    Vec vb = b->basis_vec(bi);
    for (std::size_t i = 0; i < nx; ++i) {
      lambda[bi][i] = sd.encode(xp->xi.act_left(vb, xp->x->basis_vec(i)), vzero(ny));
      rho[i][bi] = sd.encode(xp->xi.act_right(xp->x->basis_vec(i), vb), vzero(ny));
    }
    for (std::size_t j = 0; j < ny; ++j) {
      lambda[bi][nx + j] = sd.encode(vzero(nx), yp->xi.act_left(vb, yp->x->basis_vec(j)));
      rho[nx + j][bi] = sd.encode(vzero(nx), yp->xi.act_right(yp->x->basis_vec(j), vb));
    }
  }
  out.sem = pcm_validate(sd.algebra, b, linear_map_validate(sd.algebra, b, dmat),
                         action_validate(b, sd.algebra, lambda, rho), "sem");
  // relations identifying the cross products computed in X with their
  // counterparts computed in Y
  Mat gens;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      Vec ei = xp->x->basis_vec(i), ej = yp->x->basis_vec(j);
      Vec dxi = xp->delta(ei), dyj = yp->delta(ej);
      gens.push_back(vsub(k, sd.encode(xp->xi.act_right(ei, dyj), vzero(ny)),
                          sd.encode(vzero(nx), yp->xi.act_left(dxi, ej))));
      gens.push_back(vsub(k, sd.encode(xp->xi.act_left(dyj, ei), vzero(ny)),
                          sd.encode(vzero(nx), yp->xi.act_right(ej, dxi))));
    }
  Subspace whole = subspace_span(k, mat_identity(n), n);
  Subspace closed = stable_ideal_closure(*out.sem, whole, gens);
  for (const Vec& v : closed.basis)
    if (!is_zero(out.sem->delta(v)))
      throw ConsistencyError("delta does not vanish on the product relations");
  out.relations = sub_pcm_validate(out.sem, closed);
  AlgebraCokernel cok = px_cokernel_of_kernel(out.relations);
  out.pcm = cok.pcm;
  out.proj = cok.projection;
  out.rep_coords = cok.rep_coords;
  out.lx = px_morphism_validate(xp, out.pcm, mat_mul(k, out.proj.f.matrix, sd.inj_x.matrix));
  out.ly = px_morphism_validate(yp, out.pcm, mat_mul(k, out.proj.f.matrix, sd.inj_y.matrix));
  // both pulled-back actions must be realized by multiplication in the result
  const StructAlgebra& p = *out.pcm->x;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      Vec ei = xp->x->basis_vec(i), ej = yp->x->basis_vec(j);
      Vec dxi = xp->delta(ei), dyj = yp->delta(ej);
      Vec li = out.lx.f(ei), lj = out.ly.f(ej);
      if (p.mul(li, lj) != out.lx.f(xp->xi.act_right(ei, dyj)) ||
          p.mul(li, lj) != out.ly.f(yp->xi.act_left(dxi, ej)))
        throw ConsistencyError("X-Y products are not realized by multiplication in the product");
      if (p.mul(lj, li) != out.lx.f(xp->xi.act_left(dyj, ei)) ||
          p.mul(lj, li) != out.ly.f(yp->xi.act_right(ej, dxi)))
        throw ConsistencyError("Y-X products are not realized by multiplication in the product");
    }
  Mat imgs;
  for (std::size_t i = 0; i < nx; ++i) imgs.push_back(out.lx.f(xp->x->basis_vec(i)));
  for (std::size_t j = 0; j < ny; ++j) imgs.push_back(out.ly.f(yp->x->basis_vec(j)));
  if (subalgebra_generate(p, imgs).dim() != p.dim)
    throw ConsistencyError("factor images do not generate the product");
  return out;
}

AlgebraInduced induced_morphism(const AlgebraPeifferProduct& p, const AlgebraPXMorphism& f,
                                const AlgebraPXMorphism& g) {
  if (!(*f.target->x == *g.target->x) || f.target->delta.matrix != g.target->delta.matrix ||
      f.target->xi.lambda != g.target->xi.lambda || f.target->xi.rho != g.target->xi.rho)
    throw ValidationError("cospan legs land in different objects");
  if (!(*f.source->x == *p.lx.source->x) || !(*g.source->x == *p.ly.source->x))
    throw ValidationError("cospan legs do not start at the product factors");
  AlgebraSubPcm comm = peiffer_commutator(px_image(f), px_image(g));
  if (comm.space.dim() > 0) return {std::nullopt, comm};
  const Field& k = f.source->x->field;
  const AlgebraPcmRef& z = f.target;
  std::size_t nx = p.lx.f.matrix[0].size() ? p.lx.f.matrix[0].size() : 0;
  nx = f.source->x->dim;
  std::size_t ny = g.source->x->dim;
  std::size_t nz = z->x->dim;
  Mat psi(nz, vzero(nx + ny));
  for (std::size_t r = 0; r < nz; ++r) {
    for (std::size_t c = 0; c < nx; ++c) psi[r][c] = f.f.matrix[r][c];
    for (std::size_t c = 0; c < ny; ++c) psi[r][nx + c] = g.f.matrix[r][c];
  }
  std::size_t m = p.pcm->x->dim;
  Mat phi(nz, vzero(m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < nz; ++r) phi[r][j] = psi[r][p.rep_coords[j]];
  // psi must be constant on cosets: phi . proj = psi
  if (mat_canon(k, mat_mul(k, phi, p.proj.f.matrix)) != mat_canon(k, psi))
    throw ConsistencyError("mediator is not constant on cosets");
  AlgebraPXMorphism med = px_morphism_validate(p.pcm, z, phi);
  if (mat_canon(k, mat_mul(k, phi, p.lx.f.matrix)) != mat_canon(k, f.f.matrix) ||
      mat_canon(k, mat_mul(k, phi, p.ly.f.matrix)) != mat_canon(k, g.f.matrix))
    throw ConsistencyError("mediator does not restrict to the legs");
  return {med, std::nullopt};
}

AlgebraReflection reflect(const AlgebraPcmRef& p) {
  AlgebraSubPcm all = whole_sub_pcm(p);
  AlgebraSubPcm comm = peiffer_commutator(all, all);
  AlgebraCokernel cok = px_cokernel_of_kernel(comm);
  CrossedCheck chk = is_crossed(*cok.pcm);
  if (!chk.crossed)
    throw ConsistencyError("reflection is not crossed: " + chk.witness);
  return {cok.pcm, cok.projection, cok.rep_coords};
}

AlgebraPXMorphism reflect_induced(const AlgebraReflection& r, const AlgebraPXMorphism& f) {
  if (!(*f.source->x == *r.eta.source->x))
    throw ValidationError("morphism does not start at the reflected object");
  const Field& k = f.source->x->field;
  std::size_t nz = f.target->x->dim, m = r.pcm->x->dim;
  Mat phi(nz, vzero(m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t rr = 0; rr < nz; ++rr) phi[rr][j] = f.f.matrix[rr][r.rep_coords[j]];
  if (mat_canon(k, mat_mul(k, phi, r.eta.f.matrix)) != mat_canon(k, f.f.matrix))
    throw ValidationError("morphism does not factor through the reflection");
  return px_morphism_validate(r.pcm, f.target, phi);
}

AlgebraPeifferProduct coproduct_xmod(const AlgebraPcmRef& xc, const AlgebraPcmRef& yc) {
  CrossedCheck cx = is_crossed(*xc), cy = is_crossed(*yc);
  if (!cx.crossed) throw ValidationError("first factor is not crossed: " + cx.witness);
  if (!cy.crossed) throw ValidationError("second factor is not crossed: " + cy.witness);
  AlgebraPeifferProduct p = peiffer_product(xc, yc);
  CrossedCheck cp = is_crossed(*p.pcm);
  if (!cp.crossed)
    throw ConsistencyError("coproduct of crossed modules is not crossed: " + cp.witness);
  return p;
}

std::optional<AlgebraPXMorphism> symmetric_product_isomorphism(const AlgebraPeifferProduct& pxy,
                                                               const AlgebraPeifferProduct& pyx) {
  AlgebraInduced med = induced_morphism(pxy, pyx.ly, pyx.lx);
  if (!med.phi) return std::nullopt;
  if (!med.phi->f.is_injective() || !med.phi->f.is_surjective()) return std::nullopt;
  return med.phi;
}

}  // namespace pxmod
