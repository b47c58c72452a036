#include "pxmod/action.hpp"

namespace pxmod {

// ---------------------------------------------------------------- groups --

bool GroupAction::is_trivial() const {
  for (std::size_t b = 0; b < acting->order; ++b)
    for (std::size_t x = 0; x < acted->order; ++x)
      if (table[b][x] != static_cast<Elt>(x)) return false;
  return true;
}

GroupAction action_validate(const GroupRef& acting, const GroupRef& acted,
                            const std::vector<std::vector<Elt>>& table) {
  const FiniteGroup& b = *acting;
  const FiniteGroup& x = *acted;
  if (table.size() != b.order) throw ValidationError("action table has wrong row count");
  for (const auto& row : table) {
    if (row.size() != x.order) throw ValidationError("action table has wrong column count");
    for (Elt e : row)
      if (e < 0 || static_cast<std::size_t>(e) >= x.order)
        throw ValidationError("action table entry out of range");
  }
  for (std::size_t xi = 0; xi < x.order; ++xi)
    if (table[0][xi] != static_cast<Elt>(xi))
      throw ValidationError("identity does not act trivially, witness x=" + std::to_string(xi));
  for (std::size_t bi = 0; bi < b.order; ++bi)
    for (std::size_t x1 = 0; x1 < x.order; ++x1)
      for (std::size_t x2 = 0; x2 < x.order; ++x2)
        if (table[bi][x.mult[x1][x2]] != x.mult[table[bi][x1]][table[bi][x2]])
          throw ValidationError("b.(xx') != (b.x)(b.x') at (b,x,x')=(" + std::to_string(bi) +
                                "," + std::to_string(x1) + "," + std::to_string(x2) + ")");
  for (std::size_t b1 = 0; b1 < b.order; ++b1)
    for (std::size_t b2 = 0; b2 < b.order; ++b2)
      for (std::size_t xi = 0; xi < x.order; ++xi)
        if (table[b1][table[b2][xi]] != table[b.mult[b1][b2]][xi])
          throw ValidationError("b.(b'.x) != (bb').x at (b,b',x)=(" + std::to_string(b1) + "," +
                                std::to_string(b2) + "," + std::to_string(xi) + ")");
  return GroupAction{acting, acted, table};
}

GroupAction trivial_action(const GroupRef& acting, const GroupRef& acted) {
  std::vector<std::vector<Elt>> t(acting->order, std::vector<Elt>(acted->order));
  for (auto& row : t)
    for (std::size_t x = 0; x < acted->order; ++x) row[x] = static_cast<Elt>(x);
  return GroupAction{acting, acted, t};
}

GroupAction pullback_action(const GroupMorphism& f, const GroupAction& xi) {
  if (f.target.get() != xi.acting.get() && !(*f.target == *xi.acting))
    throw ValidationError("pullback morphism does not land in the acting group");
  std::vector<std::vector<Elt>> t(f.source->order);
  for (std::size_t a = 0; a < f.source->order; ++a) t[a] = xi.table[f.map[a]];
  return action_validate(f.source, xi.acted, t);
}

ConjugationAction conjugation_action(const GroupRef& g, const EltSet& normal_sub) {
  if (!is_normal(*g, normal_sub)) throw ValidationError("subgroup is not normal");
  ConjugationAction c;
  c.sub = subgroup_as_group(*g, normal_sub);
  std::vector<std::vector<Elt>> t(g->order, std::vector<Elt>(normal_sub.size()));
  for (std::size_t gi = 0; gi < g->order; ++gi)
    for (std::size_t ni = 0; ni < c.sub.elements.size(); ++ni)
      t[gi][ni] = c.sub.to_sub[g->conj(static_cast<Elt>(gi), c.sub.elements[ni])];
  c.action = action_validate(g, c.sub.group, t);
  return c;
}

GroupAction self_conjugation(const GroupRef& g) {
  std::vector<std::vector<Elt>> t(g->order, std::vector<Elt>(g->order));
  for (std::size_t a = 0; a < g->order; ++a)
    for (std::size_t x = 0; x < g->order; ++x)
      t[a][x] = g->conj(static_cast<Elt>(a), static_cast<Elt>(x));
  return action_validate(g, g, t);
}

Elt SemidirectGroup::encode(Elt x, Elt y) const {
  return static_cast<Elt>(x * static_cast<Elt>(proj_y.target->order) + y);
}

std::pair<Elt, Elt> SemidirectGroup::decode(Elt e) const {
  Elt ny = static_cast<Elt>(proj_y.target->order);
  return {e / ny, e % ny};
}

SemidirectGroup semidirect(const GroupRef& x, const GroupRef& y, const GroupAction& y_on_x) {
  if (!(*y_on_x.acting == *y) || !(*y_on_x.acted == *x))
    throw ValidationError("semidirect action endpoints mismatch");
  std::size_t n = x->order * y->order;
  if (n > caps().max_group_order)
    throw ValidationError("semidirect product order " + std::to_string(n) + " exceeds cap");
  auto enc = [&](Elt a, Elt b) { return static_cast<Elt>(a * static_cast<Elt>(y->order) + b); };
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (std::size_t x1 = 0; x1 < x->order; ++x1)
    for (std::size_t y1 = 0; y1 < y->order; ++y1)
      for (std::size_t x2 = 0; x2 < x->order; ++x2)
        for (std::size_t y2 = 0; y2 < y->order; ++y2) {
          Elt xr = x->mult[x1][y_on_x.act(static_cast<Elt>(y1), static_cast<Elt>(x2))];
          Elt yr = y->mult[y1][y2];
          table[enc(static_cast<Elt>(x1), static_cast<Elt>(y1))]
               [enc(static_cast<Elt>(x2), static_cast<Elt>(y2))] = enc(xr, yr);
        }
  SemidirectGroup s;
  s.group = group_validate(table, x->name + ":" + y->name);
  s.action = y_on_x;
  std::vector<Elt> jx(x->order), iy(y->order), py(n);
  for (std::size_t xi = 0; xi < x->order; ++xi) jx[xi] = enc(static_cast<Elt>(xi), 0);
  for (std::size_t yi = 0; yi < y->order; ++yi) iy[yi] = enc(0, static_cast<Elt>(yi));
  for (std::size_t e = 0; e < n; ++e) py[e] = static_cast<Elt>(e % y->order);
  s.inj_x = morphism_validate(x, s.group, jx);
  s.inj_y = morphism_validate(y, s.group, iy);
  s.proj_y = morphism_validate(s.group, y, py);
  return s;
}

// -------------------------------------------------------------- algebras --

Vec AlgebraAction::act_left(const Vec& b, const Vec& x) const {
  const Field& k = acted->field;
  Vec r = vzero(acted->dim);
  for (std::size_t i = 0; i < acting->dim; ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = 0; j < acted->dim; ++j) {
      if (x[j] == 0) continue;
      r = vadd(k, r, vscale(k, fmul(k, b[i], x[j]), lambda[i][j]));
    }
  }
  return r;
}

Vec AlgebraAction::act_right(const Vec& x, const Vec& b) const {
  const Field& k = acted->field;
  Vec r = vzero(acted->dim);
  for (std::size_t i = 0; i < acted->dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < acting->dim; ++j) {
      if (b[j] == 0) continue;
      r = vadd(k, r, vscale(k, fmul(k, x[i], b[j]), rho[i][j]));
    }
  }
  return r;
}

bool AlgebraAction::is_trivial() const {
  for (const auto& m : lambda)
    for (const auto& v : m)
      if (!is_zero(v)) return false;
  for (const auto& m : rho)
    for (const auto& v : m)
      if (!is_zero(v)) return false;
  return true;
}

namespace {

std::string witness3(const char* id, std::size_t i, std::size_t j, std::size_t t) {
  return std::string(id) + " fails at basis triple (" + std::to_string(i) + "," +
         std::to_string(j) + "," + std::to_string(t) + ")";
}

}  // namespace

AlgebraAction action_validate(const AlgebraRef& acting, const AlgebraRef& acted,
                              const std::vector<Mat>& lambda, const std::vector<Mat>& rho) {
  const StructAlgebra& b = *acting;
  const StructAlgebra& x = *acted;
  if (!(b.field == x.field)) throw ValidationError("action over mismatched fields");
  if (b.variety != x.variety) throw ValidationError("action across varieties");
  auto check_shape = [&](const std::vector<Mat>& t, std::size_t d1, std::size_t d2) {
    if (t.size() != d1) throw ValidationError("action tensor has wrong shape");
    for (const auto& m : t) {
      if (m.size() != d2) throw ValidationError("action tensor has wrong shape");
      for (const auto& v : m)
        if (v.size() != x.dim) throw ValidationError("action tensor has wrong shape");
    }
  };
  check_shape(lambda, b.dim, x.dim);
  check_shape(rho, x.dim, b.dim);
  AlgebraAction xi{acting, acted, lambda, rho};
  const Field& k = x.field;
  for (auto& m : xi.lambda)
    for (auto& v : m)
      for (auto& e : v) e = fcanon(k, e);
  for (auto& m : xi.rho)
    for (auto& v : m)
      for (auto& e : v) e = fcanon(k, e);

  auto L = [&](const Vec& bb, const Vec& xx) { return xi.act_left(bb, xx); };
  auto R = [&](const Vec& xx, const Vec& bb) { return xi.act_right(xx, bb); };
  if (x.variety == AlgVariety::Associative) {
    // identities over (b, b', a, a'); each involves three of the four
    for (std::size_t bi = 0; bi < b.dim; ++bi)
      for (std::size_t bj = 0; bj < b.dim; ++bj)
        for (std::size_t ai = 0; ai < x.dim; ++ai) {
          Vec vb = b.basis_vec(bi), vb2 = b.basis_vec(bj), va = x.basis_vec(ai);
          if (L(b.mul(vb, vb2), va) != L(vb, L(vb2, va)))
            throw ValidationError(witness3("(bb').a = b.(b'.a)", bi, bj, ai));
          if (R(L(vb, va), vb2) != L(vb, R(va, vb2)))
            throw ValidationError(witness3("(b.a).b' = b.(a.b')", bi, ai, bj));
          if (R(R(va, vb), vb2) != R(va, b.mul(vb, vb2)))
            throw ValidationError(witness3("(a.b).b' = a.(bb')", ai, bi, bj));
        }
    for (std::size_t bi = 0; bi < b.dim; ++bi)
      for (std::size_t ai = 0; ai < x.dim; ++ai)
        for (std::size_t aj = 0; aj < x.dim; ++aj) {
          Vec vb = b.basis_vec(bi), va = x.basis_vec(ai), va2 = x.basis_vec(aj);
          if (x.mul(L(vb, va), va2) != L(vb, x.mul(va, va2)))
            throw ValidationError(witness3("(b.a)a' = b.(aa')", bi, ai, aj));
          if (x.mul(R(va, vb), va2) != x.mul(va, L(vb, va2)))
            throw ValidationError(witness3("(a.b)a' = a(b.a')", ai, bi, aj));
          if (R(x.mul(va, va2), vb) != x.mul(va, R(va2, vb)))
            throw ValidationError(witness3("(aa').b = a(a'.b)", ai, aj, bi));
        }
  } else {
    for (std::size_t bi = 0; bi < b.dim; ++bi)
      for (std::size_t bj = 0; bj < b.dim; ++bj)
        for (std::size_t ai = 0; ai < x.dim; ++ai) {
          Vec vb = b.basis_vec(bi), vb2 = b.basis_vec(bj), va = x.basis_vec(ai);
          if (R(R(va, vb), vb2) != vadd(k, R(R(va, vb2), vb), R(va, b.mul(vb, vb2))))
            throw ValidationError(witness3("[[a,b],b'] = [[a,b'],b] + [a,[b,b']]", ai, bi, bj));
          if (R(L(vb, va), vb2) != vadd(k, L(b.mul(vb, vb2), va), L(vb, R(va, vb2))))
            throw ValidationError(witness3("[[b,a],b'] = [[b,b'],a] + [b,[a,b']]", bi, ai, bj));
          if (L(b.mul(vb, vb2), va) != vadd(k, R(L(vb, va), vb2), L(vb, L(vb2, va))))
            throw ValidationError(witness3("[[b,b'],a] = [[b,a],b'] + [b,[b',a]]", bi, bj, ai));
        }
    for (std::size_t bi = 0; bi < b.dim; ++bi)
      for (std::size_t ai = 0; ai < x.dim; ++ai)
        for (std::size_t aj = 0; aj < x.dim; ++aj) {
          Vec vb = b.basis_vec(bi), va = x.basis_vec(ai), va2 = x.basis_vec(aj);
          if (R(x.mul(va, va2), vb) != vadd(k, x.mul(R(va, vb), va2), x.mul(va, R(va2, vb))))
            throw ValidationError(witness3("[[a,a'],b] = [[a,b],a'] + [a,[a',b]]", ai, aj, bi));
          if (x.mul(R(va, vb), va2) != vadd(k, R(x.mul(va, va2), vb), x.mul(va, L(vb, va2))))
            throw ValidationError(witness3("[[a,b],a'] = [[a,a'],b] + [a,[b,a']]", ai, bi, aj));
          if (x.mul(L(vb, va), va2) != vadd(k, x.mul(L(vb, va2), va), L(vb, x.mul(va, va2))))
            throw ValidationError(witness3("[[b,a],a'] = [[b,a'],a] + [b,[a,a']]", bi, ai, aj));
        }
  }
  return xi;
}

AlgebraAction trivial_action(const AlgebraRef& acting, const AlgebraRef& acted) {
  std::vector<Mat> lambda(acting->dim, Mat(acted->dim, vzero(acted->dim)));
  std::vector<Mat> rho(acted->dim, Mat(acting->dim, vzero(acted->dim)));
  return AlgebraAction{acting, acted, lambda, rho};
}

AlgebraAction pullback_action(const LinearMap& f, const AlgebraAction& xi) {
  if (!(*f.target == *xi.acting))
    throw ValidationError("pullback map does not land in the acting algebra");
  const StructAlgebra& a = *f.source;
  const StructAlgebra& x = *xi.acted;
  std::vector<Mat> lambda(a.dim, Mat(x.dim, vzero(x.dim)));
  std::vector<Mat> rho(x.dim, Mat(a.dim, vzero(x.dim)));
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec fb = f(a.basis_vec(i));
    for (std::size_t j = 0; j < x.dim; ++j) {
      lambda[i][j] = xi.act_left(fb, x.basis_vec(j));
      rho[j][i] = xi.act_right(x.basis_vec(j), fb);
    }
  }
  return action_validate(f.source, xi.acted, lambda, rho);
}

IdealAction conjugation_action(const AlgebraRef& a, const Subspace& ideal) {
  if (!is_ideal(*a, ideal)) throw ValidationError("subspace is not a two-sided ideal");
  IdealAction c;
  c.sub = subalgebra_as_algebra(a, ideal);
  std::size_t k = ideal.dim();
  std::vector<Mat> lambda(a->dim, Mat(k, vzero(k)));
  std::vector<Mat> rho(k, Mat(a->dim, vzero(k)));
  for (std::size_t i = 0; i < a->dim; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      lambda[i][j] =
          span_coords(a->field, ideal.basis, ideal.pivots, a->mul(a->basis_vec(i), ideal.basis[j]));
      rho[j][i] =
          span_coords(a->field, ideal.basis, ideal.pivots, a->mul(ideal.basis[j], a->basis_vec(i)));
    }
  c.action = action_validate(a, c.sub.algebra, lambda, rho);
  return c;
}

AlgebraAction self_conjugation(const AlgebraRef& a) {
  std::vector<Mat> lambda(a->dim, Mat(a->dim, vzero(a->dim)));
  std::vector<Mat> rho(a->dim, Mat(a->dim, vzero(a->dim)));
  for (std::size_t i = 0; i < a->dim; ++i)
    for (std::size_t j = 0; j < a->dim; ++j) {
      lambda[i][j] = a->c[i][j];
      rho[i][j] = a->c[i][j];
    }
  return action_validate(a, a, lambda, rho);
}

Vec SemidirectAlgebra::encode(const Vec& x, const Vec& y) const {
  Vec v = x;
  v.insert(v.end(), y.begin(), y.end());
  return v;
}

std::pair<Vec, Vec> SemidirectAlgebra::decode(const Vec& v) const {
  std::size_t nx = inj_x.source->dim;
  return {Vec(v.begin(), v.begin() + nx), Vec(v.begin() + nx, v.end())};
}

SemidirectAlgebra semidirect(const AlgebraRef& x, const AlgebraRef& y,
                             const AlgebraAction& y_on_x) {
  if (!(*y_on_x.acting == *y) || !(*y_on_x.acted == *x))
    throw ValidationError("semidirect action endpoints mismatch");
  std::size_t n = x->dim + y->dim;
  if (n > caps().max_algebra_dim)
    throw ValidationError("semidirect sum dimension " + std::to_string(n) + " exceeds cap");
  const Field& k = x->field;
  std::vector<Mat> c(n, Mat(n, vzero(n)));
  auto put = [&](std::size_t i, std::size_t j, const Vec& xpart, const Vec& ypart) {
    for (std::size_t t = 0; t < x->dim; ++t) c[i][j][t] = xpart[t];
    for (std::size_t t = 0; t < y->dim; ++t) c[i][j][x->dim + t] = ypart[t];
  };
  Vec zx = vzero(x->dim), zy = vzero(y->dim);
  for (std::size_t i = 0; i < x->dim; ++i)
    for (std::size_t j = 0; j < x->dim; ++j)
      put(i, j, x->mul(x->basis_vec(i), x->basis_vec(j)), zy);
  for (std::size_t i = 0; i < x->dim; ++i)
    for (std::size_t j = 0; j < y->dim; ++j)
      put(i, x->dim + j, y_on_x.act_right(x->basis_vec(i), y->basis_vec(j)), zy);
  for (std::size_t i = 0; i < y->dim; ++i)
    for (std::size_t j = 0; j < x->dim; ++j)
      put(x->dim + i, j, y_on_x.act_left(y->basis_vec(i), x->basis_vec(j)), zy);
  for (std::size_t i = 0; i < y->dim; ++i)
    for (std::size_t j = 0; j < y->dim; ++j)
      put(x->dim + i, x->dim + j, zx, y->mul(y->basis_vec(i), y->basis_vec(j)));
  bool lie = x->lie && y->lie;
  if (lie) {
    for (std::size_t i = 0; i < n && lie; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c[i][j] != Vec(vsub(k, vzero(n), c[j][i])) || (i == j && !is_zero(c[i][j]))) {
          lie = false;
          break;
        }
  }
  SemidirectAlgebra s;
  // the variety identity on the assembled tensor is a theorem for valid
  // actions; algebra_validate asserts it
  s.algebra = algebra_validate(k, n, x->variety, lie, c, x->name + ":" + y->name);
  s.action = y_on_x;
  Mat jx(n, vzero(x->dim)), iy(n, vzero(y->dim)), py(y->dim, vzero(n));
  for (std::size_t i = 0; i < x->dim; ++i) jx[i][i] = 1;
  for (std::size_t i = 0; i < y->dim; ++i) iy[x->dim + i][i] = 1;
  for (std::size_t i = 0; i < y->dim; ++i) py[i][x->dim + i] = 1;
  s.inj_x = linear_map_validate(x, s.algebra, jx);
  s.inj_y = linear_map_validate(y, s.algebra, iy);
  s.proj_y = linear_map_validate(s.algebra, y, py);
  return s;
}

}  // namespace pxmod
