#include "pxmod/group.hpp"

#include <algorithm>
#include <set>

namespace pxmod {

Caps& caps() {
  static Caps c;
  return c;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = a + 1; b < order; ++b)
      if (mult[a][b] != mult[b][a]) return false;
  return true;
}

int FiniteGroup::elt_order(Elt a) const {
  int n = 1;
  Elt x = a;
  while (x != 0) {
    x = op(x, a);
    ++n;
  }
  return n;
}

GroupRef group_validate(const std::vector<std::vector<Elt>>& table, const std::string& name) {
  std::size_t n = table.size();
  if (n == 0) throw ValidationError("empty multiplication table");
  if (n > caps().max_group_order)
    throw ValidationError("group order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps().max_group_order));
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("multiplication table is not square");
    for (Elt e : row)
      if (e < 0 || static_cast<std::size_t>(e) >= n)
        throw ValidationError("table entry " + std::to_string(e) + " out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[0][a] != static_cast<Elt>(a) || table[a][0] != static_cast<Elt>(a))
      throw ValidationError("index 0 is not a two-sided identity (fails at " +
                            std::to_string(a) + ")");
  }
  FiniteGroup g;
  g.name = name;
  g.order = n;
  g.mult = table;
  g.inv.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inv[a] = static_cast<Elt>(b);
        break;
      }
    if (g.inv[a] < 0)
      throw ValidationError("index " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("associativity fails at triple (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  return std::make_shared<FiniteGroup>(std::move(g));
}

bool GroupMorphism::is_injective() const {
  std::set<Elt> seen(map.begin(), map.end());
  return seen.size() == map.size();
}

bool GroupMorphism::is_surjective() const {
  std::set<Elt> seen(map.begin(), map.end());
  return seen.size() == target->order;
}

GroupMorphism morphism_validate(const GroupRef& srcref, const GroupRef& tgtref,
                                const std::vector<Elt>& map) {
  const FiniteGroup& src = *srcref;
  const FiniteGroup& tgt = *tgtref;
  if (map.size() != src.order) throw ValidationError("morphism map has wrong length");
  for (Elt e : map)
    if (e < 0 || static_cast<std::size_t>(e) >= tgt.order)
      throw ValidationError("morphism image out of range");
  if (map[0] != 0) throw ValidationError("morphism does not preserve the identity");
  for (std::size_t a = 0; a < src.order; ++a)
    for (std::size_t b = 0; b < src.order; ++b)
      if (map[src.mult[a][b]] != tgt.mult[map[a]][map[b]])
        throw ValidationError("morphism is not multiplicative at pair (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
  return GroupMorphism{srcref, tgtref, map};
}

GroupMorphism compose(const GroupMorphism& g, const GroupMorphism& f) {
  std::vector<Elt> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return GroupMorphism{f.source, g.target, m};
}

GroupMorphism identity_morphism(const GroupRef& g) {
  std::vector<Elt> m(g->order);
  for (std::size_t i = 0; i < g->order; ++i) m[i] = static_cast<Elt>(i);
  return GroupMorphism{g, g, m};
}

EltSet subgroup_generate(const FiniteGroup& g, const EltSet& gens) {
  std::vector<bool> in(g.order, false);
  std::vector<Elt> stack;
  auto push = [&](Elt e) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.order)
      throw ValidationError("generator " + std::to_string(e) + " out of range");
    if (!in[e]) {
      in[e] = true;
      stack.push_back(e);
    }
  };
  push(0);
  for (Elt e : gens) push(e);
  EltSet members{};
  while (!stack.empty()) {
    Elt a = stack.back();
    stack.pop_back();
    push(g.inv[a]);
    for (std::size_t b = 0; b < g.order; ++b)
      if (in[b]) {
        push(g.mult[a][b]);
        push(g.mult[b][a]);
      }
  }
  for (std::size_t e = 0; e < g.order; ++e)
    if (in[e]) members.push_back(static_cast<Elt>(e));
  return members;
}

EltSet normal_closure(const FiniteGroup& g, const EltSet& s) {
  // saturate under conjugation, then close to a subgroup, until stable
  std::set<Elt> cur(s.begin(), s.end());
  cur.insert(0);
  for (Elt e : s)
    if (e < 0 || static_cast<std::size_t>(e) >= g.order)
      throw ValidationError("element " + std::to_string(e) + " out of range");
  for (;;) {
    std::set<Elt> next = cur;
    for (Elt x : cur)
      for (std::size_t c = 0; c < g.order; ++c)
        next.insert(g.conj(static_cast<Elt>(c), x));
    EltSet closed = subgroup_generate(g, EltSet(next.begin(), next.end()));
    if (closed.size() == cur.size()) return closed;
    cur.clear();
    cur.insert(closed.begin(), closed.end());
  }
}

bool is_subgroup(const FiniteGroup& g, const EltSet& s) {
  std::vector<bool> in(g.order, false);
  for (Elt e : s) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.order) return false;
    in[e] = true;
  }
  if (!in[0]) return false;
  for (Elt a : s) {
    if (!in[g.inv[a]]) return false;
    for (Elt b : s)
      if (!in[g.mult[a][b]]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const EltSet& s) {
  if (!is_subgroup(g, s)) return false;
  std::vector<bool> in(g.order, false);
  for (Elt e : s) in[e] = true;
  for (Elt x : s)
    for (std::size_t c = 0; c < g.order; ++c)
      if (!in[g.conj(static_cast<Elt>(c), x)]) return false;
  return true;
}

EltSet kernel(const GroupMorphism& f) {
  EltSet k;
  for (std::size_t x = 0; x < f.source->order; ++x)
    if (f.map[x] == 0) k.push_back(static_cast<Elt>(x));
  return k;
}

EltSet image(const GroupMorphism& f) {
  std::set<Elt> im(f.map.begin(), f.map.end());
  return EltSet(im.begin(), im.end());
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const EltSet& s, const std::string& name) {
  if (!is_subgroup(g, s)) throw ValidationError("element set is not a subgroup");
  SubgroupGroup sub;
  sub.elements = s;
  std::sort(sub.elements.begin(), sub.elements.end());
  sub.to_sub.assign(g.order, -1);
  for (std::size_t i = 0; i < sub.elements.size(); ++i) sub.to_sub[sub.elements[i]] = static_cast<Elt>(i);
  std::size_t k = sub.elements.size();
  std::vector<std::vector<Elt>> table(k, std::vector<Elt>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      table[a][b] = sub.to_sub[g.mult[sub.elements[a]][sub.elements[b]]];
  sub.group = group_validate(table, name);
  return sub;
}

QuotientGroup quotient_group(const GroupRef& gref, const EltSet& n) {
  const FiniteGroup& g = *gref;
  if (!is_normal(g, n)) throw ValidationError("subgroup is not normal");
  std::vector<bool> in(g.order, false);
  for (Elt e : n) in[e] = true;
  // coset of x: minimal element of xN
  std::vector<Elt> coset_min(g.order, -1);
  for (std::size_t x = 0; x < g.order; ++x) {
    Elt m = static_cast<Elt>(g.order);
    for (Elt k : n) m = std::min(m, g.mult[x][k]);
    coset_min[x] = m;
  }
  std::set<Elt> rep_set(coset_min.begin(), coset_min.end());
  QuotientGroup q;
  q.reps.assign(rep_set.begin(), rep_set.end());
  std::vector<Elt> rep_index(g.order, -1);
  for (std::size_t i = 0; i < q.reps.size(); ++i) rep_index[q.reps[i]] = static_cast<Elt>(i);
  std::size_t m = q.reps.size();
  std::vector<std::vector<Elt>> table(m, std::vector<Elt>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a][b] = rep_index[coset_min[g.mult[q.reps[a]][q.reps[b]]]];
  q.group = group_validate(table, g.name.empty() ? "" : g.name + "/N");
  std::vector<Elt> proj(g.order);
  for (std::size_t x = 0; x < g.order; ++x) proj[x] = rep_index[coset_min[x]];
  q.projection = GroupMorphism{gref, q.group, proj};
  return q;
}

EltSet generating_set(const FiniteGroup& g) {
  EltSet gens;
  EltSet span = subgroup_generate(g, {});
  while (span.size() < g.order) {
    // pick the element whose addition grows the span the most
    std::size_t best_size = span.size();
    Elt best = -1;
    EltSet best_span;
    for (std::size_t e = 0; e < g.order; ++e) {
      if (std::binary_search(span.begin(), span.end(), static_cast<Elt>(e))) continue;
      EltSet trial = gens;
      trial.push_back(static_cast<Elt>(e));
      EltSet s = subgroup_generate(g, trial);
      if (s.size() > best_size) {
        best_size = s.size();
        best = static_cast<Elt>(e);
        best_span = s;
      }
    }
    gens.push_back(best);
    span = best_span;
  }
  return gens;
}

namespace {

// Backtracking enumeration of morphisms: assign images to generators, extend
// by closure, check consistency against the partial table.
void extend_morphisms(const GroupRef& srcref, const GroupRef& tgtref, const EltSet& gens,
                      std::size_t idx, std::vector<Elt>& partial,
                      std::vector<GroupMorphism>& out, bool bijective_only, bool first_only) {
  const FiniteGroup& src = *srcref;
  const FiniteGroup& tgt = *tgtref;
  if (idx == gens.size()) {
    // complete the map over the whole group by products of generators
    std::vector<Elt> full(src.order, -1);
    full[0] = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) full[gens[i]] = partial[i];
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < src.order; ++a) {
        if (full[a] < 0) continue;
        for (std::size_t b = 0; b < src.order; ++b) {
          if (full[b] < 0) continue;
          Elt ab = src.mult[a][b];
          Elt im = tgt.mult[full[a]][full[b]];
          if (full[ab] < 0) {
            full[ab] = im;
            changed = true;
          } else if (full[ab] != im) {
            return;  // inconsistent assignment
          }
        }
      }
    }
    for (Elt v : full)
      if (v < 0) return;  // generators did not generate (cannot happen)
    GroupMorphism m{srcref, tgtref, full};
    if (bijective_only && !m.is_injective()) return;
    out.push_back(std::move(m));
    return;
  }
  int src_ord = src.elt_order(gens[idx]);
  for (std::size_t img = 0; img < tgt.order; ++img) {
    // image order must divide the generator order
    if (src_ord % tgt.elt_order(static_cast<Elt>(img)) != 0) continue;
    partial[idx] = static_cast<Elt>(img);
    extend_morphisms(srcref, tgtref, gens, idx + 1, partial, out, bijective_only, first_only);
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<GroupMorphism> all_morphisms(const GroupRef& src, const GroupRef& tgt) {
  EltSet gens = generating_set(*src);
  std::vector<Elt> partial(gens.size());
  std::vector<GroupMorphism> out;
  extend_morphisms(src, tgt, gens, 0, partial, out, false, false);
  return out;
}

std::vector<GroupMorphism> automorphisms(const GroupRef& g) {
  EltSet gens = generating_set(*g);
  std::vector<Elt> partial(gens.size());
  std::vector<GroupMorphism> out;
  extend_morphisms(g, g, gens, 0, partial, out, true, false);
  return out;
}

std::optional<GroupMorphism> find_isomorphism(const GroupRef& src, const GroupRef& tgt) {
  if (src->order != tgt->order) return std::nullopt;
  EltSet gens = generating_set(*src);
  std::vector<Elt> partial(gens.size());
  std::vector<GroupMorphism> out;
  extend_morphisms(src, tgt, gens, 0, partial, out, true, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

GroupRef direct_product(const FiniteGroup& x, const FiniteGroup& y) {
  std::size_t n = x.order * y.order;
  if (n > caps().max_group_order)
    throw ValidationError("direct product order exceeds cap");
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  auto enc = [&](Elt a, Elt b) { return static_cast<Elt>(a * static_cast<Elt>(y.order) + b); };
  for (std::size_t a = 0; a < x.order; ++a)
    for (std::size_t b = 0; b < y.order; ++b)
      for (std::size_t c = 0; c < x.order; ++c)
        for (std::size_t d = 0; d < y.order; ++d)
          table[enc(a, b)][enc(c, d)] = enc(x.mult[a][c], y.mult[b][d]);
  return group_validate(table, x.name + "x" + y.name);
}

}  // namespace pxmod
