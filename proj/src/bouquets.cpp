#include "xcohom/bouquets.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace xcohom {

bool operator==(const Morphism& a, const Morphism& b) {
  return a.src == b.src && a.payload == b.payload && a.dst == b.dst;
}
bool operator<(const Morphism& a, const Morphism& b) {
  return std::tie(a.src, a.payload, a.dst) < std::tie(b.src, b.payload, b.dst);
}

namespace {

struct ObjectUnionFind {
  std::vector<int> parent;
  explicit ObjectUnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::map<std::tuple<int, int, int>, int> triple_index(const std::vector<Morphism>& mors) {
  std::map<std::tuple<int, int, int>, int> index;
  for (int i = 0; i < (int)mors.size(); ++i)
    index[{mors[i].src, mors[i].payload, mors[i].dst}] = i;
  return index;
}

}  // namespace

int GGroupoid::find_mor(int src, int payload, int dst) const {
  for (int i = 0; i < (int)mors.size(); ++i)
    if (mors[i].src == src && mors[i].payload == payload && mors[i].dst == dst) return i;
  return -1;
}

std::vector<int> GGroupoid::aut_mors(int obj) const {
  std::vector<int> result = {ids[obj]};
  for (int i = 0; i < (int)mors.size(); ++i)
    if (mors[i].src == obj && mors[i].dst == obj && i != ids[obj]) result.push_back(i);
  return result;
}

GGroupoid make_ggroupoid(int n_objects, std::vector<Morphism> mors, std::vector<int> compose_table,
                         FiniteGroup g, std::vector<int> act_obj, std::vector<int> act_mor) {
  int nm = (int)mors.size();
  if (n_objects < 0 || (int)compose_table.size() != nm * nm)
    throw ValidationError("BadShape", {}, "compose table has wrong shape");
  if ((int)act_obj.size() != g.order * n_objects || (int)act_mor.size() != g.order * nm)
    throw ValidationError("BadShape", {}, "action tables have wrong shape");

  auto index = triple_index(mors);
  if ((int)index.size() != nm)
    throw ValidationError("CategoryAxiomViolation", {}, "duplicate morphism triples");
  for (int i = 0; i < nm; ++i)
    if (mors[i].src < 0 || mors[i].src >= n_objects || mors[i].dst < 0 || mors[i].dst >= n_objects)
      throw ValidationError("BadShape", {i}, "morphism endpoints out of range");

  auto comp = [&](int after, int first) { return compose_table[after * nm + first]; };

  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) {
      bool composable = mors[a].dst == mors[b].src;
      int r = comp(b, a);
      if (composable != (r >= 0))
        throw ValidationError("CategoryAxiomViolation", {b, a},
                              "composition defined iff morphisms are composable");
      if (r >= 0) {
        if (r >= nm || mors[r].src != mors[a].src || mors[r].dst != mors[b].dst)
          throw ValidationError("CategoryAxiomViolation", {b, a}, "composite has wrong endpoints");
      }
    }

  std::vector<std::vector<int>> by_src(n_objects);
  for (int i = 0; i < nm; ++i) by_src[mors[i].src].push_back(i);

  for (int a = 0; a < nm; ++a)
    for (int b : by_src[mors[a].dst])
      for (int c : by_src[mors[b].dst])
        if (comp(c, comp(b, a)) != comp(comp(c, b), a))
          throw ValidationError("CategoryAxiomViolation", {c, b, a},
                                "composition is not associative");

  std::vector<int> ids(n_objects, -1);
  for (int obj = 0; obj < n_objects; ++obj) {
    for (int e = 0; e < nm && ids[obj] < 0; ++e) {
      if (mors[e].src != obj || mors[e].dst != obj) continue;
      bool ok = true;
      for (int a = 0; a < nm && ok; ++a) {
        if (mors[a].dst == obj) ok = comp(e, a) == a;
        if (ok && mors[a].src == obj) ok = comp(a, e) == a;
      }
      if (ok) ids[obj] = e;
    }
    if (ids[obj] < 0)
      throw ValidationError("CategoryAxiomViolation", {obj}, "object has no identity morphism");
  }

  std::vector<int> invs(nm, -1);
  for (int a = 0; a < nm; ++a) {
    for (int b : by_src[mors[a].dst])
      if (mors[b].dst == mors[a].src && comp(b, a) == ids[mors[a].src] &&
          comp(a, b) == ids[mors[a].dst]) {
        invs[a] = b;
        break;
      }
    if (invs[a] < 0)
      throw ValidationError("CategoryAxiomViolation", {a}, "morphism has no inverse");
  }

  auto aobj = [&](int gg, int o) { return act_obj[gg * n_objects + o]; };
  auto amor = [&](int gg, int m) { return act_mor[gg * nm + m]; };
  for (int gg = 0; gg < g.order; ++gg) {
    for (int o = 0; o < n_objects; ++o)
      if (aobj(gg, o) < 0 || aobj(gg, o) >= n_objects)
        throw ValidationError("BadShape", {gg, o}, "object action value out of range");
    for (int m = 0; m < nm; ++m) {
      int im = amor(gg, m);
      if (im < 0 || im >= nm)
        throw ValidationError("BadShape", {gg, m}, "morphism action value out of range");
      if (mors[im].src != aobj(gg, mors[m].src) || mors[im].dst != aobj(gg, mors[m].dst))
        throw ValidationError("ActionNotFunctorial", {gg, m}, "action breaks morphism typing");
    }
  }
  for (int o = 0; o < n_objects; ++o)
    if (aobj(FiniteGroup::id, o) != o)
      throw ValidationError("ActionNotFunctorial", {o}, "identity group element moves an object");
  for (int m = 0; m < nm; ++m)
    if (amor(FiniteGroup::id, m) != m)
      throw ValidationError("ActionNotFunctorial", {m}, "identity group element moves a morphism");
  for (int g1 = 0; g1 < g.order; ++g1)
    for (int g2 = 0; g2 < g.order; ++g2) {
      int g12 = g.mul(g1, g2);
      for (int o = 0; o < n_objects; ++o)
        if (aobj(g12, o) != aobj(g1, aobj(g2, o)))
          throw ValidationError("ActionNotFunctorial", {g1, g2, o},
                                "object action is not multiplicative");
      for (int m = 0; m < nm; ++m)
        if (amor(g12, m) != amor(g1, amor(g2, m)))
          throw ValidationError("ActionNotFunctorial", {g1, g2, m},
                                "morphism action is not multiplicative");
    }
  for (int gg = 0; gg < g.order; ++gg) {
    for (int o = 0; o < n_objects; ++o)
      if (amor(gg, ids[o]) != ids[aobj(gg, o)])
        throw ValidationError("ActionNotFunctorial", {gg, o},
                              "action does not preserve identities");
    for (int a = 0; a < nm; ++a)
      for (int b : by_src[mors[a].dst])
        if (amor(gg, comp(b, a)) != comp(amor(gg, b), amor(gg, a)))
          throw ValidationError("ActionNotFunctorial", {gg, b, a},
                                "action does not preserve composition");
  }

  bool bouquet = n_objects >= 1;
  if (bouquet) {
    ObjectUnionFind uf(n_objects);
    for (const auto& m : mors) uf.unite(m.src, m.dst);
    for (int o = 1; o < n_objects && bouquet; ++o) bouquet = uf.find(o) == uf.find(0);
  }

  GGroupoid result;
  result.n_objects = n_objects;
  result.G = std::move(g);
  result.mors = std::move(mors);
  result.compose_table = std::move(compose_table);
  result.ids = std::move(ids);
  result.invs = std::move(invs);
  result.act_obj = std::move(act_obj);
  result.act_mor = std::move(act_mor);
  result.bouquet = bouquet;
  return result;
}

ObjectAutGroup object_aut_group(const GGroupoid& gamma, int obj) {
  ObjectAutGroup aut;
  aut.mor_ids = gamma.aut_mors(obj);
  int n = (int)aut.mor_ids.size();
  aut.index_of_mor.assign(gamma.morphism_count(), -1);
  for (int i = 0; i < n; ++i) aut.index_of_mor[aut.mor_ids[i]] = i;

  std::vector<int> mul((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = gamma.compose(aut.mor_ids[i], aut.mor_ids[j]);
      check(c >= 0 && aut.index_of_mor[c] >= 0, "automorphisms not closed under composition");
      mul[i * n + j] = aut.index_of_mor[c];
    }
  aut.group = make_group_flat(n, std::move(mul));
  return aut;
}

void check_functor(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f) {
  check((int)f.obj_map.size() == src.n_objects && (int)f.mor_map.size() == src.morphism_count(),
        "functor tables have wrong shape");
  for (int o : f.obj_map) check(o >= 0 && o < dst.n_objects, "functor object image out of range");
  for (int i = 0; i < src.morphism_count(); ++i) {
    int im = f.mor_map[i];
    check(im >= 0 && im < dst.morphism_count(), "functor morphism image out of range");
    check(dst.mors[im].src == f.obj_map[src.mors[i].src] &&
              dst.mors[im].dst == f.obj_map[src.mors[i].dst],
          "functor breaks morphism typing");
  }
  for (int o = 0; o < src.n_objects; ++o)
    check(f.mor_map[src.ids[o]] == dst.ids[f.obj_map[o]], "functor breaks identities");
  for (int a = 0; a < src.morphism_count(); ++a)
    for (int b = 0; b < src.morphism_count(); ++b) {
      int c = src.compose(b, a);
      if (c < 0) continue;
      check(f.mor_map[c] == dst.compose(f.mor_map[b], f.mor_map[a]),
            "functor breaks composition");
    }
}

void check_equivariant(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f) {
  check(src.G == dst.G, "equivariance needs the same acting group");
  for (int g = 0; g < src.G.order; ++g) {
    for (int o = 0; o < src.n_objects; ++o)
      check(f.obj_map[src.gobj(g, o)] == dst.gobj(g, f.obj_map[o]),
            "functor is not equivariant on objects");
    for (int m = 0; m < src.morphism_count(); ++m)
      check(f.mor_map[src.gmor(g, m)] == dst.gmor(g, f.mor_map[m]),
            "functor is not equivariant on morphisms");
  }
}

bool is_full(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f) {
  for (int a = 0; a < src.n_objects; ++a)
    for (int b = 0; b < src.n_objects; ++b) {
      for (int w = 0; w < dst.morphism_count(); ++w) {
        if (dst.mors[w].src != f.obj_map[a] || dst.mors[w].dst != f.obj_map[b]) continue;
        bool hit = false;
        for (int m = 0; m < src.morphism_count() && !hit; ++m)
          hit = src.mors[m].src == a && src.mors[m].dst == b && f.mor_map[m] == w;
        if (!hit) return false;
      }
    }
  return true;
}

bool is_faithful(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f) {
  (void)dst;
  for (int m1 = 0; m1 < src.morphism_count(); ++m1)
    for (int m2 = m1 + 1; m2 < src.morphism_count(); ++m2)
      if (src.mors[m1].src == src.mors[m2].src && src.mors[m1].dst == src.mors[m2].dst &&
          f.mor_map[m1] == f.mor_map[m2])
        return false;
  return true;
}

bool is_essentially_surjective(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f) {
  if (dst.n_objects == 0) return true;
  ObjectUnionFind uf(dst.n_objects);
  for (const auto& m : dst.mors) uf.unite(m.src, m.dst);
  std::vector<char> covered(dst.n_objects, 0);
  for (int o = 0; o < src.n_objects; ++o) covered[uf.find(f.obj_map[o])] = 1;
  for (int o = 0; o < dst.n_objects; ++o)
    if (!covered[uf.find(o)]) return false;
  return true;
}

void check_weak_equivalence(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f) {
  check_functor(src, dst, f);
  check_equivariant(src, dst, f);
  check(is_full(src, dst, f), "functor is not full");
  check(is_faithful(src, dst, f), "functor is not faithful");
  check(is_essentially_surjective(src, dst, f), "functor is not essentially surjective");
}

GGroupoid one_object_groupoid(const FiniteGroup& m, const FiniteGroup& g,
                              const GroupAction& g_on_m) {
  int nm = m.order;
  std::vector<Morphism> mors(nm);
  for (int i = 0; i < nm; ++i) mors[i] = {0, i, 0};
  std::vector<int> compose((size_t)nm * nm);
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) compose[a * nm + b] = m.mul(a, b);
  std::vector<int> act_obj(g.order, 0);
  std::vector<int> act_mor((size_t)g.order * nm);
  for (int gg = 0; gg < g.order; ++gg)
    for (int i = 0; i < nm; ++i) act_mor[gg * nm + i] = g_on_m(gg, i);
  return make_ggroupoid(1, std::move(mors), std::move(compose), g, std::move(act_obj),
                        std::move(act_mor));
}

Freeified freeify(const GGroupoid& gamma) {
  const FiniteGroup& g = gamma.G;
  int n_obj = g.order * gamma.n_objects;
  auto obj_idx = [&](int gg, int a) { return gg * gamma.n_objects + a; };
  std::vector<int> pi_obj(n_obj);  // projection to the original objects
  for (int gg = 0; gg < g.order; ++gg)
    for (int a = 0; a < gamma.n_objects; ++a) pi_obj[obj_idx(gg, a)] = gamma.gobj(gg, a);

  std::vector<Morphism> mors;
  for (int x = 0; x < n_obj; ++x)
    for (int y = 0; y < n_obj; ++y)
      for (int m = 0; m < gamma.morphism_count(); ++m)
        if (gamma.mors[m].src == pi_obj[x] && gamma.mors[m].dst == pi_obj[y])
          mors.push_back({x, m, y});
  auto index = triple_index(mors);
  int nm = (int)mors.size();

  std::vector<int> compose((size_t)nm * nm, -1);
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) {
      if (mors[a].dst != mors[b].src) continue;
      int c = gamma.compose(mors[b].payload, mors[a].payload);
      compose[b * nm + a] = index.at({mors[a].src, c, mors[b].dst});
    }

  std::vector<int> act_obj((size_t)g.order * n_obj);
  for (int h = 0; h < g.order; ++h)
    for (int gg = 0; gg < g.order; ++gg)
      for (int a = 0; a < gamma.n_objects; ++a)
        act_obj[h * n_obj + obj_idx(gg, a)] = obj_idx(g.mul(h, gg), a);
  std::vector<int> act_mor((size_t)g.order * nm);
  for (int h = 0; h < g.order; ++h)
    for (int i = 0; i < nm; ++i) {
      int sx = act_obj[h * n_obj + mors[i].src];
      int dy = act_obj[h * n_obj + mors[i].dst];
      act_mor[h * nm + i] = index.at({sx, gamma.gmor(h, mors[i].payload), dy});
    }

  Freeified result;
  result.groupoid = make_ggroupoid(n_obj, std::move(mors), std::move(compose), g,
                                   std::move(act_obj), std::move(act_mor));
  result.to_original.obj_map = pi_obj;
  result.to_original.mor_map.resize(nm);
  for (int i = 0; i < nm; ++i) result.to_original.mor_map[i] = result.groupoid.mors[i].payload;

  check_weak_equivalence(result.groupoid, gamma, result.to_original);
  if (g.order > 1)
    for (int h = 1; h < g.order; ++h)
      for (int x = 0; x < n_obj; ++x)
        check(result.groupoid.gobj(h, x) != x, "object action is not free");
  return result;
}

std::vector<int> theta_auto(const GGroupoid& gamma, int x, int g, int lambda) {
  if (gamma.mors[lambda].src != gamma.gobj(g, x) || gamma.mors[lambda].dst != x)
    throw ValidationError("TypeMismatch", {g, lambda}, "lambda is not a morphism g.x -> x");

  auto aut = gamma.aut_mors(x);
  std::vector<int> result(aut.size());
  for (size_t i = 0; i < aut.size(); ++i) {
    int moved = gamma.compose(gamma.gmor(g, aut[i]), gamma.invs[lambda]);
    result[i] = gamma.compose(lambda, moved);
  }

  // group automorphism of Aut(x), sending the identity to the identity
  check(result[0] == gamma.ids[x], "theta does not fix the identity");
  std::vector<char> seen(gamma.morphism_count(), 0);
  for (int r : result) {
    check(gamma.mors[r].src == x && gamma.mors[r].dst == x && !seen[r],
          "theta is not a bijection of Aut(x)");
    seen[r] = 1;
  }
  std::vector<int> pos(gamma.morphism_count(), -1);
  for (size_t i = 0; i < aut.size(); ++i) pos[aut[i]] = (int)i;
  for (size_t i = 0; i < aut.size(); ++i)
    for (size_t j = 0; j < aut.size(); ++j) {
      int cij = gamma.compose(aut[i], aut[j]);
      check(result[pos[cij]] == gamma.compose(result[i], result[j]),
            "theta is not a homomorphism");
    }
  return result;
}

int BGamma::pair_index(int g, int lambda) const {
  for (int i = 0; i < (int)elements.size(); ++i)
    if (elements[i].first == g && elements[i].second == lambda) return i;
  return -1;
}

BGamma b_gamma(const GGroupoid& gamma, int x) {
  if (!gamma.bouquet)
    throw ValidationError("NotABouquet", {}, "groupoid is empty or disconnected");
  const FiniteGroup& g = gamma.G;

  BGamma bg;
  bg.base_object = x;
  bg.elements.emplace_back(FiniteGroup::id, gamma.ids[x]);
  for (int gg = 0; gg < g.order; ++gg)
    for (int m = 0; m < gamma.morphism_count(); ++m) {
      if (gamma.mors[m].src != gamma.gobj(gg, x) || gamma.mors[m].dst != x) continue;
      if (gg == FiniteGroup::id && m == gamma.ids[x]) continue;
      bg.elements.emplace_back(gg, m);
    }

  int n = (int)bg.elements.size();
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < n; ++i) index[bg.elements[i]] = i;

  std::vector<int> mul((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [g1, l1] = bg.elements[i];
      auto [g2, l2] = bg.elements[j];
      int lam = gamma.compose(l1, gamma.gmor(g1, l2));
      mul[i * n + j] = index.at({g.mul(g1, g2), lam});
    }
  bg.B = make_group_flat(n, std::move(mul));

  bg.aut_x = object_aut_group(gamma, x);
  check(n == bg.aut_x.group.order * g.order, "|B_Gamma| != |Aut(x)| * |G|");

  bg.kappa.resize(bg.aut_x.group.order);
  for (int i = 0; i < bg.aut_x.group.order; ++i)
    bg.kappa[i] = index.at({FiniteGroup::id, bg.aut_x.mor_ids[i]});
  bg.p.resize(n);
  for (int i = 0; i < n; ++i) bg.p[i] = bg.elements[i].first;

  // exactness of 1 -> Aut(x) -> B_Gamma -> G -> 1
  make_hom(bg.aut_x.group, bg.B, bg.kappa);
  make_hom(bg.B, g, bg.p);
  for (int i = 0; i < n; ++i) {
    bool in_kernel = bg.p[i] == FiniteGroup::id;
    bool in_image = std::find(bg.kappa.begin(), bg.kappa.end(), i) != bg.kappa.end();
    check(in_kernel == in_image, "ker p != im kappa in B_Gamma");
  }
  return bg;
}

GGroupoid gamma_of_extension(const FiniteGroup& b, const GroupHom& sigma) {
  const FiniteGroup& g = sigma.dst;
  int n = g.order;

  std::vector<Morphism> mors;
  for (int f = 0; f < n; ++f)
    for (int to = 0; to < n; ++to)
      for (int bb = 0; bb < b.order; ++bb)
        if (sigma.map[bb] == g.mul(g.inv(to), f)) mors.push_back({f, bb, to});
  auto index = triple_index(mors);
  int nm = (int)mors.size();

  std::vector<int> compose((size_t)nm * nm, -1);
  for (int a = 0; a < nm; ++a)
    for (int c = 0; c < nm; ++c) {
      if (mors[a].dst != mors[c].src) continue;
      compose[c * nm + a] = index.at({mors[a].src, b.mul(mors[c].payload, mors[a].payload),
                                      mors[c].dst});
    }

  std::vector<int> act_obj((size_t)n * n);
  for (int h = 0; h < n; ++h)
    for (int f = 0; f < n; ++f) act_obj[h * n + f] = g.mul(h, f);
  std::vector<int> act_mor((size_t)n * nm);
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < nm; ++i)
      act_mor[h * nm + i] =
          index.at({g.mul(h, mors[i].src), mors[i].payload, g.mul(h, mors[i].dst)});

  return make_ggroupoid(n, std::move(mors), std::move(compose), g, std::move(act_obj),
                        std::move(act_mor));
}

GGroupoid gamma_of_extension(const Extension& e) { return gamma_of_extension(e.B, e.sigma); }

GFunctor psi_functor(const GGroupoid& gamma, int x, const BGamma& bg,
                     const GGroupoid& gamma_of_bg) {
  GFunctor psi;
  psi.obj_map.resize(gamma_of_bg.n_objects);
  for (int g = 0; g < gamma_of_bg.n_objects; ++g) psi.obj_map[g] = gamma.gobj(g, x);
  psi.mor_map.resize(gamma_of_bg.morphism_count());
  for (int i = 0; i < gamma_of_bg.morphism_count(); ++i) {
    const Morphism& m = gamma_of_bg.mors[i];
    int lambda = bg.elements[m.payload].second;
    psi.mor_map[i] = gamma.gmor(m.dst, lambda);
  }
  check_weak_equivalence(gamma_of_bg, gamma, psi);
  return psi;
}

BouquetOverXM make_bouquet_over_xm(GGroupoid gamma, int a, std::vector<int> eta,
                                   std::vector<int> theta, EquivariantCrossedModule exm) {
  if (!gamma.bouquet)
    throw ValidationError("NotABouquet", {}, "groupoid is empty or disconnected");
  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();
  int nm = gamma.morphism_count();

  if ((int)eta.size() != m.order)
    throw ValidationError("BadShape", {}, "eta table has wrong length");
  auto aut = gamma.aut_mors(a);
  std::vector<int> eta_inv(nm, -1);
  for (int i = 0; i < m.order; ++i) {
    int mor = eta[i];
    if (mor < 0 || mor >= nm || gamma.mors[mor].src != a || gamma.mors[mor].dst != a)
      throw ValidationError("EtaNotIso", {i}, "eta value is not an automorphism of the base");
    if (eta_inv[mor] >= 0)
      throw ValidationError("EtaNotIso", {eta_inv[mor], i}, "eta is not injective");
    eta_inv[mor] = i;
  }
  if ((int)aut.size() != m.order)
    throw ValidationError("EtaNotIso", {}, "eta is not onto Aut(base)");
  if (eta[FiniteGroup::id] != gamma.ids[a])
    throw ValidationError("EtaNotIso", {FiniteGroup::id}, "eta(1) is not the identity morphism");
  for (int x = 0; x < m.order; ++x)
    for (int y = 0; y < m.order; ++y)
      if (eta[m.mul(x, y)] != gamma.compose(eta[x], eta[y]))
        throw ValidationError("EtaNotIso", {x, y}, "eta is not a homomorphism");

  if ((int)theta.size() != gamma.G.order * nm)
    throw ValidationError("BadShape", {}, "theta table has wrong shape");
  for (int g = 0; g < gamma.G.order; ++g)
    for (int mor = 0; mor < nm; ++mor) {
      bool typed = gamma.mors[mor].src == gamma.gobj(g, a) && gamma.mors[mor].dst == a;
      int t = theta[g * nm + mor];
      if (typed != (t >= 0))
        throw ValidationError("BadShape", {g, mor}, "theta defined iff lambda : g.a -> a");
      if (t >= l.order)
        throw ValidationError("BadShape", {g, mor}, "theta value out of range");
    }

  // lambda . g(eta m) = eta(theta.m) . lambda  (so rho(theta) is the twist)
  for (int g = 0; g < gamma.G.order; ++g)
    for (int mor = 0; mor < nm; ++mor) {
      int t = theta[g * nm + mor];
      if (t < 0) continue;
      for (int x = 0; x < m.order; ++x) {
        int lhs = gamma.compose(mor, gamma.gmor(g, eta[x]));
        int rhs = gamma.compose(eta[exm.lact(t, x)], mor);
        if (lhs != rhs)
          throw ValidationError("ThetaMismatch", {g, mor, x},
                                "rho(theta_{g,lambda}) differs from the twist automorphism");
      }
    }

  // conjugation by eta(m) is the action of d(m)
  for (int x = 0; x < m.order; ++x)
    for (int y = 0; y < m.order; ++y) {
      int conj = gamma.compose(eta[x], gamma.compose(eta[y], gamma.invs[eta[x]]));
      if (conj != eta[exm.lact(exm.d(x), y)])
        throw ValidationError("ThetaMismatch", {x, y},
                              "conjugation by eta(m) is not the action of d(m)");
    }

  BouquetOverXM bq;
  bq.gamma = std::move(gamma);
  bq.base_obj = a;
  bq.eta = std::move(eta);
  bq.eta_inv = std::move(eta_inv);
  bq.theta = std::move(theta);
  bq.exm = std::move(exm);

  // the associated extension of G by M must be an (M -> L)-extension with
  // varrho given by theta
  BGamma bg = b_gamma(bq.gamma, a);
  std::vector<int> kappa_m(m.order), varrho(bg.B.order);
  for (int x = 0; x < m.order; ++x) {
    kappa_m[x] = bg.pair_index(FiniteGroup::id, bq.eta[x]);
    check(kappa_m[x] >= 0, "eta image missing from B_Gamma");
  }
  for (int i = 0; i < bg.B.order; ++i)
    varrho[i] = bq.theta_at(bg.elements[i].first, bg.elements[i].second);
  try {
    make_extension(bg.B, kappa_m, bg.p, varrho, bq.gamma.G, bq.exm);
  } catch (const ValidationError& err) {
    throw ValidationError("ThetaMismatch", err.witness(),
                          std::string("induced extension is invalid: ") + err.what());
  }
  return bq;
}

Cocycle2 bouquet_to_cocycle(const BouquetOverXM& bq, const std::vector<int>& lambda_family) {
  const GGroupoid& gamma = bq.gamma;
  const FiniteGroup& g = gamma.G;
  int n = g.order;

  if ((int)lambda_family.size() != n)
    throw ValidationError("BadFamily", {}, "family must pick one morphism per group element");
  if (lambda_family[0] != gamma.ids[bq.base_obj])
    throw ValidationError("BadFamily", {0}, "lambda_1 must be the identity morphism");
  for (int gg = 0; gg < n; ++gg) {
    int mor = lambda_family[gg];
    if (mor < 0 || mor >= gamma.morphism_count() ||
        gamma.mors[mor].src != gamma.gobj(gg, bq.base_obj) || gamma.mors[mor].dst != bq.base_obj)
      throw ValidationError("BadFamily", {gg}, "lambda_g is not a morphism g.a -> a");
  }

  Cocycle2 c;
  c.n = n;
  c.phi.resize(n);
  c.f.assign((size_t)n * n, -1);
  for (int gg = 0; gg < n; ++gg) c.phi[gg] = bq.theta_at(gg, lambda_family[gg]);
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      int inner = gamma.compose(gamma.invs[gamma.gmor(g1, lambda_family[g2])],
                                gamma.invs[lambda_family[g1]]);
      int mor = gamma.compose(lambda_family[g.mul(g1, g2)], inner);
      check(bq.eta_inv[mor] >= 0, "lambda defect is not an automorphism of the base");
      c.f[g1 * n + g2] = bq.eta_inv[mor];
    }

  check(is_z2(c, g, bq.exm), "extracted pair fails the 2-cocycle identities");
  return c;
}

std::vector<int> canonical_lambda_family(const BouquetOverXM& bq) {
  const GGroupoid& gamma = bq.gamma;
  std::vector<int> family(gamma.G.order, -1);
  family[0] = gamma.ids[bq.base_obj];
  for (int g = 1; g < gamma.G.order; ++g)
    for (int mor = 0; mor < gamma.morphism_count(); ++mor)
      if (gamma.mors[mor].src == gamma.gobj(g, bq.base_obj) &&
          gamma.mors[mor].dst == bq.base_obj) {
        family[g] = mor;
        break;
      }
  for (int g = 0; g < gamma.G.order; ++g)
    check(family[g] >= 0, "no morphism g.a -> a; groupoid is not connected");
  return family;
}

std::vector<std::vector<int>> all_lambda_families(const BouquetOverXM& bq) {
  const GGroupoid& gamma = bq.gamma;
  int n = gamma.G.order;
  std::vector<std::vector<int>> options(n);
  options[0] = {gamma.ids[bq.base_obj]};
  for (int g = 1; g < n; ++g)
    for (int mor = 0; mor < gamma.morphism_count(); ++mor)
      if (gamma.mors[mor].src == gamma.gobj(g, bq.base_obj) &&
          gamma.mors[mor].dst == bq.base_obj)
        options[g].push_back(mor);

  std::vector<std::vector<int>> families;
  std::vector<size_t> pick(n, 0);
  while (true) {
    std::vector<int> fam(n);
    for (int g = 0; g < n; ++g) fam[g] = options[g][pick[g]];
    families.push_back(std::move(fam));
    int s = n - 1;
    for (; s >= 0; --s) {
      if (++pick[s] < options[s].size()) break;
      pick[s] = 0;
    }
    if (s < 0) break;
  }
  return families;
}

int characteristic_class(const BouquetOverXM& bq, const H2Classes& thick, Budget& budget) {
  const FiniteGroup& l = bq.exm.L();
  const FiniteGroup& m = bq.exm.M();
  const FiniteGroup& g = bq.gamma.G;
  int n = g.order;

  auto base_family = canonical_lambda_family(bq);
  Cocycle2 c = bouquet_to_cocycle(bq, base_family);

  auto class_of = [&](const Cocycle2& cc) {
    for (int i = 0; i < (int)thick.cocycles.size(); ++i)
      if (thick.cocycles[i] == cc) return thick.classes.class_of[i];
    throw CheckFailed("extracted cocycle missing from the Z^2 enumeration");
  };
  int result = class_of(c);

  // every other family yields the same class, with the explicit coboundary
  // s(g) = lambda'_g . lambda_g^-1 as witness
  for (const auto& family : all_lambda_families(bq)) {
    budget.charge();
    Cocycle2 cp = bouquet_to_cocycle(bq, family);
    check(class_of(cp) == result, "characteristic class depends on the lambda family");
    std::vector<int> s(n);
    for (int gg = 0; gg < n; ++gg) {
      int mor = bq.gamma.compose(family[gg], bq.gamma.invs[base_family[gg]]);
      check(bq.eta_inv[mor] >= 0, "family defect is not an automorphism");
      s[gg] = bq.eta_inv[mor];
    }
    for (int gg = 0; gg < n; ++gg)
      check(cp.phi[gg] == l.mul(bq.exm.d(s[gg]), c.phi[gg]),
            "phi'(g) != d(s(g)) phi(g) across families");
    for (int g1 = 0; g1 < n; ++g1)
      for (int g2 = 0; g2 < n; ++g2) {
        int rhs = m.mul(m.mul(m.inv(s[g.mul(g1, g2)]), cp.fat(g1, g2)),
                        m.mul(s[g1], bq.exm.lact(c.phi[g1], s[g2])));
        check(c.fat(g1, g2) == rhs, "f and f' are not coboundary-related across families");
      }
  }
  return result;
}

BouquetOverXM bouquet_of_cocycle(const Cocycle2& c, const FiniteGroup& pi,
                                 const EquivariantCrossedModule& exm) {
  std::vector<int> witness;
  if (!is_z2(c, pi, exm, &witness))
    throw ValidationError("NotACocycle", witness, "input fails the 2-cocycle identities");

  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();
  int n = pi.order;
  int nm_group = m.order;

  std::vector<Morphism> mors;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int a = 0; a < nm_group; ++a) mors.push_back({g, a, h});
  auto index = triple_index(mors);
  int nmor = (int)mors.size();

  std::vector<int> compose((size_t)nmor * nmor, -1);
  for (int a = 0; a < nmor; ++a)
    for (int b = 0; b < nmor; ++b) {
      if (mors[a].dst != mors[b].src) continue;
      compose[b * nmor + a] =
          index.at({mors[a].src, m.mul(mors[b].payload, mors[a].payload), mors[b].dst});
    }

  std::vector<int> act_obj((size_t)n * n);
  for (int t = 0; t < n; ++t)
    for (int g = 0; g < n; ++g) act_obj[t * n + g] = pi.mul(t, g);
  std::vector<int> act_mor((size_t)n * nmor);
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < nmor; ++i) {
      const Morphism& mor = mors[i];
      int payload = m.mul(m.mul(c.fat(t, mor.dst), exm.lact(c.phi[t], mor.payload)),
                          m.inv(c.fat(t, mor.src)));
      act_mor[t * nmor + i] = index.at({pi.mul(t, mor.src), payload, pi.mul(t, mor.dst)});
    }

  GGroupoid gamma = make_ggroupoid(n, std::move(mors), std::move(compose), pi,
                                   std::move(act_obj), std::move(act_mor));

  std::vector<int> eta(nm_group);
  for (int a = 0; a < nm_group; ++a) eta[a] = index.at({0, a, 0});
  std::vector<int> theta((size_t)n * nmor, -1);
  for (int g = 0; g < n; ++g)
    for (int w = 0; w < nm_group; ++w)
      theta[g * nmor + index.at({g, w, 0})] = l.mul(exm.d(w), c.phi[g]);

  return make_bouquet_over_xm(std::move(gamma), 0, std::move(eta), std::move(theta), exm);
}

void check_defined_over(const BouquetOverXM& from, const BouquetOverXM& to, const GFunctor& f) {
  check(f.obj_map[from.base_obj] == to.base_obj, "functor moves the base object");
  for (int m = 0; m < from.exm.M().order; ++m)
    check(f.mor_map[from.eta[m]] == to.eta[m], "functor does not commute with eta");
  for (int g = 0; g < from.gamma.G.order; ++g)
    for (int mor = 0; mor < from.gamma.morphism_count(); ++mor) {
      int t = from.theta_at(g, mor);
      if (t < 0) continue;
      check(to.theta_at(g, f.mor_map[mor]) == t, "functor does not preserve theta");
    }
}

GFunctor coboundary_functor(const BouquetOverXM& from, const BouquetOverXM& to,
                            const std::vector<int>& s) {
  const FiniteGroup& m = from.exm.M();
  const FiniteGroup& l = from.exm.L();
  const FiniteGroup& g = from.gamma.G;
  int n = g.order;

  Cocycle2 c = bouquet_to_cocycle(from, canonical_lambda_family(from));
  Cocycle2 cp = bouquet_to_cocycle(to, canonical_lambda_family(to));

  if ((int)s.size() != n || s[0] != FiniteGroup::id)
    throw ValidationError("BadCoboundary", {}, "s must be a map Pi -> M with s(1) = 1");
  for (int x = 0; x < n; ++x)
    if (c.phi[x] != l.mul(from.exm.d(s[x]), cp.phi[x]))
      throw ValidationError("BadCoboundary", {x}, "phi != d(s) phi'");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int rhs = m.mul(m.mul(m.inv(s[g.mul(x, y)]), c.fat(x, y)),
                      m.mul(s[x], from.exm.lact(cp.phi[x], s[y])));
      if (cp.fat(x, y) != rhs)
        throw ValidationError("BadCoboundary", {x, y}, "f' is not the s-shift of f");
    }

  GFunctor functor;
  functor.obj_map.resize(from.gamma.n_objects);
  for (int o = 0; o < from.gamma.n_objects; ++o) functor.obj_map[o] = o;
  functor.mor_map.resize(from.gamma.morphism_count());
  for (int i = 0; i < from.gamma.morphism_count(); ++i) {
    const Morphism& mor = from.gamma.mors[i];
    int payload = m.mul(m.mul(m.inv(s[mor.dst]), mor.payload), s[mor.src]);
    int image = to.gamma.find_mor(mor.src, payload, mor.dst);
    check(image >= 0, "coboundary image morphism missing");
    functor.mor_map[i] = image;
  }

  check_weak_equivalence(from.gamma, to.gamma, functor);
  // bijective on objects and morphisms: an isomorphism of groupoids
  check(from.gamma.n_objects == to.gamma.n_objects &&
            from.gamma.morphism_count() == to.gamma.morphism_count(),
        "coboundary functor sizes differ");
  std::vector<char> seen(to.gamma.morphism_count(), 0);
  for (int im : functor.mor_map) {
    check(!seen[im], "coboundary functor is not injective on morphisms");
    seen[im] = 1;
  }
  check_defined_over(from, to, functor);
  return functor;
}

GFunctor comparison_functor(const BouquetOverXM& cocycle_bouquet, const BouquetOverXM& target,
                            const std::vector<int>& lambda_family) {
  Cocycle2 c_src = bouquet_to_cocycle(cocycle_bouquet, canonical_lambda_family(cocycle_bouquet));
  Cocycle2 c_tgt = bouquet_to_cocycle(target, lambda_family);
  if (!(c_src == c_tgt))
    throw ValidationError("Mismatch", {},
                          "cocycle bouquet does not match the family-extracted cocycle");

  const GGroupoid& tg = target.gamma;
  GFunctor functor;
  functor.obj_map.resize(cocycle_bouquet.gamma.n_objects);
  for (int g = 0; g < cocycle_bouquet.gamma.n_objects; ++g)
    functor.obj_map[g] = tg.gobj(g, target.base_obj);
  functor.mor_map.resize(cocycle_bouquet.gamma.morphism_count());
  for (int i = 0; i < cocycle_bouquet.gamma.morphism_count(); ++i) {
    const Morphism& mor = cocycle_bouquet.gamma.mors[i];
    int inner = tg.compose(target.eta[mor.payload], lambda_family[mor.src]);
    functor.mor_map[i] = tg.compose(tg.invs[lambda_family[mor.dst]], inner);
  }

  check_weak_equivalence(cocycle_bouquet.gamma, tg, functor);
  check_defined_over(cocycle_bouquet, target, functor);
  return functor;
}

}  // namespace xcohom
