#include "xcohom/cohomology.hpp"

#include <algorithm>
#include <map>

namespace xcohom {

bool operator==(const Cocycle1& a, const Cocycle1& b) { return a.tau == b.tau && a.f == b.f; }
bool operator==(const Cocycle2& a, const Cocycle2& b) {
  return a.n == b.n && a.f == b.f && a.phi == b.phi;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool same(int a, int b) { return find(a) == find(b); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Little-endian-from-the-right odometer: enumerates assignments in
// lexicographic order, where slot s ranges over candidates[s].
bool next_assignment(std::vector<size_t>& pick, const std::vector<std::vector<int>>& candidates) {
  for (int s = (int)pick.size() - 1; s >= 0; --s) {
    if (++pick[s] < candidates[s].size()) return true;
    pick[s] = 0;
  }
  return false;
}

std::vector<std::vector<int>> boundary_preimages(const EquivariantCrossedModule& exm) {
  std::vector<std::vector<int>> pre(exm.L().order);
  for (int m = 0; m < exm.M().order; ++m) pre[exm.d(m)].push_back(m);
  return pre;
}

}  // namespace

ClassSet classes_from_unionfind(std::vector<int> parents, H2Mode mode) {
  int n = (int)parents.size();
  UnionFind uf(0);
  uf.parent = std::move(parents);

  std::vector<int> root_to_class(n, -1);
  ClassSet cs;
  cs.mode = mode;
  cs.class_of.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (root_to_class[r] < 0) {
      root_to_class[r] = (int)cs.representatives.size();
      cs.representatives.push_back(i);  // least member, since i ascends
    }
    cs.class_of[i] = root_to_class[r];
  }
  return cs;
}

std::vector<int> h0(const EquivariantCrossedModule& exm) {
  std::vector<int> result;
  for (int m = 0; m < exm.M().order; ++m) {
    if (exm.d(m) != FiniteGroup::id) continue;
    bool fixed = true;
    for (int g = 0; g < exm.G.order && fixed; ++g) fixed = exm.gm(g, m) == m;
    if (fixed) result.push_back(m);
  }
  return result;
}

bool is_z1(const Cocycle1& c, const EquivariantCrossedModule& exm, std::vector<int>* witness) {
  const FiniteGroup& g = exm.G;
  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();
  auto fail = [&](std::vector<int> w) {
    if (witness) *witness = std::move(w);
    return false;
  };
  if ((int)c.f.size() != g.order || c.tau < 0 || c.tau >= l.order) return fail({});
  if (c.f[0] != FiniteGroup::id) return fail({0});
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (c.f[g.mul(x, y)] != m.mul(c.f[x], exm.gm(x, c.f[y]))) return fail({x, y});
  for (int x = 0; x < g.order; ++x)
    if (c.tau != l.mul(exm.d(c.f[x]), exm.gl(x, c.tau))) return fail({x});
  return true;
}

std::vector<Cocycle1> enumerate_z1(const EquivariantCrossedModule& exm, Budget& budget) {
  const FiniteGroup& g = exm.G;
  int nm = exm.M().order, nl = exm.L().order;
  int slots = g.order - 1;

  std::vector<std::vector<int>> candidates(slots);
  for (auto& c : candidates) {
    c.resize(nm);
    for (int i = 0; i < nm; ++i) c[i] = i;
  }

  std::vector<Cocycle1> result;
  std::vector<size_t> pick(slots, 0);
  do {
    Cocycle1 c;
    c.f.assign(g.order, 0);
    for (int s = 0; s < slots; ++s) c.f[s + 1] = (int)pick[s];
    for (int tau = 0; tau < nl; ++tau) {
      budget.charge();
      c.tau = tau;
      if (is_z1(c, exm)) result.push_back(c);
    }
  } while (slots > 0 && next_assignment(pick, candidates));
  return result;
}

std::optional<int> cocycle1_equivalent(const Cocycle1& c, const Cocycle1& cp,
                                       const EquivariantCrossedModule& exm, Budget& budget) {
  const FiniteGroup& g = exm.G;
  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();
  for (int w = 0; w < m.order; ++w) {
    budget.charge();
    if (c.tau != l.mul(exm.d(w), cp.tau)) continue;
    bool ok = true;
    for (int x = 0; x < g.order && ok; ++x)
      ok = c.f[x] == m.mul(m.mul(w, cp.f[x]), m.inv(exm.gm(x, w)));
    if (ok) return w;
  }
  return std::nullopt;
}

H1Classes h1_classes(const EquivariantCrossedModule& exm, Budget& budget) {
  H1Classes result;
  result.cocycles = enumerate_z1(exm, budget);
  int n = (int)result.cocycles.size();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (uf.same(i, j)) continue;
      if (cocycle1_equivalent(result.cocycles[i], result.cocycles[j], exm, budget)) uf.unite(i, j);
    }
  result.classes = classes_from_unionfind(uf.parent, H2Mode::thick);
  return result;
}

bool is_z2(const Cocycle2& c, const FiniteGroup& pi, const EquivariantCrossedModule& exm,
           std::vector<int>* witness) {
  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();
  int n = pi.order;
  auto fail = [&](std::vector<int> w) {
    if (witness) *witness = std::move(w);
    return false;
  };
  if (c.n != n || (int)c.f.size() != n * n || (int)c.phi.size() != n) return fail({});
  if (c.phi[0] != FiniteGroup::id) return fail({0});
  for (int x = 0; x < n; ++x)
    if (c.fat(x, 0) != FiniteGroup::id || c.fat(0, x) != FiniteGroup::id) return fail({x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (c.phi[pi.mul(x, y)] != l.mul(exm.d(c.fat(x, y)), l.mul(c.phi[x], c.phi[y])))
        return fail({x, y});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = m.mul(c.fat(pi.mul(x, y), z), c.fat(x, y));
        int rhs = m.mul(c.fat(x, pi.mul(y, z)), exm.lact(c.phi[x], c.fat(y, z)));
        if (lhs != rhs) return fail({x, y, z});
      }
  return true;
}

std::vector<Cocycle2> enumerate_z2(const FiniteGroup& pi, const EquivariantCrossedModule& exm,
                                   Budget& budget) {
  const FiniteGroup& l = exm.L();
  int n = pi.order;
  auto preimages = boundary_preimages(exm);

  int phi_slots = n - 1;
  std::vector<std::vector<int>> phi_candidates(phi_slots);
  for (auto& c : phi_candidates) {
    c.resize(l.order);
    for (int i = 0; i < l.order; ++i) c[i] = i;
  }

  std::vector<std::pair<int, int>> f_slots;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) f_slots.emplace_back(x, y);

  std::vector<Cocycle2> result;
  std::vector<size_t> phi_pick(phi_slots, 0);
  do {
    budget.charge();
    Cocycle2 c;
    c.n = n;
    c.phi.assign(n, 0);
    for (int s = 0; s < phi_slots; ++s) c.phi[s + 1] = (int)phi_pick[s];

    // phi(xy) = d(f(x,y)) phi(x) phi(y) pins d on every f slot; each slot then
    // ranges over the corresponding boundary preimage.
    std::vector<std::vector<int>> f_candidates(f_slots.size());
    bool feasible = true;
    for (size_t s = 0; s < f_slots.size() && feasible; ++s) {
      auto [x, y] = f_slots[s];
      int needed = l.mul(c.phi[pi.mul(x, y)], l.inv(l.mul(c.phi[x], c.phi[y])));
      f_candidates[s] = preimages[needed];
      feasible = !f_candidates[s].empty();
    }
    if (!feasible) continue;

    std::vector<size_t> f_pick(f_slots.size(), 0);
    do {
      budget.charge();
      c.f.assign((size_t)n * n, 0);
      for (size_t s = 0; s < f_slots.size(); ++s) {
        auto [x, y] = f_slots[s];
        c.f[x * n + y] = f_candidates[s][f_pick[s]];
      }
      if (is_z2(c, pi, exm)) result.push_back(c);
    } while (!f_slots.empty() && next_assignment(f_pick, f_candidates));
  } while (phi_slots > 0 && next_assignment(phi_pick, phi_candidates));
  return result;
}

std::optional<Cocycle2Witness> cocycle2_equivalent(const Cocycle2& c, const Cocycle2& cp,
                                                   H2Mode mode, const FiniteGroup& pi,
                                                   const EquivariantCrossedModule& exm,
                                                   Budget& budget) {
  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();
  int n = pi.order;
  auto preimages = boundary_preimages(exm);

  int taus = mode == H2Mode::weak ? l.order : 1;
  for (int tau = 0; tau < taus; ++tau) {
    // phi(x) = tau^-1 d(t(x)) phi'(x) tau pins d(t(x)) per slot.
    std::vector<std::vector<int>> candidates(n);
    candidates[0] = {FiniteGroup::id};
    bool feasible = true;
    for (int x = 1; x < n && feasible; ++x) {
      int needed = l.mul(l.conj(tau, c.phi[x]), l.inv(cp.phi[x]));
      candidates[x] = preimages[needed];
      feasible = !candidates[x].empty();
    }
    if (!feasible) continue;
    if (l.mul(l.conj(tau, c.phi[0]), l.inv(cp.phi[0])) != FiniteGroup::id) continue;

    std::vector<size_t> pick(n, 0);
    do {
      budget.charge();
      std::vector<int> t(n);
      for (int x = 0; x < n; ++x) t[x] = candidates[x][pick[x]];
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) {
          int lhs = cp.fat(x, y);
          int rhs = m.mul(m.inv(t[pi.mul(x, y)]), exm.lact(tau, c.fat(x, y)));
          rhs = m.mul(rhs, m.mul(t[x], exm.lact(cp.phi[x], t[y])));
          ok = lhs == rhs;
        }
      if (ok) return Cocycle2Witness{t, tau};
    } while (next_assignment(pick, candidates));
  }
  return std::nullopt;
}

H2Classes h2_classes(const FiniteGroup& pi, const EquivariantCrossedModule& exm, H2Mode mode,
                     Budget& budget) {
  H2Classes result;
  result.cocycles = enumerate_z2(pi, exm, budget);
  int n = (int)result.cocycles.size();

  auto partition = [&](H2Mode m) {
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (uf.same(i, j)) continue;
        if (cocycle2_equivalent(result.cocycles[i], result.cocycles[j], m, pi, exm, budget))
          uf.unite(i, j);
      }
    return classes_from_unionfind(uf.parent, m);
  };

  ClassSet thick = partition(H2Mode::thick);
  ClassSet weak = partition(H2Mode::weak);

  // thick must refine weak, and the induced map on classes must be onto
  std::vector<int> image(weak.count(), 0);
  std::vector<int> thick_to_weak(thick.count(), -1);
  for (int i = 0; i < n; ++i) {
    int tc = thick.class_of[i], wc = weak.class_of[i];
    if (thick_to_weak[tc] < 0) thick_to_weak[tc] = wc;
    check(thick_to_weak[tc] == wc, "thick congruence does not refine weak congruence");
    image[wc] = 1;
  }
  for (int wc = 0; wc < weak.count(); ++wc)
    check(image[wc] == 1, "canonical surjection misses a weak class");
  check(thick.count() >= weak.count(), "fewer thick classes than weak classes");

  result.thick_count = thick.count();
  result.weak_count = weak.count();
  result.classes = mode == H2Mode::thick ? std::move(thick) : std::move(weak);
  return result;
}

ClassicalH2 classical_h2(const FiniteGroup& g, const FiniteGroup& a, const GroupAction& g_on_a,
                         Budget& budget) {
  if (!a.is_abelian())
    throw ValidationError("NotAbelian", {}, "classical H^2 needs abelian coefficients");
  if (!(g_on_a.actor == g) || !g_on_a.target_group || !(*g_on_a.target_group == a))
    throw ValidationError("BadShape", {}, "action does not match (G, A)");

  int n = g.order;
  std::vector<std::pair<int, int>> slots;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) slots.emplace_back(x, y);

  auto is_cocycle = [&](const std::vector<int>& f) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int lhs = a.mul(f[g.mul(x, y) * n + z], f[x * n + y]);
          int rhs = a.mul(f[x * n + g.mul(y, z)], g_on_a(x, f[y * n + z]));
          if (lhs != rhs) return false;
        }
    return true;
  };

  ClassicalH2 result;
  result.G = g;
  result.A = a;

  std::vector<std::vector<int>> value_range(slots.size());
  for (auto& r : value_range) {
    r.resize(a.order);
    for (int i = 0; i < a.order; ++i) r[i] = i;
  }
  std::vector<size_t> pick(slots.size(), 0);
  do {
    budget.charge();
    std::vector<int> f((size_t)n * n, 0);
    for (size_t s = 0; s < slots.size(); ++s) f[slots[s].first * n + slots[s].second] = (int)pick[s];
    if (is_cocycle(f)) result.cocycles.push_back(std::move(f));
  } while (!slots.empty() && next_assignment(pick, value_range));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < (int)result.cocycles.size(); ++i) index[result.cocycles[i]] = i;

  // all normalized coboundaries b(x,y) = t(xy)^-1 t(x) . x t(y)
  std::vector<std::vector<int>> coboundaries;
  {
    std::vector<std::vector<int>> t_range(n - 1);
    for (auto& r : t_range) {
      r.resize(a.order);
      for (int i = 0; i < a.order; ++i) r[i] = i;
    }
    std::vector<size_t> t_pick(n - 1, 0);
    do {
      budget.charge();
      std::vector<int> t(n, 0);
      for (int x = 1; x < n; ++x) t[x] = (int)t_pick[x - 1];
      std::vector<int> b((size_t)n * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          b[x * n + y] = a.mul(a.inv(t[g.mul(x, y)]), a.mul(t[x], g_on_a(x, t[y])));
      coboundaries.push_back(std::move(b));
    } while (n > 1 && next_assignment(t_pick, t_range));
    std::sort(coboundaries.begin(), coboundaries.end());
    coboundaries.erase(std::unique(coboundaries.begin(), coboundaries.end()), coboundaries.end());
  }

  UnionFind uf((int)result.cocycles.size());
  for (int i = 0; i < (int)result.cocycles.size(); ++i)
    for (const auto& b : coboundaries) {
      std::vector<int> shifted((size_t)n * n);
      for (int k = 0; k < n * n; ++k) shifted[k] = a.mul(result.cocycles[i][k], b[k]);
      auto it = index.find(shifted);
      check(it != index.end(), "coboundary shift left the cocycle set");
      uf.unite(i, it->second);
    }
  result.classes = classes_from_unionfind(uf.parent, H2Mode::thick);
  result.trivial_class = result.classes.class_of[index.at(std::vector<int>((size_t)n * n, 0))];
  return result;
}

int classical_class_of(const ClassicalH2& h2, const std::vector<int>& cocycle) {
  auto it = std::lower_bound(h2.cocycles.begin(), h2.cocycles.end(), cocycle);
  if (it == h2.cocycles.end() || *it != cocycle)
    throw ValidationError("NotACocycle", {}, "factor set is not a normalized 2-cocycle");
  return h2.classes.class_of[(int)(it - h2.cocycles.begin())];
}

std::vector<std::vector<int>> all_homs(const FiniteGroup& pi, const FiniteGroup& l, Budget& budget) {
  int n = pi.order;
  std::vector<std::vector<int>> range(n - 1);
  for (auto& r : range) {
    r.resize(l.order);
    for (int i = 0; i < l.order; ++i) r[i] = i;
  }

  std::vector<std::vector<int>> result;
  std::vector<size_t> pick(n - 1, 0);
  do {
    budget.charge();
    std::vector<int> map(n, 0);
    for (int x = 1; x < n; ++x) map[x] = (int)pick[x - 1];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) ok = map[pi.mul(x, y)] == l.mul(map[x], map[y]);
    if (ok) result.push_back(std::move(map));
  } while (n > 1 && next_assignment(pick, range));
  return result;
}

}  // namespace xcohom
