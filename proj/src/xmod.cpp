#include "xcohom/xmod.hpp"

#include <algorithm>

namespace xcohom {

CrossedModule make_crossed_module(GroupHom boundary, GroupAction l_on_m) {
  if (!(boundary.src == *l_on_m.target_group) || !(boundary.dst == l_on_m.actor))
    throw ValidationError("BadShape", {}, "boundary and action do not share carriers");
  const FiniteGroup& m = boundary.src;
  const FiniteGroup& l = boundary.dst;

  for (int x = 0; x < l.order; ++x)
    for (int a = 0; a < m.order; ++a)
      if (boundary.map[l_on_m(x, a)] != l.conj(x, boundary.map[a]))
        throw ValidationError("CM1Violation", {x, a}, "d(x.m) != x d(m) x^-1");
  for (int n = 0; n < m.order; ++n)
    for (int a = 0; a < m.order; ++a)
      if (l_on_m(boundary.map[n], a) != m.conj(n, a))
        throw ValidationError("CM2Violation", {n, a}, "(d n).m != n m n^-1");

  CrossedModule xm;
  xm.M = m;
  xm.L = l;
  xm.boundary = std::move(boundary);
  xm.l_on_m = std::move(l_on_m);
  return xm;
}

CrossedModule make_crossed_module(const FiniteGroup& m, const FiniteGroup& l,
                                  const std::vector<int>& boundary,
                                  const std::vector<std::vector<int>>& l_action) {
  return make_crossed_module(make_hom(m, l, boundary), make_action(l, m, l_action));
}

EquivariantCrossedModule make_equivariant(CrossedModule xm, GroupAction g_on_m, GroupAction g_on_l) {
  if (!(g_on_m.actor == g_on_l.actor))
    throw ValidationError("BadShape", {}, "the two G-actions have different actors");
  if (!(*g_on_m.target_group == xm.M) || !(*g_on_l.target_group == xm.L))
    throw ValidationError("BadShape", {}, "G-action targets do not match the crossed module");
  const FiniteGroup& g = g_on_m.actor;

  for (int x = 0; x < g.order; ++x)
    for (int m = 0; m < xm.M.order; ++m)
      if (xm.d(g_on_m(x, m)) != g_on_l(x, xm.d(m)))
        throw ValidationError("EquivarianceViolation", {x, m}, "d(g.m) != g.d(m)");
  for (int x = 0; x < g.order; ++x)
    for (int t = 0; t < xm.L.order; ++t)
      for (int m = 0; m < xm.M.order; ++m)
        if (g_on_m(x, xm.lact(t, m)) != xm.lact(g_on_l(x, t), g_on_m(x, m)))
          throw ValidationError("EquivarianceViolation", {x, t, m}, "g.(t.m) != (g.t).(g.m)");

  EquivariantCrossedModule exm;
  exm.base = std::move(xm);
  exm.G = g;
  exm.g_on_M = std::move(g_on_m);
  exm.g_on_L = std::move(g_on_l);
  return exm;
}

EquivariantCrossedModule make_equivariant(CrossedModule xm, const FiniteGroup& g,
                                          const std::vector<std::vector<int>>& g_on_m,
                                          const std::vector<std::vector<int>>& g_on_l) {
  auto am = make_action(g, xm.M, g_on_m);
  auto al = make_action(g, xm.L, g_on_l);
  return make_equivariant(std::move(xm), std::move(am), std::move(al));
}

EquivariantCrossedModule with_trivial_g(CrossedModule xm) {
  auto c1 = cyclic_group(1);
  auto am = trivial_action(c1, xm.M);
  auto al = trivial_action(c1, xm.L);
  return make_equivariant(std::move(xm), std::move(am), std::move(al));
}

CrossedExtensionParts crossed_extension_parts(const EquivariantCrossedModule& exm) {
  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();

  std::vector<int> kernel;
  for (int a = 0; a < m.order; ++a)
    if (exm.d(a) == FiniteGroup::id) kernel.push_back(a);
  Subgroup a_sub = subgroup_from_elements(m, kernel);

  // A central in M
  for (int a : a_sub.embed)
    for (int x = 0; x < m.order; ++x)
      check(m.mul(a, x) == m.mul(x, a), "kernel of the boundary is not central in M");

  std::vector<int> image;
  for (int a = 0; a < m.order; ++a) image.push_back(exm.d(a));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  Quotient q = quotient_by_normal(l, image);

  check((int)a_sub.embed.size() * (int)image.size() == m.order, "exactness at M fails");
  check((int)image.size() * q.group.order == l.order, "exactness at L fails");

  const FiniteGroup& a_grp = a_sub.group;
  const FiniteGroup& q_grp = q.group;
  int na = a_grp.order, nq = q_grp.order;

  // Q acts on A through any coset representative; descent is guaranteed by
  // centrality, and make_action re-verifies the axioms.
  std::vector<std::vector<int>> q_on_a(nq, std::vector<int>(na));
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < na; ++j) {
      int moved = exm.lact(q.reps[i], a_sub.embed[j]);
      check(a_sub.index_in_sub[moved] >= 0, "L-action does not preserve ker d");
      q_on_a[i][j] = a_sub.index_in_sub[moved];
    }
  for (int x = 0; x < l.order; ++x)
    for (int j = 0; j < na; ++j)
      check(a_sub.index_in_sub[exm.lact(x, a_sub.embed[j])] == q_on_a[q.proj[x]][j],
            "Q-action on A is ill-defined");

  std::vector<std::vector<int>> g_on_a(exm.G.order, std::vector<int>(na));
  for (int g = 0; g < exm.G.order; ++g)
    for (int j = 0; j < na; ++j) {
      int moved = exm.gm(g, a_sub.embed[j]);
      check(a_sub.index_in_sub[moved] >= 0, "G-action does not preserve ker d");
      g_on_a[g][j] = a_sub.index_in_sub[moved];
    }

  std::vector<std::vector<int>> g_on_q(exm.G.order, std::vector<int>(nq));
  for (int g = 0; g < exm.G.order; ++g) {
    for (int i = 0; i < nq; ++i) g_on_q[g][i] = q.proj[exm.gl(g, q.reps[i])];
    for (int x = 0; x < l.order; ++x)
      check(q.proj[exm.gl(g, x)] == g_on_q[g][q.proj[x]], "G-action on Q is ill-defined");
  }

  bool faithful = true;
  for (int x = 0; x < l.order && faithful; ++x)
    for (int y = 0; y < x && faithful; ++y) {
      bool same = true;
      for (int a = 0; a < m.order && same; ++a) same = exm.lact(x, a) == exm.lact(y, a);
      if (same) faithful = false;
    }

  CrossedExtensionParts parts;
  parts.A = a_grp;
  parts.Q = q_grp;
  parts.incl = a_sub.embed;
  parts.a_index = a_sub.index_in_sub;
  parts.proj = make_hom(l, q_grp, q.proj);
  parts.coset_reps = q.reps;
  parts.q_on_A = make_action(q_grp, a_grp, q_on_a);
  parts.g_on_A = make_action(exm.G, a_grp, g_on_a);
  parts.g_on_Q = make_action(exm.G, q_grp, g_on_q);
  parts.faithful = faithful;
  return parts;
}

EquivariantCrossedModule aut_xmod(const FiniteGroup& m, const FiniteGroup& g,
                                  const std::vector<std::vector<int>>& g_on_m) {
  AutomorphismGroup aut = automorphism_group(m);
  const FiniteGroup& l = aut.group;

  std::vector<int> boundary(m.order);
  for (int a = 0; a < m.order; ++a) {
    std::vector<int> inner(m.order);
    for (int x = 0; x < m.order; ++x) inner[x] = m.conj(a, x);
    boundary[a] = aut.index_of(inner);
    check(boundary[a] >= 0, "inner automorphism missing from Aut(M)");
  }

  std::vector<std::vector<int>> l_action(l.order, std::vector<int>(m.order));
  for (int x = 0; x < l.order; ++x) l_action[x] = aut.perms[x];

  auto xm = make_crossed_module(m, l, boundary, l_action);
  auto gm = make_action(g, m, g_on_m);

  // (g.alpha)(x) = g.(alpha(g^-1.x))
  std::vector<std::vector<int>> g_on_l(g.order, std::vector<int>(l.order));
  for (int gg = 0; gg < g.order; ++gg) {
    int ginv = g.inv(gg);
    for (int a = 0; a < l.order; ++a) {
      std::vector<int> twisted(m.order);
      for (int x = 0; x < m.order; ++x) twisted[x] = gm(gg, aut.perms[a][gm(ginv, x)]);
      int idx = aut.index_of(twisted);
      check(idx >= 0, "twisted automorphism missing from Aut(M)");
      g_on_l[gg][a] = idx;
    }
  }

  auto exm = make_equivariant(std::move(xm), gm, make_action(g, l, g_on_l));
  return exm;
}

EquivariantCrossedModule inclusion_xmod(const FiniteGroup& l, const std::vector<int>& normal_elements) {
  Subgroup n = subgroup_from_elements(l, normal_elements);
  for (int x = 0; x < l.order; ++x)
    for (int a : n.embed)
      if (n.index_in_sub[l.conj(x, a)] < 0)
        throw ValidationError("NotNormal", {x, a}, "subgroup is not normal in L");

  std::vector<int> boundary = n.embed;
  std::vector<std::vector<int>> l_action(l.order, std::vector<int>(n.group.order));
  for (int x = 0; x < l.order; ++x)
    for (int i = 0; i < n.group.order; ++i)
      l_action[x][i] = n.index_in_sub[l.conj(x, n.embed[i])];

  return with_trivial_g(make_crossed_module(n.group, l, boundary, l_action));
}

EquivariantCrossedModule trivial_module_xmod(const FiniteGroup& a, const FiniteGroup& q,
                                             const GroupAction& q_on_a) {
  if (!a.is_abelian())
    throw ValidationError("NotAbelian", {}, "trivial boundary requires an abelian module");
  auto xm = make_crossed_module(make_hom(a, q, std::vector<int>(a.order, 0)), q_on_a);
  return with_trivial_g(std::move(xm));
}

EquivariantCrossedModule trivial_module_xmod(const FiniteGroup& a, const FiniteGroup& q,
                                             const std::vector<std::vector<int>>& q_on_a) {
  return trivial_module_xmod(a, q, make_action(q, a, q_on_a));
}

EquivariantCrossedModule abelian_to_zero_xmod(const FiniteGroup& a) {
  auto c1 = cyclic_group(1);
  return trivial_module_xmod(a, c1, trivial_action(c1, a));
}

EquivariantCrossedModule abelian_to_zero_xmod(const FiniteGroup& a, const FiniteGroup& g,
                                              const std::vector<std::vector<int>>& g_on_a) {
  if (!a.is_abelian())
    throw ValidationError("NotAbelian", {}, "trivial boundary requires an abelian module");
  auto c1 = cyclic_group(1);
  auto xm = make_crossed_module(make_hom(a, c1, std::vector<int>(a.order, 0)),
                                trivial_action(c1, a));
  return make_equivariant(std::move(xm), make_action(g, a, g_on_a), trivial_action(g, c1));
}

bool is_xmod_morphism(const CrossedModule& from, const CrossedModule& to,
                      const std::vector<int>& alpha, const std::vector<int>& beta,
                      std::vector<int>* witness) {
  auto fail = [&](std::vector<int> w) {
    if (witness) *witness = std::move(w);
    return false;
  };
  for (int m = 0; m < from.M.order; ++m)
    if (to.d(alpha[m]) != beta[from.d(m)]) return fail({m});
  for (int x = 0; x < from.L.order; ++x)
    for (int m = 0; m < from.M.order; ++m)
      if (alpha[from.lact(x, m)] != to.lact(beta[x], alpha[m])) return fail({x, m});
  return true;
}

namespace {

std::vector<std::vector<int>> trivial_rows(int actor, int target) {
  std::vector<std::vector<int>> rows(actor, std::vector<int>(target));
  for (auto& row : rows)
    for (int t = 0; t < target; ++t) row[t] = t;
  return rows;
}

EquivariantCrossedModule fixture_t22() {
  auto c2 = cyclic_group(2);
  auto xm = make_crossed_module(c2, c2, {0, 0}, trivial_rows(2, 2));
  auto exm = make_equivariant(std::move(xm), c2, trivial_rows(2, 2), trivial_rows(2, 2));
  exm.name = "XM_T22";
  return exm;
}

EquivariantCrossedModule fixture_id2() {
  auto c2 = cyclic_group(2);
  auto xm = make_crossed_module(c2, c2, {0, 1}, trivial_rows(2, 2));
  auto exm = make_equivariant(std::move(xm), c2, trivial_rows(2, 2), trivial_rows(2, 2));
  exm.name = "XM_ID2";
  return exm;
}

EquivariantCrossedModule fixture_a2() {
  auto c2 = cyclic_group(2);
  auto exm = aut_xmod(c2, c2, trivial_rows(2, 2));
  exm.name = "XM_A2";
  return exm;
}

EquivariantCrossedModule fixture_a3() {
  auto c3 = cyclic_group(3);
  auto exm = aut_xmod(c3, c3, trivial_rows(3, 3));
  exm.name = "XM_A3";
  return exm;
}

// M = C4 = <u>, L = C8 = <l>, d(u) = l^4, l.u = u^-1;
// G = C2 = <s>, s.l = l^5, s.u = u.
EquivariantCrossedModule fixture_obs() {
  auto c4 = cyclic_group(4);
  auto c8 = cyclic_group(8);
  auto c2 = cyclic_group(2);

  std::vector<int> boundary(4);
  for (int k = 0; k < 4; ++k) boundary[k] = (4 * k) % 8;

  std::vector<std::vector<int>> l_action(8, std::vector<int>(4));
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 4; ++k) l_action[j][k] = (j % 2 == 0) ? k : (4 - k) % 4;

  std::vector<std::vector<int>> g_on_l(2, std::vector<int>(8));
  for (int k = 0; k < 8; ++k) {
    g_on_l[0][k] = k;
    g_on_l[1][k] = (5 * k) % 8;
  }

  auto xm = make_crossed_module(c4, c8, boundary, l_action);
  auto exm = make_equivariant(std::move(xm), c2, trivial_rows(2, 4), g_on_l);
  exm.name = "XM_OBS";
  return exm;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"XM_T22", "XM_ID2", "XM_A2", "XM_A3", "XM_OBS"};
}

EquivariantCrossedModule builtin_fixture(const std::string& name) {
  if (name == "XM_T22") return fixture_t22();
  if (name == "XM_ID2") return fixture_id2();
  if (name == "XM_A2") return fixture_a2();
  if (name == "XM_A3") return fixture_a3();
  if (name == "XM_OBS") return fixture_obs();
  throw ValidationError("UnknownFixture", {}, "no builtin fixture named " + name);
}

}  // namespace xcohom
