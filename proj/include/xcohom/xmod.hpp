#pragma once

#include <string>
#include <vector>

#include "xcohom/group.hpp"

namespace xcohom {

// A crossed module: boundary : M -> L plus an L-action on M satisfying
//   CM1: d(x.m) = x d(m) x^-1           for x in L, m in M
//   CM2: (d(n)).m = n m n^-1 (Peiffer)  for m, n in M
struct CrossedModule {
  FiniteGroup M, L;
  GroupHom boundary;   // M -> L
  GroupAction l_on_m;  // L acting on the group M

  int d(int m) const { return boundary.map[m]; }
  int lact(int x, int m) const { return l_on_m(x, m); }
};

// Throws CM1Violation / CM2Violation with witnesses.
CrossedModule make_crossed_module(const FiniteGroup& m, const FiniteGroup& l,
                                  const std::vector<int>& boundary,
                                  const std::vector<std::vector<int>>& l_action);
CrossedModule make_crossed_module(GroupHom boundary, GroupAction l_on_m);

// G-equivariant structure:
//   d(g.m) = g.d(m)  and  g.(t.m) = (g.t).(g.m)  for g in G, t in L, m in M.
struct EquivariantCrossedModule {
  CrossedModule base;
  FiniteGroup G;
  GroupAction g_on_M, g_on_L;
  std::string name;  // fixture name when builtin

  const FiniteGroup& M() const { return base.M; }
  const FiniteGroup& L() const { return base.L; }
  int d(int m) const { return base.d(m); }
  int lact(int x, int m) const { return base.lact(x, m); }
  int gm(int g, int m) const { return g_on_M(g, m); }
  int gl(int g, int t) const { return g_on_L(g, t); }
};

// Throws EquivarianceViolation with witness.
EquivariantCrossedModule make_equivariant(CrossedModule xm, const FiniteGroup& g,
                                          const std::vector<std::vector<int>>& g_on_m,
                                          const std::vector<std::vector<int>>& g_on_l);
EquivariantCrossedModule make_equivariant(CrossedModule xm, GroupAction g_on_m, GroupAction g_on_l);

// Trivial G = C1 wrapper, for crossed modules used without equivariance.
EquivariantCrossedModule with_trivial_g(CrossedModule xm);

// Kernel/cokernel data of the boundary map: the crossed extension
//   1 -> A -> M -> L -> Q -> 1
// with A = ker d central in M and Q = L / im d, plus all induced actions.
struct CrossedExtensionParts {
  FiniteGroup A, Q;
  std::vector<int> incl;        // A index -> M index
  std::vector<int> a_index;     // M index -> A index, -1 outside
  GroupHom proj;                // L -> Q
  std::vector<int> coset_reps;  // Q index -> least L representative
  GroupAction q_on_A, g_on_A, g_on_Q;
  bool faithful = false;  // rho : L -> Aut(M) injective
};

CrossedExtensionParts crossed_extension_parts(const EquivariantCrossedModule& exm);

// Standard constructions.
EquivariantCrossedModule aut_xmod(const FiniteGroup& m, const FiniteGroup& g,
                                  const std::vector<std::vector<int>>& g_on_m);
// inclusion of a normal subgroup with the conjugation action; throws NotNormal
EquivariantCrossedModule inclusion_xmod(const FiniteGroup& l, const std::vector<int>& normal_elements);
// trivial boundary A -> Q with a Q-action on abelian A; throws NotAbelian
EquivariantCrossedModule trivial_module_xmod(const FiniteGroup& a, const FiniteGroup& q,
                                             const std::vector<std::vector<int>>& q_on_a);
EquivariantCrossedModule trivial_module_xmod(const FiniteGroup& a, const FiniteGroup& q,
                                             const GroupAction& q_on_a);
// A -> C1 for abelian A; throws NotAbelian
EquivariantCrossedModule abelian_to_zero_xmod(const FiniteGroup& a);
EquivariantCrossedModule abelian_to_zero_xmod(const FiniteGroup& a, const FiniteGroup& g,
                                              const std::vector<std::vector<int>>& g_on_a);

// Morphism (alpha, beta) of crossed modules: the boundary square commutes and
// alpha(x.m) = (beta x).(alpha m). Returns false and fills `witness`.
bool is_xmod_morphism(const CrossedModule& from, const CrossedModule& to,
                      const std::vector<int>& alpha, const std::vector<int>& beta,
                      std::vector<int>* witness = nullptr);

// Builtin fixtures: XM_T22, XM_ID2, XM_A2, XM_A3, XM_OBS.
std::vector<std::string> fixture_names();
EquivariantCrossedModule builtin_fixture(const std::string& name);

}  // namespace xcohom
