#pragma once

#include <optional>
#include <vector>

#include "xcohom/bouquets.hpp"

namespace xcohom {

// A right M-torsor P with compatible G-action and a structure map
// alpha : P -> L satisfying alpha(g.p) = g.alpha(p) and
// alpha(p m) = alpha(p) d(m).
struct Bitorsor {
  int size = 0;
  EquivariantCrossedModule exm;
  std::vector<int> right_act;  // P x M -> P
  std::vector<int> g_act;      // |G| x P -> P
  std::vector<int> alpha;      // P -> L

  int ract(int p, int m) const { return right_act[p * exm.M().order + m]; }
  int gact(int g, int p) const { return g_act[g * size + p]; }
  int xi(int p) const { return exm.L().inv(alpha[p]); }
};

// Throws NotFreeTransitive / GCompatViolation / AlphaViolationI /
// AlphaViolationII with witnesses.
Bitorsor make_bitorsor(int size, const std::vector<int>& right_act, const std::vector<int>& g_act,
                       const std::vector<int>& alpha, const EquivariantCrossedModule& exm);

// The unique m with q = p m.
int divide(const Bitorsor& p, int a, int b);

// f(x) = [p0 \ x.p0], tau = alpha(p0)^-1; asserts the cocycle conditions and
// base-point independence of the class.
Cocycle1 bitorsor_to_cocycle(const Bitorsor& p, int p0);

// P = M with right translation, g-action x.m = f(x) . x m, alpha(m) = tau^-1 d(m).
Bitorsor cocycle_to_bitorsor(const Cocycle1& c, const EquivariantCrossedModule& exm);

// A morphism is determined by the image of the base point; returns the full
// map P -> P' when one respecting G, M and alpha exists.
std::optional<std::vector<int>> bitorsor_isomorphism(const Bitorsor& p, const Bitorsor& q,
                                                     Budget& budget);

struct BitorsorClassification {
  H1Classes h1;
  std::vector<Bitorsor> bitorsors;       // one per Z^1 cocycle, same order
  ClassSet classes;                      // isomorphism classes
  std::vector<int> representative_ids;   // Z^1 indices, one per class
};

// Isomorphism classes of the cocycle bitorsors; verified to realize the same
// partition as h1_classes, with both composite maps the identity on classes.
BitorsorClassification classify_bitorsors(const EquivariantCrossedModule& exm, Budget& budget);

// Left action m * p = p . (xi(p)).m making P a left M-torsor; all the
// compatibility laws are asserted.
std::vector<int> left_action(const Bitorsor& p);  // M x P -> P

// pi(xi(p)), constant over P and G-fixed in Q.
int pi_star(const Bitorsor& p, const CrossedExtensionParts& parts);

// Left-and-right M-set with alpha; the bitorsor axioms on alpha are weakened
// to m p = p . (xi(p)).m.
struct WeakBitorsor {
  int size = 0;
  EquivariantCrossedModule exm;
  std::vector<int> right_act;
  std::vector<int> left_act;  // M x P -> P
  std::vector<int> g_act;
  std::vector<int> alpha;

  int ract(int p, int m) const { return right_act[p * exm.M().order + m]; }
  int lact_p(int m, int p) const { return left_act[m * size + p]; }
  int gact(int g, int p) const { return g_act[g * size + p]; }
  int xi(int p) const { return exm.L().inv(alpha[p]); }
};

WeakBitorsor make_weak_bitorsor(int size, const std::vector<int>& right_act,
                                const std::vector<int>& left_act, const std::vector<int>& g_act,
                                const std::vector<int>& alpha,
                                const EquivariantCrossedModule& exm);

// A bitorsor reread as a weak bitorsor through its induced left action.
WeakBitorsor as_weak(const Bitorsor& p);

// For a faithful crossed module the bitorsor axioms are implied and asserted;
// otherwise they are checked and NotPromotable is thrown on failure.
Bitorsor promote_weak(const WeakBitorsor& w);

// The groupoid with objects L_a = preimage of a, morphisms (x, m, y) with
// y = d(m) x, and the coordinatewise G-action.
struct GammaA {
  GGroupoid gamma;
  std::vector<int> objects;  // object index -> L index
};

GammaA gamma_a(int a, const EquivariantCrossedModule& exm, const CrossedExtensionParts& parts);

struct ObstructionReport {
  int a = 0;                  // Q element
  std::vector<int> l_a;       // the fiber over a, ascending L indices
  int chosen_x = 0;           // least element of l_a
  Extension b_ext;            // 1 -> A -> B -> G -> 1 over (A -> G)
  std::vector<int> factor_set;  // |G| x |G| of A indices
  int o_class = 0;            // class index in classical H^2(G, A)
  bool o_trivial = false;
  bool vanishes = false;      // == o_trivial, also decided by section search
  std::optional<Cocycle1> bitorsor_witness;  // (psi, tau = chosen_x) when vanishing
};

// Throws NotFixedPoint when a is not G-fixed in Q.
ObstructionReport obstruction(int a, const EquivariantCrossedModule& exm, Budget& budget);

}  // namespace xcohom
