#pragma once

#include <optional>
#include <vector>

#include "xcohom/extensions.hpp"

namespace xcohom {

// Morphisms are identified structurally by (src, payload, dst) triples.
struct Morphism {
  int src = 0, payload = 0, dst = 0;
};

bool operator==(const Morphism& a, const Morphism& b);
bool operator<(const Morphism& a, const Morphism& b);

// A finite groupoid with a G-action by functors. Composition, identities,
// inverses and the action laws are all validated on construction.
struct GGroupoid {
  int n_objects = 0;
  FiniteGroup G;
  std::vector<Morphism> mors;
  std::vector<int> compose_table;  // mors x mors; [after * n + first], -1 undefined
  std::vector<int> ids;            // identity morphism per object
  std::vector<int> invs;           // inverse per morphism
  std::vector<int> act_obj;        // |G| x n_objects
  std::vector<int> act_mor;        // |G| x mors
  bool bouquet = false;            // nonempty and connected

  int morphism_count() const { return (int)mors.size(); }
  int compose(int after, int first) const {
    return compose_table[after * morphism_count() + first];
  }
  int gobj(int g, int obj) const { return act_obj[g * n_objects + obj]; }
  int gmor(int g, int m) const { return act_mor[g * morphism_count() + m]; }
  int find_mor(int src, int payload, int dst) const;  // -1 absent
  // morphisms obj -> obj, identity first then ascending id
  std::vector<int> aut_mors(int obj) const;
};

// Throws CategoryAxiomViolation / ActionNotFunctorial with witnesses.
GGroupoid make_ggroupoid(int n_objects, std::vector<Morphism> mors,
                         std::vector<int> compose_table, FiniteGroup g,
                         std::vector<int> act_obj, std::vector<int> act_mor);

// Automorphism group at an object as an abstract group; element i corresponds
// to aut_mors(obj)[i] and multiplication is composition.
struct ObjectAutGroup {
  FiniteGroup group;
  std::vector<int> mor_ids;
  std::vector<int> index_of_mor;  // morphism id -> element index, -1 elsewhere
};

ObjectAutGroup object_aut_group(const GGroupoid& gamma, int obj);

// A functor between G-groupoids as explicit object/morphism maps.
struct GFunctor {
  std::vector<int> obj_map;
  std::vector<int> mor_map;
};

void check_functor(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f);
void check_equivariant(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f);
bool is_full(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f);
bool is_faithful(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f);
bool is_essentially_surjective(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f);
// functor + equivariant + full + faithful + essentially surjective
void check_weak_equivalence(const GGroupoid& src, const GGroupoid& dst, const GFunctor& f);

// One-object groupoid of a G-group M (payloads are M elements).
GGroupoid one_object_groupoid(const FiniteGroup& m, const FiniteGroup& g,
                              const GroupAction& g_on_m);

// Object set G x Ob(gamma) with the free left translation action; morphisms
// are pulled back along (g, a) -> g.a. The returned functor is a G-equivariant
// weak equivalence onto the input.
struct Freeified {
  GGroupoid groupoid;
  GFunctor to_original;
};

Freeified freeify(const GGroupoid& gamma);

// theta_{g,lambda}(alpha) = lambda . g(alpha) . lambda^-1 on Aut(x), as a
// morphism-id table parallel to aut_mors(x). Throws TypeMismatch.
std::vector<int> theta_auto(const GGroupoid& gamma, int x, int g, int lambda);

// The group of pairs (g, lambda : g.x -> x) under
// (g,lambda)(h,mu) = (gh, lambda . g(mu)), identity first.
struct BGamma {
  FiniteGroup B;
  std::vector<std::pair<int, int>> elements;  // (g, lambda mor id)
  std::vector<int> kappa;                     // Aut(x) element index -> B index
  std::vector<int> p;                         // B index -> g
  ObjectAutGroup aut_x;
  int base_object = 0;

  int pair_index(int g, int lambda) const;
};

BGamma b_gamma(const GGroupoid& gamma, int x);  // throws NotABouquet

// Groupoid with objects G and morphisms (f, b, g), sigma(b) = g^-1 f, acted on
// by h.(f,b,g) = (hf, b, hg).
GGroupoid gamma_of_extension(const FiniteGroup& b, const GroupHom& sigma);
GGroupoid gamma_of_extension(const Extension& e);

// Psi : Gamma(B_Gamma^x) -> Gamma, g -> g.x on objects, (f, (h,lambda), g) -> g.lambda.
GFunctor psi_functor(const GGroupoid& gamma, int x, const BGamma& bg,
                     const GGroupoid& gamma_of_bg);

// A bouquet equipped with eta : M ~ Aut(a) and L-lifts theta of the twist
// automorphisms; theta is indexed per (g, lambda : g.a -> a).
struct BouquetOverXM {
  GGroupoid gamma;
  int base_obj = 0;
  std::vector<int> eta;          // M index -> morphism id in Aut(base)
  std::vector<int> eta_inv;      // morphism id -> M index, -1 elsewhere
  std::vector<int> theta;        // |G| x mors of L indices, -1 where untyped
  EquivariantCrossedModule exm;

  int theta_at(int g, int lambda) const { return theta[g * gamma.morphism_count() + lambda]; }
};

// Validates the defining identity lambda . g(eta m) = eta(theta.m) . lambda and
// the induced (M -> L)-extension structure on B_Gamma (with varrho = theta).
// Throws EtaNotIso / ThetaMismatch / NotABouquet.
BouquetOverXM make_bouquet_over_xm(GGroupoid gamma, int a, std::vector<int> eta,
                                   std::vector<int> theta, EquivariantCrossedModule exm);

// phi(g) = theta_{g, lambda_g}, f(g,h) = eta^-1(lambda_{gh} . (g.lambda_h)^-1 . lambda_g^-1).
// The family must satisfy lambda_1 = id; throws BadFamily.
Cocycle2 bouquet_to_cocycle(const BouquetOverXM& bq, const std::vector<int>& lambda_family);

std::vector<int> canonical_lambda_family(const BouquetOverXM& bq);
std::vector<std::vector<int>> all_lambda_families(const BouquetOverXM& bq);

// Characteristic class in the thick quotient; asserts independence of the
// lambda family (all families when their number is small, via the coboundary
// s(g) = lambda'_g . lambda_g^-1).
int characteristic_class(const BouquetOverXM& bq, const H2Classes& thick, Budget& budget);

// The bouquet Gamma(phi, f) of a normalized 2-cocycle: objects Pi, morphisms
// (g, alpha, h), action t.(g,alpha,h) = (tg, f(t,h) . phi(t)alpha . f(t,g)^-1, th).
BouquetOverXM bouquet_of_cocycle(const Cocycle2& c, const FiniteGroup& pi,
                                 const EquivariantCrossedModule& exm);

// Isomorphism Gamma(phi,f) -> Gamma(phi',f') induced by s : Pi -> M with
// phi = d(s) phi' and the matching coboundary relation on f; verified to be a
// G-equivariant isomorphism defined over the crossed module.
GFunctor coboundary_functor(const BouquetOverXM& from, const BouquetOverXM& to,
                            const std::vector<int>& s);

// Comparison functor Gamma(phi,f) -> target for the cocycle extracted from
// `lambda_family`; verified to be a G-equivariant weak equivalence defined
// over the crossed module.
GFunctor comparison_functor(const BouquetOverXM& cocycle_bouquet, const BouquetOverXM& target,
                            const std::vector<int>& lambda_family);

// thetas defined over a crossed module transported along a functor agree.
void check_defined_over(const BouquetOverXM& from, const BouquetOverXM& to, const GFunctor& f);

}  // namespace xcohom
