#pragma once

#include <optional>
#include <vector>

#include "xcohom/cohomology.hpp"

namespace xcohom {

// An extension of Pi by M over the crossed module d : M -> L:
//   1 -> M --kappa--> B --sigma--> Pi -> 1
// with varrho : B -> L satisfying varrho . kappa = d and
// b kappa(m) b^-1 = kappa( (varrho b).m ).
struct Extension {
  FiniteGroup B;
  FiniteGroup Pi;
  GroupHom kappa;   // M -> B
  GroupHom sigma;   // B -> Pi
  GroupHom varrho;  // B -> L
  EquivariantCrossedModule base;
  std::vector<int> kappa_inv;  // B index -> M index, -1 outside im kappa

  int zeta(int b, int m) const { return kappa_inv[B.conj(b, kappa.map[m])]; }
};

// Throws NotExact / VarrhoMismatch with witnesses.
Extension make_extension(const FiniteGroup& b, const std::vector<int>& kappa,
                         const std::vector<int>& sigma, const std::vector<int>& varrho,
                         const FiniteGroup& pi, const EquivariantCrossedModule& exm);

// Set-theoretic section of sigma with u(1) = identity.
struct Section {
  std::vector<int> u;  // Pi index -> B index
};

Section make_section(const Extension& e, std::vector<int> u);  // throws BadSection
Section canonical_section(const Extension& e);                 // least preimage per fiber
std::vector<Section> all_sections(const Extension& e);

// f(x,y) = kappa^-1( u(xy) u(y)^-1 u(x)^-1 ), phi = varrho . u.
Cocycle2 section_to_cocycle(const Extension& e, const Section& u);

// Carrier M x Pi with (a,x)(b,y) = (a . phi(x)b . f(x,y)^-1, xy),
// kappa(a) = (a,1), sigma(a,x) = x, varrho(a,x) = d(a) phi(x).
// Throws NotACocycle when the input fails the cocycle conditions.
Extension cocycle_to_extension(const Cocycle2& c, const FiniteGroup& pi,
                               const EquivariantCrossedModule& exm);

struct ExtensionWitness {
  std::vector<int> alpha;  // isomorphism B -> B'
  std::vector<int> t;      // Pi -> M
  int tau = 0;             // identity in thick mode
};

// Decides (weak) congruence through the extracted cocycles, then rebuilds and
// re-verifies the isomorphism alpha directly.
std::optional<ExtensionWitness> extensions_equivalent(const Extension& e, const Extension& ep,
                                                      H2Mode mode, Budget& budget);

struct ExtensionClassification {
  H2Classes h2;
  std::vector<Extension> representatives;  // one per class, in class order
};

ExtensionClassification classify_extensions(const FiniteGroup& pi,
                                            const EquivariantCrossedModule& exm, H2Mode mode,
                                            Budget& budget);

}  // namespace xcohom
