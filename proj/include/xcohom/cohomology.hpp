#pragma once

#include <optional>
#include <vector>

#include "xcohom/budget.hpp"
#include "xcohom/xmod.hpp"

namespace xcohom {

// Degree-1 cocycle: a pair (f : G -> M, tau in L) with f(1) = 1,
//   f(xy) = f(x) . x f(y)   and   tau = d(f(x)) . x tau.
struct Cocycle1 {
  std::vector<int> f;  // |G| entries of M indices, f[0] = 0
  int tau = 0;
};

bool operator==(const Cocycle1& a, const Cocycle1& b);

// Degree-2 cocycle over Pi: normalized pair (f : Pi x Pi -> M, phi : Pi -> L),
//   phi(1) = 1, f(1,.) = f(.,1) = 1,
//   phi(xy) = d(f(x,y)) phi(x) phi(y),
//   f(xy,z) f(x,y) = f(x,yz) . phi(x)f(y,z).
struct Cocycle2 {
  int n = 0;            // |Pi|
  std::vector<int> f;   // n*n entries of M indices, row-major f[x*n+y]
  std::vector<int> phi;  // n entries of L indices

  int fat(int x, int y) const { return f[x * n + y]; }
};

bool operator==(const Cocycle2& a, const Cocycle2& b);

enum class H2Mode { thick, weak };

// Partition of an enumerated cocycle list into classes; class ids are assigned
// in order of least member, and representatives are those least members.
struct ClassSet {
  H2Mode mode = H2Mode::thick;
  std::vector<int> class_of;
  std::vector<int> representatives;

  int count() const { return (int)representatives.size(); }
};

ClassSet classes_from_unionfind(std::vector<int> parents, H2Mode mode);

// A^G = { m in M : d(m) = 1 and g.m = m for all g }.
std::vector<int> h0(const EquivariantCrossedModule& exm);

bool is_z1(const Cocycle1& c, const EquivariantCrossedModule& exm, std::vector<int>* witness = nullptr);
std::vector<Cocycle1> enumerate_z1(const EquivariantCrossedModule& exm, Budget& budget);

// Witness m for (f,tau) ~ (f',tau'): tau = d(m) tau', f(x) = m f'(x) (g.m)^-1.
std::optional<int> cocycle1_equivalent(const Cocycle1& c, const Cocycle1& cp,
                                       const EquivariantCrossedModule& exm, Budget& budget);

struct H1Classes {
  std::vector<Cocycle1> cocycles;
  ClassSet classes;
};

H1Classes h1_classes(const EquivariantCrossedModule& exm, Budget& budget);

bool is_z2(const Cocycle2& c, const FiniteGroup& pi, const EquivariantCrossedModule& exm,
           std::vector<int>* witness = nullptr);
std::vector<Cocycle2> enumerate_z2(const FiniteGroup& pi, const EquivariantCrossedModule& exm,
                                   Budget& budget);

// Witness for congruence of 2-cocycles. thick: t : Pi -> M, t(1) = 1 with
//   phi(x) = d(t(x)) phi'(x),
//   f'(x,y) = t(xy)^-1 f(x,y) t(x) . phi'(x)t(y);
// weak: additionally tau in L with
//   phi(x) = tau^-1 d(t(x)) phi'(x) tau,
//   f'(x,y) = t(xy)^-1 (tau.f(x,y)) t(x) . phi'(x)t(y).
struct Cocycle2Witness {
  std::vector<int> t;
  int tau = 0;  // identity in thick mode
};

std::optional<Cocycle2Witness> cocycle2_equivalent(const Cocycle2& c, const Cocycle2& cp,
                                                   H2Mode mode, const FiniteGroup& pi,
                                                   const EquivariantCrossedModule& exm,
                                                   Budget& budget);

struct H2Classes {
  std::vector<Cocycle2> cocycles;
  ClassSet classes;
  int thick_count = 0;  // computed alongside either mode for the surjection check
  int weak_count = 0;
};

// Quotients Z^2 by the requested congruence. Both partitions are always
// computed so the canonical thick -> weak surjection can be verified.
H2Classes h2_classes(const FiniteGroup& pi, const EquivariantCrossedModule& exm, H2Mode mode,
                     Budget& budget);

// Classical second cohomology of G with coefficients in an abelian G-group A:
// normalized factor sets f(xy,z) f(x,y) = f(x,yz) . x f(y,z) modulo
// coboundaries b(x,y) = t(xy)^-1 t(x) . x t(y).
struct ClassicalH2 {
  FiniteGroup G, A;
  std::vector<std::vector<int>> cocycles;  // flattened |G|x|G| tables of A indices
  ClassSet classes;
  int trivial_class = 0;  // class of the all-identity factor set
};

ClassicalH2 classical_h2(const FiniteGroup& g, const FiniteGroup& a, const GroupAction& g_on_a,
                         Budget& budget);

// Class of an arbitrary normalized factor set; throws if it is not a cocycle.
int classical_class_of(const ClassicalH2& h2, const std::vector<int>& cocycle);

// All homomorphisms Pi -> L in lexicographic map order (used for the trivial-
// boundary decomposition of extension classes).
std::vector<std::vector<int>> all_homs(const FiniteGroup& pi, const FiniteGroup& l, Budget& budget);

}  // namespace xcohom
