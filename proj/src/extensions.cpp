#include "xcohom/extensions.hpp"

#include <algorithm>

namespace xcohom {

namespace {

bool same_coefficients(const EquivariantCrossedModule& a, const EquivariantCrossedModule& b) {
  return a.M() == b.M() && a.L() == b.L() && a.base.boundary.map == b.base.boundary.map &&
         a.base.l_on_m.table == b.base.l_on_m.table;
}

}  // namespace

Extension make_extension(const FiniteGroup& b, const std::vector<int>& kappa,
                         const std::vector<int>& sigma, const std::vector<int>& varrho,
                         const FiniteGroup& pi, const EquivariantCrossedModule& exm) {
  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();

  Extension e;
  e.B = b;
  e.Pi = pi;
  e.kappa = make_hom(m, b, kappa);
  e.sigma = make_hom(b, pi, sigma);
  e.varrho = make_hom(b, l, varrho);
  e.base = exm;

  e.kappa_inv.assign(b.order, -1);
  for (int x = 0; x < m.order; ++x) {
    if (e.kappa_inv[kappa[x]] >= 0)
      throw ValidationError("NotExact", {e.kappa_inv[kappa[x]], x}, "kappa is not injective");
    e.kappa_inv[kappa[x]] = x;
  }

  std::vector<char> hit(pi.order, 0);
  for (int x = 0; x < b.order; ++x) hit[sigma[x]] = 1;
  for (int x = 0; x < pi.order; ++x)
    if (!hit[x]) throw ValidationError("NotExact", {x}, "sigma is not surjective");

  for (int x = 0; x < b.order; ++x) {
    bool in_image = e.kappa_inv[x] >= 0;
    bool in_kernel = sigma[x] == FiniteGroup::id;
    if (in_image != in_kernel)
      throw ValidationError("NotExact", {x}, "im kappa != ker sigma at the witness element");
  }

  for (int x = 0; x < m.order; ++x)
    if (varrho[kappa[x]] != exm.d(x))
      throw ValidationError("VarrhoMismatch", {x}, "varrho . kappa != boundary");

  // rho . varrho = zeta: conjugation in B matches the L-action through varrho
  for (int bb = 0; bb < b.order; ++bb)
    for (int x = 0; x < m.order; ++x)
      if (b.conj(bb, kappa[x]) != kappa[exm.lact(varrho[bb], x)])
        throw ValidationError("VarrhoMismatch", {bb, x},
                              "b kappa(m) b^-1 != kappa((varrho b).m)");
  return e;
}

Section make_section(const Extension& e, std::vector<int> u) {
  if ((int)u.size() != e.Pi.order)
    throw ValidationError("BadSection", {}, "section table has wrong length");
  if (u[0] != FiniteGroup::id)
    throw ValidationError("BadSection", {0}, "section must send 1 to the identity");
  for (int x = 0; x < e.Pi.order; ++x)
    if (e.sigma.map[u[x]] != x)
      throw ValidationError("BadSection", {x}, "sigma(u(x)) != x");
  return Section{std::move(u)};
}

Section canonical_section(const Extension& e) {
  std::vector<int> u(e.Pi.order, -1);
  for (int b = 0; b < e.B.order; ++b)
    if (u[e.sigma.map[b]] < 0) u[e.sigma.map[b]] = b;
  return make_section(e, std::move(u));
}

std::vector<Section> all_sections(const Extension& e) {
  std::vector<std::vector<int>> fibers(e.Pi.order);
  for (int b = 0; b < e.B.order; ++b) fibers[e.sigma.map[b]].push_back(b);
  fibers[0] = {FiniteGroup::id};

  std::vector<Section> sections;
  std::vector<size_t> pick(e.Pi.order, 0);
  while (true) {
    std::vector<int> u(e.Pi.order);
    for (int x = 0; x < e.Pi.order; ++x) u[x] = fibers[x][pick[x]];
    sections.push_back(make_section(e, std::move(u)));
    int s = e.Pi.order - 1;
    for (; s >= 0; --s) {
      if (++pick[s] < fibers[s].size()) break;
      pick[s] = 0;
    }
    if (s < 0) break;
  }
  return sections;
}

Cocycle2 section_to_cocycle(const Extension& e, const Section& sec) {
  const FiniteGroup& b = e.B;
  const FiniteGroup& pi = e.Pi;
  int n = pi.order;

  Cocycle2 c;
  c.n = n;
  c.f.assign((size_t)n * n, -1);
  c.phi.resize(n);
  for (int x = 0; x < n; ++x) c.phi[x] = e.varrho.map[sec.u[x]];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int w = b.mul(sec.u[pi.mul(x, y)], b.inv(b.mul(sec.u[x], sec.u[y])));
      check(e.kappa_inv[w] >= 0, "section defect left im kappa");
      c.f[x * n + y] = e.kappa_inv[w];
    }

  check(is_z2(c, pi, e.base), "extracted pair fails the 2-cocycle identities");
  // u(x) kappa(m) = kappa(phi(x).m) u(x)
  for (int x = 0; x < n; ++x)
    for (int m = 0; m < e.base.M().order; ++m)
      check(b.mul(sec.u[x], e.kappa.map[m]) ==
                b.mul(e.kappa.map[e.base.lact(c.phi[x], m)], sec.u[x]),
            "section conjugation identity fails");
  return c;
}

Extension cocycle_to_extension(const Cocycle2& c, const FiniteGroup& pi,
                               const EquivariantCrossedModule& exm) {
  std::vector<int> witness;
  if (!is_z2(c, pi, exm, &witness))
    throw ValidationError("NotACocycle", witness, "input fails the 2-cocycle identities");

  const FiniteGroup& m = exm.M();
  const FiniteGroup& l = exm.L();
  int n = pi.order;
  int order = m.order * n;
  auto idx = [&](int a, int x) { return a * n + x; };

  std::vector<int> mul((size_t)order * order);
  for (int a = 0; a < m.order; ++a)
    for (int x = 0; x < n; ++x)
      for (int bb = 0; bb < m.order; ++bb)
        for (int y = 0; y < n; ++y) {
          int part = m.mul(m.mul(a, exm.lact(c.phi[x], bb)), m.inv(c.fat(x, y)));
          mul[idx(a, x) * order + idx(bb, y)] = idx(part, pi.mul(x, y));
        }
  FiniteGroup b = make_group_flat(order, std::move(mul));

  std::vector<int> kappa(m.order), sigma(order), varrho(order);
  for (int a = 0; a < m.order; ++a) kappa[a] = idx(a, 0);
  for (int a = 0; a < m.order; ++a)
    for (int x = 0; x < n; ++x) {
      sigma[idx(a, x)] = x;
      varrho[idx(a, x)] = l.mul(exm.d(a), c.phi[x]);
    }

  // d(a) phi(x) d(b) phi(y) = d(a . phi(x)b . f(x,y)^-1) phi(xy)
  for (int a = 0; a < m.order; ++a)
    for (int x = 0; x < n; ++x)
      for (int bb = 0; bb < m.order; ++bb)
        for (int y = 0; y < n; ++y) {
          int lhs = l.mul(l.mul(exm.d(a), c.phi[x]), l.mul(exm.d(bb), c.phi[y]));
          int prod = m.mul(m.mul(a, exm.lact(c.phi[x], bb)), m.inv(c.fat(x, y)));
          int rhs = l.mul(exm.d(prod), c.phi[pi.mul(x, y)]);
          check(lhs == rhs, "varrho homomorphism identity fails");
        }

  return make_extension(b, kappa, sigma, varrho, pi, exm);
}

std::optional<ExtensionWitness> extensions_equivalent(const Extension& e, const Extension& ep,
                                                      H2Mode mode, Budget& budget) {
  if (!(e.Pi == ep.Pi) || !same_coefficients(e.base, ep.base))
    throw ValidationError("Mismatch", {}, "extensions live over different (Pi, M -> L)");

  const FiniteGroup& pi = e.Pi;
  const FiniteGroup& m = e.base.M();
  const FiniteGroup& l = e.base.L();

  Section u = canonical_section(e);
  Section up = canonical_section(ep);
  Cocycle2 c = section_to_cocycle(e, u);
  Cocycle2 cp = section_to_cocycle(ep, up);

  auto w = cocycle2_equivalent(c, cp, mode, pi, e.base, budget);
  if (!w) return std::nullopt;

  // alpha(kappa(m) u(x)) = kappa'(tau.m) kappa'(t(x)) u'(x)
  std::vector<int> alpha(e.B.order);
  for (int b = 0; b < e.B.order; ++b) {
    int x = e.sigma.map[b];
    int mm = e.kappa_inv[e.B.mul(b, e.B.inv(u.u[x]))];
    check(mm >= 0, "element does not factor through the section");
    int moved = m.mul(e.base.lact(w->tau, mm), w->t[x]);
    alpha[b] = ep.B.mul(ep.kappa.map[moved], up.u[x]);
  }

  std::vector<char> seen(ep.B.order, 0);
  for (int b = 0; b < e.B.order; ++b) {
    check(!seen[alpha[b]], "reconstructed alpha is not injective");
    seen[alpha[b]] = 1;
  }
  for (int x = 0; x < e.B.order; ++x)
    for (int y = 0; y < e.B.order; ++y)
      check(alpha[e.B.mul(x, y)] == ep.B.mul(alpha[x], alpha[y]),
            "reconstructed alpha is not a homomorphism");
  for (int b = 0; b < e.B.order; ++b)
    check(ep.sigma.map[alpha[b]] == e.sigma.map[b], "alpha does not commute with sigma");
  for (int x = 0; x < m.order; ++x)
    check(alpha[e.kappa.map[x]] == ep.kappa.map[e.base.lact(w->tau, x)],
          "alpha restricted to M is not the tau action");
  for (int b = 0; b < e.B.order; ++b)
    check(l.mul(l.inv(w->tau), l.mul(ep.varrho.map[alpha[b]], w->tau)) == e.varrho.map[b],
          "tau^-1 varrho'(alpha b) tau != varrho(b)");
  if (mode == H2Mode::thick)
    check(w->tau == FiniteGroup::id, "thick witness carries a nontrivial tau");

  // tau^-1 zeta'(alpha b) tau acts as zeta(b)
  for (int b = 0; b < e.B.order; ++b)
    for (int x = 0; x < m.order; ++x) {
      int lhs = e.base.lact(l.inv(w->tau),
                            ep.zeta(alpha[b], e.base.lact(w->tau, x)));
      check(lhs == e.zeta(b, x), "zeta conjugation identity fails");
    }

  return ExtensionWitness{std::move(alpha), std::move(w->t), w->tau};
}

ExtensionClassification classify_extensions(const FiniteGroup& pi,
                                            const EquivariantCrossedModule& exm, H2Mode mode,
                                            Budget& budget) {
  ExtensionClassification result;
  result.h2 = h2_classes(pi, exm, mode, budget);
  for (int rep : result.h2.classes.representatives)
    result.representatives.push_back(cocycle_to_extension(result.h2.cocycles[rep], pi, exm));
  check((int)result.representatives.size() == result.h2.classes.count(),
        "class count mismatch in extension classification");
  return result;
}

}  // namespace xcohom
