#include <doctest.h>

#include "support/invariants.hpp"
#include "xcohom/cohomology.hpp"

using namespace xcohom;

TEST_CASE("h0 computes G-fixed kernel elements") {
  CHECK(h0(builtin_fixture("XM_T22")).size() == 2);
  CHECK(h0(builtin_fixture("XM_ID2")) == std::vector<int>{0});
  auto parts = crossed_extension_parts(builtin_fixture("XM_OBS"));
  CHECK(fixed_points(parts.g_on_Q).size() == 4);
}

TEST_CASE("Z^1 enumeration") {
  Budget b;
  CHECK(enumerate_z1(builtin_fixture("XM_T22"), b).size() == 4);

  auto id2 = builtin_fixture("XM_ID2");
  auto z1 = enumerate_z1(id2, b);
  REQUIRE(z1.size() == 2);
  for (const auto& c : z1) CHECK(c.f == std::vector<int>{0, 0});  // f forced trivial

  // trivial G: exactly |L| cocycles
  auto obs_plain = with_trivial_g(builtin_fixture("XM_OBS").base);
  CHECK(enumerate_z1(obs_plain, b).size() == 8);
}

TEST_CASE("H^1 class counts") {
  Budget b;
  CHECK(h1_classes(builtin_fixture("XM_T22"), b).classes.count() == 4);
  CHECK(h1_classes(builtin_fixture("XM_ID2"), b).classes.count() == 1);
  CHECK(h1_classes(builtin_fixture("XM_A2"), b).classes.count() == 2);
}

TEST_CASE("Z^2 enumeration") {
  Budget b;
  auto t22 = builtin_fixture("XM_T22");
  CHECK(enumerate_z2(t22.G, t22, b).size() == 4);

  auto id2 = builtin_fixture("XM_ID2");
  CHECK(enumerate_z2(id2.G, id2, b).size() == 2);

  // the trivial pair always belongs
  for (const auto& name : fixture_names()) {
    auto exm = builtin_fixture(name);
    Cocycle2 trivial;
    trivial.n = exm.G.order;
    trivial.f.assign((size_t)trivial.n * trivial.n, 0);
    trivial.phi.assign(trivial.n, 0);
    CHECK(is_z2(trivial, exm.G, exm));
  }
}

TEST_CASE("2-cocycle congruence searches") {
  Budget b;
  auto t22 = builtin_fixture("XM_T22");
  auto z2 = enumerate_z2(t22.G, t22, b);
  REQUIRE(z2.size() == 4);

  // reflexivity with the trivial witness
  auto w = cocycle2_equivalent(z2[0], z2[0], H2Mode::thick, t22.G, t22, b);
  REQUIRE(w.has_value());
  CHECK(w->t == std::vector<int>{0, 0});
  CHECK(w->tau == 0);

  // pairwise inequivalent in both modes
  for (size_t i = 0; i < z2.size(); ++i)
    for (size_t j = i + 1; j < z2.size(); ++j) {
      CHECK_FALSE(cocycle2_equivalent(z2[i], z2[j], H2Mode::thick, t22.G, t22, b));
      CHECK_FALSE(cocycle2_equivalent(z2[i], z2[j], H2Mode::weak, t22.G, t22, b));
    }

  // the two nontrivial classical classes over aut(C3) merge weakly via the
  // inversion twist, but not thickly
  auto a3 = builtin_fixture("XM_A3");
  auto pi = cyclic_group(3);
  auto h2 = h2_classes(pi, a3, H2Mode::thick, b);
  REQUIRE(h2.classes.count() == 3);
  const auto& c1 = h2.cocycles[h2.classes.representatives[1]];
  const auto& c2 = h2.cocycles[h2.classes.representatives[2]];
  CHECK_FALSE(cocycle2_equivalent(c1, c2, H2Mode::thick, pi, a3, b));
  auto weak = cocycle2_equivalent(c1, c2, H2Mode::weak, pi, a3, b);
  REQUIRE(weak.has_value());
  CHECK(weak->tau == 1);  // the inversion automorphism
}

TEST_CASE("H^2 class counts") {
  Budget b;
  auto t22 = builtin_fixture("XM_T22");
  auto h2 = h2_classes(t22.G, t22, H2Mode::thick, b);
  CHECK(h2.thick_count == 4);
  CHECK(h2.weak_count == 4);

  auto a3 = builtin_fixture("XM_A3");
  auto h2a = h2_classes(cyclic_group(3), a3, H2Mode::weak, b);
  CHECK(h2a.thick_count == 3);
  CHECK(h2a.weak_count == 2);

  // trivial Pi
  auto h2t = h2_classes(cyclic_group(1), t22, H2Mode::thick, b);
  CHECK(h2t.classes.count() == 1);
}

TEST_CASE("classical factor sets") {
  Budget b;
  auto c2 = cyclic_group(2);
  auto c3 = cyclic_group(3);
  CHECK(classical_h2(c2, c2, trivial_action(c2, c2), b).classes.count() == 2);
  CHECK(classical_h2(c3, c3, trivial_action(c3, c3), b).classes.count() == 3);
  auto c1 = cyclic_group(1);
  CHECK(classical_h2(c1, c3, trivial_action(c1, c3), b).classes.count() == 1);
  CHECK_THROWS_AS(classical_h2(c2, symmetric3(), trivial_action(c2, symmetric3()), b),
                  ValidationError);
}

TEST_CASE("classical factor sets match the cyclic-group formula") {
  // |H^2(C_m, C_n)| = gcd(m, n) for the trivial action
  Budget b;
  auto gcd = [](int a, int c) {
    while (c) {
      int t = a % c;
      a = c;
      c = t;
    }
    return a;
  };
  for (int m : {2, 3, 4})
    for (int n : {2, 3, 4}) {
      auto g = cyclic_group(m);
      auto a = cyclic_group(n);
      CHECK(classical_h2(g, a, trivial_action(g, a), b).classes.count() == gcd(m, n));
    }
  // elementary abelian: dim H^2(K4, F2) = 3
  auto k4 = klein_four();
  auto c2 = cyclic_group(2);
  CHECK(classical_h2(k4, c2, trivial_action(k4, c2), b).classes.count() == 8);
}

TEST_CASE("twisted coefficients") {
  // inversion actions: H^2(C2, C3) = 1, H^2(C2, C4) = 2; same for H^1
  Budget b;
  auto c2 = cyclic_group(2);
  auto inv3 = make_action(c2, cyclic_group(3), {{0, 1, 2}, {0, 2, 1}});
  auto inv4 = make_action(c2, cyclic_group(4), {{0, 1, 2, 3}, {0, 3, 2, 1}});
  CHECK(classical_h2(c2, cyclic_group(3), inv3, b).classes.count() == 1);
  CHECK(classical_h2(c2, cyclic_group(4), inv4, b).classes.count() == 2);

  auto tw3 = abelian_to_zero_xmod(cyclic_group(3), c2, {{0, 1, 2}, {0, 2, 1}});
  auto tw4 = abelian_to_zero_xmod(cyclic_group(4), c2, {{0, 1, 2, 3}, {0, 3, 2, 1}});
  CHECK(h1_classes(tw3, b).classes.count() == 1);
  CHECK(h1_classes(tw4, b).classes.count() == 2);
}

TEST_CASE("budget exhaustion raises") {
  Budget tiny(3);
  auto a3 = builtin_fixture("XM_A3");
  CHECK_THROWS_AS(enumerate_z2(cyclic_group(3), a3, tiny), BudgetExceeded);
}

TEST_CASE("cohomology invariant suite") { CHECK(invariants::cohomology(nullptr) > 0); }
