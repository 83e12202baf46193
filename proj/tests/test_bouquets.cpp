#include <doctest.h>

#include "support/invariants.hpp"
#include "xcohom/bouquets.hpp"

using namespace xcohom;

namespace {

std::vector<std::vector<int>> trivial_rows(int actor, int target) {
  std::vector<std::vector<int>> rows(actor, std::vector<int>(target));
  for (auto& row : rows)
    for (int t = 0; t < target; ++t) row[t] = t;
  return rows;
}

Extension c4_over_t22() {
  auto t22 = builtin_fixture("XM_T22");
  return make_extension(cyclic_group(4), {0, 2}, {0, 1, 0, 1}, {0, 1, 0, 1}, cyclic_group(2),
                        t22);
}

}  // namespace

TEST_CASE("one-object groupoids are bouquets") {
  auto c2 = cyclic_group(2);
  auto g = one_object_groupoid(cyclic_group(4), c2, trivial_action(c2, cyclic_group(4)));
  CHECK(g.bouquet);
  CHECK(g.morphism_count() == 4);
  CHECK(g.aut_mors(0).size() == 4);
}

TEST_CASE("Gamma(B) of the C4 fixture") {
  auto e = c4_over_t22();
  auto gamma = gamma_of_extension(e);
  CHECK(gamma.n_objects == 2);
  CHECK(gamma.morphism_count() == 8);  // |G|^2 |M|
  CHECK(gamma.bouquet);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      int count = 0;
      for (const auto& m : gamma.mors) count += m.src == a && m.dst == b;
      CHECK(count == 2);  // every homset has |M| elements
    }
}

TEST_CASE("a disconnected groupoid is not a bouquet") {
  // two objects, only identity loops
  std::vector<Morphism> mors = {{0, 0, 0}, {1, 0, 1}};
  std::vector<int> compose = {0, -1, -1, 1};
  auto c1 = cyclic_group(1);
  auto g = make_ggroupoid(2, mors, compose, c1, {0, 1}, {0, 1});
  CHECK_FALSE(g.bouquet);
  CHECK_THROWS_AS(b_gamma(g, 0), ValidationError);
}

TEST_CASE("freeify makes the object action free") {
  auto c2 = cyclic_group(2);
  auto one = one_object_groupoid(cyclic_group(2), c2, trivial_action(c2, cyclic_group(2)));
  auto free2 = freeify(one);  // asserts the weak equivalence internally
  CHECK(free2.groupoid.n_objects == 2);
  for (int x = 0; x < free2.groupoid.n_objects; ++x)
    CHECK(free2.groupoid.gobj(1, x) != x);

  auto c1 = cyclic_group(1);
  auto single = one_object_groupoid(cyclic_group(3), c1, trivial_action(c1, cyclic_group(3)));
  auto free1 = freeify(single);
  CHECK(free1.groupoid.n_objects == single.n_objects);
}

TEST_CASE("theta_auto on Gamma(B) is conjugation by the carrier element") {
  auto e = c4_over_t22();
  auto gamma = gamma_of_extension(e);
  auto aut = gamma.aut_mors(0);

  for (int g = 0; g < 2; ++g)
    for (int mor = 0; mor < gamma.morphism_count(); ++mor) {
      if (gamma.mors[mor].src != gamma.gobj(g, 0) || gamma.mors[mor].dst != 0) continue;
      auto theta = theta_auto(gamma, 0, g, mor);
      int b = gamma.mors[mor].payload;
      for (size_t k = 0; k < aut.size(); ++k) {
        int payload = gamma.mors[aut[k]].payload;
        CHECK(gamma.mors[theta[k]].payload == e.B.conj(b, payload));
      }
    }

  // identity case
  auto theta_id = theta_auto(gamma, 0, 0, gamma.ids[0]);
  for (size_t k = 0; k < aut.size(); ++k) CHECK(theta_id[k] == aut[k]);

  CHECK_THROWS_AS(theta_auto(gamma, 0, 1, gamma.ids[0]), ValidationError);  // wrong typing
}

TEST_CASE("b_gamma rebuilds the extension group") {
  auto e = c4_over_t22();
  auto gamma = gamma_of_extension(e);
  auto bg = b_gamma(gamma, 0);
  CHECK(bg.B.order == 4);
  CHECK(are_isomorphic(bg.B, cyclic_group(4)));

  // one-object bouquet with trivial action: direct product M x G
  auto c2 = cyclic_group(2);
  auto one = one_object_groupoid(cyclic_group(2), c2, trivial_action(c2, cyclic_group(2)));
  auto bg1 = b_gamma(one, 0);
  CHECK(bg1.B.order == 4);
  CHECK(are_isomorphic(bg1.B, klein_four()));
}

TEST_CASE("bouquets over aut coefficients have a unique theta") {
  // one-object bouquet of M = C3 over aut(C3): theta must be the twist itself
  auto a3 = builtin_fixture("XM_A3");
  auto gamma = one_object_groupoid(cyclic_group(3), a3.G, a3.g_on_M);
  std::vector<int> eta = {0, 1, 2};
  int nm = gamma.morphism_count();
  std::vector<int> theta((size_t)a3.G.order * nm, -1);
  for (int g = 0; g < a3.G.order; ++g)
    for (int mor = 0; mor < nm; ++mor) theta[g * nm + mor] = 0;  // the identity automorphism
  CHECK_NOTHROW(make_bouquet_over_xm(gamma, 0, eta, theta, a3));

  auto bad = theta;
  bad[1 * nm + 0] = 1;  // inversion does not realize the (trivial) twist
  try {
    make_bouquet_over_xm(gamma, 0, eta, bad, a3);
    FAIL("expected ThetaMismatch");
  } catch (const ValidationError& err) {
    CHECK(err.kind() == "ThetaMismatch");
  }
}

TEST_CASE("kernel twists of theta are caught by the induced extension") {
  // over XM_T22 rho is trivial, so a one-point theta twist passes the
  // pointwise check but breaks multiplicativity of varrho
  Budget budget;
  auto t22 = builtin_fixture("XM_T22");
  auto z2 = enumerate_z2(t22.G, t22, budget);
  auto bq = bouquet_of_cocycle(z2[0], t22.G, t22);
  auto theta = bq.theta;
  int nm = bq.gamma.morphism_count();
  int some = -1;
  for (int mor = 0; mor < nm && some < 0; ++mor)
    if (theta[1 * nm + mor] >= 0) some = mor;
  theta[1 * nm + some] = 1 - theta[1 * nm + some];
  try {
    make_bouquet_over_xm(bq.gamma, bq.base_obj, bq.eta, theta, t22);
    FAIL("expected ThetaMismatch");
  } catch (const ValidationError& err) {
    CHECK(err.kind() == "ThetaMismatch");
  }
}

TEST_CASE("the trivial cocycle bouquet acts by translation only") {
  Budget budget;
  auto t22 = builtin_fixture("XM_T22");
  Cocycle2 trivial;
  trivial.n = 2;
  trivial.f.assign(4, 0);
  trivial.phi.assign(2, 0);
  auto bq = bouquet_of_cocycle(trivial, t22.G, t22);
  CHECK(bq.gamma.n_objects == 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      int count = 0;
      for (const auto& m : bq.gamma.mors) count += m.src == a && m.dst == b;
      CHECK(count == 2);  // |Hom| = |M| per pair
    }
  for (int t = 0; t < 2; ++t)
    for (int i = 0; i < bq.gamma.morphism_count(); ++i) {
      const auto& m = bq.gamma.mors[i];
      const auto& im = bq.gamma.mors[bq.gamma.gmor(t, i)];
      CHECK(im.payload == m.payload);  // t.(g, a, h) = (tg, a, th)
      CHECK(im.src == t22.G.mul(t, m.src));
      CHECK(im.dst == t22.G.mul(t, m.dst));
    }
}

TEST_CASE("cocycle bouquet round trip is exact") {
  Budget budget;
  for (const auto& name : {"XM_T22", "XM_ID2"}) {
    auto exm = builtin_fixture(name);
    auto z2 = enumerate_z2(exm.G, exm, budget);
    for (const auto& c : z2) {
      auto bq = bouquet_of_cocycle(c, exm.G, exm);
      std::vector<int> family(exm.G.order);
      for (int g = 0; g < exm.G.order; ++g) family[g] = bq.gamma.find_mor(g, 0, 0);
      CHECK(bouquet_to_cocycle(bq, family) == c);
    }
  }
}

TEST_CASE("characteristic classes label the thick classes") {
  Budget budget;
  auto t22 = builtin_fixture("XM_T22");
  auto h2 = h2_classes(t22.G, t22, H2Mode::thick, budget);
  for (size_t i = 0; i < h2.cocycles.size(); ++i) {
    auto bq = bouquet_of_cocycle(h2.cocycles[i], t22.G, t22);
    CHECK(characteristic_class(bq, h2, budget) == h2.classes.class_of[i]);
  }
}

TEST_CASE("coboundary and comparison functors") {
  Budget budget;
  auto a3 = builtin_fixture("XM_A3");
  auto pi = cyclic_group(3);
  auto z2 = enumerate_z2(pi, a3, budget);

  int pairs = 0;
  for (size_t i = 0; i < z2.size() && pairs < 4; ++i)
    for (size_t j = 0; j < z2.size() && pairs < 4; ++j) {
      if (i == j) continue;
      auto w = cocycle2_equivalent(z2[i], z2[j], H2Mode::thick, pi, a3, budget);
      if (!w) continue;
      auto from = bouquet_of_cocycle(z2[i], pi, a3);
      auto to = bouquet_of_cocycle(z2[j], pi, a3);
      CHECK_NOTHROW(coboundary_functor(from, to, w->t));
      ++pairs;
    }
  CHECK(pairs > 0);

  auto bq = bouquet_of_cocycle(z2[0], pi, a3);
  auto family = canonical_lambda_family(bq);
  CHECK_NOTHROW(comparison_functor(bouquet_of_cocycle(bouquet_to_cocycle(bq, family), pi, a3),
                                   bq, family));
}

TEST_CASE("bad lambda families are rejected") {
  Budget budget;
  auto t22 = builtin_fixture("XM_T22");
  auto z2 = enumerate_z2(t22.G, t22, budget);
  auto bq = bouquet_of_cocycle(z2[0], t22.G, t22);
  std::vector<int> family(2);
  family[0] = bq.gamma.find_mor(0, 1, 0);  // lambda_1 != id
  family[1] = bq.gamma.find_mor(1, 0, 0);
  CHECK_THROWS_AS(bouquet_to_cocycle(bq, family), ValidationError);
}

TEST_CASE("groupoid validation rejects corrupted tables with witnesses") {
  auto c1 = cyclic_group(1);
  auto c2 = cyclic_group(2);
  auto base = one_object_groupoid(cyclic_group(2), c1, trivial_action(c1, cyclic_group(2)));

  // compose entry declared where the morphisms are not composable
  {
    std::vector<Morphism> mors = {{0, 0, 0}, {1, 0, 1}};
    std::vector<int> compose = {0, 0, -1, 1};  // (after 0, first 1) wrongly defined
    try {
      make_ggroupoid(2, mors, compose, c1, {0, 1}, {0, 1});
      FAIL("expected CategoryAxiomViolation");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == "CategoryAxiomViolation");
      CHECK(e.witness().size() == 2);
    }
  }

  // an action that permutes payloads without preserving composition
  {
    std::vector<Morphism> mors = base.mors;
    std::vector<int> compose = base.compose_table;
    std::vector<int> act_obj = {0, 0};
    std::vector<int> act_mor = {0, 1, 1, 0};  // g swaps id and the involution
    try {
      make_ggroupoid(1, mors, compose, c2, act_obj, act_mor);
      FAIL("expected ActionNotFunctorial");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == "ActionNotFunctorial");
    }
  }
}

TEST_CASE("bouquet invariant suite") { CHECK(invariants::bouquets(nullptr) > 0); }
