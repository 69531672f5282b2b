#include <doctest.h>

#include "helpers.hpp"
#include "nc/contact.hpp"
#include "nc/nondegen.hpp"

using namespace nc;
using namespace tests;

TEST_CASE("contact of the flat direction is infinite") {
  ContactReport r = order_of_contact(cusp_pair_part(), curve("(t^2, t^3)"));
  CHECK(r.ord_composed.is_inf());
  CHECK(r.l_lower_bound == ExtendedInt(12));
  CHECK(r.distance == ExtendedRat(Rational(6)));
  CHECK(r.contact_order.is_inf());
  CHECK(r.leading_part.is_zero());
}

TEST_CASE("contact of the perturbed direction is finite and not tight") {
  ContactReport r = order_of_contact(cusp_pair_part(), curve("(t^2, t^3 + t^4)"));
  CHECK(r.ord_composed == ExtendedInt(14));
  CHECK(r.l_lower_bound == ExtendedInt(12));
  CHECK(r.contact_order == ExtendedRat(Rational(7)));
  CHECK(r.distance == ExtendedRat(Rational(6)));
  CHECK(!r.tight);
}

TEST_CASE("diagonal contact on a nondegenerate model is tight") {
  ContactReport r = order_of_contact(mp("|z1|^2 + |z2|^4", 2), curve("(t, t)"));
  CHECK(r.ord_composed == ExtendedInt(2));
  CHECK(r.l_lower_bound == ExtendedInt(2));
  CHECK(r.contact_order == ExtendedRat(Rational(2)));
  CHECK(r.distance == ExtendedRat(Rational(2)));
  CHECK(r.tight);
}

TEST_CASE("leading asymptotics returns the face, truncation and residual") {
  auto la = leading_asymptotics(cusp_pair_part(), curve("(t^2, t^3 + t^4)"));
  CHECK(!la.flat_restriction);
  CHECK(la.level == ExtendedInt(12));
  REQUIRE(la.face.has_value());
  CHECK(la.face->vertex_list == std::vector<Exponents>{ex({0, 4}), ex({6, 0})});
  REQUIRE(la.truncation.has_value());
  CHECK(la.truncation->exponent == std::vector<std::int64_t>{2, 3});
  CHECK(la.leading.is_zero());

  // Restriction to a single axis.
  auto la2 = leading_asymptotics(star_product_part(), curve("(t, 0)"));
  CHECK(la2.level == ExtendedInt(10));
  CHECK(la2.leading ==
        MixedPolynomial::monomial(1, ex({5}), ex({5}), GaussianRational(1)));

  // Flat restriction.
  auto la3 = leading_asymptotics(mp("|z1*z2|^2", 2), curve("(t, 0)"));
  CHECK(la3.flat_restriction);
  CHECK(la3.level.is_inf());
}

TEST_CASE("monomial curves with nonvanishing leading part are tight") {
  // (t, 2t) keeps the face part alive, so the order equals the level.
  ContactReport r = order_of_contact(star_product_part(), curve("(t, 2*t)"));
  CHECK(r.ord_composed == ExtendedInt(6));
  CHECK(r.l_lower_bound == ExtendedInt(6));
  CHECK(r.tight);

  // (t, t) kills the face part: strictly above the level, not tight.
  ContactReport r2 = order_of_contact(star_product_part(), curve("(t, t)"));
  CHECK(r2.ord_composed == ExtendedInt(10));
  CHECK(r2.l_lower_bound == ExtendedInt(6));
  CHECK(!r2.tight);
}

TEST_CASE("sup of contact orders under a nondegenerate verdict") {
  MixedPolynomial f = mp("|z1|^8 + (15/7)*|z1|^2*Re(z1)^6 + |z1*z2|^2 + |z2|^6", 2);
  auto verdict = check_all(f);
  REQUIRE(verdict.status == NdStatus::Nondegenerate);
  CHECK(sup_contact_under_nondegeneracy(f, verdict) == ExtendedInt(8));

  MixedPolynomial g = mp("|z1|^2", 1);
  auto v2 = check_all(g);
  REQUIRE(v2.status == NdStatus::Nondegenerate);
  CHECK(sup_contact_under_nondegeneracy(g, v2) == ExtendedInt(2));

  MixedPolynomial h = mp("|z1|^2*|z2|^2", 2);
  auto v3 = check_all(h);
  REQUIRE(v3.status == NdStatus::Nondegenerate);
  CHECK(sup_contact_under_nondegeneracy(h, v3).is_inf());

  NondegeneracyVerdict unk;
  unk.status = NdStatus::Unknown;
  CHECK_THROWS_AS(sup_contact_under_nondegeneracy(f, unk), std::invalid_argument);
}

TEST_CASE("lower bounds hold on random pairs") {
  Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 2, 4);
    if (f.is_zero()) continue;
    JetCurve g = random_jet(rng, 2, 4);
    ContactReport r = order_of_contact(f, g);  // throws if a bound fails
    CHECK(!(r.ord_composed < r.l_lower_bound));
    CHECK(!(r.contact_order < r.distance));
  }
}

TEST_CASE("equalities hold against certified families") {
  Rng rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    MixedPolynomial f = random_diagonal_positive(rng, 2, 3);
    JetCurve g = random_jet(rng, 2, 3);
    ContactReport r = order_of_contact(f, g);
    CHECK(r.ord_composed == r.l_lower_bound);
    CHECK(r.contact_order == r.distance);
  }
}
