#include <doctest.h>

#include "helpers.hpp"

using namespace nc;
using namespace tests;

TEST_CASE("profiles record orders with infinities at dead components") {
  auto p = profile(curve("(t^2, t^3 + t^4, 0)"));
  CHECK(p.a_hat == Direction{ExtendedInt(2), ExtendedInt(3), ExtendedInt::infinity()});
  CHECK(members(p.index_set, 3) == std::vector<size_t>{0, 1});

  auto q = profile(curve("(t, 0, 0)"));
  CHECK(q.a_hat == Direction{ExtendedInt(1), ExtendedInt::infinity(), ExtendedInt::infinity()});

  CHECK(profile(curve("(t, t)")).a_hat == Direction{ExtendedInt(1), ExtendedInt(1)});
  CHECK_THROWS_AS(JetCurve::from_literal("(0, 0)"), std::invalid_argument);
}

TEST_CASE("leading truncation keeps lowest monomials") {
  MonomialCurve m = leading_truncation(curve("(t^2, t^3 + t^4)"));
  CHECK(m.exponent == std::vector<std::int64_t>{2, 3});
  CHECK(m.coef == std::vector<GaussianRational>{GaussianRational(1), GaussianRational(1)});

  MonomialCurve m2 = leading_truncation(curve("(3*t, -t^2 + t^5)"));
  CHECK(m2.coef == std::vector<GaussianRational>{GaussianRational(3), GaussianRational(-1)});
  CHECK(m2.exponent == std::vector<std::int64_t>{1, 2});

  MonomialCurve m3 = leading_truncation(curve("(t, 0)"));
  CHECK(members(m3.index_set, 2) == std::vector<size_t>{0});
  CHECK(m3.exponent == std::vector<std::int64_t>{1});
}

TEST_CASE("profile of the truncation matches the profile of the curve") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    JetCurve g = random_jet(rng, 3, 4);
    MonomialCurve t = leading_truncation(g);
    auto pg = profile(g);
    auto pt = profile(t.to_jet());
    CHECK(pg.a_hat == pt.a_hat);
    CHECK(pg.index_set == pt.index_set);
    CHECK(curve_ord(g) == t.ord());
  }
}

TEST_CASE("membership of a monomial curve in a face family ignores coefficients") {
  MixedPolynomial f = cusp_pair_part();
  LatticePolyhedron P = newton_polyhedron(f);
  auto seg = P.find_face({ex({6, 0}), ex({0, 4})});
  REQUIRE(seg.has_value());
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    // Membership is decided by the exponent vector alone.
    CHECK(P.determines(*seg, ex({2, 3})));
    CHECK(!P.determines(*seg, ex({1, 1})));
  }
}

TEST_CASE("curve literal round trips") {
  JetCurve g = curve("(t^2, (1/2 + i)*t^3 + t^4, 0)");
  JetCurve h = JetCurve::from_literal(g.str());
  CHECK(g == h);
}
