#include <doctest.h>

#include "helpers.hpp"
#include "nc/parser.hpp"

using namespace nc;
using namespace tests;

TEST_CASE("parse expands Re and modulus sugar into canonical terms") {
  MixedPolynomial f = parse_mixed("Re(w) + |z1|^2", {"z1", "w"});
  CHECK(f.term_count() == 3);
  CHECK(f.coefficient({ex({0, 1}), ex({0, 0})}) == GaussianRational(Rational(1, 2)));
  CHECK(f.coefficient({ex({0, 0}), ex({0, 1})}) == GaussianRational(Rational(1, 2)));
  CHECK(f.coefficient({ex({1, 0}), ex({1, 0})}) == GaussianRational(1));
}

TEST_CASE("cusp-pair surface support") {
  auto s = cusp_pair_surface().support();
  std::set<Exponents> expect = {ex({0, 0, 1}), ex({6, 0, 0}), ex({3, 2, 0}), ex({0, 4, 0})};
  CHECK(s == expect);
}

TEST_CASE("oscillating example expands exactly") {
  MixedPolynomial f = oscillating8_1d();
  CHECK(f.coefficient({ex({4}), ex({4})}) == GaussianRational(1));
  CHECK(f.coefficient({ex({7}), ex({1})}) == GaussianRational(Rational(15, 14)));
  CHECK(f.coefficient({ex({1}), ex({7})}) == GaussianRational(Rational(15, 14)));
  CHECK(f.term_count() == 3);
  CHECK(f.is_real());
}

TEST_CASE("support of the star-shaped product surface") {
  auto s = star_product_surface().support();
  std::set<Exponents> expect = {ex({0, 0, 1}), ex({4, 2, 0}), ex({3, 3, 0}),
                                ex({2, 4, 0}), ex({10, 0, 0}), ex({0, 10, 0})};
  CHECK(s == expect);
  CHECK(MixedPolynomial(2).support().empty());
  CHECK(mp("|z1|^2", 2).support() == std::set<Exponents>{ex({2, 0})});
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_mixed("|z1|^3", 1), ParseError);
  CHECK_THROWS_AS(parse_mixed("z9 + q", 1), ParseError);
  CHECK_THROWS_AS(parse_mixed("Re(z1", 1), ParseError);
  CHECK_THROWS_AS(parse_mixed("1/0", 1), ParseError);
}

TEST_CASE("face parts select exactly the terms on a face") {
  MixedPolynomial f = cusp_pair_part();
  LatticePolyhedron P = newton_polyhedron(f);
  auto face = P.find_face({ex({6, 0}), ex({0, 4})});
  REQUIRE(face.has_value());
  CHECK(face_part(f, *face) == f);  // all three support points sit on the segment

  MixedPolynomial g = mp("|z1|^2 + |z2|^4", 2);
  LatticePolyhedron Q = newton_polyhedron(g);
  auto vtx = Q.find_face({ex({2, 0})});
  REQUIRE(vtx.has_value());
  CHECK(face_part(g, *vtx) == mp("|z1|^2", 2));

  auto unbounded = Q.faces().back();
  bool found_unbounded = false;
  for (const auto& fc : Q.faces())
    if (!fc.bounded) {
      CHECK_THROWS_AS(face_part(g, fc), std::invalid_argument);
      found_unbounded = true;
      break;
    }
  CHECK(found_unbounded);
  (void)unbounded;
}

TEST_CASE("cross-term quartic face part matches the known form") {
  MixedPolynomial f = cross_term_quartic();
  LatticePolyhedron P = newton_polyhedron(f);
  auto face = P.find_face({ex({2, 1}), ex({0, 4})});
  REQUIRE(face.has_value());
  MixedPolynomial part = face_part(f, *face);
  CHECK(part == mp("|z2|^2*Re(z2^2) - Re(z1^2*conj(z2))", 2));
}

TEST_CASE("principal part, jet and pure/mixed split") {
  CHECK(principal_part(mp("|z1|^2 + |z1|^4", 1)) == mp("|z1|^2", 1));
  CHECK(mp("Re(w) + |z1|^8", 2).jet(2) == parse_mixed("Re(w)", {"z1", "w"}));
  auto [pure, mixed] = parse_mixed("Re(w) + |z1|^4", {"z1", "w"}).pure_mixed_split();
  CHECK(pure == parse_mixed("Re(w)", {"z1", "w"}));
  CHECK(mixed == parse_mixed("|z1|^4", {"z1", "w"}));
}

TEST_CASE("restriction drops terms that touch removed variables") {
  MixedPolynomial f = cusp_pair_surface();
  MixedPolynomial r = f.restrict_to(0b011);
  CHECK(r == cusp_pair_part());
  CHECK(f.restrict_to(0b111) == f);
  CHECK(mp("|z1*z2|^2", 2).restrict_to(0b01).is_zero());
}

TEST_CASE("curve substitution fixtures") {
  MixedPolynomial f = cusp_pair_part();
  CHECK(substitute_curve(f, curve("(t^2, t^3)")).is_zero());

  MixedPolynomial c = substitute_curve(f, curve("(t^2, t^3 + t^4)"));
  CHECK(c.ord() == ExtendedInt(14));
  // |-2 t^7 - t^8|^2
  CHECK(c.coefficient({ex({7}), ex({7})}) == GaussianRational(4));
  CHECK(c.coefficient({ex({8}), ex({8})}) == GaussianRational(1));
  CHECK(c.coefficient({ex({7}), ex({8})}) == GaussianRational(2));
  CHECK(c.coefficient({ex({8}), ex({7})}) == GaussianRational(2));

  CHECK(substitute_curve(mp("|z1|^2", 2), curve("(t, t)")) ==
        MixedPolynomial::monomial(1, ex({1}), ex({1}), GaussianRational(1)));
  CHECK_THROWS_AS(substitute_curve(f, curve("(t, t, t)")), std::invalid_argument);
}

TEST_CASE("reality is preserved by the sugar and detected structurally") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 2, 4);
    CHECK(f.is_real());
  }
  CHECK(!mp("z1^2", 1).is_real());
  CHECK(mp("Im(z1^2)", 1).is_real());
}

TEST_CASE("print then parse is the identity") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 2, 5);
    CHECK(parse_mixed(f.str(), f.nvars()) == f);
  }
  MixedPolynomial g = oscillating8_1d();
  CHECK(parse_mixed(g.str(), 1) == g);
}

TEST_CASE("nested restriction composes") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 3, 5);
    MixedPolynomial once = f.restrict_to(0b011);       // keep z1, z2
    MixedPolynomial twice = once.restrict_to(0b01);    // then keep z1
    CHECK(twice == f.restrict_to(0b001));
  }
}

TEST_CASE("curve substitution is multiplicative") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 2, 3);
    MixedPolynomial g = random_real_poly(rng, 2, 3);
    JetCurve gamma = random_jet(rng, 2, 3, false);
    CHECK(substitute_curve(f * g, gamma) ==
          substitute_curve(f, gamma) * substitute_curve(g, gamma));
  }
}

TEST_CASE("diagram face parts cover the principal part") {
  Rng rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 2, 4);
    if (f.is_zero()) continue;
    LatticePolyhedron P = newton_polyhedron(f);
    // Faces overlap, so compare term keys rather than sums.
    std::set<std::pair<Exponents, Exponents>> collected, expected;
    for (const auto& face : P.diagram_faces())
      for (const auto& [k, c] : face_part_unchecked(f, face).terms())
        collected.insert({k.alpha, k.beta});
    for (const auto& [k, c] : principal_part(f).terms()) expected.insert({k.alpha, k.beta});
    CHECK(collected == expected);
  }
}
