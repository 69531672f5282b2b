#include <doctest.h>

#include "helpers.hpp"

using namespace nc;
using namespace tests;

TEST_CASE("hull of the cusp-pair support") {
  LatticePolyhedron P = newton_polyhedron(cusp_pair_surface());
  std::vector<Exponents> expect = {ex({0, 0, 1}), ex({0, 4, 0}), ex({6, 0, 0})};
  CHECK(P.vertices() == expect);  // (3,2,0) lies on the segment, not a vertex
  CHECK(!P.flat());
}

TEST_CASE("single point and empty support") {
  LatticePolyhedron P = LatticePolyhedron::build({ex({2, 0})}, 2);
  CHECK(P.vertices() == std::vector<Exponents>{ex({2, 0})});
  CHECK(P.facets().size() == 2);  // the two recession constraints
  CHECK(P.bounded_faces().size() == 1);

  LatticePolyhedron flat = LatticePolyhedron::build({}, 2);
  CHECK(flat.flat());
  CHECK_THROWS_AS(flat.faces(), std::domain_error);
}

TEST_CASE("bounded faces of the squared-difference example") {
  LatticePolyhedron P = newton_polyhedron(square_difference_3d());
  auto bf = P.bounded_faces();
  // 3 vertices, 3 edges, 1 facet.
  size_t dims[4] = {0, 0, 0, 0};
  for (const auto& f : bf) dims[f.dim]++;
  CHECK(dims[0] == 3);
  CHECK(dims[1] == 3);
  CHECK(dims[2] == 1);
  auto edge = P.find_face({ex({4, 0, 0}), ex({0, 4, 0})});
  REQUIRE(edge.has_value());
  CHECK(edge->bounded);
  CHECK(edge->dim == 1);
}

TEST_CASE("diagram facets of the cross-term quartic") {
  LatticePolyhedron P = newton_polyhedron(cross_term_quartic());
  auto diagram = P.diagram_faces();
  REQUIRE(diagram.size() == 2);
  CHECK(diagram[0].vertex_list == std::vector<Exponents>{ex({0, 4}), ex({2, 1})});
  CHECK(diagram[1].vertex_list == std::vector<Exponents>{ex({2, 1}), ex({4, 0})});
  CHECK(diagram[0].normal == ex({3, 2}));
  CHECK(diagram[1].normal == ex({1, 2}));
}

TEST_CASE("axis intercepts") {
  LatticePolyhedron P1 = newton_polyhedron(cusp_pair_surface());
  CHECK(P1.rho() == RhoVector{ExtendedInt(6), ExtendedInt(4), ExtendedInt(1)});
  CHECK(P1.convenient());
  CHECK(P1.rho1() == ExtendedInt(6));

  LatticePolyhedron P2 = newton_polyhedron(star_product_surface());
  CHECK(P2.rho() == RhoVector{ExtendedInt(10), ExtendedInt(10), ExtendedInt(1)});

  LatticePolyhedron flat = LatticePolyhedron::build({}, 2);
  CHECK(flat.rho() == RhoVector{ExtendedInt::infinity(), ExtendedInt::infinity()});
  CHECK(!flat.convenient());

  LatticePolyhedron notc = newton_polyhedron(mp("|z1*z2|^2", 2));
  CHECK(notc.rho() == RhoVector{ExtendedInt::infinity(), ExtendedInt::infinity()});
  CHECK(!notc.convenient());
}

TEST_CASE("support minimization with full and partial directions") {
  MixedPolynomial f = cusp_pair_part();
  LatticePolyhedron P = newton_polyhedron(f);
  auto [l, face] = P.support_min(ex({2, 3}));
  CHECK(l == 12);
  CHECK(face.vertex_list == std::vector<Exponents>{ex({0, 4}), ex({6, 0})});

  MixedPolynomial g = mp("|z1|^2 + |z2|^4", 2);
  LatticePolyhedron Q = newton_polyhedron(g);
  auto [l2, face2] = Q.support_min(ex({1, 1}));
  CHECK(l2 == 2);
  CHECK(face2.vertex_list == std::vector<Exponents>{ex({2, 0})});

  LatticePolyhedron R = newton_polyhedron(cusp_pair_surface());
  Direction ahat = {ExtendedInt(2), ExtendedInt(3), ExtendedInt::infinity()};
  auto dd = R.support_min_dir(ahat);
  CHECK(dd.level == ExtendedInt(12));
  REQUIRE(dd.face.has_value());
  CHECK(dd.face->vertex_list == std::vector<Exponents>{ex({0, 4, 0}), ex({6, 0, 0})});

  Direction all_inf = {ExtendedInt::infinity(), ExtendedInt::infinity(), ExtendedInt::infinity()};
  CHECK_THROWS_AS(R.support_min_dir(all_inf), std::invalid_argument);
}

TEST_CASE("newton distance and the directional intercepts") {
  MixedPolynomial f = cusp_pair_part();
  LatticePolyhedron P = newton_polyhedron(f);
  auto dd = P.newton_distance({ExtendedInt(2), ExtendedInt(3)});
  CHECK(dd.distance == ExtendedRat(Rational(6)));
  CHECK(dd.rho_dir == std::vector<ExtendedRat>{ExtendedRat(Rational(6)), ExtendedRat(Rational(4))});

  // Unit direction: distance is the minimal total degree on the polyhedron.
  auto unit_dd = P.newton_distance({ExtendedInt(1), ExtendedInt(1)});
  CHECK(unit_dd.distance == ExtendedRat(Rational(4)));  // min at (0,4)

  // Flat restriction.
  MixedPolynomial g = mp("|z1*z2|^2", 2);
  LatticePolyhedron Q = newton_polyhedron(g);
  auto flat_dd = Q.newton_distance({ExtendedInt(1), ExtendedInt::infinity()});
  CHECK(flat_dd.distance.is_inf());
  CHECK(flat_dd.rho_dir[0].is_inf());
  CHECK(flat_dd.rho_dir[1] == ExtendedRat(Rational(0)));
}

TEST_CASE("determines matches explicit minimization") {
  MixedPolynomial f = cusp_pair_part();
  LatticePolyhedron P = newton_polyhedron(f);
  auto seg = P.find_face({ex({6, 0}), ex({0, 4})});
  auto v60 = P.find_face({ex({6, 0})});
  REQUIRE(seg.has_value());
  REQUIRE(v60.has_value());
  CHECK(P.determines(*seg, ex({2, 3})));
  CHECK(!P.determines(*v60, ex({1, 1})));  // minimum sits at (0,4)
  CHECK(P.determines(*seg, seg->normal));
}

TEST_CASE("regular faces") {
  LatticePolyhedron P = newton_polyhedron(mp("|z1|^4 + |z2|^2", 2));
  auto facet = P.find_face({ex({4, 0}), ex({0, 2})});
  REQUIRE(facet.has_value());
  CHECK(facet->normal == ex({1, 2}));
  CHECK(P.regular_face(*facet));

  LatticePolyhedron Q = newton_polyhedron(cross_term_quartic());
  auto kappa2 = Q.find_face({ex({2, 1}), ex({0, 4})});
  REQUIRE(kappa2.has_value());
  CHECK(kappa2->normal == ex({3, 2}));
  CHECK(!Q.regular_face(*kappa2));
  for (const auto& fc : Q.faces())
    if (!fc.bounded) {
      CHECK_THROWS_AS(Q.regular_face(fc), std::invalid_argument);
      break;
    }
}

TEST_CASE("apex vertex of the star product part") {
  LatticePolyhedron P = newton_polyhedron(star_product_part());
  FaceHandle apex = P.apex_vertex();
  CHECK(apex.vertex_list == std::vector<Exponents>{ex({10, 0})});
}

TEST_CASE("H and V representations validate each other") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = static_cast<size_t>(rng.pick(1, 3));
    auto S = random_support(rng, n, 6, 7);
    LatticePolyhedron P = LatticePolyhedron::build(S, n);
    for (const auto& v : P.vertices()) {
      CHECK(S.count(v) == 1);
      for (const auto& fct : P.facets()) CHECK(dot(fct.normal, v) >= fct.level);
    }
    for (const auto& fct : P.facets()) {
      CHECK(primitive(fct.normal) == fct.normal);
      CHECK(all_nonnegative(fct.normal));
      bool tight = false;
      for (const auto& v : P.vertices())
        if (dot(fct.normal, v) == fct.level) tight = true;
      CHECK(tight);
    }
    // Every support point stays inside.
    for (const auto& s : S)
      for (const auto& fct : P.facets()) CHECK(dot(fct.normal, s) >= fct.level);
  }
}

TEST_CASE("bounded faces are exactly the positive-normal faces") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = static_cast<size_t>(rng.pick(2, 3));
    auto S = random_support(rng, n, 5, 6);
    LatticePolyhedron P = LatticePolyhedron::build(S, n);
    for (const auto& face : P.faces()) {
      CHECK(face.bounded == all_positive(face.normal));
      CHECK(P.determines(face, face.normal));
    }
  }
}

TEST_CASE("unit multipliers keep the polyhedron") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 2, 4);
    if (f.is_zero()) continue;
    // h with nonzero constant term.
    MixedPolynomial h = random_real_poly(rng, 2, 2) + MixedPolynomial::constant(2, GaussianRational(3));
    LatticePolyhedron P = newton_polyhedron(f);
    LatticePolyhedron Q = newton_polyhedron(h * f);
    CHECK(P.vertices() == Q.vertices());
    CHECK(P.facets() == Q.facets());
  }
}

TEST_CASE("face parts are quasihomogeneous for their determining pair") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 2, 4);
    if (f.is_zero()) continue;
    LatticePolyhedron P = newton_polyhedron(f);
    for (const auto& face : P.bounded_faces()) {
      MixedPolynomial part = face_part_unchecked(f, face);
      // F_kappa(r^a . z) = r^l F_kappa(z) exactly, checked at a sample point.
      Rational r(3, 2);
      std::vector<GaussianRational> z = {GaussianRational(Rational(2), Rational(1)),
                                         GaussianRational(Rational(-1), Rational(2))};
      std::vector<GaussianRational> scaled(2);
      Rational rl(1);
      for (std::int64_t e = 0; e < face.level; ++e) rl *= r;
      for (size_t j = 0; j < 2; ++j) {
        Rational rj(1);
        for (std::int64_t e = 0; e < face.normal[j]; ++e) rj *= r;
        scaled[j] = z[j] * GaussianRational(rj);
      }
      CHECK(part.evaluate(scaled) == part.evaluate(z) * GaussianRational(rl));
    }
  }
}

TEST_CASE("directional intercepts never exceed the global ones") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    size_t n = 2;
    MixedPolynomial f = random_real_poly(rng, n, 4);
    if (f.is_zero()) continue;
    LatticePolyhedron P = newton_polyhedron(f);
    RhoVector rho = P.rho();
    for (int k = 0; k < 10; ++k) {
      Direction a(n);
      for (auto& v : a)
        v = rng.chance(0.2) ? ExtendedInt::infinity() : ExtendedInt(rng.pick(1, 5));
      bool allinf = true;
      for (auto& v : a)
        if (v.is_finite()) allinf = false;
      if (allinf) continue;
      auto dd = P.newton_distance(a);
      ExtendedRat mx(Rational(0));
      for (size_t j = 0; j < n; ++j) {
        const auto& rj = dd.rho_dir[j];
        // componentwise bound against the global intercepts
        if (rho[j].is_finite())
          CHECK(!(ExtendedRat(Rational(rho[j].value())) < rj));
        mx = max(mx, rj);
      }
      CHECK(mx == dd.distance);  // the max identity, recomputed here
    }
  }
}
