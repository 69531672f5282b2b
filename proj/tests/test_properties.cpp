#include <doctest.h>

#include "helpers.hpp"
#include "nc/contact.hpp"
#include "nc/nondegen.hpp"

using namespace nc;
using namespace tests;

// Cross-module invariants that do not belong to a single unit suite.

TEST_CASE("restriction equivalence holds on random plane faces") {
  Rng rng(83);
  SearchOptions opts;
  opts.grid = 0;
  opts.max_exponent = 4;
  opts.float_refine = false;
  int seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 3, 4);
    if (f.is_zero()) continue;
    LatticePolyhedron P = newton_polyhedron(f);
    for (const auto& face : P.bounded_faces()) {
      IndexSet I = face_part_unchecked(f, face).effective_vars();
      if (I == 0 || I == full_set(3)) continue;
      auto agree = restricted_equivalence(f, face, opts);
      CHECK(agree.agree);
      ++seen;
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("nondegeneracy search is invariant under the worker count") {
  SearchOptions seq;
  SearchOptions par;
  par.threads = 3;
  for (const auto& f : {mp("|z1 - z2|^2 + |z2|^4", 2), square_difference_3d(), cusp_pair_part()}) {
    auto a = check_all(f, seq);
    auto b = check_all(f, par);
    CHECK(a.status == b.status);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) {
      CHECK(a.witness->curve.coef == b.witness->curve.coef);
      CHECK(a.witness->curve.exponent == b.witness->curve.exponent);
    }
  }
}

TEST_CASE("support aggregation never cancels") {
  // S(F) is the union of alpha+beta over stored terms; building the
  // polynomial through parses and arithmetic keeps coefficients nonzero.
  Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    MixedPolynomial f = random_real_poly(rng, 2, 5);
    for (const auto& [k, c] : f.terms()) CHECK(!c.is_zero());
    auto s = f.support();
    for (const auto& [k, c] : f.terms()) CHECK(s.count(add(k.alpha, k.beta)) == 1);
  }
}

TEST_CASE("batch contact maxima are independent of the merge split") {
  // Componentwise max over any partition of a curve family must agree with
  // the sequential fold.
  MixedPolynomial f = star_product_part();
  std::vector<JetCurve> family;
  Rng rng(97);
  for (int i = 0; i < 20; ++i) family.push_back(random_jet(rng, 2, 3));
  auto contact = [&](const JetCurve& g) { return order_of_contact(f, g).contact_order; };
  ExtendedRat seq(Rational(0));
  for (const auto& g : family) seq = max(seq, contact(g));
  for (size_t split = 1; split < family.size(); split += 7) {
    ExtendedRat left(Rational(0)), right(Rational(0));
    for (size_t i = 0; i < split; ++i) left = max(left, contact(family[i]));
    for (size_t i = split; i < family.size(); ++i) right = max(right, contact(family[i]));
    CHECK(max(left, right) == seq);
  }
}

TEST_CASE("verdict of a face embedded in a plane matches its restriction") {
  // The flat-direction bookkeeping: faces produced by directional
  // minimization with infinite entries are checkable directly.
  MixedPolynomial f = cusp_pair_surface();
  LatticePolyhedron P = newton_polyhedron(f);
  Direction dir = {ExtendedInt(2), ExtendedInt(3), ExtendedInt::infinity()};
  auto dd = P.support_min_dir(dir);
  REQUIRE(dd.face.has_value());
  auto v = check_face(f, P, *dd.face);
  CHECK(v.status == NdStatus::Degenerate);
}
