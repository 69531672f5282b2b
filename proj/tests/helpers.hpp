// Shared fixtures and deterministic generators for the test suites.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "nc/curves.hpp"
#include "nc/mixedpoly.hpp"
#include "nc/parser.hpp"
#include "nc/polyhedron.hpp"

namespace tests {

using namespace nc;

inline MixedPolynomial mp(const std::string& text, size_t nvars) {
  return parse_mixed(text, nvars);
}

inline Exponents ex(std::initializer_list<std::int64_t> v) { return Exponents(v); }

// --- canonical fixtures -----------------------------------------------------

// Cusp-pair surface: 2 Re(z3) + |z1^3 - z2^2|^2.
inline MixedPolynomial cusp_pair_surface() {
  return mp("2*Re(z3) + |z1^3 - z2^2|^2", 3);
}
inline MixedPolynomial cusp_pair_part() { return mp("|z1^3 - z2^2|^2", 2); }

// Star-shaped product surface: 2 Re(z3) + |z1 z2|^2 |z1 - z2|^2 + |z1|^10 + |z2|^10.
inline MixedPolynomial star_product_surface() {
  return mp("2*Re(z3) + |z1*z2|^2*|z1 - z2|^2 + |z1|^10 + |z2|^10", 3);
}
inline MixedPolynomial star_product_part() {
  return mp("|z1*z2|^2*|z1 - z2|^2 + |z1|^10 + |z2|^10", 2);
}

// Oscillating-modulus example of degree 8 (one variable), and its planar
// extension whose types equal 8.
inline MixedPolynomial oscillating8_1d() {
  return mp("|z1|^8 + (15/7)*|z1|^2*Re(z1^6)", 1);
}
inline MixedPolynomial oscillating8_surface() {
  return mp("Re(w) + |z1|^8 + (15/7)*|z1|^2*Re(z1)^6 + |z1*z2|^2 + |z2|^6", 3);
}

// Degenerate one-dimensional face inside a nondegenerate facet.
inline MixedPolynomial square_difference_3d() {
  return mp("|z1|^4 - 2*|z1*z2|^2 + |z2|^4 + |z3|^4", 3);
}

// Cross-term quartic whose degree-4 normal form is obstructed.
inline MixedPolynomial cross_term_quartic() {
  return mp("|z1|^2*Re(z1^2 - z2^3) + |z2|^2*Re(z2^2) - Re(z1^2*conj(z2))", 2);
}

inline JetCurve curve(const std::string& text) { return JetCurve::from_literal(text); }

// --- deterministic random data ----------------------------------------------

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  std::int64_t pick(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }
  bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(gen) < p; }
};

inline GaussianRational random_coef(Rng& rng) {
  static const std::vector<GaussianRational> vals = {
      GaussianRational(1),  GaussianRational(-1), GaussianRational(2),
      GaussianRational(-2), GaussianRational(Rational(1, 2)),
      GaussianRational(Rational(-1, 2)), GaussianRational::unit_im(),
      GaussianRational(Rational(0), Rational(-1)),
      GaussianRational(Rational(1), Rational(1))};
  return vals[static_cast<size_t>(rng.pick(0, static_cast<std::int64_t>(vals.size()) - 1))];
}

inline std::set<Exponents> random_support(Rng& rng, size_t n, size_t max_points,
                                          std::int64_t max_entry) {
  std::set<Exponents> s;
  size_t count = static_cast<size_t>(rng.pick(1, static_cast<std::int64_t>(max_points)));
  while (s.size() < count) {
    Exponents p(n);
    for (auto& v : p) v = rng.pick(0, max_entry);
    if (is_zero(p)) continue;
    s.insert(p);
  }
  return s;
}

// Real-valued polynomial: squared moduli with signs plus real pure pairs.
inline MixedPolynomial random_real_poly(Rng& rng, size_t n, size_t terms) {
  MixedPolynomial f(n);
  for (size_t t = 0; t < terms; ++t) {
    Exponents a(n), b(n);
    for (auto& v : a) v = rng.pick(0, 3);
    for (auto& v : b) v = rng.pick(0, 3);
    if (is_zero(a) && is_zero(b)) continue;
    GaussianRational c = random_coef(rng);
    f.add_term({a, b}, c);
    f.add_term({b, a}, c.conj());
  }
  return f;
}

// Certified-nondegenerate family: positive combinations c |z^v|^2.
inline MixedPolynomial random_diagonal_positive(Rng& rng, size_t n, size_t terms) {
  MixedPolynomial f(n);
  for (size_t t = 0; t < terms; ++t) {
    Exponents v(n);
    for (auto& e : v) e = rng.pick(0, 3);
    if (is_zero(v)) v[static_cast<size_t>(rng.pick(0, static_cast<std::int64_t>(n) - 1))] = 1;
    Rational c(rng.pick(1, 6), rng.pick(1, 3));
    f.add_term({v, v}, GaussianRational(c));
  }
  return f;
}

inline JetCurve random_jet(Rng& rng, size_t n, std::int64_t max_exp, bool allow_zero = true) {
  for (;;) {
    JetCurve g;
    g.components.assign(n, Poly1{});
    for (size_t j = 0; j < n; ++j) {
      if (allow_zero && rng.chance(0.25)) continue;
      std::int64_t lead = rng.pick(1, max_exp);
      g.components[j][lead] = random_coef(rng);
      if (rng.chance(0.4)) g.components[j][lead + rng.pick(1, 3)] = random_coef(rng);
    }
    if (g.valid()) return g;
  }
}

}  // namespace tests
