// Curve germs (polynomial jets), monomial curves, and their combinatorial
// shadows: the order profile and the leading truncation.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nc/mixedpoly.hpp"
#include "nc/parser.hpp"
#include "nc/polyhedron.hpp"

namespace nc {

// gamma = (gamma_1,...,gamma_n), each component a one-variable polynomial in
// t with zero constant term; not all identically zero.
struct JetCurve {
  std::vector<Poly1> components;

  size_t nvars() const { return components.size(); }
  bool valid() const;
  static JetCurve from_literal(const std::string& text);
  std::string str() const;

  friend bool operator==(const JetCurve& a, const JetCurve& b) {
    return a.components == b.components;
  }
  friend bool operator<(const JetCurve& a, const JetCurve& b);
};

// (c_1 t^{a_1}, ..., c_k t^{a_k}) supported on index_set; slots outside the
// index set are identically zero.
struct MonomialCurve {
  size_t ambient = 0;
  IndexSet index_set = 0;
  std::vector<GaussianRational> coef;     // over members(index_set)
  std::vector<std::int64_t> exponent;     // over members(index_set), all >= 1

  JetCurve to_jet() const;
  std::string str() const { return to_jet().str(); }
  std::int64_t ord() const;
};

// phi(gamma): componentwise orders, infinity at zero components.
struct DirectionProfile {
  Direction a_hat;
  IndexSet index_set = 0;
};

DirectionProfile profile(const JetCurve& gamma);

// min over nonzero components of the lowest degree.
std::int64_t curve_ord(const JetCurve& gamma);

// Keeps the lowest-degree monomial of every nonzero component.
MonomialCurve leading_truncation(const JetCurve& gamma);

// Exact composition F(gamma(t), conj gamma(t)) as a polynomial in (t, conj t).
MixedPolynomial substitute_curve(const MixedPolynomial& f, const JetCurve& gamma);
MixedPolynomial substitute_curve(const MixedPolynomial& f, const MonomialCurve& gamma);

}  // namespace nc
