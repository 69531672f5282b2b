// Expression grammar for mixed polynomials and curve literals.
//
//   expr    := term (('+'|'-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | factor
//   factor  := primary ('^' nat)?
//   primary := rational | 'i' | var | 'Re' '(' expr ')' | 'Im' '(' expr ')'
//            | 'conj' '(' expr ')' | '(' expr ')' | '|' expr '|' '^' nat
//
// Variables are z1..z9 and w (w is always the last slot when present).
// Re(e) = (e + conj(e))/2, Im(e) = (e - conj(e))/(2i), |e|^(2k) = (e*conj(e))^k;
// conjugation distributes structurally.  Odd modulus powers are rejected.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nc/mixedpoly.hpp"

namespace nc {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Parses with an explicit variable-name table; names[j] binds slot j.
MixedPolynomial parse_mixed(const std::string& text, const std::vector<std::string>& names);

// Convenience: z1..z_nvars, or z1..z_{nvars-1} plus w in the last slot when
// the text mentions w.
MixedPolynomial parse_mixed(const std::string& text, size_t nvars);

// Scans for used variables: returns z1..zK (K = highest index used) plus w
// last when present.
std::vector<std::string> detect_variables(const std::string& text);

// One-variable holomorphic polynomial in t, as degree -> coefficient.
using Poly1 = std::map<std::int64_t, GaussianRational>;

// Curve literal "(t^2, t^3 + t^4, 0)"; every component must be holomorphic
// in t with zero constant term.
std::vector<Poly1> parse_curve_literal(const std::string& text);

std::string poly1_str(const Poly1& p);

}  // namespace nc
