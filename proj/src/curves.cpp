#include "nc/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace nc {

namespace {

Poly1 poly1_mul(const Poly1& a, const Poly1& b) {
  Poly1 r;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) {
      auto it = r.find(da + db);
      if (it == r.end()) {
        GaussianRational c = ca * cb;
        if (!c.is_zero()) r.emplace(da + db, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

Poly1 poly1_pow(const Poly1& a, std::int64_t k) {
  Poly1 acc{{0, GaussianRational(1)}};
  Poly1 base = a;
  while (k > 0) {
    if (k & 1) acc = poly1_mul(acc, base);
    base = poly1_mul(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace

bool JetCurve::valid() const {
  if (components.empty()) return false;
  bool any = false;
  for (const auto& c : components) {
    for (const auto& [d, v] : c) {
      if (d < 1) return false;  // must vanish at the origin
      if (v.is_zero()) return false;
    }
    if (!c.empty()) any = true;
  }
  return any;
}

JetCurve JetCurve::from_literal(const std::string& text) {
  JetCurve g{parse_curve_literal(text)};
  if (!g.valid()) throw std::invalid_argument("invalid curve: " + text);
  return g;
}

std::string JetCurve::str() const {
  std::string s = "(";
  for (size_t j = 0; j < components.size(); ++j) {
    if (j) s += ", ";
    s += poly1_str(components[j]);
  }
  return s + ")";
}

bool operator<(const JetCurve& a, const JetCurve& b) {
  auto key = [](const JetCurve& g) {
    std::vector<std::vector<std::pair<std::int64_t, std::pair<Rational, Rational>>>> k;
    for (const auto& c : g.components) {
      std::vector<std::pair<std::int64_t, std::pair<Rational, Rational>>> comp;
      for (const auto& [d, v] : c) comp.push_back({d, {v.re, v.im}});
      k.push_back(std::move(comp));
    }
    return k;
  };
  return key(a) < key(b);
}

JetCurve MonomialCurve::to_jet() const {
  JetCurve g;
  g.components.assign(ambient, Poly1{});
  auto idx = members(index_set, ambient);
  for (size_t t = 0; t < idx.size(); ++t) g.components[idx[t]] = Poly1{{exponent[t], coef[t]}};
  return g;
}

std::int64_t MonomialCurve::ord() const {
  std::int64_t m = 0;
  for (auto e : exponent) m = (m == 0) ? e : std::min(m, e);
  return m;
}

DirectionProfile profile(const JetCurve& gamma) {
  if (!gamma.valid()) throw std::invalid_argument("profile: invalid curve");
  DirectionProfile p;
  p.a_hat.assign(gamma.nvars(), ExtendedInt::infinity());
  for (size_t j = 0; j < gamma.nvars(); ++j) {
    if (gamma.components[j].empty()) continue;
    p.a_hat[j] = ExtendedInt(gamma.components[j].begin()->first);
    p.index_set |= IndexSet{1} << j;
  }
  return p;
}

std::int64_t curve_ord(const JetCurve& gamma) {
  auto p = profile(gamma);
  ExtendedInt m = ExtendedInt::infinity();
  for (const auto& v : p.a_hat) m = min(m, v);
  return m.value();
}

MonomialCurve leading_truncation(const JetCurve& gamma) {
  if (!gamma.valid()) throw std::invalid_argument("leading_truncation: invalid curve");
  MonomialCurve m;
  m.ambient = gamma.nvars();
  for (size_t j = 0; j < gamma.nvars(); ++j) {
    if (gamma.components[j].empty()) continue;
    m.index_set |= IndexSet{1} << j;
    m.exponent.push_back(gamma.components[j].begin()->first);
    m.coef.push_back(gamma.components[j].begin()->second);
  }
  return m;
}

MixedPolynomial substitute_curve(const MixedPolynomial& f, const JetCurve& gamma) {
  if (gamma.nvars() != f.nvars())
    throw std::invalid_argument("substitute_curve: component count mismatch");
  MixedPolynomial out(1);
  for (const auto& [k, c] : f.terms()) {
    Poly1 hol{{0, GaussianRational(1)}};
    Poly1 anti{{0, GaussianRational(1)}};
    bool dead = false;
    for (size_t j = 0; j < f.nvars() && !dead; ++j) {
      if (k.alpha[j]) {
        if (gamma.components[j].empty()) {
          dead = true;
          break;
        }
        hol = poly1_mul(hol, poly1_pow(gamma.components[j], k.alpha[j]));
      }
      if (k.beta[j]) {
        if (gamma.components[j].empty()) {
          dead = true;
          break;
        }
        anti = poly1_mul(anti, poly1_pow(gamma.components[j], k.beta[j]));
      }
    }
    if (dead) continue;
    for (const auto& [dh, ch] : hol)
      for (const auto& [da, ca] : anti)
        out.add_term({Exponents{dh}, Exponents{da}}, c * ch * ca.conj());
  }
  return out;
}

MixedPolynomial substitute_curve(const MixedPolynomial& f, const MonomialCurve& gamma) {
  return substitute_curve(f, gamma.to_jet());
}

}  // namespace nc
