#include "nc/mixedpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace nc {

HoloPoly holo_mul(const HoloPoly& a, const HoloPoly& b) {
  HoloPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e = add(ea, eb);
      auto it = r.find(e);
      if (it == r.end()) {
        GaussianRational c = ca * cb;
        if (!c.is_zero()) r.emplace(std::move(e), std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

HoloPoly holo_pow(const HoloPoly& a, std::int64_t k, size_t nvars) {
  HoloPoly acc{{Exponents(nvars, 0), GaussianRational(1)}};
  HoloPoly base = a;
  while (k > 0) {
    if (k & 1) acc = holo_mul(acc, base);
    base = holo_mul(base, base);
    k >>= 1;
  }
  return acc;
}

MixedPolynomial MixedPolynomial::monomial(size_t nvars, Exponents alpha, Exponents beta,
                                          GaussianRational c) {
  if (alpha.size() != nvars || beta.size() != nvars)
    throw std::invalid_argument("monomial: exponent length != nvars");
  MixedPolynomial f(nvars);
  f.add_term({std::move(alpha), std::move(beta)}, c);
  return f;
}

MixedPolynomial MixedPolynomial::constant(size_t nvars, GaussianRational c) {
  return monomial(nvars, Exponents(nvars, 0), Exponents(nvars, 0), std::move(c));
}

void MixedPolynomial::add_term(const BiDegree& k, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (k.alpha.size() != nvars_ || k.beta.size() != nvars_)
    throw std::invalid_argument("add_term: exponent length != nvars");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational MixedPolynomial::coefficient(const BiDegree& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? GaussianRational() : it->second;
}

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("+: nvars mismatch");
  MixedPolynomial r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b) {
  return a + (-b);
}

MixedPolynomial operator-(const MixedPolynomial& a) {
  MixedPolynomial r(a.nvars_);
  for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
  return r;
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("*: nvars mismatch");
  MixedPolynomial r(a.nvars_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term({add(ka.alpha, kb.alpha), add(ka.beta, kb.beta)}, ca * cb);
  return r;
}

MixedPolynomial MixedPolynomial::scaled(const GaussianRational& c) const {
  MixedPolynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

MixedPolynomial MixedPolynomial::conj() const {
  MixedPolynomial r(nvars_);
  for (const auto& [k, v] : terms_) r.terms_.emplace(BiDegree{k.beta, k.alpha}, v.conj());
  return r;
}

MixedPolynomial MixedPolynomial::pow(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  MixedPolynomial acc = constant(nvars_, GaussianRational(1));
  MixedPolynomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool MixedPolynomial::is_real() const {
  for (const auto& [k, v] : terms_) {
    if (coefficient({k.beta, k.alpha}) != v.conj()) return false;
  }
  return true;
}

std::set<Exponents> MixedPolynomial::support() const {
  std::set<Exponents> s;
  for (const auto& [k, v] : terms_) s.insert(k.total());
  return s;
}

ExtendedInt MixedPolynomial::ord() const {
  ExtendedInt best = ExtendedInt::infinity();
  for (const auto& [k, v] : terms_)
    best = min(best, ExtendedInt(degree_sum(k.alpha) + degree_sum(k.beta)));
  return best;
}

std::int64_t MixedPolynomial::max_total_degree() const {
  std::int64_t best = 0;
  for (const auto& [k, v] : terms_)
    best = std::max(best, degree_sum(k.alpha) + degree_sum(k.beta));
  return best;
}

MixedPolynomial MixedPolynomial::jet(std::int64_t N) const {
  MixedPolynomial r(nvars_);
  for (const auto& [k, v] : terms_)
    if (degree_sum(k.alpha) + degree_sum(k.beta) <= N) r.terms_.emplace(k, v);
  return r;
}

std::pair<MixedPolynomial, MixedPolynomial> MixedPolynomial::pure_mixed_split() const {
  MixedPolynomial pure(nvars_), mixed(nvars_);
  for (const auto& [k, v] : terms_) (k.is_pure() ? pure : mixed).terms_.emplace(k, v);
  return {pure, mixed};
}

MixedPolynomial MixedPolynomial::restrict_to(IndexSet I) const {
  auto idx = members(I, nvars_);
  MixedPolynomial r(idx.size());
  for (const auto& [k, v] : terms_) {
    bool keep = true;
    for (size_t j = 0; j < nvars_ && keep; ++j)
      if (!contains(I, j) && (k.alpha[j] != 0 || k.beta[j] != 0)) keep = false;
    if (!keep) continue;
    Exponents a(idx.size()), b(idx.size());
    for (size_t t = 0; t < idx.size(); ++t) {
      a[t] = k.alpha[idx[t]];
      b[t] = k.beta[idx[t]];
    }
    r.terms_.emplace(BiDegree{std::move(a), std::move(b)}, v);
  }
  return r;
}

MixedPolynomial MixedPolynomial::embed(const MixedPolynomial& f, size_t ambient, IndexSet I) {
  auto idx = members(I, ambient);
  if (idx.size() != f.nvars()) throw std::invalid_argument("embed: index set size mismatch");
  MixedPolynomial r(ambient);
  for (const auto& [k, v] : f.terms_) {
    Exponents a(ambient, 0), b(ambient, 0);
    for (size_t t = 0; t < idx.size(); ++t) {
      a[idx[t]] = k.alpha[t];
      b[idx[t]] = k.beta[t];
    }
    r.terms_.emplace(BiDegree{std::move(a), std::move(b)}, v);
  }
  return r;
}

GaussianRational MixedPolynomial::evaluate(const std::vector<GaussianRational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: point size mismatch");
  GaussianRational acc;
  for (const auto& [k, v] : terms_) {
    GaussianRational t = v;
    for (size_t j = 0; j < nvars_; ++j) {
      if (k.alpha[j]) t *= point[j].pow(static_cast<unsigned>(k.alpha[j]));
      if (k.beta[j]) t *= point[j].conj().pow(static_cast<unsigned>(k.beta[j]));
    }
    acc += t;
  }
  return acc;
}

MixedPolynomial MixedPolynomial::compose_holomorphic(const std::vector<HoloPoly>& subs,
                                                     size_t out_nvars) const {
  if (subs.size() != nvars_) throw std::invalid_argument("compose: substitution count mismatch");
  MixedPolynomial r(out_nvars);
  for (const auto& [k, v] : terms_) {
    HoloPoly hol{{Exponents(out_nvars, 0), GaussianRational(1)}};
    HoloPoly anti{{Exponents(out_nvars, 0), GaussianRational(1)}};
    for (size_t j = 0; j < nvars_; ++j) {
      if (k.alpha[j]) hol = holo_mul(hol, holo_pow(subs[j], k.alpha[j], out_nvars));
      if (k.beta[j]) anti = holo_mul(anti, holo_pow(subs[j], k.beta[j], out_nvars));
    }
    for (const auto& [ea, ca] : hol)
      for (const auto& [eb, cb] : anti) r.add_term({ea, eb}, v * ca * cb.conj());
  }
  return r;
}

HoloPoly MixedPolynomial::holomorphic_pure_part() const {
  HoloPoly h;
  for (const auto& [k, v] : terms_)
    if (nc::is_zero(k.beta) && !nc::is_zero(k.alpha)) h.emplace(k.alpha, v);
  return h;
}

bool MixedPolynomial::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.alpha == t.first.beta; });
}

bool MixedPolynomial::is_pluriharmonic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_pure(); });
}

IndexSet MixedPolynomial::effective_vars() const {
  IndexSet I = 0;
  for (const auto& [k, v] : terms_)
    for (size_t j = 0; j < nvars_; ++j)
      if (k.alpha[j] || k.beta[j]) I |= IndexSet{1} << j;
  return I;
}

bool MixedPolynomial::is_homogeneous_of_degree(std::int64_t l) const {
  return std::all_of(terms_.begin(), terms_.end(), [l](const auto& t) {
    return degree_sum(t.first.alpha) + degree_sum(t.first.beta) == l;
  });
}

std::string MixedPolynomial::str() const {
  std::vector<std::string> names;
  for (size_t j = 0; j < nvars_; ++j) names.push_back("z" + std::to_string(j + 1));
  return str(names);
}

std::string MixedPolynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + v.str() + ")";
    for (size_t j = 0; j < nvars_; ++j) {
      if (k.alpha[j]) {
        s += "*" + names[j];
        if (k.alpha[j] > 1) s += "^" + std::to_string(k.alpha[j]);
      }
    }
    for (size_t j = 0; j < nvars_; ++j) {
      if (k.beta[j]) {
        s += "*conj(" + names[j] + ")";
        if (k.beta[j] > 1) s += "^" + std::to_string(k.beta[j]);
      }
    }
  }
  return s;
}

}  // namespace nc
