// Exact mixed polynomials F(z, conj z) with Gaussian rational coefficients,
// stored sparsely as bidegree -> coefficient.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nc/multiindex.hpp"
#include "nc/rational.hpp"

namespace nc {

struct BiDegree {
  Exponents alpha;
  Exponents beta;

  friend bool operator==(const BiDegree& a, const BiDegree& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
  friend bool operator<(const BiDegree& a, const BiDegree& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
  }

  Exponents total() const { return add(alpha, beta); }
  bool is_pure() const { return is_zero(alpha) || is_zero(beta); }
};

// Holomorphic multivariate polynomial, used for coordinate substitutions.
using HoloPoly = std::map<Exponents, GaussianRational>;

HoloPoly holo_mul(const HoloPoly& a, const HoloPoly& b);
HoloPoly holo_pow(const HoloPoly& a, std::int64_t k, size_t nvars);

class MixedPolynomial {
 public:
  MixedPolynomial() = default;
  explicit MixedPolynomial(size_t nvars) : nvars_(nvars) {}

  static MixedPolynomial monomial(size_t nvars, Exponents alpha, Exponents beta,
                                  GaussianRational c);
  static MixedPolynomial constant(size_t nvars, GaussianRational c);

  size_t nvars() const { return nvars_; }
  const std::map<BiDegree, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Drops zero coefficients; every mutation funnels through here.
  void add_term(const BiDegree& k, const GaussianRational& c);

  GaussianRational coefficient(const BiDegree& k) const;

  friend MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator-(const MixedPolynomial& a);
  friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
  MixedPolynomial scaled(const GaussianRational& c) const;
  MixedPolynomial conj() const;
  MixedPolynomial pow(std::int64_t k) const;

  // True iff the coefficient of (beta, alpha) is the conjugate of that of
  // (alpha, beta) for every term, i.e. the polynomial is real-valued.
  bool is_real() const;

  // S(F): the set of alpha+beta over stored terms.
  std::set<Exponents> support() const;

  // min |alpha+beta| over terms; infinity for the zero polynomial.
  ExtendedInt ord() const;
  std::int64_t max_total_degree() const;

  // Keeps terms with |alpha+beta| <= N.
  MixedPolynomial jet(std::int64_t N) const;

  // (pure part, mixed part): a term is pure when alpha = 0 or beta = 0.
  std::pair<MixedPolynomial, MixedPolynomial> pure_mixed_split() const;

  // Drops terms touching variables outside I and re-indexes to I's members.
  MixedPolynomial restrict_to(IndexSet I) const;

  // Re-embeds a polynomial over I's members into n ambient variables.
  static MixedPolynomial embed(const MixedPolynomial& f, size_t ambient, IndexSet I);

  // Exact evaluation at a Gaussian rational point (z = point, conj taken).
  GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

  // F(h(w), conj h(w)) for a holomorphic coordinate change z_j = h_j(w).
  MixedPolynomial compose_holomorphic(const std::vector<HoloPoly>& subs,
                                      size_t out_nvars) const;

  // Pure terms with alpha != 0 collected as a holomorphic polynomial: the
  // h in F = h + conj(h) + mixed for real F.
  HoloPoly holomorphic_pure_part() const;

  // True iff every term has alpha == beta (rotation invariance).
  bool is_diagonal() const;
  // True iff every term is pure.
  bool is_pluriharmonic() const;
  // Effective variables: slots j with alpha_j + beta_j > 0 somewhere.
  IndexSet effective_vars() const;

  // True iff every term has |alpha+beta| == l.
  bool is_homogeneous_of_degree(std::int64_t l) const;

  // Canonical text (sorted terms); parses back to the same polynomial.
  std::string str() const;
  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  size_t nvars_ = 0;
  std::map<BiDegree, GaussianRational> terms_;
};

}  // namespace nc
