// Brute-force contact search: enumerates monomial curves and two-term jets
// over a coefficient palette, maximizing the exact order of contact.
#pragma once

#include <cstdint>
#include <optional>

#include "nc/contact.hpp"
#include "nc/curves.hpp"
#include "nc/nondegen.hpp"

namespace nc {

struct SearchConfig {
  std::int64_t max_exponent = 6;
  std::vector<GaussianRational> palette;  // empty means the default palette
  std::int64_t jet_degree = 12;
  std::uint64_t max_curves = 1000000;
  bool reg_only = false;
  bool two_term_jets = true;
  int threads = 1;

  std::vector<GaussianRational> effective_palette() const;
};

struct OracleResult {
  ExtendedRat best{Rational(0)};
  std::optional<JetCurve> argmax;
  bool infinite_flag = false;
  std::optional<JetCurve> infinite_witness;
  std::uint64_t curves_tried = 0;
  bool truncated = false;  // hit max_curves
};

// Lower bound on the supremum of ord(F.gamma)/ord(gamma) over the family;
// the infinite flag reports an exact identically-zero composition.
OracleResult sup_contact_lower_bound(const MixedPolynomial& f, const SearchConfig& cfg);

struct CrosscheckReport {
  std::uint64_t curves_checked = 0;
  std::uint64_t equalities_checked = 0;  // on faces certified nondegenerate
  std::uint64_t strict_gaps = 0;         // strict inequality on uncertified faces
  std::vector<std::string> violations;   // must stay empty
};

// Replays the support-minimum inequalities on every enumerated curve and the
// exact equalities on faces whose parts are certified nondegenerate.
CrosscheckReport formula_crosscheck(const MixedPolynomial& f, const SearchConfig& cfg,
                                    const SearchOptions& nd_opts = {});

}  // namespace nc
