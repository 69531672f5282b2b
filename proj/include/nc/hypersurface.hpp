// Model hypersurfaces Re(w) + F(z, conj z): normalization, axis intercepts,
// type computation and the coordinate-improvement step.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nc/contact.hpp"
#include "nc/nondegen.hpp"

namespace nc {

struct ModelHypersurface {
  MixedPolynomial F;            // n z-variables, real-valued, no pure terms
  size_t nz = 0;                // number of z variables
  size_t w_index = 0;           // slot of the w-like variable in the input
  GaussianRational w_coef;      // coefficient c in c*w + conj(c*w) + F
  HoloPoly absorbed;            // h with w -> w - h(z) applied during normalization
  std::string original;         // input expression, for reports

  // The defining polynomial in the original n+1 variables.
  MixedPolynomial defining() const;
};

// Accepts a real polynomial in (z, w); the w slot is the literal variable w
// when present, otherwise the unique variable that appears only linearly and
// purely.  Absorbs pure terms of F into w.
ModelHypersurface normalize(const MixedPolynomial& r, size_t w_index);
ModelHypersurface normalize_auto(const MixedPolynomial& r);

struct TypeReport {
  ExtendedInt rho1;
  RhoVector rho_full;               // intercepts over (z..., w); w slot is 1
  std::vector<size_t> permutation;  // descending-intercept order of slots
  NondegeneracyVerdict verdict;
  std::optional<ExtendedInt> delta1;
  ExtendedInt delta1_reg_lb;
  std::optional<JetCurve> lb_curve;   // curve attaining the lower bound
  bool infinite_type_certified = false;
  std::optional<JetCurve> infinite_curve;
  std::string notes;
};

std::pair<ExtendedInt, RhoVector> rho1_on_coordinate(const ModelHypersurface& m);

TypeReport compute_type(const ModelHypersurface& m, const SearchOptions& opts = {});

struct ImproveStep {
  Witness witness;
  std::vector<std::string> substitution;  // printable z_j -> ... lines
  ModelHypersurface improved;
  ExtendedInt rho1_before, rho1_after;
};

// One step of the ascent: a degenerate face through the apex vertex with an
// order-one witness yields a polynomial change of variables that strictly
// increases the top intercept.  Returns nothing when no such witness exists.
std::optional<ImproveStep> improve_coordinate(const ModelHypersurface& m,
                                              const SearchOptions& opts = {});

struct ImproveRun {
  std::vector<ImproveStep> steps;
  TypeReport final_report;
  ModelHypersurface final_surface;
  bool reached_cap = false;
};
ImproveRun iterate_improve(const ModelHypersurface& m, const SearchOptions& opts = {},
                           int max_steps = 16);

struct RegularFaceAuditEntry {
  FaceHandle face;
  bool regular = false;
  bool meets_top_vertices = false;
  NdStatus status = NdStatus::Unknown;
};
struct RegularFaceAudit {
  std::vector<RegularFaceAuditEntry> entries;
  bool adaptedness_obstructed = false;  // a degenerate regular face meets V
};
RegularFaceAudit regular_face_audit(const ModelHypersurface& m, const SearchOptions& opts = {});

}  // namespace nc
