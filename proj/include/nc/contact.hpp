// Orders of vanishing and contact: ord(F . gamma), leading asymptotics along
// the distinguished face, and comparison with the Newton distance.
#pragma once

#include <optional>

#include "nc/curves.hpp"
#include "nc/polyhedron.hpp"
#include "nc/verdict.hpp"

namespace nc {

struct ContactReport {
  ExtendedInt ord_composed;
  std::int64_t ord_curve = 1;
  ExtendedRat contact_order;
  ExtendedInt l_lower_bound;
  ExtendedRat distance;
  MixedPolynomial leading_part;  // one variable, in (t, conj t)
  bool tight = false;
  std::optional<FaceHandle> face;          // the face the profile selects
  std::optional<MonomialCurve> truncation;
  DirectionProfile profile;
};

// Exact contact data; checks the lower bounds internally and throws on any
// violation (they are theorems for polynomial data).
ContactReport order_of_contact(const MixedPolynomial& f, const JetCurve& gamma);

struct LeadingAsymptotics {
  bool flat_restriction = false;
  ExtendedInt level;
  std::optional<FaceHandle> face;
  std::optional<MonomialCurve> truncation;
  MixedPolynomial leading;  // face part composed with the truncation
};

LeadingAsymptotics leading_asymptotics(const MixedPolynomial& f, const JetCurve& gamma);

// Under a Nondegenerate verdict the supremum of contact orders is the top
// axis intercept; infinite exactly when some axis is missed.
ExtendedInt sup_contact_under_nondegeneracy(const MixedPolynomial& f,
                                            const NondegeneracyVerdict& verdict);

}  // namespace nc
