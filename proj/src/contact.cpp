#include "nc/contact.hpp"

#include <stdexcept>

namespace nc {

LeadingAsymptotics leading_asymptotics(const MixedPolynomial& f, const JetCurve& gamma) {
  if (!gamma.valid()) throw std::invalid_argument("leading_asymptotics: invalid curve");
  if (gamma.nvars() != f.nvars())
    throw std::invalid_argument("leading_asymptotics: dimension mismatch");
  LeadingAsymptotics out;
  out.leading = MixedPolynomial(1);
  if (f.is_zero()) {
    out.flat_restriction = true;
    out.level = ExtendedInt::infinity();
    return out;
  }
  LatticePolyhedron P = newton_polyhedron(f);
  DirectionProfile prof = profile(gamma);
  auto dd = P.support_min_dir(prof.a_hat);
  if (dd.level.is_inf()) {
    out.flat_restriction = true;
    out.level = ExtendedInt::infinity();
    return out;
  }
  out.level = dd.level;
  out.face = dd.face;
  MonomialCurve trunc = leading_truncation(gamma);
  out.truncation = trunc;
  MixedPolynomial part = face_part_unchecked(f, *dd.face);
  out.leading = substitute_curve(part, trunc);
  // The leading polynomial is quasihomogeneous of total degree l.
  if (!out.leading.is_homogeneous_of_degree(dd.level.value()))
    throw std::logic_error("leading_asymptotics: leading part not homogeneous");
  return out;
}

ContactReport order_of_contact(const MixedPolynomial& f, const JetCurve& gamma) {
  if (!gamma.valid()) throw std::invalid_argument("order_of_contact: invalid curve");
  if (gamma.nvars() != f.nvars())
    throw std::invalid_argument("order_of_contact: dimension mismatch");

  ContactReport r;
  r.profile = profile(gamma);
  r.ord_curve = curve_ord(gamma);
  MixedPolynomial composed = substitute_curve(f, gamma);
  r.ord_composed = composed.ord();
  r.contact_order = extended_ratio(r.ord_composed, r.ord_curve);

  LeadingAsymptotics la = leading_asymptotics(f, gamma);
  r.l_lower_bound = la.level;
  r.face = la.face;
  r.truncation = la.truncation;
  r.leading_part = la.leading;

  if (la.flat_restriction) {
    r.distance = ExtendedRat::infinity();
  } else {
    LatticePolyhedron P = newton_polyhedron(f);
    r.distance = P.newton_distance(r.profile.a_hat).distance;
    // Residual bound: ord(F.gamma - leading) >= l + 1.
    MixedPolynomial residual = composed - la.leading;
    ExtendedInt rord = residual.ord();
    if (rord < ExtendedInt(la.level.value() + 1))
      throw std::logic_error("order_of_contact: residual below truncation level");
  }

  if (r.ord_composed < r.l_lower_bound)
    throw std::logic_error("order_of_contact: ord below support minimum");
  if (r.contact_order < r.distance)
    throw std::logic_error("order_of_contact: contact order below newton distance");
  r.tight = (r.ord_composed == r.l_lower_bound) && (r.contact_order == r.distance);
  return r;
}

ExtendedInt sup_contact_under_nondegeneracy(const MixedPolynomial& f,
                                            const NondegeneracyVerdict& verdict) {
  if (verdict.status != NdStatus::Nondegenerate)
    throw std::invalid_argument(
        "sup_contact_under_nondegeneracy: requires a Nondegenerate verdict");
  if (f.is_zero()) return ExtendedInt::infinity();
  return newton_polyhedron(f).rho1();
}

}  // namespace nc
