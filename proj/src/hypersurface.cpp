#include "nc/hypersurface.hpp"

#include <algorithm>
#include <stdexcept>

namespace nc {

MixedPolynomial ModelHypersurface::defining() const {
  const size_t n = nz + 1;
  MixedPolynomial r(n);
  Exponents ew = unit(n, w_index);
  Exponents zero(n, 0);
  r.add_term({ew, zero}, w_coef);
  r.add_term({zero, ew}, w_coef.conj());
  IndexSet zmask = 0;
  for (size_t j = 0, slot = 0; j < n; ++j)
    if (j != w_index) zmask |= IndexSet{1} << j, (void)slot;
  return r + MixedPolynomial::embed(F, n, zmask);
}

ModelHypersurface normalize(const MixedPolynomial& r, size_t w_index) {
  const size_t n = r.nvars();
  if (w_index >= n) throw std::invalid_argument("normalize: bad w index");
  if (!r.is_real()) throw std::invalid_argument("normalize: defining function must be real");

  Exponents ew = unit(n, w_index);
  Exponents zero(n, 0);
  GaussianRational c = r.coefficient({ew, zero});
  if (c.is_zero())
    throw std::invalid_argument(
        "normalize: no Re(w) direction with nonzero gradient; pre-reduce the input");

  ModelHypersurface m;
  m.nz = n - 1;
  m.w_index = w_index;
  m.w_coef = c;

  IndexSet zmask = 0;
  for (size_t j = 0; j < n; ++j)
    if (j != w_index) zmask |= IndexSet{1} << j;

  // Model form: r = c*w + conj(c*w) + F(z, conj z); anything else mixing w
  // with z (or higher w powers) is outside the model class.
  MixedPolynomial f_part(r.nvars());
  for (const auto& [k, v] : r.terms()) {
    bool touches_w = (k.alpha[w_index] != 0 || k.beta[w_index] != 0);
    if (!touches_w) {
      f_part.add_term(k, v);
      continue;
    }
    bool is_linear_w = (k.alpha == ew && is_zero(k.beta)) || (k.beta == ew && is_zero(k.alpha));
    if (!is_linear_w)
      throw std::invalid_argument(
          "normalize: input is not a model hypersurface (w mixes with z or has degree > 1)");
  }

  MixedPolynomial F = f_part.restrict_to(zmask);
  auto [pure, mixed] = F.pure_mixed_split();
  HoloPoly h = pure.holomorphic_pure_part();
  // Constant pure terms have nowhere to go; a defining function vanishes at
  // the origin.
  if (!pure.coefficient({Exponents(m.nz, 0), Exponents(m.nz, 0)}).is_zero())
    throw std::invalid_argument("normalize: defining function must vanish at the origin");
  // w <- w - h(z)/c removes h + conj(h) exactly.
  for (auto& [e, coe] : h) coe = coe / c;
  m.absorbed = h;
  m.F = mixed;
  return m;
}

ModelHypersurface normalize_auto(const MixedPolynomial& r) {
  const size_t n = r.nvars();
  // Prefer a variable that occurs exactly once, as a linear pure pair.
  std::optional<size_t> pick;
  for (size_t j = 0; j < n; ++j) {
    Exponents ej = unit(n, j);
    Exponents zero(n, 0);
    if (r.coefficient({ej, zero}).is_zero()) continue;
    bool only_linear = true;
    for (const auto& [k, v] : r.terms()) {
      bool touches = (k.alpha[j] != 0 || k.beta[j] != 0);
      if (!touches) continue;
      bool linear = (k.alpha == ej && is_zero(k.beta)) || (k.beta == ej && is_zero(k.alpha));
      if (!linear) only_linear = false;
    }
    if (only_linear) {
      if (pick) throw std::invalid_argument("normalize: ambiguous w direction; pass it explicitly");
      pick = j;
    }
  }
  if (!pick)
    throw std::invalid_argument(
        "normalize: no Re(w)-like direction found; the input must carry a linear pure variable");
  return normalize(r, *pick);
}

std::pair<ExtendedInt, RhoVector> rho1_on_coordinate(const ModelHypersurface& m) {
  MixedPolynomial r = m.defining();
  LatticePolyhedron P = newton_polyhedron(r);
  RhoVector rho = P.rho();
  ExtendedInt r1(0);
  for (const auto& v : rho) r1 = max(r1, v);
  return {r1, rho};
}

namespace {

std::vector<size_t> rho_permutation(const RhoVector& rho) {
  std::vector<size_t> order(rho.size());
  for (size_t j = 0; j < rho.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return rho[b] < rho[a]; });
  return order;
}

// A zero-composition curve certifying infinite type: the witness itself, or
// a coordinate axis the polyhedron misses.
std::optional<JetCurve> find_infinite_curve(const ModelHypersurface& m,
                                            const NondegeneracyVerdict& verdict) {
  const size_t n = m.nz + 1;
  if (!m.F.is_zero()) {
    LatticePolyhedron P = newton_polyhedron(m.F);
    RhoVector rho = P.rho();
    for (size_t j = 0; j < m.nz; ++j) {
      if (rho[j].is_inf()) {
        JetCurve axis;
        axis.components.assign(n, Poly1{});
        size_t slot = j < m.w_index ? j : j + 1;
        axis.components[slot] = Poly1{{1, GaussianRational(1)}};
        return axis;
      }
    }
  } else {
    JetCurve axis;  // flat F: the z1 axis lies in the surface
    axis.components.assign(n, Poly1{});
    axis.components[m.w_index == 0 ? 1 : 0] = Poly1{{1, GaussianRational(1)}};
    return axis;
  }
  if (verdict.witness) {
    JetCurve g = verdict.witness->curve.to_jet();
    if (substitute_curve(m.F, g).is_zero()) {
      JetCurve padded;
      padded.components.assign(n, Poly1{});
      for (size_t j = 0, t = 0; j < n; ++j)
        if (j != m.w_index) padded.components[j] = g.components[t++];
      return padded;
    }
  }
  return std::nullopt;
}

}  // namespace

TypeReport compute_type(const ModelHypersurface& m, const SearchOptions& opts) {
  TypeReport rep;
  auto [r1, rho] = rho1_on_coordinate(m);
  rep.rho1 = r1;
  rep.rho_full = rho;
  rep.permutation = rho_permutation(rho);

  if (m.F.is_zero()) {
    rep.verdict.status = NdStatus::Degenerate;
    rep.notes = "flat model: the surface contains every z-axis";
    rep.delta1_reg_lb = ExtendedInt::infinity();
    rep.infinite_type_certified = true;
    rep.infinite_curve = find_infinite_curve(m, rep.verdict);
    return rep;
  }
  auto [pure, mixed] = principal_part(m.F).pure_mixed_split();
  if (!pure.is_zero())
    throw std::invalid_argument(
        "compute_type: principal part carries pure terms; normalize the surface first");

  rep.verdict = check_all(m.F, opts);

  // rho1 on the present coordinate is always a certified lower bound for
  // the regular type: an axis monomial curve attains it.
  rep.delta1_reg_lb = rep.rho1;
  if (rep.rho1.is_finite()) {
    RhoVector rz = newton_polyhedron(m.F).rho();
    size_t jstar = 0;
    for (size_t j = 1; j < m.nz; ++j)
      if (rz[jstar] < rz[j]) jstar = j;
    JetCurve axis;
    axis.components.assign(m.nz + 1, Poly1{});
    size_t slot = jstar < m.w_index ? jstar : jstar + 1;
    axis.components[slot] = Poly1{{1, GaussianRational(1)}};
    rep.lb_curve = axis;
  }

  switch (rep.verdict.status) {
    case NdStatus::Nondegenerate:
      rep.delta1 = rep.rho1;
      rep.notes = "nondegenerate on this coordinate: both types equal the top axis intercept";
      break;
    case NdStatus::Degenerate: {
      rep.notes = "degenerate face found: the top intercept is only a lower bound on this coordinate";
      auto inf = find_infinite_curve(m, rep.verdict);
      if (inf) {
        rep.infinite_type_certified = true;
        rep.infinite_curve = inf;
        rep.notes = "a curve lies inside the surface: singular type is infinite";
      }
      break;
    }
    default:
      rep.notes = "nondegeneracy undecided: reporting bounds only";
      break;
  }
  if (!newton_polyhedron(m.defining()).convenient() && rep.infinite_curve == std::nullopt) {
    auto inf = find_infinite_curve(m, rep.verdict);
    if (inf) {
      rep.infinite_type_certified = true;
      rep.infinite_curve = inf;
    }
  }
  return rep;
}

std::optional<ImproveStep> improve_coordinate(const ModelHypersurface& m,
                                              const SearchOptions& opts) {
  if (m.F.is_zero()) return std::nullopt;
  LatticePolyhedron P = newton_polyhedron(m.F);
  if (!P.convenient()) return std::nullopt;
  FaceHandle apex = P.apex_vertex();
  const Exponents apex_point = apex.vertex_list[0];

  for (const auto& face : P.bounded_faces()) {
    bool touches_apex = false;
    for (const auto& v : face.vertex_list)
      if (v == apex_point) touches_apex = true;
    if (!touches_apex) continue;
    NondegeneracyVerdict v = check_face(m.F, P, face, opts);
    if (v.status != NdStatus::Degenerate || !v.witness) continue;
    const MonomialCurve& w = v.witness->curve;
    // Order-one witnesses only: some component must be exactly t-linear.
    auto slots = members(w.index_set, m.nz);
    std::optional<size_t> lin;
    for (size_t t = 0; t < slots.size(); ++t)
      if (w.exponent[t] == 1 && !lin) lin = t;
    if (!lin) continue;

    // Reparametrize so the linear component has coefficient one, then shear
    // every other variable along powers of it.
    size_t j0 = slots[*lin];
    GaussianRational c0 = w.coef[*lin];
    std::vector<HoloPoly> subs(m.nz);
    std::vector<std::string> printable;
    Exponents e0 = unit(m.nz, j0);
    for (size_t j = 0; j < m.nz; ++j) subs[j] = HoloPoly{{unit(m.nz, j), GaussianRational(1)}};
    for (size_t t = 0; t < slots.size(); ++t) {
      size_t j = slots[t];
      if (j == j0) continue;
      GaussianRational cj = w.coef[t] / c0.pow(static_cast<unsigned>(w.exponent[t]));
      Exponents pw = unit(m.nz, j0, w.exponent[t]);
      subs[j].emplace(pw, cj);
      printable.push_back("z" + std::to_string(j + 1) + " -> z" + std::to_string(j + 1) + " + (" +
                          cj.str() + ")*z" + std::to_string(j0 + 1) + "^" +
                          std::to_string(w.exponent[t]));
    }
    (void)e0;

    MixedPolynomial F2 = m.F.compose_holomorphic(subs, m.nz);
    auto [pure2, mixed2] = F2.pure_mixed_split();
    if (!pure2.is_zero()) throw std::logic_error("improve_coordinate: shear created pure terms");
    ModelHypersurface m2 = m;
    m2.F = mixed2;

    ImproveStep step;
    step.witness = *v.witness;
    step.substitution = printable;
    step.rho1_before = P.rho1();
    step.rho1_after = newton_polyhedron(m2.F).rho1();
    step.improved = std::move(m2);
    if (!(step.rho1_before < step.rho1_after))
      throw std::logic_error("improve_coordinate: top intercept did not increase");
    return step;
  }
  return std::nullopt;
}

ImproveRun iterate_improve(const ModelHypersurface& m, const SearchOptions& opts, int max_steps) {
  ImproveRun run;
  ModelHypersurface cur = m;
  for (int i = 0; i < max_steps; ++i) {
    TypeReport rep = compute_type(cur, opts);
    if (rep.verdict.status != NdStatus::Degenerate) {
      run.final_report = std::move(rep);
      run.final_surface = cur;
      return run;
    }
    auto step = improve_coordinate(cur, opts);
    if (!step) {
      run.final_report = std::move(rep);
      run.final_surface = cur;
      return run;
    }
    cur = step->improved;
    run.steps.push_back(std::move(*step));
  }
  run.reached_cap = true;
  run.final_report = compute_type(cur, opts);
  run.final_surface = cur;
  return run;
}

RegularFaceAudit regular_face_audit(const ModelHypersurface& m, const SearchOptions& opts) {
  if (m.F.is_zero()) throw std::domain_error("regular_face_audit: flat model");
  LatticePolyhedron P = newton_polyhedron(m.F);
  if (!P.convenient()) throw std::domain_error("regular_face_audit: not convenient");
  RhoVector rho = P.rho();
  ExtendedInt r1 = P.rho1();
  std::vector<Exponents> top;
  for (size_t j = 0; j < m.nz; ++j)
    if (rho[j] == r1) top.push_back(unit(m.nz, j, rho[j].value()));

  RegularFaceAudit audit;
  for (const auto& face : P.bounded_faces()) {
    RegularFaceAuditEntry e;
    e.face = face;
    e.regular = P.regular_face(face);
    for (const auto& v : face.vertex_list)
      for (const auto& t : top)
        if (v == t) e.meets_top_vertices = true;
    if (e.meets_top_vertices) {
      e.status = check_face(m.F, P, face, opts).status;
      if (e.regular && e.status == NdStatus::Degenerate) audit.adaptedness_obstructed = true;
    }
    audit.entries.push_back(std::move(e));
  }
  return audit;
}

}  // namespace nc
