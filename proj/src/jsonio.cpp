#include "nc/jsonio.hpp"

namespace nc {

std::string tool_version() { return "0.1.0"; }

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["input_digest"] = m.input_digest;
  j["config"] = m.config;
  j["version"] = m.version;
  j["permutation"] = m.permutation;
  return j;
}

Json wrap_output(const RunManifest& m, Json result) {
  Json j;
  j["manifest"] = to_json(m);
  j["result"] = std::move(result);
  return j;
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const GaussianRational& c) {
  Json j;
  j["re"] = c.re.str();
  j["im"] = c.im.str();
  return j;
}

Json to_json(const ExtendedInt& v) {
  if (v.is_inf()) return "inf";
  return v.value();
}

Json to_json(const ExtendedRat& v) {
  if (v.is_inf()) return "inf";
  return v.value().str();
}

Json to_json(const Exponents& e) {
  Json j = Json::array();
  for (auto v : e) j.push_back(v);
  return j;
}

Json to_json(const MixedPolynomial& f) {
  Json j;
  j["nvars"] = f.nvars();
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    Json t;
    t["alpha"] = to_json(k.alpha);
    t["beta"] = to_json(k.beta);
    t["coef"] = to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const FaceHandle& f) {
  Json j;
  j["dim"] = f.dim;
  j["bounded"] = f.bounded;
  Json verts = Json::array();
  for (const auto& v : f.vertex_list) verts.push_back(to_json(v));
  j["vertices"] = std::move(verts);
  j["normal"] = to_json(f.normal);
  j["level"] = f.level;
  Json idx = Json::array();
  for (size_t s : members(f.index_set, f.ambient)) idx.push_back(s + 1);
  j["variables"] = std::move(idx);
  return j;
}

Json to_json(const LatticePolyhedron& p) {
  Json j;
  j["flat"] = p.flat();
  j["dim"] = p.ambient_dim();
  if (p.flat()) return j;
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  j["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json e;
    e["normal"] = to_json(f.normal);
    e["level"] = f.level;
    facets.push_back(std::move(e));
  }
  j["facets"] = std::move(facets);
  Json faces = Json::array();
  for (const auto& f : p.faces()) faces.push_back(to_json(f));
  j["faces"] = std::move(faces);
  Json rho = Json::array();
  for (const auto& v : p.rho()) rho.push_back(to_json(v));
  j["rho"] = std::move(rho);
  j["convenient"] = p.convenient();
  return j;
}

Json to_json(const JetCurve& g) {
  Json j;
  j["literal"] = g.str();
  return j;
}

Json to_json(const MonomialCurve& g) { return to_json(g.to_jet()); }

Json to_json(const NondegeneracyVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  if (v.witness) {
    Json w;
    w["face"] = to_json(v.witness->face);
    w["curve"] = to_json(v.witness->curve);
    j["witness"] = std::move(w);
  }
  if (!v.face_details.empty()) {
    Json d = Json::array();
    for (const auto& fv : v.face_details) {
      Json e;
      e["face"] = to_json(fv.face);
      e["status"] = to_string(fv.status);
      if (!fv.certificate.empty()) e["certificate"] = fv.certificate;
      if (fv.witness) e["witness"] = to_json(*fv.witness);
      d.push_back(std::move(e));
    }
    j["faces"] = std::move(d);
  }
  Json stats;
  stats["faces_checked"] = v.stats.faces_checked;
  stats["directions_tried"] = v.stats.directions_tried;
  stats["grid_points_bound"] = v.stats.points_tried;
  j["diagnostics"] = std::move(stats);
  return j;
}

Json to_json(const ContactReport& r) {
  Json j;
  j["ord_composed"] = to_json(r.ord_composed);
  j["ord_curve"] = r.ord_curve;
  j["contact_order"] = to_json(r.contact_order);
  j["support_min"] = to_json(r.l_lower_bound);
  j["newton_distance"] = to_json(r.distance);
  j["tight"] = r.tight;
  j["leading_part"] = r.leading_part.str({"t"});
  if (r.face) j["face"] = to_json(*r.face);
  if (r.truncation) j["truncation"] = to_json(*r.truncation);
  Json prof = Json::array();
  for (const auto& v : r.profile.a_hat) prof.push_back(to_json(v));
  j["profile"] = std::move(prof);
  return j;
}

Json to_json(const TypeReport& r) {
  Json j;
  j["rho1"] = to_json(r.rho1);
  Json rho = Json::array();
  for (const auto& v : r.rho_full) rho.push_back(to_json(v));
  j["rho"] = std::move(rho);
  j["verdict"] = to_json(r.verdict);
  j["delta1"] = r.delta1 ? to_json(*r.delta1) : Json(nullptr);
  j["delta1_reg_lower_bound"] = to_json(r.delta1_reg_lb);
  if (r.lb_curve) j["lower_bound_curve"] = to_json(*r.lb_curve);
  j["infinite_type_certified"] = r.infinite_type_certified;
  if (r.infinite_curve) j["infinite_curve"] = to_json(*r.infinite_curve);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const OracleResult& r) {
  Json j;
  j["best"] = to_json(r.best);
  if (r.argmax) j["argmax_curve"] = to_json(*r.argmax);
  j["infinite_flag"] = r.infinite_flag;
  if (r.infinite_witness) j["infinite_witness"] = to_json(*r.infinite_witness);
  j["curves_tried"] = r.curves_tried;
  j["truncated"] = r.truncated;
  return j;
}

Json to_json(const ClassReport& r) {
  Json j;
  Json s;
  s["is_model"] = r.semiregular.is_model;
  if (r.semiregular.is_model) {
    Json m = Json::array();
    for (auto v : r.semiregular.multitype) m.push_back(v);
    s["multitype"] = std::move(m);
  }
  if (!r.semiregular.note.empty()) s["note"] = r.semiregular.note;
  j["semiregular_model"] = std::move(s);
  j["rotation_invariant"] = r.rotation_invariant;
  Json ps;
  ps["applicable"] = r.ps_applicable;
  if (r.ps_applicable) {
    ps["ok"] = r.ps.ok;
    Json d = Json::array();
    for (const auto& det : r.ps.details) {
      Json e;
      e["vertex"] = to_json(det.vertex);
      e["all_even"] = det.all_even;
      e["diagonal_positive"] = det.diagonal_positive;
      e["ok"] = det.ok;
      d.push_back(std::move(e));
    }
    ps["vertices"] = std::move(d);
  }
  j["ps_vertex_conditions"] = std::move(ps);
  Json t4;
  t4["present"] = r.type4.present;
  if (r.type4.present) {
    t4["m"] = r.type4.m;
    t4["quartic_part"] = r.type4.P.str();
  }
  t4["note"] = r.type4.note;
  j["type4_form"] = std::move(t4);
  return j;
}

Json to_json(const KouchnirenkoReport& r) {
  Json j;
  j["any_degenerate"] = r.any_degenerate;
  Json faces = Json::array();
  for (const auto& kf : r.faces) {
    Json e;
    e["face"] = to_json(kf.face);
    e["nondegenerate"] = !kf.zero_found;
    e["certified"] = kf.certified_nonvanishing;
    if (kf.zero_found) {
      Json z = Json::array();
      for (const auto& c : kf.zero) z.push_back(to_json(c));
      e["gradient_zero"] = std::move(z);
    }
    faces.push_back(std::move(e));
  }
  j["faces"] = std::move(faces);
  return j;
}

Json to_json(const RegularFaceAudit& r) {
  Json j;
  j["adaptedness_obstructed"] = r.adaptedness_obstructed;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["face"] = to_json(e.face);
    x["regular"] = e.regular;
    x["meets_top_vertices"] = e.meets_top_vertices;
    if (e.meets_top_vertices) x["status"] = to_string(e.status);
    entries.push_back(std::move(x));
  }
  j["faces"] = std::move(entries);
  return j;
}

}  // namespace nc
