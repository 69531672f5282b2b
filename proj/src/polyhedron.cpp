#include "nc/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "nc/linalg.hpp"

namespace nc {

std::string FaceHandle::str() const {
  std::string s = "face{dim=" + std::to_string(dim) + (bounded ? ",bounded" : ",unbounded") + ",vertices=";
  for (size_t i = 0; i < vertex_list.size(); ++i) {
    if (i) s += " ";
    s += index_str(vertex_list[i]);
  }
  s += ",normal=" + index_str(normal) + ",level=" + std::to_string(level) + "}";
  return s;
}

namespace {

// Walks k-subsets of {0..total-1}.
struct Combinations {
  size_t total, k;
  std::vector<size_t> idx;
  bool done = false;

  Combinations(size_t total_, size_t k_) : total(total_), k(k_) {
    if (k > total) {
      done = true;
      return;
    }
    idx.resize(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
  }
  void next() {
    if (k == 0) {
      done = true;
      return;
    }
    size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < total) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return;
      }
    }
    done = true;
  }
};

double log_binomial(size_t n, size_t k) {
  double s = 0;
  for (size_t i = 0; i < k; ++i) s += std::log(double(n - i)) - std::log(double(i + 1));
  return s;
}

// Removes points contained in q + R^n_{>=0} for another support point q;
// they are never vertices and do not affect the hull.
std::vector<Exponents> prune_dominated(std::vector<Exponents> pts) {
  std::vector<Exponents> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < pts.size() && !dominated; ++j) {
      if (i == j) continue;
      bool le = true, strict = false;
      for (size_t c = 0; c < pts[i].size(); ++c) {
        if (pts[j][c] > pts[i][c]) le = false;
        if (pts[j][c] < pts[i][c]) strict = true;
      }
      if (le && (strict || j < i)) dominated = true;  // j < i breaks duplicate ties
    }
    if (!dominated) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

LatticePolyhedron LatticePolyhedron::build(const std::set<Exponents>& support, size_t n) {
  LatticePolyhedron P;
  P.n_ = n;
  for (const auto& s : support) {
    if (s.size() != n) throw std::invalid_argument("build: support point dimension mismatch");
    if (!all_nonnegative(s)) throw std::invalid_argument("build: negative exponent in support");
  }
  P.support_.assign(support.begin(), support.end());
  std::sort(P.support_.begin(), P.support_.end());
  if (P.support_.empty()) return P;
  P.flat_ = false;

  std::vector<Exponents> gen = prune_dominated(P.support_);
  std::sort(gen.begin(), gen.end());
  const size_t m = gen.size();
  if (log_binomial(m + n, n) > std::log(5e6))
    throw std::invalid_argument("build: support too large for exact facet enumeration");

  // Facets: supporting hyperplanes spanned by n affinely independent
  // generators (points, or rays of the recession orthant).
  std::set<FacetData> facets;
  for (Combinations comb(m + n, n); !comb.done; comb.next()) {
    std::vector<size_t> pts, rays;
    for (size_t id : comb.idx) (id < m ? pts : rays).push_back(id);
    if (pts.empty()) continue;
    std::vector<Exponents> rows;
    for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(gen[pts[i]], gen[pts[0]]));
    for (size_t r : rays) rows.push_back(unit(n, r - m));
    RatMatrix M = rows_from_exponents(rows, n);
    if (static_cast<size_t>(exact_rank(M)) != n - 1) continue;
    auto ker = exact_kernel(M);
    if (ker.size() != 1) continue;
    Exponents a = integerize_primitive(ker[0]);
    if (is_zero(a)) continue;

    auto try_orientation = [&](const Exponents& cand) {
      if (!all_nonnegative(cand)) return false;
      std::int64_t l = dot(cand, gen[pts[0]]);
      for (const auto& p : gen)
        if (dot(cand, p) < l) return false;
      facets.insert({cand, l});
      return true;
    };
    if (!try_orientation(a)) {
      Exponents neg(a.size());
      for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
      try_orientation(neg);
    }
  }
  P.facets_.assign(facets.begin(), facets.end());
  if (P.facets_.empty()) throw std::logic_error("build: no facets found for nonempty support");

  // Vertices: support points whose active facet normals span R^n.
  for (const auto& p : P.support_) {
    std::vector<Exponents> act;
    for (const auto& f : P.facets_)
      if (dot(f.normal, p) == f.level) act.push_back(f.normal);
    if (act.size() < n) continue;
    if (static_cast<size_t>(exact_rank(rows_from_exponents(act, n))) == n) P.vertices_.push_back(p);
  }
  std::sort(P.vertices_.begin(), P.vertices_.end());
  if (P.vertices_.empty()) throw std::logic_error("build: pointed polyhedron without vertices");
  if (P.vertices_.size() > 64) throw std::invalid_argument("build: more than 64 vertices");

  P.enumerate_faces();
  return P;
}

FaceHandle LatticePolyhedron::make_face(std::uint64_t vmask, IndexSet rmask) const {
  FaceHandle h;
  h.ambient = n_;
  h.index_set = full_set(n_);
  h.ray_mask = rmask;
  for (size_t i = 0; i < vertices_.size(); ++i)
    if ((vmask >> i) & 1u) h.vertex_list.push_back(vertices_[i]);
  h.bounded = (rmask == 0);

  std::vector<Exponents> rows;
  for (size_t i = 1; i < h.vertex_list.size(); ++i)
    rows.push_back(sub(h.vertex_list[i], h.vertex_list[0]));
  for (size_t j = 0; j < n_; ++j)
    if (contains(rmask, j)) rows.push_back(unit(n_, j));
  h.dim = rows.empty() ? 0 : static_cast<int>(exact_rank(rows_from_exponents(rows, n_)));

  // Determining normal: lex-least primitive positive combination of the
  // active facet normals that cuts out exactly this face.
  std::vector<const FacetData*> act;
  for (const auto& f : facets_) {
    bool ok = true;
    for (const auto& v : h.vertex_list)
      if (dot(f.normal, v) != f.level) {
        ok = false;
        break;
      }
    for (size_t j = 0; j < n_ && ok; ++j)
      if (contains(rmask, j) && f.normal[j] != 0) ok = false;
    if (ok) act.push_back(&f);
  }
  if (act.empty()) throw std::logic_error("face without active facets");

  const size_t k = act.size();
  const std::int64_t W = (k <= 5) ? 4 : (k <= 8 ? 2 : 1);
  std::vector<std::int64_t> lambda(k, 1);
  std::optional<Exponents> best;
  std::int64_t best_level = 0;
  for (;;) {
    Exponents a(n_, 0);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < n_; ++j) a[j] += lambda[i] * act[i]->normal[j];
    a = primitive(std::move(a));
    std::int64_t l = dot(a, h.vertex_list[0]);
    // Exact determination test over the vertex set and rays.
    std::int64_t mn = l;
    for (const auto& v : vertices_) mn = std::min(mn, dot(a, v));
    bool det = (mn == l);
    if (det) {
      std::uint64_t am = 0;
      for (size_t i = 0; i < vertices_.size(); ++i)
        if (dot(a, vertices_[i]) == mn) am |= std::uint64_t{1} << i;
      IndexSet rm = 0;
      for (size_t j = 0; j < n_; ++j)
        if (a[j] == 0) rm |= IndexSet{1} << j;
      det = (am == vmask) && (rm == rmask);
    }
    if (det && (!best || a < *best)) {
      best = a;
      best_level = l;
    }
    size_t pos = k;
    bool moved = false;
    while (pos-- > 0) {
      if (lambda[pos] < W) {
        ++lambda[pos];
        std::fill(lambda.begin() + static_cast<long>(pos) + 1, lambda.end(), 1);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  if (!best) throw std::logic_error("no determining normal found for face");
  h.normal = *best;
  h.level = best_level;
  return h;
}

void LatticePolyhedron::enumerate_faces() {
  std::set<std::pair<std::uint64_t, IndexSet>> masks;
  std::vector<std::pair<std::uint64_t, IndexSet>> work;
  for (const auto& f : facets_) {
    std::uint64_t vm = 0;
    for (size_t i = 0; i < vertices_.size(); ++i)
      if (dot(f.normal, vertices_[i]) == f.level) vm |= std::uint64_t{1} << i;
    IndexSet rm = 0;
    for (size_t j = 0; j < n_; ++j)
      if (f.normal[j] == 0) rm |= IndexSet{1} << j;
    if (vm && masks.insert({vm, rm}).second) work.push_back({vm, rm});
  }
  // The face lattice is closed under intersection; faces of a pointed
  // polyhedron always contain a vertex.
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::uint64_t vm = work[i].first & work[j].first;
      IndexSet rm = work[i].second & work[j].second;
      if (vm && masks.insert({vm, rm}).second) work.push_back({vm, rm});
    }
  }
  for (const auto& [vm, rm] : masks) faces_.push_back(make_face(vm, rm));
  std::sort(faces_.begin(), faces_.end(), [](const FaceHandle& a, const FaceHandle& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertex_list != b.vertex_list) return a.vertex_list < b.vertex_list;
    return a.ray_mask < b.ray_mask;
  });
}

const std::vector<FaceHandle>& LatticePolyhedron::faces() const {
  if (flat_) throw std::domain_error("faces: flat polyhedron");
  return faces_;
}

std::vector<FaceHandle> LatticePolyhedron::bounded_faces() const {
  std::vector<FaceHandle> out;
  for (const auto& f : faces())
    if (f.bounded) out.push_back(f);
  return out;
}

std::vector<FaceHandle> LatticePolyhedron::diagram_faces() const {
  auto bf = bounded_faces();
  std::vector<FaceHandle> out;
  for (const auto& f : bf) {
    bool maximal = true;
    for (const auto& g : bf) {
      if (f.same_face(g) || g.dim <= f.dim) continue;
      bool sub = std::includes(g.vertex_list.begin(), g.vertex_list.end(),
                               f.vertex_list.begin(), f.vertex_list.end());
      if (sub) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool LatticePolyhedron::on_diagram(const Exponents& xi) const {
  if (flat_) return false;
  Exponents sum(n_, 0);
  bool any = false;
  for (const auto& f : facets_) {
    std::int64_t v = dot(f.normal, xi);
    if (v < f.level) return false;  // outside the polyhedron
    if (v == f.level) {
      any = true;
      sum = add(sum, f.normal);
    }
  }
  return any && all_positive(sum);
}

RhoVector LatticePolyhedron::rho() const {
  RhoVector r(n_, ExtendedInt::infinity());
  for (const auto& s : support_) {
    for (size_t j = 0; j < n_; ++j) {
      if (s[j] == 0) continue;
      bool axis = true;
      for (size_t k = 0; k < n_; ++k)
        if (k != j && s[k] != 0) axis = false;
      if (axis) r[j] = min(r[j], ExtendedInt(s[j]));
    }
  }
  // A support point at the origin means the polyhedron is the whole orthant.
  for (const auto& s : support_)
    if (is_zero(s))
      for (auto& v : r) v = min(v, ExtendedInt(0));
  return r;
}

ExtendedInt LatticePolyhedron::rho1() const {
  if (flat_) return ExtendedInt::infinity();
  auto r = rho();
  ExtendedInt m(0);
  for (const auto& v : r) m = max(m, v);
  return m;
}

bool LatticePolyhedron::convenient() const {
  if (flat_) return false;
  for (const auto& v : rho())
    if (v.is_inf()) return false;
  return true;
}

std::vector<size_t> LatticePolyhedron::rho_order() const {
  auto r = rho();
  std::vector<size_t> order(n_);
  for (size_t j = 0; j < n_; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return r[b] < r[a]; });
  return order;
}

std::pair<std::int64_t, FaceHandle> LatticePolyhedron::support_min(const Exponents& a) const {
  if (flat_) throw std::domain_error("support_min: flat polyhedron");
  if (a.size() != n_) throw std::invalid_argument("support_min: dimension mismatch");
  if (!all_nonnegative(a) || is_zero(a))
    throw std::invalid_argument("support_min: direction must be nonzero and nonnegative");
  std::int64_t mn = dot(a, vertices_[0]);
  for (const auto& v : vertices_) mn = std::min(mn, dot(a, v));
  std::uint64_t vm = 0;
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (dot(a, vertices_[i]) == mn) vm |= std::uint64_t{1} << i;
  IndexSet rm = 0;
  for (size_t j = 0; j < n_; ++j)
    if (a[j] == 0) rm |= IndexSet{1} << j;
  for (const auto& f : faces_) {
    std::uint64_t fvm = 0;
    size_t li = 0;
    for (size_t i = 0; i < vertices_.size() && li < f.vertex_list.size(); ++i) {
      if (vertices_[i] == f.vertex_list[li]) {
        fvm |= std::uint64_t{1} << i;
        ++li;
      }
    }
    if (fvm == vm && f.ray_mask == rm) return {mn, f};
  }
  throw std::logic_error("support_min: argmin face not in lattice");
}

LatticePolyhedron::DirectionalData LatticePolyhedron::support_min_dir(const Direction& a_hat) const {
  if (a_hat.size() != n_) throw std::invalid_argument("support_min_dir: dimension mismatch");
  IndexSet I = 0;
  for (size_t j = 0; j < n_; ++j)
    if (a_hat[j].is_finite()) I |= IndexSet{1} << j;
  if (I == 0) throw std::invalid_argument("support_min_dir: all-infinite direction");

  auto idx = members(I, n_);
  std::set<Exponents> restricted;
  for (const auto& s : support_) {
    bool in_plane = true;
    for (size_t j = 0; j < n_ && in_plane; ++j)
      if (!contains(I, j) && s[j] != 0) in_plane = false;
    if (!in_plane) continue;
    Exponents r(idx.size());
    for (size_t t = 0; t < idx.size(); ++t) r[t] = s[idx[t]];
    restricted.insert(std::move(r));
  }
  DirectionalData out;
  out.index_set = I;
  if (restricted.empty()) {
    out.level = ExtendedInt::infinity();
    return out;
  }
  LatticePolyhedron sub = build(restricted, idx.size());
  Exponents aI(idx.size());
  for (size_t t = 0; t < idx.size(); ++t) {
    aI[t] = a_hat[idx[t]].value();
    if (aI[t] <= 0) throw std::invalid_argument("support_min_dir: direction entries must be >= 1");
  }
  auto [l, faceI] = sub.support_min(aI);
  out.level = ExtendedInt(l);

  FaceHandle h;
  h.ambient = n_;
  h.index_set = I;
  h.level = faceI.level;
  h.dim = faceI.dim;
  h.bounded = faceI.bounded;
  h.normal = Exponents(n_, 0);
  for (size_t t = 0; t < idx.size(); ++t) h.normal[idx[t]] = faceI.normal[t];
  h.ray_mask = 0;
  for (size_t t = 0; t < idx.size(); ++t)
    if (contains(faceI.ray_mask, t)) h.ray_mask |= IndexSet{1} << idx[t];
  for (const auto& v : faceI.vertex_list) {
    Exponents w(n_, 0);
    for (size_t t = 0; t < idx.size(); ++t) w[idx[t]] = v[t];
    h.vertex_list.push_back(std::move(w));
  }
  std::sort(h.vertex_list.begin(), h.vertex_list.end());
  out.face = std::move(h);
  return out;
}

LatticePolyhedron::DistanceData LatticePolyhedron::newton_distance(const Direction& a_hat) const {
  DirectionalData dd = support_min_dir(a_hat);
  DistanceData out;
  out.rho_dir.assign(n_, ExtendedRat(Rational(0)));
  std::int64_t amin = 0;
  for (size_t j = 0; j < n_; ++j) {
    if (!contains(dd.index_set, j)) continue;
    std::int64_t aj = a_hat[j].value();
    if (amin == 0 || aj < amin) amin = aj;
    out.rho_dir[j] = dd.level.is_inf() ? ExtendedRat::infinity()
                                       : ExtendedRat(Rational(dd.level.value(), aj));
  }
  out.distance = dd.level.is_inf() ? ExtendedRat::infinity()
                                   : ExtendedRat(Rational(dd.level.value(), amin));
  ExtendedRat mx(Rational(0));
  for (const auto& r : out.rho_dir) mx = max(mx, r);
  if (!(mx == out.distance)) throw std::logic_error("newton_distance: max identity violated");
  return out;
}

bool LatticePolyhedron::determines(const FaceHandle& face, const Exponents& a) const {
  if (face.index_set == full_set(n_) && a.size() == n_) {
    auto [l, arg] = support_min(a);
    (void)l;
    return arg.same_face(face);
  }
  // Restricted face: compare within its coordinate plane.
  Direction dir(n_, ExtendedInt::infinity());
  auto idx = members(face.index_set, n_);
  if (a.size() == n_) {
    for (size_t j : idx) dir[j] = ExtendedInt(a[j]);
  } else if (a.size() == idx.size()) {
    for (size_t t = 0; t < idx.size(); ++t) dir[idx[t]] = ExtendedInt(a[t]);
  } else {
    throw std::invalid_argument("determines: direction dimension mismatch");
  }
  auto dd = support_min_dir(dir);
  return dd.face && dd.face->same_face(face);
}

bool LatticePolyhedron::regular_face(const FaceHandle& face) const {
  if (!face.bounded) throw std::invalid_argument("regular_face: face is unbounded");
  auto has_min_one = [&](const Exponents& a) {
    std::int64_t mn = 0;
    auto idx = members(face.index_set, n_);
    for (size_t j : idx) mn = (mn == 0) ? a[j] : std::min(mn, a[j]);
    return mn == 1;
  };
  if (has_min_one(face.normal)) return true;
  if (face.index_set != full_set(n_)) return false;

  // Facets have a unique determining vector; lower faces get a bounded
  // enumeration over combinations of active facet normals.
  if (face.dim == static_cast<int>(n_) - 1) return false;
  std::vector<const FacetData*> act;
  for (const auto& f : facets_) {
    bool ok = true;
    for (const auto& v : face.vertex_list)
      if (dot(f.normal, v) != f.level) ok = false;
    if (ok) act.push_back(&f);
  }
  const size_t k = act.size();
  const std::int64_t W = (k <= 5) ? 6 : (k <= 8 ? 3 : 1);
  std::vector<std::int64_t> lambda(k, 1);
  for (;;) {
    Exponents a(n_, 0);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < n_; ++j) a[j] += lambda[i] * act[i]->normal[j];
    a = primitive(std::move(a));
    if (has_min_one(a) && all_positive(a) && determines(face, a)) return true;
    size_t pos = k;
    bool moved = false;
    while (pos-- > 0) {
      if (lambda[pos] < W) {
        ++lambda[pos];
        std::fill(lambda.begin() + static_cast<long>(pos) + 1, lambda.end(), 1);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return false;
}

FaceHandle LatticePolyhedron::apex_vertex() const {
  if (!convenient()) throw std::domain_error("apex_vertex: polyhedron is not convenient");
  auto r = rho();
  size_t jstar = 0;
  for (size_t j = 1; j < n_; ++j)
    if (r[jstar] < r[j]) jstar = j;
  Exponents v = unit(n_, jstar, r[jstar].value());
  for (const auto& f : faces_)
    if (f.dim == 0 && f.vertex_list.size() == 1 && f.vertex_list[0] == v && f.bounded) return f;
  throw std::logic_error("apex_vertex: axis vertex missing from face lattice");
}

std::optional<FaceHandle> LatticePolyhedron::find_face(
    const std::vector<Exponents>& vertex_list) const {
  std::vector<Exponents> sorted = vertex_list;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& f : faces_)
    if (f.bounded && f.vertex_list == sorted) return f;
  for (const auto& f : faces_)
    if (f.vertex_list == sorted) return f;
  return std::nullopt;
}

LatticePolyhedron newton_polyhedron(const MixedPolynomial& f) {
  return LatticePolyhedron::build(f.support(), f.nvars());
}

MixedPolynomial face_part_unchecked(const MixedPolynomial& f, const FaceHandle& face) {
  MixedPolynomial out(f.nvars());
  for (const auto& [k, c] : f.terms())
    if (face.contains(k.total())) out.add_term(k, c);
  return out;
}

MixedPolynomial face_part(const MixedPolynomial& f, const FaceHandle& face) {
  if (!face.bounded) throw std::invalid_argument("face_part: face is unbounded");
  if (face.index_set == full_set(f.nvars())) {
    LatticePolyhedron P = newton_polyhedron(f);
    auto found = P.find_face(face.vertex_list);
    if (!found || !found->bounded)
      throw std::invalid_argument("face_part: not a bounded face of this polyhedron");
  }
  return face_part_unchecked(f, face);
}

MixedPolynomial principal_part(const MixedPolynomial& f) {
  if (f.is_zero()) return f;
  LatticePolyhedron P = newton_polyhedron(f);
  MixedPolynomial out(f.nvars());
  for (const auto& [k, c] : f.terms())
    if (P.on_diagram(k.total())) out.add_term(k, c);
  return out;
}

}  // namespace nc
