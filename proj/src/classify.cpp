#include "nc/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace nc {

namespace {

using CMatrix = std::vector<std::vector<GaussianRational>>;

// Characteristic polynomial of a Hermitian matrix by the trace recursion;
// coefficients come out real.
std::vector<Rational> char_poly(const CMatrix& H) {
  const size_t n = H.size();
  CMatrix M(n, std::vector<GaussianRational>(n));
  std::vector<Rational> coef(n + 1);
  coef[n] = 1;  // leading
  CMatrix A = H;
  // Faddeev-LeVerrier: M_1 = H, c_{n-k} = -tr(H M_k)/k, M_{k+1} = H(M_k + c I).
  CMatrix Mk = H;
  for (size_t k = 1; k <= n; ++k) {
    GaussianRational tr;
    for (size_t i = 0; i < n; ++i) tr += Mk[i][i];
    Rational c = -tr.re / Rational(static_cast<long>(k));
    if (tr.im != 0) throw std::logic_error("char_poly: non-real trace for Hermitian input");
    coef[n - k] = c;
    if (k == n) break;
    CMatrix Madd = Mk;
    for (size_t i = 0; i < n; ++i) Madd[i][i] += GaussianRational(c);
    CMatrix next(n, std::vector<GaussianRational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        GaussianRational s;
        for (size_t t = 0; t < n; ++t) s += H[i][t] * Madd[t][j];
        next[i][j] = s;
      }
    Mk = std::move(next);
  }
  (void)M;
  (void)A;
  return coef;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coef) {
  // Scale to integers and try p/q with p | constant, q | leading.
  Integer lcm = 1;
  for (const auto& c : coef) {
    Integer d = denominator(c);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Integer> ic(coef.size());
  for (size_t i = 0; i < coef.size(); ++i) ic[i] = numerator(coef[i]) * (lcm / denominator(coef[i]));
  size_t lead = ic.size() - 1;
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  std::vector<Rational> roots;
  if (low == ic.size()) return roots;
  if (low > 0) roots.push_back(Rational(0));
  auto divisors = [](Integer v) {
    v = abs(v);
    std::vector<Integer> d;
    for (Integer i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        d.push_back(i);
        d.push_back(v / i);
      }
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  };
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (size_t i = ic.size(); i-- > 0;) acc = acc * x + Rational(ic[i]);
    return acc;
  };
  for (const auto& p : divisors(ic[low]))
    for (const auto& q : divisors(ic[lead]))
      for (int s = -1; s <= 1; s += 2) {
        Rational cand = Rational(p) * s / Rational(q);
        if (eval(cand) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// Kernel basis of a Gaussian-rational matrix by row reduction.
std::vector<std::vector<GaussianRational>> complex_kernel(CMatrix M) {
  if (M.empty()) return {};
  const size_t rows = M.size(), cols = M[0].size();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = rows;
    for (size_t i = r; i < rows; ++i)
      if (!M[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p == rows) continue;
    std::swap(M[r], M[p]);
    GaussianRational inv = GaussianRational(1) / M[r][c];
    for (size_t j = 0; j < cols; ++j) M[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      GaussianRational f = M[i][c];
      for (size_t j = 0; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<GaussianRational>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    std::vector<GaussianRational> v(cols);
    v[c] = GaussianRational(1);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -M[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rational(0);
  Integer n = numerator(q), d = denominator(q);
  Integer rn = sqrt(n), rd = sqrt(d);
  if (rn * rn == n && rd * rd == d) return Rational(rn, rd);
  return std::nullopt;
}

// Exact unitary diagonalization of a Hermitian matrix over the Gaussian
// rationals: all eigenvalues rational and all Gram-Schmidt norms perfect
// squares, otherwise nothing.
struct UnitaryDiag {
  CMatrix U;                    // columns are an orthonormal eigenbasis
  std::vector<Rational> eigen;  // per column
};
std::optional<UnitaryDiag> exact_unitary_diag(const CMatrix& H) {
  const size_t n = H.size();
  auto coef = char_poly(H);
  auto roots = rational_roots(coef);
  std::vector<std::vector<GaussianRational>> columns;
  std::vector<Rational> eigen;
  for (const auto& lambda : roots) {
    CMatrix M = H;
    for (size_t i = 0; i < n; ++i) M[i][i] -= GaussianRational(lambda);
    auto ker = complex_kernel(M);
    // Gram-Schmidt within the eigenspace; eigenspaces of a Hermitian matrix
    // are mutually orthogonal already.
    std::vector<std::vector<GaussianRational>> ortho;
    for (auto v : ker) {
      for (const auto& u : ortho) {
        GaussianRational num, den;
        for (size_t i = 0; i < n; ++i) num += v[i] * u[i].conj();
        for (size_t i = 0; i < n; ++i) den += u[i] * u[i].conj();
        GaussianRational f = num / den;
        for (size_t i = 0; i < n; ++i) v[i] -= f * u[i];
      }
      bool zero = std::all_of(v.begin(), v.end(),
                              [](const GaussianRational& x) { return x.is_zero(); });
      if (!zero) ortho.push_back(std::move(v));
    }
    for (auto& v : ortho) {
      Rational norm2 = 0;
      for (const auto& x : v) norm2 += x.norm2();
      auto nrm = rational_sqrt(norm2);
      if (!nrm) return std::nullopt;
      for (auto& x : v) x = x * GaussianRational(Rational(1) / *nrm);
      columns.push_back(v);
      eigen.push_back(lambda);
    }
  }
  if (columns.size() != n) return std::nullopt;  // irrational eigenvalues remain
  UnitaryDiag out;
  out.U.assign(n, std::vector<GaussianRational>(n));
  for (size_t c = 0; c < n; ++c)
    for (size_t r = 0; r < n; ++r) out.U[r][c] = columns[c][r];
  out.eigen = std::move(eigen);
  return out;
}

}  // namespace

SemiregularReport semiregular_model_check(const MixedPolynomial& f, const SearchOptions& opts) {
  SemiregularReport rep;
  if (f.is_zero()) {
    rep.note = "flat input";
    return rep;
  }
  LatticePolyhedron P = newton_polyhedron(f);
  if (!P.convenient()) {
    rep.note = "not convenient";
    return rep;
  }
  auto diagram = P.diagram_faces();
  if (diagram.size() != 1) {
    rep.note = "diagram has " + std::to_string(diagram.size()) + " maximal faces";
    return rep;
  }
  RhoVector rho = P.rho();
  std::vector<Exponents> expect;
  for (size_t j = 0; j < f.nvars(); ++j) expect.push_back(unit(f.nvars(), j, rho[j].value()));
  std::sort(expect.begin(), expect.end());
  if (diagram[0].vertex_list != expect) {
    rep.note = "single maximal face is not the axis simplex";
    return rep;
  }
  if (check_all(f, opts).status != NdStatus::Nondegenerate) {
    rep.note = "diagram is the axis simplex but nondegeneracy is not certified";
    return rep;
  }
  rep.is_model = true;
  for (size_t j = 0; j < f.nvars(); ++j) rep.multitype.push_back(rho[j].value());
  return rep;
}

bool rotation_invariance_check(const MixedPolynomial& f) { return f.is_diagonal(); }

PsVertexReport ps_vertex_conditions(const MixedPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("ps_vertex_conditions: flat input");
  auto [pure, mixed] = principal_part(f).pure_mixed_split();
  if (!pure.is_zero())
    throw std::invalid_argument("ps_vertex_conditions: principal part carries pure terms");
  PsVertexReport rep;
  rep.ok = true;
  LatticePolyhedron P = newton_polyhedron(f);
  for (const auto& v : P.vertices()) {
    PsVertexDetail d;
    d.vertex = v;
    d.all_even = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x % 2 == 0; });
    if (d.all_even) {
      Exponents half(v.size());
      for (size_t j = 0; j < v.size(); ++j) half[j] = v[j] / 2;
      GaussianRational c = f.coefficient({half, half});
      d.diagonal_positive = (c.im == 0 && c.re > 0);
    }
    d.ok = d.all_even && d.diagonal_positive;
    rep.ok = rep.ok && d.ok;
    rep.details.push_back(std::move(d));
  }
  return rep;
}

Type4Report type4_structure(const MixedPolynomial& f, const SearchOptions& opts) {
  Type4Report rep;
  rep.P = MixedPolynomial(0);
  if (f.is_zero()) {
    rep.note = "flat input";
    return rep;
  }
  LatticePolyhedron P = newton_polyhedron(f);
  RhoVector rho = P.rho();
  const size_t n = f.nvars();
  for (size_t j = 0; j < n; ++j) {
    if (rho[j] == ExtendedInt(4)) {
      rep.four_slots.push_back(j);
    } else if (rho[j] == ExtendedInt(2)) {
      rep.two_slots.push_back(j);
    } else {
      rep.note = "axis intercepts are not all 2 or 4";
      return rep;
    }
  }
  if (rep.four_slots.empty()) {
    rep.note = "top intercept is not 4";
    return rep;
  }
  auto ps = ps_vertex_conditions(f);
  if (!ps.ok) {
    rep.note = "vertex positivity conditions fail";
    return rep;
  }
  auto check_simplex = [&](const LatticePolyhedron& Q, const std::vector<size_t>& four,
                           const std::vector<size_t>& two) {
    auto diagram = Q.diagram_faces();
    if (diagram.size() != 1) return false;
    std::vector<Exponents> expect;
    for (size_t j : four) expect.push_back(unit(n, j, 4));
    for (size_t j : two) expect.push_back(unit(n, j, 2));
    std::sort(expect.begin(), expect.end());
    return diagram[0].vertex_list == expect;
  };
  if (!check_simplex(P, rep.four_slots, rep.two_slots)) {
    rep.note = "diagram is not the degree-4/2 axis simplex";
    return rep;
  }

  MixedPolynomial f2 = f;
  if (!rep.two_slots.empty()) {
    // Quadratic block on the degree-2 slots.
    const size_t q = rep.two_slots.size();
    CMatrix H(q, std::vector<GaussianRational>(q));
    for (size_t a = 0; a < q; ++a)
      for (size_t b = 0; b < q; ++b)
        H[a][b] = f.coefficient({unit(n, rep.two_slots[a]), unit(n, rep.two_slots[b])});
    bool diagonal = true;
    for (size_t a = 0; a < q; ++a)
      for (size_t b = 0; b < q; ++b)
        if (a != b && !H[a][b].is_zero()) diagonal = false;
    if (!diagonal) {
      auto diag = exact_unitary_diag(H);
      if (!diag) {
        rep.note = "quadratic block needs an irrational eigendecomposition";
        return rep;
      }
      std::vector<HoloPoly> subs(n);
      for (size_t j = 0; j < n; ++j) subs[j] = HoloPoly{{unit(n, j), GaussianRational(1)}};
      for (size_t a = 0; a < q; ++a) {
        HoloPoly s;
        for (size_t b = 0; b < q; ++b)
          if (!diag->U[a][b].is_zero()) s.emplace(unit(n, rep.two_slots[b]), diag->U[a][b]);
        subs[rep.two_slots[a]] = std::move(s);
      }
      f2 = f.compose_holomorphic(subs, n);
    }
  }

  // After diagonalization the principal part must split as quartic block
  // plus positive squares; report any cross terms.
  MixedPolynomial f0 = principal_part(f2);
  IndexSet four_mask = 0;
  for (size_t j : rep.four_slots) four_mask |= IndexSet{1} << j;
  std::vector<std::string> cross;
  MixedPolynomial quartic(n);
  for (const auto& [k, c] : f0.terms()) {
    Exponents tot = k.total();
    bool touches_four = false, touches_two = false;
    for (size_t j = 0; j < n; ++j) {
      if (tot[j] == 0) continue;
      (contains(four_mask, j) ? touches_four : touches_two) = true;
    }
    if (touches_four && touches_two) {
      cross.push_back(index_str(tot));
      continue;
    }
    if (touches_four) {
      quartic.add_term(k, c);
      continue;
    }
    // Two-block terms must be exactly positive |z_j|^2.
    bool good = (k.alpha == k.beta) && degree_sum(k.alpha) == 1 && c.im == 0 && c.re > 0;
    if (!good) cross.push_back(index_str(tot) + " (not a positive square)");
  }
  std::sort(cross.begin(), cross.end());
  cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
  if (!cross.empty()) {
    rep.note = "principal part has terms outside the normal form:";
    for (const auto& s : cross) rep.note += " " + s;
    return rep;
  }

  rep.present = true;
  rep.m = static_cast<int>(rep.four_slots.size());
  rep.P = quartic.restrict_to(four_mask);
  rep.note = "normal form reached";
  (void)opts;
  return rep;
}

ClassReport classify_surface(const ModelHypersurface& m, const SearchOptions& opts) {
  ClassReport rep;
  rep.semiregular = semiregular_model_check(m.F, opts);
  rep.rotation_invariant = rotation_invariance_check(m.F);
  if (!m.F.is_zero()) {
    auto [pure, mixed] = principal_part(m.F).pure_mixed_split();
    if (pure.is_zero()) {
      rep.ps_applicable = true;
      rep.ps = ps_vertex_conditions(m.F);
    }
  }
  rep.type4 = type4_structure(m.F, opts);
  return rep;
}

}  // namespace nc
