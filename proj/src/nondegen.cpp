#include "nc/nondegen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace nc {

namespace {

// ---------------------------------------------------------------------------
// Coefficient grids: exact unit-modulus phases (Pythagorean points on the
// circle) scaled by small rational moduli.

std::vector<GaussianRational> phases(int grid) {
  std::vector<GaussianRational> p = {
      GaussianRational(1), GaussianRational(-1), GaussianRational::unit_im(),
      GaussianRational(Rational(0), Rational(-1))};
  if (grid >= 1) {
    p.push_back({Rational(3, 5), Rational(4, 5)});
    p.push_back({Rational(3, 5), Rational(-4, 5)});
    p.push_back({Rational(-3, 5), Rational(4, 5)});
    p.push_back({Rational(-3, 5), Rational(-4, 5)});
  }
  if (grid >= 2) {
    p.push_back({Rational(4, 5), Rational(3, 5)});
    p.push_back({Rational(4, 5), Rational(-3, 5)});
    p.push_back({Rational(-4, 5), Rational(3, 5)});
    p.push_back({Rational(-4, 5), Rational(-3, 5)});
    p.push_back({Rational(5, 13), Rational(12, 13)});
    p.push_back({Rational(5, 13), Rational(-12, 13)});
  }
  return p;
}

std::vector<Rational> moduli(int grid) {
  if (grid <= 0) return {Rational(1)};
  if (grid == 1) return {Rational(1), Rational(1, 2), Rational(2)};
  return {Rational(1), Rational(1, 2), Rational(2), Rational(1, 3), Rational(3)};
}

}  // namespace

std::vector<GaussianRational> coefficient_palette(int grid) {
  std::vector<GaussianRational> out;
  for (const auto& m : moduli(grid))
    for (const auto& ph : phases(grid)) out.push_back(GaussianRational(m) * ph);
  return out;
}

MixedPolynomial holomorphic_derivative(const MixedPolynomial& f, size_t j) {
  MixedPolynomial out(f.nvars());
  for (const auto& [k, c] : f.terms()) {
    if (!is_zero(k.beta)) throw std::invalid_argument("holomorphic_derivative: mixed input");
    if (k.alpha[j] == 0) continue;
    Exponents a = k.alpha;
    GaussianRational nc_ = c * GaussianRational(Rational(a[j]));
    a[j] -= 1;
    out.add_term({a, k.beta}, nc_);
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Exact LDL* of the Hermitian coefficient matrix: F = sum d_k |Q_k|^2 when
// positive semidefinite.

struct SquareDecomposition {
  std::vector<std::pair<Rational, HoloPoly>> squares;  // (d_k > 0, Q_k)
};

std::optional<SquareDecomposition> gram_psd_squares(const MixedPolynomial& fk) {
  std::vector<Exponents> basis;
  for (const auto& [k, c] : fk.terms()) {
    basis.push_back(k.alpha);
    basis.push_back(k.beta);
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  const size_t m = basis.size();
  auto index_of = [&](const Exponents& e) {
    return static_cast<size_t>(std::lower_bound(basis.begin(), basis.end(), e) - basis.begin());
  };
  std::vector<std::vector<GaussianRational>> H(m, std::vector<GaussianRational>(m));
  for (const auto& [k, c] : fk.terms()) H[index_of(k.alpha)][index_of(k.beta)] = c;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (!(H[i][j] == H[j][i].conj())) return std::nullopt;  // not Hermitian

  SquareDecomposition out;
  std::vector<bool> used(m, false);
  for (;;) {
    size_t pivot = m;
    for (size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      if (H[i][i].im != 0) return std::nullopt;
      if (H[i][i].re < 0) return std::nullopt;
      if (H[i][i].re > 0 && pivot == m) pivot = i;
    }
    if (pivot == m) {
      // No positive pivots left: PSD iff the remainder vanishes.
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
          if (!used[i] && !used[j] && !H[i][j].is_zero()) return std::nullopt;
      return out;
    }
    Rational d = H[pivot][pivot].re;
    std::vector<GaussianRational> u(m);
    for (size_t i = 0; i < m; ++i)
      if (!used[i]) u[i] = H[i][pivot] / GaussianRational(d);
    HoloPoly Q;
    for (size_t i = 0; i < m; ++i)
      if (!u[i].is_zero()) Q.emplace(basis[i], u[i]);
    out.squares.push_back({d, std::move(Q)});
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        if (!used[i] && !used[j]) H[i][j] -= GaussianRational(d) * u[i] * u[j].conj();
    used[pivot] = true;
  }
}

size_t holo_effective_count(const HoloPoly& q, size_t n) {
  IndexSet I = 0;
  for (const auto& [e, c] : q)
    for (size_t j = 0; j < n; ++j)
      if (e[j]) I |= IndexSet{1} << j;
  return popcount(I);
}

// ---------------------------------------------------------------------------
// Direction enumeration: determining vectors for a bounded face of the
// restricted polyhedron, deduplicated by the term partition they induce.

std::vector<const FacetData*> active_facets(const LatticePolyhedron& P, const FaceHandle& face) {
  std::vector<const FacetData*> act;
  for (const auto& f : P.facets()) {
    bool ok = true;
    for (const auto& v : face.vertex_list)
      if (dot(f.normal, v) != f.level) ok = false;
    for (size_t j = 0; j < P.ambient_dim() && ok; ++j)
      if (contains(face.ray_mask, j) && f.normal[j] != 0) ok = false;
    if (ok) act.push_back(&f);
  }
  return act;
}

std::vector<std::vector<size_t>> term_partition(const std::vector<Exponents>& alphas,
                                                const Exponents& a) {
  std::map<std::int64_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < alphas.size(); ++i) groups[dot(a, alphas[i])].push_back(i);
  std::vector<std::vector<size_t>> sig;
  for (auto& [v, g] : groups) sig.push_back(std::move(g));
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<Exponents> collect_directions(const LatticePolyhedron& P, const FaceHandle& face,
                                          const MixedPolynomial& fk, const SearchOptions& opts) {
  const size_t n = P.ambient_dim();
  std::set<Exponents> cands;
  auto admit = [&](Exponents a) {
    if (!all_positive(a)) return;
    a = primitive(std::move(a));
    cands.insert(std::move(a));
  };
  admit(face.normal);

  auto act = active_facets(P, face);
  const size_t k = act.size();
  const std::int64_t W = (k <= 4) ? 5 : (k <= 7 ? 3 : 1);
  std::vector<std::int64_t> lambda(k, 1);
  for (;;) {
    Exponents a(n, 0);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < n; ++j) a[j] += lambda[i] * act[i]->normal[j];
    admit(std::move(a));
    bool moved = false;
    for (size_t pos = k; pos-- > 0;) {
      if (lambda[pos] < W) {
        ++lambda[pos];
        std::fill(lambda.begin() + static_cast<long>(pos) + 1, lambda.end(), 1);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }

  // Small dimensions admit a full sweep below the exponent bound.
  double total = std::pow(static_cast<double>(opts.max_exponent), static_cast<double>(n));
  if (total <= 50000.0) {
    Exponents a(n, 1);
    for (;;) {
      admit(a);
      size_t pos = n;
      bool moved = false;
      while (pos-- > 0) {
        if (a[pos] < opts.max_exponent) {
          ++a[pos];
          std::fill(a.begin() + static_cast<long>(pos) + 1, a.end(), 1);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
  }

  std::vector<Exponents> alphas;
  for (const auto& [key, c] : fk.terms()) alphas.push_back(key.alpha);

  std::vector<Exponents> out;
  std::set<std::vector<std::vector<size_t>>> seen;
  for (const auto& a : cands) {
    bool within = true;
    for (auto v : a)
      if (v > opts.max_exponent) within = false;
    if (!within && !(a == face.normal)) continue;
    if (!P.determines(face, a)) continue;
    if (seen.insert(term_partition(alphas, a)).second) out.push_back(a);
    if (out.size() >= 64) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Witness machinery.

struct RestrictedWitness {
  std::vector<GaussianRational> coef;  // over the face's effective variables
  Exponents exponent;
};

bool kills_face_part(const MixedPolynomial& fk, const std::vector<GaussianRational>& c,
                     const Exponents& a) {
  MonomialCurve curve;
  curve.ambient = fk.nvars();
  curve.index_set = full_set(fk.nvars());
  curve.coef = c;
  curve.exponent.assign(a.begin(), a.end());
  return substitute_curve(fk, curve).is_zero();
}

std::optional<std::vector<GaussianRational>> grid_search_zero(
    const MixedPolynomial& fk, const Exponents& a, const SearchOptions& opts) {
  const size_t n = fk.nvars();
  auto palette = coefficient_palette(opts.grid);
  std::vector<size_t> pick(n, 0);
  for (;;) {
    std::vector<GaussianRational> c(n);
    for (size_t j = 0; j < n; ++j) c[j] = palette[pick[j]];
    if (kills_face_part(fk, c, a)) return c;
    size_t pos = n;
    bool moved = false;
    while (pos-- > 0) {
      if (pick[pos] + 1 < palette.size()) {
        ++pick[pos];
        std::fill(pick.begin() + static_cast<long>(pos) + 1, pick.end(), 0);
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
}

// Float pass: descend on sum of squared class norms from pseudo-random
// starts, snap to small rationals, then verify exactly.  Floats only propose.
std::optional<std::vector<GaussianRational>> refine_search_zero(
    const MixedPolynomial& fk, const Exponents& a, const SearchOptions& opts) {
  if (!opts.float_refine) return std::nullopt;
  const size_t n = fk.nvars();
  struct CTerm {
    std::complex<double> c;
    Exponents alpha, beta;
    std::int64_t cls;
  };
  std::vector<CTerm> terms;
  for (const auto& [k, v] : fk.terms())
    terms.push_back({{static_cast<double>(v.re), static_cast<double>(v.im)},
                     k.alpha,
                     k.beta,
                     dot(a, k.alpha)});
  auto objective = [&](const std::vector<std::complex<double>>& z) {
    std::map<std::int64_t, std::complex<double>> cls;
    for (const auto& t : terms) {
      std::complex<double> m = t.c;
      for (size_t j = 0; j < n; ++j) {
        for (std::int64_t e = 0; e < t.alpha[j]; ++e) m *= z[j];
        for (std::int64_t e = 0; e < t.beta[j]; ++e) m *= std::conj(z[j]);
      }
      cls[t.cls] += m;
    }
    double s = 0;
    for (const auto& [u, v] : cls) s += std::norm(v);
    return s;
  };

  std::mt19937 rng(20240811u);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int start = 0; start < 12; ++start) {
    std::vector<std::complex<double>> z(n);
    for (auto& v : z) {
      v = {unif(rng), unif(rng)};
      if (std::abs(v) < 0.2) v += std::complex<double>(0.5, 0.5);
    }
    double cur = objective(z);
    double step = 0.5;
    for (int it = 0; it < 160 && cur > 1e-24; ++it) {
      bool improved = false;
      for (size_t j = 0; j < n; ++j) {
        for (int dir = 0; dir < 4; ++dir) {
          std::complex<double> delta = (dir == 0)   ? std::complex<double>(step, 0)
                                       : (dir == 1) ? std::complex<double>(-step, 0)
                                       : (dir == 2) ? std::complex<double>(0, step)
                                                    : std::complex<double>(0, -step);
          auto trial = z;
          trial[j] += delta;
          if (std::abs(trial[j]) < 1e-3) continue;
          double val = objective(trial);
          if (val < cur) {
            z = trial;
            cur = val;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
      if (step < 1e-9) break;
    }
    if (cur < 1e-18) {
      // Snap to denominators up to 16 and verify exactly.
      for (std::int64_t den : {1, 2, 3, 4, 5, 8, 16}) {
        std::vector<GaussianRational> c(n);
        bool nonzero = true;
        for (size_t j = 0; j < n; ++j) {
          Rational re(std::llround(z[j].real() * static_cast<double>(den)), den);
          Rational im(std::llround(z[j].imag() * static_cast<double>(den)), den);
          c[j] = GaussianRational(re, im);
          if (c[j].is_zero()) nonzero = false;
        }
        if (nonzero && kills_face_part(fk, c, a)) return c;
      }
    }
  }
  return std::nullopt;
}

// Extends a witness found in the face's coordinate plane to the ambient
// space: unit coefficients and exponents just above the support level keep
// the full vector determining.
Witness lift_witness(const MixedPolynomial& f, const LatticePolyhedron& P,
                     const FaceHandle& face, IndexSet I, const RestrictedWitness& w) {
  const size_t n = f.nvars();
  auto idx = members(I, n);
  Witness out;
  out.face = face;
  out.curve.ambient = n;
  out.curve.index_set = face.index_set;
  auto slots = members(face.index_set, n);
  std::int64_t level = 0;
  for (size_t t = 0; t < idx.size(); ++t) level += w.exponent[t] * face.vertex_list[0][idx[t]];
  for (size_t j : slots) {
    auto it = std::find(idx.begin(), idx.end(), j);
    if (it != idx.end()) {
      size_t t = static_cast<size_t>(it - idx.begin());
      out.curve.coef.push_back(w.coef[t]);
      out.curve.exponent.push_back(w.exponent[t]);
    } else {
      out.curve.coef.push_back(GaussianRational(1));
      out.curve.exponent.push_back(level + 1);
    }
  }
  // Soundness gates: the witness annihilates the face part, and its
  // exponent vector really determines the face.
  MixedPolynomial part = face_part_unchecked(f, face);
  if (!substitute_curve(part, out.curve).is_zero())
    throw std::logic_error("lift_witness: candidate does not annihilate the face part");
  Exponents full_a(n, 0);
  for (size_t t = 0; t < slots.size(); ++t) full_a[slots[t]] = out.curve.exponent[t];
  if (!P.determines(face, full_a))
    throw std::logic_error("lift_witness: exponent vector does not determine the face");
  (void)P;
  return out;
}

// Zero of a holomorphic polynomial on the rational torus, used by the
// pluriharmonic rule: binomial closed forms first, then the grid.
std::optional<GaussianRational> gaussian_kth_root(const GaussianRational& q, std::int64_t k) {
  if (k == 1) return q;
  for (const GaussianRational& u :
       {GaussianRational(1), GaussianRational(-1), GaussianRational::unit_im(),
        GaussianRational(Rational(0), Rational(-1))}) {
    GaussianRational t = q / u.pow(static_cast<unsigned>(k));
    if (t.im != 0 || t.re <= 0) continue;
    // Rational k-th root of a positive rational, if it exists.
    Integer nu = numerator(t.re), de = denominator(t.re);
    auto int_root = [&](const Integer& v) -> std::optional<Integer> {
      if (v <= 0) return std::nullopt;
      Integer lo = 1, hi = v;
      while (lo <= hi) {
        Integer mid = (lo + hi) / 2;
        Integer p = 1;
        for (std::int64_t e = 0; e < k; ++e) {
          p *= mid;
          if (p > v) break;
        }
        if (p == v) return mid;
        if (p < v)
          lo = mid + 1;
        else
          hi = mid - 1;
      }
      return std::nullopt;
    };
    auto rn = int_root(nu), rd = int_root(de);
    if (rn && rd) return u * GaussianRational(Rational(*rn, *rd));
  }
  return std::nullopt;
}

std::optional<std::vector<GaussianRational>> holo_torus_zero(const HoloPoly& h, size_t n,
                                                             const SearchOptions& opts) {
  if (h.size() == 2) {
    auto it = h.begin();
    const auto& [u, cu] = *it;
    ++it;
    const auto& [v, cv] = *it;
    Exponents w = sub(u, v);
    GaussianRational target = -(cv / cu);  // x^w = -cv/cu
    for (size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      std::int64_t k = w[j] < 0 ? -w[j] : w[j];
      GaussianRational goal = (w[j] > 0) ? target : GaussianRational(1) / target;
      if (auto root = gaussian_kth_root(goal, k)) {
        std::vector<GaussianRational> c(n, GaussianRational(1));
        c[j] = *root;
        return c;
      }
    }
  }
  // Grid fallback.
  auto palette = coefficient_palette(opts.grid);
  std::vector<size_t> pick(n, 0);
  for (;;) {
    std::vector<GaussianRational> c(n);
    for (size_t j = 0; j < n; ++j) c[j] = palette[pick[j]];
    GaussianRational val;
    for (const auto& [e, coe] : h) {
      GaussianRational m = coe;
      for (size_t j = 0; j < n; ++j)
        if (e[j]) m *= c[j].pow(static_cast<unsigned>(e[j]));
      val += m;
    }
    if (val.is_zero()) return c;
    size_t pos = n;
    bool moved = false;
    while (pos-- > 0) {
      if (pick[pos] + 1 < palette.size()) {
        ++pick[pos];
        std::fill(pick.begin() + static_cast<long>(pos) + 1, pick.end(), 0);
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
}

GaussianRational eval_holo(const HoloPoly& h, const std::vector<GaussianRational>& c) {
  GaussianRational val;
  for (const auto& [e, coe] : h) {
    GaussianRational m = coe;
    for (size_t j = 0; j < c.size(); ++j)
      if (e[j]) m *= c[j].pow(static_cast<unsigned>(e[j]));
    val += m;
  }
  return val;
}

}  // namespace

NondegeneracyVerdict check_face(const MixedPolynomial& f, const LatticePolyhedron& P,
                                const FaceHandle& face, const SearchOptions& opts) {
  if (!face.bounded) throw std::invalid_argument("check_face: face is unbounded");
  NondegeneracyVerdict out;
  out.stats.faces_checked = 1;

  MixedPolynomial fk_full = face_part_unchecked(f, face);
  if (fk_full.is_zero()) throw std::logic_error("check_face: face carries no terms");
  IndexSet I = fk_full.effective_vars();
  if (I == 0) {
    out.status = NdStatus::Nondegenerate;
    out.certificate = "nonzero constant part";
    return out;
  }

  MixedPolynomial FI = f.restrict_to(I);
  MixedPolynomial fk = fk_full.restrict_to(I);
  const size_t nI = fk.nvars();
  LatticePolyhedron PI = newton_polyhedron(FI);
  std::vector<Exponents> vertsI;
  for (const auto& v : face.vertex_list) {
    Exponents w;
    for (size_t j = 0; j < f.nvars(); ++j)
      if (contains(I, j)) w.push_back(v[j]);
    vertsI.push_back(std::move(w));
  }
  auto faceI = PI.find_face(vertsI);
  if (!faceI || !faceI->bounded)
    throw std::logic_error("check_face: face missing from restricted polyhedron");

  // (C1) One effective variable: distinct terms land on distinct bidegrees
  // of t, so a nonzero part never composes to zero.
  if (nI == 1) {
    out.status = NdStatus::Nondegenerate;
    out.certificate = "one-variable face part";
    return out;
  }

  const bool real = fk.is_real();

  // (C2) Positive semidefinite coefficient matrix: the part is an exact sum
  // of squared moduli; a square that is a monomial (or effectively
  // one-variable) survives every monomial substitution.
  if (real) {
    for (int sign = 0; sign < 2; ++sign) {
      auto dec = gram_psd_squares(sign ? -fk : fk);
      if (!dec) continue;
      for (const auto& [d, q] : dec->squares) {
        if (q.size() == 1) {
          out.status = NdStatus::Nondegenerate;
          out.certificate = "sum of squares containing a monomial square";
          return out;
        }
      }
      for (const auto& [d, q] : dec->squares) {
        if (holo_effective_count(q, nI) == 1) {
          out.status = NdStatus::Nondegenerate;
          out.certificate = "sum of squares containing a one-variable square";
          return out;
        }
      }
    }
  }

  // (C2') Protected diagonal class: diagonal terms of one sign whose
  // bidegree class can never absorb an off-diagonal term, for any
  // determining direction (decided on the normal cone generators).
  if (real) {
    std::vector<std::pair<Exponents, Rational>> diag;
    std::vector<Exponents> offdiag_alpha;
    bool mixed_sign = false;
    for (const auto& [k, c] : fk.terms()) {
      if (k.alpha == k.beta) {
        diag.push_back({k.alpha, c.re});
      } else {
        offdiag_alpha.push_back(k.alpha);
      }
    }
    if (!diag.empty()) {
      bool pos = diag[0].second > 0;
      for (const auto& [d, c] : diag)
        if ((c > 0) != pos) mixed_sign = true;
      if (!mixed_sign) {
        auto act = active_facets(PI, *faceI);
        auto never_collides = [&](const Exponents& w) {
          bool some_pos = false, some_neg = false;
          for (const auto* fct : act) {
            std::int64_t s = dot(fct->normal, w);
            if (s > 0) some_pos = true;
            if (s < 0) some_neg = true;
          }
          return (some_pos && !some_neg) || (some_neg && !some_pos);
        };
        for (const auto& [delta, c] : diag) {
          bool protected_class = true;
          for (const auto& alpha : offdiag_alpha) {
            if (!never_collides(sub(alpha, delta))) {
              protected_class = false;
              break;
            }
          }
          if (protected_class) {
            out.status = NdStatus::Nondegenerate;
            out.certificate = "protected one-signed diagonal class";
            return out;
          }
        }
      }
    }
  }

  // (C3) Pluriharmonic parts: composition splits into a holomorphic and an
  // antiholomorphic single class; monomial sides never vanish, and a common
  // rational torus zero of both sides is an exact witness.
  if (fk.is_pluriharmonic()) {
    HoloPoly h, qstar;
    for (const auto& [k, c] : fk.terms()) {
      if (!is_zero(k.alpha))
        h.emplace(k.alpha, c);
      else
        qstar.emplace(k.beta, c.conj());
    }
    bool h_mono = h.size() <= 1;
    bool q_mono = qstar.size() <= 1;
    if (h_mono && q_mono) {
      out.status = NdStatus::Nondegenerate;
      out.certificate = "pluriharmonic part with monomial sides";
      return out;
    }
    std::optional<std::vector<GaussianRational>> zero;
    if (!h.empty())
      zero = holo_torus_zero(h, nI, opts);
    else
      zero = holo_torus_zero(qstar, nI, opts);
    if (zero && (h.empty() || eval_holo(h, *zero).is_zero()) &&
        (qstar.empty() || eval_holo(qstar, *zero).is_zero())) {
      Exponents a(faceI->normal);
      RestrictedWitness w{*zero, a};
      if (kills_face_part(fk, w.coef, w.exponent)) {
        out.status = NdStatus::Degenerate;
        out.certificate = "pluriharmonic face of positive dimension";
        out.witness = lift_witness(f, P, face, I, w);
        return out;
      }
    }
    // No rational witness found; fall through to the general search.
  }

  // (C4) Rotation-invariant part of an asserted plurisubharmonic function:
  // positive on the torus, hence never annihilated.
  if (opts.assert_psh && real && fk.is_diagonal()) {
    out.status = NdStatus::Nondegenerate;
    out.certificate = "rotation invariant under asserted plurisubharmonicity";
    return out;
  }

  // (W) Exact witness search over determining directions and the grid.
  // Directions are scanned independently; the first hit in direction order
  // wins, so the result does not depend on the worker partition.
  auto dirs = collect_directions(PI, *faceI, fk, opts);
  out.stats.directions_tried = dirs.size();
  out.stats.points_tried =
      dirs.size() * static_cast<std::uint64_t>(
                        std::pow(static_cast<double>(coefficient_palette(opts.grid).size()),
                                 static_cast<double>(nI)));
  auto scan_direction = [&](size_t d) -> std::optional<RestrictedWitness> {
    auto c = grid_search_zero(fk, dirs[d], opts);
    if (!c) c = refine_search_zero(fk, dirs[d], opts);
    if (c) return RestrictedWitness{*c, dirs[d]};
    return std::nullopt;
  };
  std::optional<RestrictedWitness> hit;
  const int workers = std::max(1, opts.threads);
  if (workers == 1 || dirs.size() <= 1) {
    for (size_t d = 0; d < dirs.size() && !hit; ++d) hit = scan_direction(d);
  } else {
    std::vector<std::optional<RestrictedWitness>> results(dirs.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (;;) {
          size_t d = next.fetch_add(1);
          if (d >= dirs.size()) return;
          results[d] = scan_direction(d);
        }
      });
    for (auto& th : pool) th.join();
    for (auto& r : results)
      if (r && !hit) hit = r;
  }
  if (hit) {
    out.status = NdStatus::Degenerate;
    out.certificate = "exact witness";
    out.witness = lift_witness(f, P, face, I, *hit);
    return out;
  }

  out.status = NdStatus::Unknown;
  out.certificate.clear();
  return out;
}

NondegeneracyVerdict check_all(const MixedPolynomial& f, const SearchOptions& opts) {
  if (f.is_zero()) throw std::domain_error("check_all: flat input");
  LatticePolyhedron P = newton_polyhedron(f);
  NondegeneracyVerdict out;
  bool any_unknown = false;
  for (const auto& face : P.bounded_faces()) {
    NondegeneracyVerdict v = check_face(f, P, face, opts);
    out.stats.faces_checked += 1;
    out.stats.directions_tried += v.stats.directions_tried;
    out.stats.points_tried += v.stats.points_tried;
    FaceVerdict fv;
    fv.face = face;
    fv.status = v.status;
    fv.certificate = v.certificate;
    if (v.witness) fv.witness = v.witness->curve;
    out.face_details.push_back(fv);
    if (v.status == NdStatus::Degenerate) {
      out.status = NdStatus::Degenerate;
      out.certificate = v.certificate;
      out.witness = v.witness;
      return out;
    }
    if (v.status == NdStatus::Unknown) any_unknown = true;
  }
  out.status = any_unknown ? NdStatus::Unknown : NdStatus::Nondegenerate;
  if (!any_unknown) out.certificate = "all bounded faces certified";
  return out;
}

KouchnirenkoReport kouchnirenko_check(const MixedPolynomial& f, const SearchOptions& opts) {
  for (const auto& [k, c] : f.terms())
    if (!is_zero(k.beta))
      throw std::invalid_argument("kouchnirenko_check: input must be purely holomorphic");
  if (f.is_zero()) throw std::domain_error("kouchnirenko_check: flat input");

  KouchnirenkoReport rep;
  LatticePolyhedron P = newton_polyhedron(f);
  const size_t n = f.nvars();
  for (const auto& face : P.bounded_faces()) {
    KouchnirenkoFace kf;
    kf.face = face;
    MixedPolynomial fk = face_part_unchecked(f, face);
    std::vector<MixedPolynomial> grads;
    for (size_t j = 0; j < n; ++j) grads.push_back(holomorphic_derivative(fk, j));

    for (const auto& g : grads)
      if (g.term_count() == 1) kf.certified_nonvanishing = true;

    if (!kf.certified_nonvanishing) {
      auto palette = coefficient_palette(opts.grid);
      std::vector<size_t> pick(n, 0);
      for (;;) {
        std::vector<GaussianRational> c(n);
        for (size_t j = 0; j < n; ++j) c[j] = palette[pick[j]];
        bool all_zero = true;
        for (const auto& g : grads)
          if (!g.evaluate(c).is_zero()) {
            all_zero = false;
            break;
          }
        if (all_zero) {
          kf.zero_found = true;
          kf.zero = c;
          break;
        }
        size_t pos = n;
        bool moved = false;
        while (pos-- > 0) {
          if (pick[pos] + 1 < palette.size()) {
            ++pick[pos];
            std::fill(pick.begin() + static_cast<long>(pos) + 1, pick.end(), 0);
            moved = true;
            break;
          }
        }
        if (!moved) break;
      }
    }
    rep.any_degenerate = rep.any_degenerate || kf.zero_found;
    rep.faces.push_back(std::move(kf));
  }
  return rep;
}

RestrictionAgreement restricted_equivalence(const MixedPolynomial& f, const FaceHandle& face,
                                            const SearchOptions& opts) {
  LatticePolyhedron P = newton_polyhedron(f);
  NondegeneracyVerdict full = check_face(f, P, face, opts);

  MixedPolynomial part = face_part_unchecked(f, face);
  IndexSet I = part.effective_vars();
  RestrictionAgreement agree{full.status, full.status, true};
  if (I == 0 || I == full_set(f.nvars())) return agree;  // identity case

  MixedPolynomial FI = f.restrict_to(I);
  LatticePolyhedron PI = newton_polyhedron(FI);
  std::vector<Exponents> vertsI;
  for (const auto& v : face.vertex_list) {
    Exponents w;
    for (size_t j = 0; j < f.nvars(); ++j)
      if (contains(I, j)) w.push_back(v[j]);
    vertsI.push_back(std::move(w));
  }
  auto faceI = PI.find_face(vertsI);
  if (!faceI) throw std::logic_error("restricted_equivalence: face missing in restriction");
  NondegeneracyVerdict restr = check_face(FI, PI, *faceI, opts);
  agree.restricted = restr.status;
  agree.agree = (full.status == NdStatus::Unknown) || (restr.status == NdStatus::Unknown) ||
                (full.status == restr.status);
  return agree;
}

}  // namespace nc
