#include "nc/oracle.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace nc {

std::vector<GaussianRational> SearchConfig::effective_palette() const {
  if (!palette.empty()) return palette;
  GaussianRational i = GaussianRational::unit_im();
  return {GaussianRational(1),  GaussianRational(-1),
          i,                    GaussianRational(Rational(0), Rational(-1)),
          GaussianRational(Rational(1, 2)),  GaussianRational(Rational(-1, 2)),
          GaussianRational(2),  GaussianRational(-2)};
}

namespace {

struct Task {
  IndexSet I;
  std::vector<size_t> idx;
  Exponents a;  // over idx
};

// Curves per task: |palette|^k monomials, each optionally extended by a
// second term on one slot.
std::uint64_t task_curve_count(const Task& t, size_t palette, std::int64_t jet_degree,
                               bool two_term) {
  std::uint64_t base = 1;
  for (size_t j = 0; j < t.idx.size(); ++j) base *= palette;
  if (!two_term) return base;
  std::uint64_t ext = 0;
  for (std::int64_t aj : t.a)
    if (jet_degree > aj) ext += static_cast<std::uint64_t>(jet_degree - aj) * palette;
  return base * (1 + ext);
}

std::vector<Task> enumerate_tasks(size_t n, const SearchConfig& cfg) {
  std::vector<Task> tasks;
  for (IndexSet I = 1; I < (IndexSet{1} << n); ++I) {
    Task t;
    t.I = I;
    t.idx = members(I, n);
    const size_t k = t.idx.size();
    Exponents a(k, 1);
    for (;;) {
      std::int64_t mn = *std::min_element(a.begin(), a.end());
      if (!cfg.reg_only || mn == 1) {
        t.a = a;
        tasks.push_back(t);
      }
      size_t pos = k;
      bool moved = false;
      while (pos-- > 0) {
        if (a[pos] < cfg.max_exponent) {
          ++a[pos];
          std::fill(a.begin() + static_cast<long>(pos) + 1, a.end(), 1);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
  }
  return tasks;
}

struct Partial {
  ExtendedRat best{Rational(0)};
  std::optional<JetCurve> argmax;
  bool infinite_flag = false;
  std::optional<JetCurve> infinite_witness;
  std::uint64_t tried = 0;
};

void fold_curve(Partial& p, const ExtendedRat& value, const JetCurve& curve, bool zero_comp) {
  p.tried += 1;
  if (zero_comp && !p.infinite_flag) {
    p.infinite_flag = true;
    p.infinite_witness = curve;
  }
  if (p.best < value) {
    p.best = value;
    p.argmax = curve;
  }
}

void merge(Partial& into, const Partial& next) {
  into.tried += next.tried;
  if (!into.infinite_flag && next.infinite_flag) {
    into.infinite_flag = true;
    into.infinite_witness = next.infinite_witness;
  }
  if (into.best < next.best) {
    into.best = next.best;
    into.argmax = next.argmax;
  }
}

// Composition order of a monomial curve without building polynomials: the
// terms fall into bidegree classes keyed by (<a,alpha>, <a,beta>).
struct TaskEvaluator {
  const MixedPolynomial& f;
  const Task& task;
  struct TermView {
    std::pair<std::int64_t, std::int64_t> cls;
    std::vector<std::int64_t> ai, bi;  // exponents over task.idx
    GaussianRational c;
  };
  std::vector<TermView> terms;

  TaskEvaluator(const MixedPolynomial& poly, const Task& t) : f(poly), task(t) {
    for (const auto& [k, c] : f.terms()) {
      bool inside = true;
      for (size_t j = 0; j < f.nvars() && inside; ++j)
        if (!contains(t.I, j) && (k.alpha[j] != 0 || k.beta[j] != 0)) inside = false;
      if (!inside) continue;
      TermView tv;
      tv.c = c;
      std::int64_t da = 0, db = 0;
      for (size_t s = 0; s < t.idx.size(); ++s) {
        tv.ai.push_back(k.alpha[t.idx[s]]);
        tv.bi.push_back(k.beta[t.idx[s]]);
        da += t.a[s] * k.alpha[t.idx[s]];
        db += t.a[s] * k.beta[t.idx[s]];
      }
      tv.cls = {da, db};
      terms.push_back(std::move(tv));
    }
  }

  ExtendedInt composed_ord(const std::vector<GaussianRational>& c) const {
    std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> classes;
    for (const auto& tv : terms) {
      GaussianRational m = tv.c;
      for (size_t s = 0; s < c.size(); ++s) {
        if (tv.ai[s]) m *= c[s].pow(static_cast<unsigned>(tv.ai[s]));
        if (tv.bi[s]) m *= c[s].conj().pow(static_cast<unsigned>(tv.bi[s]));
      }
      auto it = classes.find(tv.cls);
      if (it == classes.end())
        classes.emplace(tv.cls, m);
      else
        it->second += m;
    }
    ExtendedInt best = ExtendedInt::infinity();
    for (const auto& [cls, val] : classes)
      if (!val.is_zero()) best = min(best, ExtendedInt(cls.first + cls.second));
    return best;
  }
};

JetCurve make_monomial_jet(size_t n, const Task& t, const std::vector<GaussianRational>& c) {
  JetCurve g;
  g.components.assign(n, Poly1{});
  for (size_t s = 0; s < t.idx.size(); ++s) g.components[t.idx[s]] = Poly1{{t.a[s], c[s]}};
  return g;
}

Partial run_task(const MixedPolynomial& f, const Task& t, const SearchConfig& cfg) {
  Partial p;
  const auto palette = cfg.effective_palette();
  const size_t k = t.idx.size();
  TaskEvaluator ev(f, t);
  std::int64_t ordg = *std::min_element(t.a.begin(), t.a.end());

  std::vector<size_t> pick(k, 0);
  for (;;) {
    std::vector<GaussianRational> c(k);
    for (size_t s = 0; s < k; ++s) c[s] = palette[pick[s]];
    ExtendedInt oc = ev.composed_ord(c);
    JetCurve base = make_monomial_jet(f.nvars(), t, c);
    fold_curve(p, extended_ratio(oc, ordg), base, oc.is_inf());

    if (cfg.two_term_jets) {
      for (size_t s = 0; s < k; ++s) {
        for (std::int64_t a2 = t.a[s] + 1; a2 <= cfg.jet_degree; ++a2) {
          for (const auto& c2 : palette) {
            JetCurve g = base;
            g.components[t.idx[s]][a2] = c2;
            ExtendedInt o2 = substitute_curve(f, g).ord();
            fold_curve(p, extended_ratio(o2, ordg), g, o2.is_inf());
          }
        }
      }
    }

    size_t pos = k;
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
  return p;
}

}  // namespace

OracleResult sup_contact_lower_bound(const MixedPolynomial& f, const SearchConfig& cfg) {
  OracleResult out;
  auto tasks = enumerate_tasks(f.nvars(), cfg);
  const size_t palette_size = cfg.effective_palette().size();

  // Deterministic truncation at task granularity.
  std::vector<Task> kept;
  std::uint64_t budget = 0;
  for (const auto& t : tasks) {
    std::uint64_t c = task_curve_count(t, palette_size, cfg.jet_degree, cfg.two_term_jets);
    if (budget + c > cfg.max_curves && !kept.empty()) {
      out.truncated = true;
      break;
    }
    budget += c;
    kept.push_back(t);
    if (budget >= cfg.max_curves) {
      out.truncated = true;
      break;
    }
  }

  const int threads = std::max(1, cfg.threads);
  Partial total;
  if (threads == 1) {
    for (const auto& t : kept) merge(total, run_task(f, t, cfg));
  } else {
    for (size_t base = 0; base < kept.size(); base += static_cast<size_t>(threads)) {
      std::vector<std::future<Partial>> futs;
      for (size_t i = base; i < std::min(kept.size(), base + static_cast<size_t>(threads)); ++i)
        futs.push_back(std::async(std::launch::async,
                                  [&f, &kept, i, &cfg] { return run_task(f, kept[i], cfg); }));
      for (auto& fu : futs) merge(total, fu.get());
    }
  }
  out.best = total.best;
  out.argmax = total.argmax;
  out.infinite_flag = total.infinite_flag;
  out.infinite_witness = total.infinite_witness;
  out.curves_tried = total.tried;
  return out;
}

CrosscheckReport formula_crosscheck(const MixedPolynomial& f, const SearchConfig& cfg,
                                    const SearchOptions& nd_opts) {
  CrosscheckReport rep;
  if (f.is_zero()) return rep;
  LatticePolyhedron P = newton_polyhedron(f);
  std::map<std::vector<Exponents>, NdStatus> verdict_cache;

  auto face_status = [&](const FaceHandle& face) {
    auto key = face.vertex_list;
    auto it = verdict_cache.find(key);
    if (it != verdict_cache.end()) return it->second;
    NdStatus s = check_face(f, P, face, nd_opts).status;
    verdict_cache.emplace(std::move(key), s);
    return s;
  };

  auto tasks = enumerate_tasks(f.nvars(), cfg);
  std::uint64_t budget = 0;
  for (const auto& t : tasks) {
    if (budget > cfg.max_curves) break;
    const auto palette = cfg.effective_palette();
    const size_t k = t.idx.size();
    Direction dir(f.nvars(), ExtendedInt::infinity());
    for (size_t s = 0; s < k; ++s) dir[t.idx[s]] = ExtendedInt(t.a[s]);
    auto dd = P.support_min_dir(dir);
    ExtendedRat dist = dd.level.is_inf()
                           ? ExtendedRat::infinity()
                           : P.newton_distance(dir).distance;

    TaskEvaluator ev(f, t);
    std::int64_t ordg = *std::min_element(t.a.begin(), t.a.end());
    std::vector<size_t> pick(k, 0);
    for (;;) {
      std::vector<GaussianRational> c(k);
      for (size_t s = 0; s < k; ++s) c[s] = palette[pick[s]];
      ExtendedInt oc = ev.composed_ord(c);
      ExtendedRat O = extended_ratio(oc, ordg);
      ++budget;
      ++rep.curves_checked;
      if (oc < dd.level) rep.violations.push_back("ord below support minimum");
      if (O < dist) rep.violations.push_back("contact order below distance");
      if (dd.face) {
        NdStatus s = face_status(*dd.face);
        if (s == NdStatus::Nondegenerate) {
          ++rep.equalities_checked;
          if (!(oc == dd.level) || !(O == dist))
            rep.violations.push_back("equality fails on a certified face");
        } else if (s == NdStatus::Degenerate && dd.level < oc) {
          ++rep.strict_gaps;
        }
      }
      size_t pos = k;
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

    if (cfg.two_term_jets) {
      // Sample two-term extensions of the all-ones monomial only; the class
      // analysis across the whole family is already covered above.
      std::vector<GaussianRational> ones(k, GaussianRational(1));
      JetCurve base = make_monomial_jet(f.nvars(), t, ones);
      for (size_t s = 0; s < k && budget <= cfg.max_curves; ++s) {
        for (std::int64_t a2 = t.a[s] + 1; a2 <= cfg.jet_degree; ++a2) {
          for (const auto& c2 : palette) {
            JetCurve g = base;
            g.components[t.idx[s]][a2] = c2;
            ContactReport r = order_of_contact(f, g);
            ++budget;
            ++rep.curves_checked;
            if (r.face) {
              NdStatus st = face_status(*r.face);
              if (st == NdStatus::Nondegenerate) {
                ++rep.equalities_checked;
                if (!(r.ord_composed == r.l_lower_bound) || !(r.contact_order == r.distance))
                  rep.violations.push_back("equality fails on a certified face (two-term)");
              } else if (st == NdStatus::Degenerate && r.l_lower_bound < r.ord_composed) {
                ++rep.strict_gaps;
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace nc
