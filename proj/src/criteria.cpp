#include "latshift/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latshift/error.hpp"

namespace latshift {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::WitnessFound: return "witness-found";
    case Verdict::NoWitnessUpToHorizon: return "no-witness-up-to-horizon";
    case Verdict::ObstructionCertified: return "obstruction-certified";
    case Verdict::MixingEvidence: return "mixing-evidence";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const EvidenceItem* CriterionReport::find(const std::string& label) const {
  for (const auto& e : evidence)
    if (e.label == label) return &e;
  return nullptr;
}

std::vector<double> default_thresholds(int levels) {
  std::vector<double> out;
  for (int k = 1; k <= levels; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

namespace {

constexpr double kStableTolerance = 1e-9;

double log_sum(double a, double b) {
  const double hi = std::max(a, b);
  if (hi == -HUGE_VAL) return hi;
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

void check_thresholds(const std::vector<double>& eps) {
  if (eps.empty()) throw DomainError("at least one threshold is required");
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (!(eps[k] > 0)) throw DomainError("thresholds must be positive");
    if (k > 0 && !(eps[k] < eps[k - 1])) throw DomainError("thresholds must be strictly decreasing");
  }
}

Vertex strip_vertex(std::int64_t i, std::int64_t j) { return Vertex::lattice(ModelKind::Strip, i, j); }
Vertex quadrant_vertex(std::int64_t i, std::int64_t j) { return Vertex::lattice(ModelKind::Quadrant, i, j); }

struct StripScan {
  double prefilter;  // one-parameter quantity
  double window;     // full window quantity
};

CriterionReport greedy_select(std::string name, const std::vector<StripScan>& scan, const StripScanOptions& opt) {
  CriterionReport report;
  report.criterion = std::move(name);
  report.horizon = opt.horizon;
  if (opt.horizon <= 0) {
    report.verdict = Verdict::Inconclusive;
    return report;
  }
  std::size_t level = 0;
  double best = HUGE_VAL;
  std::int64_t best_n = 0;
  for (std::size_t t = 0; t < scan.size(); ++t) {
    const auto n = static_cast<std::int64_t>(t) + 1;
    report.trace.push_back({n, scan[t].window});
    if (scan[t].window < best) {
      best = scan[t].window;
      best_n = n;
    }
    if (level < opt.thresholds.size() && scan[t].prefilter <= opt.thresholds[level] &&
        scan[t].window <= opt.thresholds[level]) {
      report.evidence.push_back({"witness", n, scan[t].window, std::nullopt});
      ++level;
    }
  }
  report.evidence.push_back({"best-decay", best_n, best, std::nullopt});
  report.verdict = level == opt.thresholds.size() ? Verdict::WitnessFound : Verdict::NoWitnessUpToHorizon;
  return report;
}

}  // namespace

CriterionReport strip_criterion(const WeightFamily& family, int m, const StripScanOptions& opt) {
  if (m < 1) throw DomainError("strip height must be positive");
  check_thresholds(opt.thresholds);
  auto scan = kernels::map_indices<StripScan>(
      std::max<std::int64_t>(opt.horizon, 0),
      [&](std::int64_t t) {
        const auto n = t + 1;
        const double log_n = std::log(static_cast<double>(n));
        double pre = -HUGE_VAL;
        double win = -HUGE_VAL;
        for (int i = 1; i <= m; ++i) {
          const double lead = (m - i) * log_n;
          pre = std::max(pre, lead + family.log_abs(strip_vertex(i, n)));
          for (std::int64_t j = 1; j <= opt.window; ++j)
            win = std::max(win, lead + family.log_abs(strip_vertex(i, j + n)));
        }
        return StripScan{std::exp(pre), std::exp(win)};
      },
      opt.exec);
  return greedy_select("strip", scan, opt);
}

CriterionReport strip_criterion_bilateral(const WeightFamily& family, int m, const StripScanOptions& opt) {
  if (m < 1) throw DomainError("strip height must be positive");
  check_thresholds(opt.thresholds);
  auto scan = kernels::map_indices<StripScan>(
      std::max<std::int64_t>(opt.horizon, 0),
      [&](std::int64_t t) {
        const auto n = t + 1;
        const double log_n = std::log(static_cast<double>(n));
        double win = -HUGE_VAL;
        for (int i = 1; i <= m; ++i) {
          const auto vertex = [i](std::int64_t j) { return Vertex::lattice(ModelKind::BilateralStrip, i, j); };
          for (std::int64_t j = -opt.window; j <= opt.window; ++j)
            win = std::max(win, (m - i) * log_n + log_sum(family.log_abs(vertex(j + n)),
                                                          family.log_abs(vertex(j - n))));
        }
        const double q = std::exp(win);
        return StripScan{q, q};
      },
      opt.exec);
  return greedy_select("strip-bilateral", scan, opt);
}

namespace {

struct ObstructionProfile {
  double c_hat = 0.0;
  double c_half = 0.0;
  bool stable = false;
  std::vector<ScanPoint> trace;  // running minimum per diagonal
};

ObstructionProfile quadrant_profile(const WeightFamily& family, std::int64_t extent, Exec exec) {
  ObstructionProfile out;
  if (extent < 0) return out;
  const double log2 = std::log(2.0);
  auto per_diag = kernels::map_indices<double>(
      extent + 1,
      [&](std::int64_t s) {
        double lo = HUGE_VAL;
        for (std::int64_t i = 0; i <= s; ++i)
          lo = std::min(lo, family.log_abs(quadrant_vertex(i, s - i)) - static_cast<double>(s) * log2);
        return lo;
      },
      exec);
  double running = HUGE_VAL;
  double half = HUGE_VAL;
  for (std::int64_t s = 0; s <= extent; ++s) {
    running = std::min(running, per_diag[static_cast<std::size_t>(s)]);
    if (s <= extent / 2) half = running;
    out.trace.push_back({s, std::exp(running)});
  }
  out.c_hat = std::exp(running);
  out.c_half = std::exp(half);
  out.stable = std::isfinite(running) && running >= half + std::log1p(-kStableTolerance);
  return out;
}

}  // namespace

CriterionReport quadrant_mixing_test(const WeightFamily& family, std::int64_t extent, double margin, Exec exec) {
  CriterionReport report;
  report.criterion = "quadrant-mixing";
  report.horizon = extent;
  if (extent < 1) {
    report.verdict = Verdict::Inconclusive;
    return report;
  }
  const auto lo = std::max<std::int64_t>(1, extent / 2);
  auto per_diag = kernels::map_indices<double>(
      extent - lo + 1,
      [&](std::int64_t t) {
        const auto s = lo + t;
        double hi = -HUGE_VAL;
        for (std::int64_t i = 0; i <= s; ++i) hi = std::max(hi, family.log_abs(quadrant_vertex(i, s - i)));
        return std::exp(hi / static_cast<double>(s));
      },
      exec);
  double q_hat = 0.0;
  for (std::size_t t = 0; t < per_diag.size(); ++t) {
    q_hat = std::max(q_hat, per_diag[t]);
    report.trace.push_back({lo + static_cast<std::int64_t>(t), per_diag[t]});
  }
  const auto profile = quadrant_profile(family, extent, exec);
  report.evidence.push_back({"q_hat", std::nullopt, q_hat, std::nullopt});
  report.evidence.push_back({"margin", std::nullopt, margin, std::nullopt});
  report.evidence.push_back({"obstruction-profile-stable", std::nullopt, profile.stable ? 1.0 : 0.0, std::nullopt});
  report.verdict = q_hat < 2.0 - margin && !profile.stable ? Verdict::MixingEvidence : Verdict::Inconclusive;
  return report;
}

CriterionReport quadrant_obstruction_test(const WeightFamily& family, std::int64_t extent, Exec exec) {
  CriterionReport report;
  report.criterion = "quadrant-obstruction";
  report.horizon = extent;
  if (extent < 0) {
    report.verdict = Verdict::Inconclusive;
    return report;
  }
  const auto profile = quadrant_profile(family, extent, exec);
  report.trace = profile.trace;

  EvidenceItem c_hat{"c_hat", std::nullopt, profile.c_hat, std::nullopt};
  if (family.is_exact()) {
    std::optional<Rational> best;
    for (std::int64_t s = 0; s <= extent; ++s) {
      const Rational scale = ipow(Rational(2), s);
      for (std::int64_t i = 0; i <= s; ++i) {
        Rational r = ::abs(family.eval_exact(quadrant_vertex(i, s - i))) / scale;
        if (!best || r < *best) best = r;
      }
    }
    c_hat.value = best->get_d();
    c_hat.exact = to_string(*best);
  }
  report.evidence.push_back(c_hat);
  report.evidence.push_back({"c_hat_half_extent", extent / 2, profile.c_half, std::nullopt});

  if (profile.stable) {
    report.verdict = Verdict::ObstructionCertified;
    const auto& p = family.param();
    report.exact_family_certificate = family.kind() == WeightFamily::Kind::GeometricSum && p.exact &&
                                      ::abs(*p.exact) >= 2;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

NecessarySum necessary_sum(const WeightFamily& family, const Param& p, int n, std::int64_t i, std::int64_t j) {
  if (!(p.approx > 1.0)) throw DomainError("necessary_sum needs 1 < p < infinity");
  if (std::isinf(p.approx)) throw DomainError("necessary_sum needs 1 < p < infinity");
  if (n < 0) throw DomainError("power must be nonnegative");
  if (i < 0 || j < 0) throw DomainError("anchor must be a quadrant vertex");

  NecessarySum out;
  std::optional<Rational> dual_exact;
  if (p.exact) {
    Rational d = *p.exact / (*p.exact - 1);
    d.canonicalize();
    dual_exact = d;
  }
  const double dual = p.approx / (p.approx - 1.0);

  if (dual_exact && dual_exact->get_den() == 1 && family.is_exact()) {
    const long e = dual_exact->get_num().get_si();
    Rational acc = 0;
    for (int l = 0; l <= n; ++l) {
      Rational mu = ::abs(family.eval_exact(quadrant_vertex(i + l, j + n - l)));
      acc += ipow(Rational(binomial(n, l)), e) / ipow(mu, e);
    }
    out.exact = acc;
    out.value = acc.get_d();
    return out;
  }

  double log_acc = -HUGE_VAL;
  const double lg_n = std::lgamma(n + 1.0);
  for (int l = 0; l <= n; ++l) {
    const double log_binom = lg_n - std::lgamma(l + 1.0) - std::lgamma(n - l + 1.0);
    const double term = dual * (log_binom - family.log_abs(quadrant_vertex(i + l, j + n - l)));
    log_acc = log_sum(log_acc, term);
  }
  out.value = std::exp(log_acc);
  return out;
}

CriterionReport skip_graph_test(const WeightFamily& family, std::int64_t horizon, double margin, Exec exec) {
  CriterionReport report;
  report.criterion = "skip-graph";
  report.horizon = horizon;
  if (horizon < 1) {
    report.verdict = Verdict::Inconclusive;
    return report;
  }
  const double log_q0 = std::log(kGoldenRatio);
  struct Point {
    double root;       // |mu_n|^{1/n}
    double log_ratio;  // log(|mu_n| / q0^n)
  };
  auto points = kernels::map_indices<Point>(
      horizon,
      [&](std::int64_t t) {
        const auto n = t + 1;
        const double lg = family.log_abs(Vertex::path(ModelKind::SkipPath, n));
        return Point{std::exp(lg / static_cast<double>(n)), lg - static_cast<double>(n) * log_q0};
      },
      exec);

  double q_hat = 0.0;
  double running = HUGE_VAL;
  double half = HUGE_VAL;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const auto& pt = points[static_cast<std::size_t>(n - 1)];
    running = std::min(running, pt.log_ratio);
    if (n <= std::max<std::int64_t>(1, horizon / 2)) half = running;
    if (n >= std::max<std::int64_t>(1, horizon / 2)) q_hat = std::max(q_hat, pt.root);
    report.trace.push_back({n, pt.root});
  }
  const bool stable = std::isfinite(running) && running >= half + std::log1p(-kStableTolerance);
  report.evidence.push_back({"q_hat", std::nullopt, q_hat, std::nullopt});
  report.evidence.push_back({"critical_q0", std::nullopt, kGoldenRatio, std::nullopt});
  report.evidence.push_back({"c_hat", std::nullopt, std::exp(running), std::nullopt});
  report.evidence.push_back({"c_hat_half_horizon", horizon / 2, std::exp(half), std::nullopt});

  if (stable) {
    report.verdict = Verdict::ObstructionCertified;
    const auto kind = family.kind();
    report.exact_family_certificate =
        (kind == WeightFamily::Kind::GeometricJ || kind == WeightFamily::Kind::GeometricSum) &&
        std::fabs(family.param().approx) >= kGoldenRatio * (1.0 - 1e-12);
  } else if (q_hat < kGoldenRatio - margin) {
    report.verdict = Verdict::MixingEvidence;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace latshift
