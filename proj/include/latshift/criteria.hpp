#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latshift/kernels.hpp"
#include "latshift/scalar.hpp"
#include "latshift/space.hpp"

namespace latshift {

enum class Verdict { WitnessFound, NoWitnessUpToHorizon, ObstructionCertified, MixingEvidence, Inconclusive };

std::string to_string(Verdict v);

struct EvidenceItem {
  std::string label;
  std::optional<std::int64_t> n;
  double value = 0.0;
  /// exact rendering when the value is known exactly
  std::optional<std::string> exact;
};

struct ScanPoint {
  std::int64_t n;
  double quantity;
};

/// Verdict plus the numbers it rests on. Every verdict speaks about the
/// scanned horizon only, except obstruction certificates flagged with
/// `exact_family_certificate`, whose bound holds for all indices.
struct CriterionReport {
  std::string criterion;
  Verdict verdict = Verdict::Inconclusive;
  std::int64_t horizon = 0;
  std::vector<EvidenceItem> evidence;
  std::vector<ScanPoint> trace;
  bool exact_family_certificate = false;

  const EvidenceItem* find(const std::string& label) const;
};

/// Decreasing thresholds 2^{-1}, ..., 2^{-levels}.
std::vector<double> default_thresholds(int levels = 8);

inline constexpr double kDefaultMargin = 0.05;
inline constexpr std::int64_t kDefaultWindow = 10;

struct StripScanOptions {
  std::int64_t horizon = 100;
  std::int64_t window = kDefaultWindow;
  std::vector<double> thresholds = default_thresholds();
  Exec exec = Exec::Parallel;
};

/// Greedy search for n_1 < ... < n_K <= horizon with
///   sup_{i<=m, 1<=j<=J} n_k^{m-i} |mu_{i, j+n_k}| <= eps_k,
/// prefiltered by the one-parameter quantity max_i n^{m-i} |mu_{i,n}|.
CriterionReport strip_criterion(const WeightFamily& family, int m, const StripScanOptions& options = {});

/// Two-sided variant: sup_{i<=m, |j|<=J} n^{m-i} (|mu_{i,j+n}| + |mu_{i,j-n}|).
CriterionReport strip_criterion_bilateral(const WeightFamily& family, int m, const StripScanOptions& options = {});

/// q^ = max over D/2 <= i+j <= D of |mu_{i,j}|^{1/(i+j)} on the quadrant;
/// mixing-evidence when q^ < 2 - margin and the obstruction profile is not
/// stable.
CriterionReport quadrant_mixing_test(const WeightFamily& family, std::int64_t extent,
                                     double margin = kDefaultMargin, Exec exec = Exec::Parallel);

/// c^ = min over i+j <= D of |mu_{i,j}| / 2^{i+j}; obstruction-certified
/// when c^ > 0 has stopped decreasing between D/2 and D.
CriterionReport quadrant_obstruction_test(const WeightFamily& family, std::int64_t extent,
                                          Exec exec = Exec::Parallel);

struct NecessarySum {
  double value = 0.0;
  std::optional<Rational> exact;
};

/// sum_{l=0}^{n} C(n,l)^{p'} / |mu_{i+l, j+n-l}|^{p'} with p' = p/(p-1),
/// anchored at the quadrant vertex (i, j). Exact when the weights are exact
/// and p' is an integer. Requires p > 1.
NecessarySum necessary_sum(const WeightFamily& family, const Param& p, int n, std::int64_t i, std::int64_t j);

/// Skip-edge path B0(I+B0): mixing-evidence below the golden ratio,
/// obstruction-certified when |mu_n| / q0^n stays bounded below.
CriterionReport skip_graph_test(const WeightFamily& family, std::int64_t horizon, double margin = kDefaultMargin,
                                Exec exec = Exec::Parallel);

/// (1 + sqrt 5) / 2
inline const double kGoldenRatio = 1.6180339887498948482;

}  // namespace latshift
