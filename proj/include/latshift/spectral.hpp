#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latshift/criteria.hpp"
#include "latshift/kernels.hpp"
#include "latshift/space.hpp"
#include "latshift/sparse_vector.hpp"

namespace latshift {

enum class EigenFamily { Quadrant, Skip };

std::string to_string(EigenFamily f);

/// A truncated eigenvector together with its closed-form eigenvalue.
template <Scalar S>
struct EigenPair {
  EigenFamily family;
  SparseVector<S> vec;
  S lambda;
  std::int64_t extent;
  S r;  // unused (one) for the skip family
  S s;
};

/// f_{r,s}(v_{i,j}) = r^{i+2j} s^{i+j} for i+j <= D; lambda = s(r^2 + r).
/// Requires r >= 1 (real) and s != 0.
template <Scalar S>
EigenPair<S> eigenvector_quadrant(const S& r, const S& s, std::int64_t extent);

/// f_s(v_n) = s^n for 1 <= n <= N on the skip-edge path; lambda = s(1 + s).
template <Scalar S>
EigenPair<S> eigenvector_skip(const S& s, std::int64_t extent);

/// max over interior vertices of |(B vec)(v) - lambda vec(v)| (times |mu_v|
/// when a weight is given). Interior means shell(v) <= extent - margin.
template <Scalar S>
Magnitude<S> eigen_residual(const GraphModel& model, const EigenPair<S>& pair, std::int64_t margin,
                            const WeightFamily* weight = nullptr);

struct RegionPoint {
  double r;
  Complex s;
  bool in_norm;       // |s| q^ r^2 < 1
  double abs_lambda;  // |s| (r^2 + r)
  std::string tag;    // sub-unit | super-unit | outside
};

struct RegionReport {
  Verdict verdict = Verdict::Inconclusive;
  double q_hat = 0.0;
  std::int64_t extent = 0;
  std::vector<RegionPoint> points;
  bool any_sub_unit = false;
  bool any_super_unit = false;
};

/// Marks, for every grid point (r, s), whether f_{r,s} belongs to the space
/// (using the limsup estimate q^ of the family) and on which side of the
/// unit circle its eigenvalue lies. Both sides populated gives
/// mixing-evidence.
RegionReport gs_region_scan(const WeightFamily& family, const std::vector<double>& r_grid,
                            const std::vector<Complex>& s_grid, std::int64_t extent, Exec exec = Exec::Parallel);

/// Exact rank of the truncations of f_{r_t,s_t} to the box i+j <= K.
std::size_t eigen_span_rank(const std::vector<std::pair<Rational, Rational>>& points, std::int64_t box);

}  // namespace latshift
