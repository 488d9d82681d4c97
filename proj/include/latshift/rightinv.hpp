#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "latshift/graph.hpp"
#include "latshift/sparse_vector.hpp"

namespace latshift {

/// Coefficients of R_n on a strip of height m:
///   R_n e_{i,j} = sum_{s=1}^{i} alpha(i, s) e_{s, i+j-s+n},
/// independent of j. Lower triangular with unit diagonal.
class AlphaTable {
 public:
  AlphaTable(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  /// 1 <= s <= i <= m
  const Rational& operator()(int i, int s) const;

  /// CSV rows i,s,numerator,denominator with a header line.
  void write_csv(std::ostream& os) const;

 private:
  int m_;
  int n_;
  std::vector<Rational> entries_;  // row-major lower triangle
};

/// Builds the table by unrolling
///   R_n e_{i,j} = e_{i,j+n} - sum_{l=1}^{i-1} C(n,l) R_n e_{i-l, j+l}.
AlphaTable alpha_table(int m, int n);

/// R_n on Strip(m) or BilateralStrip(m): B^n R_n f = f exactly.
template <Scalar S>
SparseVector<S> right_inverse_strip(const SparseVector<S>& vec, int n);

/// Pairwise distinct nonzero parameters a_0..a_K of the anti-diagonal basis
/// f_t^k = sum_{j=0}^k a_t^j e_{k-j,j}.
template <Scalar S>
class DiagonalBasisParams {
 public:
  explicit DiagonalBasisParams(std::vector<S> values);

  /// a_t = t/(2K+3) + 1/2 for t = 0..K; all lie in [1/2, 1).
  static DiagonalBasisParams defaults(int top_diagonal);

  const std::vector<S>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const S& operator[](std::size_t t) const { return values_[t]; }

 private:
  std::vector<S> values_;
};

/// The basis vector f_t^k.
template <Scalar S>
SparseVector<S> diagonal_basis_vector(const DiagonalBasisParams<S>& params, int t, int k);

/// Coordinates c_t of an anti-diagonal slice x (x[j] = coefficient of
/// e_{k-j,j}) in the basis {f_t^k}_{t<=k}: solves sum_t c_t a_t^j = x_j.
template <Scalar S>
std::vector<S> diagonal_coordinates(const DiagonalBasisParams<S>& params, const std::vector<S>& slice);

/// R_n on the quadrant through the anti-diagonal basis:
///   R_n f_t^k = (1 + a_t)^{-n} sum_{j=0}^{k+n} a_t^j e_{k+n-j, j}.
template <Scalar S>
SparseVector<S> right_inverse_quadrant(const SparseVector<S>& vec, int n, const DiagonalBasisParams<S>& params);

/// Float solves become unreliable past this many parameters.
inline constexpr std::size_t kVandermondeFloatWarnSize = 16;

struct ScheduleStep {
  int power;
  SparseVector<Rational> target;
};

/// f = sum_k R_{n_k} g_k with the model's right inverse. Powers must be
/// strictly increasing. Quadrant schedules use `params` or the defaults
/// sized to the highest diagonal.
SparseVector<Rational> hc_approximant(const GraphModel& model, const std::vector<ScheduleStep>& schedule,
                                      const std::optional<DiagonalBasisParams<Rational>>& params = std::nullopt);

}  // namespace latshift
