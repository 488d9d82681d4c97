#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latshift/graph.hpp"
#include "latshift/scalar.hpp"
#include "latshift/sparse_vector.hpp"

namespace latshift {

/// A real parameter that may also be known exactly.
struct Param {
  std::optional<Rational> exact;
  double approx = 0.0;

  Param() = default;
  Param(const Rational& q) : exact(q), approx(q.get_d()) {}  // NOLINT(implicit)
  Param(double x) : approx(x) {}                             // NOLINT(implicit)
  Param(int x) : Param(Rational(x)) {}                       // NOLINT(implicit)

  /// Exact when the text is a decimal or fraction literal.
  static Param parse(std::string_view text);
  std::string str() const;
};

/// A weight value: always available as a complex double, optionally exact.
struct WeightEntry {
  Complex approx;
  std::optional<Rational> exact;

  WeightEntry() = default;
  WeightEntry(const Rational& q) : approx(q.get_d(), 0.0), exact(q) {}  // NOLINT(implicit)
  WeightEntry(Complex z) : approx(z) {}                                // NOLINT(implicit)
};

/// Fallback rule for table-backed weights. `exact` may be empty or return
/// nullopt where no exact value exists.
struct WeightRule {
  std::string name;
  std::function<Complex(const Vertex&)> approx;
  std::function<std::optional<Rational>(const Vertex&)> exact;
};

class WeightFamily {
 public:
  enum class Kind { Constant, GeometricJ, GeometricSum, PolynomialJ, OneCoordinate, Table };

  static WeightFamily constant(Param c);
  /// mu_{i,j} = beta^j
  static WeightFamily geometric_j(Param beta);
  /// mu_{i,j} = beta^{i+j}
  static WeightFamily geometric_sum(Param beta);
  /// mu_{i,j} = (j+1)^{-d}
  static WeightFamily polynomial_j(Param d);
  /// mu_{i,j} = mu_i, looked up in `layers` first, then in `fallback`.
  static WeightFamily one_coordinate(std::map<std::int64_t, WeightEntry> layers,
                                     std::optional<WeightRule> fallback = std::nullopt);
  static WeightFamily table(std::map<std::pair<std::int64_t, std::int64_t>, WeightEntry> entries,
                            std::optional<WeightRule> fallback = std::nullopt);
  static WeightFamily rule(WeightRule r) { return table({}, std::move(r)); }

  /// CSV with columns i,j,re,im (table) or i,re,im (one-coordinate); a
  /// header row is optional.
  static WeightFamily load_table_csv(const std::filesystem::path& path);
  static WeightFamily load_one_coordinate_csv(const std::filesystem::path& path);

  Kind kind() const { return kind_; }
  const Param& param() const { return param_; }
  std::string describe() const;

  /// True when every value this family can produce is an exact rational.
  bool is_exact() const;

  WeightEntry eval(const Vertex& v) const;
  Rational eval_exact(const Vertex& v) const;
  Complex eval_approx(const Vertex& v) const { return eval(v).approx; }
  double abs(const Vertex& v) const;
  /// log|mu_v|, computed without overflow for exact values.
  double log_abs(const Vertex& v) const;

 private:
  struct TableData {
    std::map<std::pair<std::int64_t, std::int64_t>, WeightEntry> entries;
    std::map<std::int64_t, WeightEntry> layers;
    std::optional<WeightRule> fallback;
  };

  WeightFamily(Kind kind, Param p) : kind_(kind), param_(std::move(p)) {}

  Kind kind_;
  Param param_;
  std::shared_ptr<const TableData> table_;
};

/// Evaluates mu_v in the scalar representation S.
template <Scalar S>
S eval_weight(const WeightFamily& family, const Vertex& v);

struct SpaceSpec {
  enum class Kind { Lp, C0 };
  Kind kind = Kind::Lp;
  double p = 2.0;

  static SpaceSpec lp(double p);
  static SpaceSpec c0() { return {Kind::C0, 0.0}; }
  std::string describe() const;
};

/// ||f||_{l^p(V,mu)} = (sum |f(v) mu_v|^p)^{1/p}, or sup |f(v) mu_v| for c0.
template <Scalar S>
double norm(const SparseVector<S>& vec, const WeightFamily& family, SpaceSpec spec);

/// Exact sum of |f(v) mu_v|^p for an integer exponent p >= 1.
Rational norm_pow_exact(const SparseVector<Rational>& vec, const WeightFamily& family, unsigned p);
/// Exact sup |f(v) mu_v|.
Rational sup_norm_exact(const SparseVector<Rational>& vec, const WeightFamily& family);

struct BoundednessReport {
  enum class Verdict { BoundedEvidence, UnboundedEvidence };

  Verdict verdict = Verdict::BoundedEvidence;
  Extent extent;
  /// sup over the extent of |mu_v| / min_{u in Chi(v)} |mu_u|.
  double constant = 0.0;
  std::optional<Rational> constant_exact;
  /// constant restricted to the first half of the extent
  double half_extent_constant = 0.0;
  double growth_factor = 2.0;
  /// (shell, running sup) pairs
  std::vector<std::pair<std::int64_t, double>> trace;
};

std::string to_string(BoundednessReport::Verdict v);

/// Finite-extent evidence for |mu_v| <= C min_{u in Chi(v)} |mu_u|. The
/// verdict is unbounded-evidence when the sup over the full extent exceeds
/// `growth_factor` times the sup over the half extent.
BoundednessReport boundedness_report(const GraphModel& model, const WeightFamily& family, Extent extent,
                                     double growth_factor = 2.0);

}  // namespace latshift
