#include "latshift/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "latshift/error.hpp"
#include "latshift/graph.hpp"

namespace latshift {

std::string to_string(EigenFamily f) { return f == EigenFamily::Quadrant ? "quadrant" : "skip"; }

namespace {

bool at_least_one(const Rational& r) { return r >= 1; }
bool at_least_one(const Complex& r) { return r.imag() == 0.0 && r.real() >= 1.0; }

}  // namespace

template <Scalar S>
EigenPair<S> eigenvector_quadrant(const S& r, const S& s, std::int64_t extent) {
  using T = ScalarTraits<S>;
  if (!at_least_one(r)) throw DomainError("eigenvector_quadrant needs real r >= 1");
  if (T::is_zero(s)) throw DomainError("s = 0 gives the trivial eigenvalue 0; not an eigen-candidate");
  if (extent < 0) throw DomainError("extent must be nonnegative");
  const auto model = GraphModel::quadrant();
  SparseVector<S> vec(model);
  const S rs = r * s;
  S diag = T::from_int(1);  // (rs)^{i+j}
  for (std::int64_t d = 0; d <= extent; ++d) {
    S value = diag;  // j = 0: r^{d} s^{d}
    for (std::int64_t j = 0; j <= d; ++j) {
      vec.add(model.vertex(d - j, j), value);
      value *= r;  // one more unit of j adds r^{2j} / r^{j} = r
    }
    diag *= rs;
  }
  const S lambda = s * (r * r + r);
  return EigenPair<S>{EigenFamily::Quadrant, std::move(vec), lambda, extent, r, s};
}

template <Scalar S>
EigenPair<S> eigenvector_skip(const S& s, std::int64_t extent) {
  using T = ScalarTraits<S>;
  if (extent < 0) throw DomainError("extent must be nonnegative");
  const auto model = GraphModel::skip_path();
  SparseVector<S> vec(model);
  S value = s;
  for (std::int64_t n = 1; n <= extent; ++n) {
    vec.add(model.vertex(n), value);
    value *= s;
  }
  const S lambda = s * (T::from_int(1) + s);
  return EigenPair<S>{EigenFamily::Skip, std::move(vec), lambda, extent, T::from_int(1), s};
}

template <Scalar S>
Magnitude<S> eigen_residual(const GraphModel& model, const EigenPair<S>& pair, std::int64_t margin,
                            const WeightFamily* weight) {
  using T = ScalarTraits<S>;
  const auto expected = pair.family == EigenFamily::Quadrant ? ModelKind::Quadrant : ModelKind::SkipPath;
  if (model.kind() != expected || !(pair.vec.model() == model))
    throw DomainError("eigen pair of family " + to_string(pair.family) + " does not live on " + to_string(model));
  if (margin < 1 || margin > pair.extent) throw DomainError("interior margin must lie in [1, extent]");

  Magnitude<S> worst{};
  for (const auto& v : truncate(model, Extent{pair.extent - margin})) {
    S image{};
    for (const auto& u : children(model, v)) image += pair.vec.at(u);
    S diff = image - pair.lambda * pair.vec.at(v);
    if (weight) diff *= eval_weight<S>(*weight, v);
    auto m = T::abs(diff);
    if (m > worst) worst = m;
  }
  return worst;
}

RegionReport gs_region_scan(const WeightFamily& family, const std::vector<double>& r_grid,
                            const std::vector<Complex>& s_grid, std::int64_t extent, Exec exec) {
  RegionReport report;
  report.extent = extent;
  if (r_grid.empty() || s_grid.empty()) return report;
  for (double r : r_grid)
    if (!(r >= 1.0)) throw DomainError("r grid values must be >= 1");
  const auto mixing = quadrant_mixing_test(family, extent, kDefaultMargin, exec);
  report.q_hat = mixing.find("q_hat")->value;

  const auto count = static_cast<std::int64_t>(r_grid.size() * s_grid.size());
  report.points = kernels::map_indices<RegionPoint>(
      count,
      [&](std::int64_t t) {
        const double r = r_grid[static_cast<std::size_t>(t) / s_grid.size()];
        const Complex s = s_grid[static_cast<std::size_t>(t) % s_grid.size()];
        RegionPoint pt{r, s, false, 0.0, "outside"};
        pt.in_norm = std::abs(s) * report.q_hat * r * r < 1.0;
        pt.abs_lambda = std::abs(s) * (r * r + r);
        if (pt.in_norm && pt.abs_lambda < 1.0) pt.tag = "sub-unit";
        if (pt.in_norm && pt.abs_lambda > 1.0) pt.tag = "super-unit";
        return pt;
      },
      exec);
  for (const auto& pt : report.points) {
    report.any_sub_unit |= pt.tag == "sub-unit";
    report.any_super_unit |= pt.tag == "super-unit";
  }
  report.verdict = report.any_sub_unit && report.any_super_unit ? Verdict::MixingEvidence : Verdict::Inconclusive;
  return report;
}

std::size_t eigen_span_rank(const std::vector<std::pair<Rational, Rational>>& points, std::int64_t box) {
  const auto cells = truncate(GraphModel::quadrant(), Extent{box});
  std::vector<std::vector<Rational>> rows;
  rows.reserve(points.size());
  for (const auto& [r, s] : points) {
    std::vector<Rational> row;
    row.reserve(cells.size());
    for (const auto& v : cells) row.push_back(ipow(r, v.i + 2 * v.j) * ipow(s, v.i + v.j));
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cells.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cells.size(); ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

#define LATSHIFT_INSTANTIATE(S)                                                                      \
  template EigenPair<S> eigenvector_quadrant<S>(const S&, const S&, std::int64_t);                   \
  template EigenPair<S> eigenvector_skip<S>(const S&, std::int64_t);                                 \
  template Magnitude<S> eigen_residual<S>(const GraphModel&, const EigenPair<S>&, std::int64_t, \
                                          const WeightFamily*);

LATSHIFT_INSTANTIATE(Rational)
LATSHIFT_INSTANTIATE(Complex)

#undef LATSHIFT_INSTANTIATE

}  // namespace latshift
