#include "latshift/shift.hpp"

#include <algorithm>

#include "latshift/error.hpp"

namespace latshift {

SparseVector<Complex> to_float(const SparseVector<Rational>& vec) {
  SparseVector<Complex> out(vec.model());
  for (const auto& [v, x] : vec) out.add(v, Complex(x.get_d(), 0.0));
  return out;
}

namespace {

template <Scalar S>
void require_model(const GraphModel& model, const SparseVector<S>& vec) {
  if (!(vec.model() == model))
    throw DomainError("vector lives on " + to_string(vec.model()) + ", operator on " + to_string(model));
}

template <Scalar S>
SparseVector<S> path_cycle_power(const GraphModel& model, const SparseVector<S>& vec, int n) {
  SparseVector<S> out(model);
  const std::int64_t t = (n + 1) / 2;
  const bool odd = n % 2 == 1;
  for (const auto& [v, x] : vec) {
    const auto k = v.k();
    if (odd) {
      // B^{2t-1} f = (sum_{j<=t} f_{2j}, sum_{j<=t+1} f_{2j-1}, f_{2t+2}, ...)
      if (k % 2 == 0 && k <= 2 * t) out.add(model.vertex(1), x);
      if (k % 2 == 1 && k <= 2 * t + 1) out.add(model.vertex(2), x);
      if (k >= 2 * t + 2) out.add(model.vertex(k - n), x);
    } else {
      // B^{2t} f = (sum_{j<=t+1} f_{2j-1}, sum_{j<=t+1} f_{2j}, f_{2t+3}, ...)
      if (k % 2 == 1 && k <= 2 * t + 1) out.add(model.vertex(1), x);
      if (k % 2 == 0 && k <= 2 * t + 2) out.add(model.vertex(2), x);
      if (k >= 2 * t + 3) out.add(model.vertex(k - n), x);
    }
  }
  return out;
}

}  // namespace

template <Scalar S>
SparseVector<S> apply(const GraphModel& model, const SparseVector<S>& vec) {
  require_model(model, vec);
  SparseVector<S> out(model);
  for (const auto& [u, x] : vec)
    for (const auto& p : parents(model, u)) out.add(p, x);
  return out;
}

template <Scalar S>
SparseVector<S> power_apply(const GraphModel& model, const SparseVector<S>& vec, int n) {
  if (n < 0) throw DomainError("power must be nonnegative");
  require_model(model, vec);
  SparseVector<S> out = vec;
  for (int step = 0; step < n && !out.empty(); ++step) out = latshift::apply(model, out);
  return out;
}

template <Scalar S>
SparseVector<S> power_closed(const GraphModel& model, const SparseVector<S>& vec, int n) {
  using T = ScalarTraits<S>;
  if (n < 0) throw DomainError("power must be nonnegative");
  require_model(model, vec);
  const auto kind = model.kind();
  if (kind == ModelKind::SkipPath || kind == ModelKind::DiamondChain)
    throw UnsupportedModel("no closed form for B^n on " + to_string(model) + "; use power_apply");
  if (n == 0) return vec;
  if (kind == ModelKind::PathCycle) return path_cycle_power(model, vec, n);

  std::vector<S> coeff(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) coeff[static_cast<std::size_t>(l)] = T::from_integer(binomial(n, l));

  SparseVector<S> out(model);
  for (const auto& [v, x] : vec) {
    std::int64_t lo = 0;
    std::int64_t hi = n;
    switch (kind) {
      case ModelKind::Strip:
        hi = std::min<std::int64_t>(n, v.i - 1);   // i - l >= 1
        lo = std::max<std::int64_t>(0, n - v.j + 1);  // j - (n - l) >= 1
        break;
      case ModelKind::BilateralStrip:
        hi = std::min<std::int64_t>(n, v.i - 1);
        break;
      case ModelKind::Quadrant:
        lo = std::max<std::int64_t>(0, n - v.j);
        hi = std::min<std::int64_t>(n, v.i);
        break;
      case ModelKind::HalfPlane:
        hi = std::min<std::int64_t>(n, v.i);
        break;
      default:
        break;
    }
    for (auto l = lo; l <= hi; ++l)
      out.add(model.vertex(v.i - l, v.j - (n - l)), S(coeff[static_cast<std::size_t>(l)] * x));
  }
  return out;
}

template <Scalar S>
SparseVector<S> restrict_to(const SparseVector<S>& vec, const GraphModel& target) {
  const auto& source = vec.model();
  const bool strips = source.kind() == ModelKind::BilateralStrip && target.kind() == ModelKind::Strip &&
                      source.m() == target.m();
  const bool planes = source.kind() == ModelKind::HalfPlane && target.kind() == ModelKind::Quadrant;
  if (!strips && !planes)
    throw DomainError("cannot restrict " + to_string(source) + " to " + to_string(target));
  SparseVector<S> out(target);
  for (const auto& [v, x] : vec) {
    const auto w = target.vertex(v.i, v.j);
    if (target.admissible(w)) out.add(w, x);
  }
  return out;
}

template <Scalar S>
DiagonalBlocks<S> diagonal_regroup(const SparseVector<S>& vec) {
  const auto kind = vec.model().kind();
  if (kind != ModelKind::HalfPlane && kind != ModelKind::Quadrant)
    throw DomainError("diagonal regrouping needs a half-plane or quadrant vector");
  DiagonalBlocks<S> out;
  out.model = kind;
  for (const auto& [v, x] : vec) out.blocks[v.i + v.j][v.i] = x;
  return out;
}

template <Scalar S>
SparseVector<S> diagonal_ungroup(const DiagonalBlocks<S>& blocks) {
  const auto model = blocks.model == ModelKind::Quadrant ? GraphModel::quadrant() : GraphModel::half_plane();
  SparseVector<S> out(model);
  for (const auto& [k, block] : blocks.blocks)
    for (const auto& [i, x] : block) out.add(model.vertex(i, k - i), x);
  return out;
}

template <Scalar S>
DiagonalBlocks<S> generalized_shift_apply(const DiagonalBlocks<S>& blocks) {
  using T = ScalarTraits<S>;
  DiagonalBlocks<S> out;
  out.model = blocks.model;
  const bool quadrant = blocks.model == ModelKind::Quadrant;
  auto accumulate = [&](std::int64_t k, std::int64_t i, const S& x) {
    if (i < 0 || (quadrant && (k < 0 || i > k))) return;
    auto& block = out.blocks[k];
    auto [it, inserted] = block.try_emplace(i, x);
    if (!inserted) {
      it->second += x;
      if (T::is_zero(it->second)) block.erase(it);
    }
    if (block.empty()) out.blocks.erase(k);
  };
  for (const auto& [k_plus_one, block] : blocks.blocks) {
    const auto k = k_plus_one - 1;
    for (const auto& [i, x] : block) {
      accumulate(k, i, x);      // identity part
      accumulate(k, i - 1, x);  // (B0 x)_{i-1} = x_i
    }
  }
  return out;
}

#define LATSHIFT_INSTANTIATE(S)                                                           \
  template SparseVector<S> apply<S>(const GraphModel&, const SparseVector<S>&);           \
  template SparseVector<S> power_apply<S>(const GraphModel&, const SparseVector<S>&, int); \
  template SparseVector<S> power_closed<S>(const GraphModel&, const SparseVector<S>&, int); \
  template SparseVector<S> restrict_to<S>(const SparseVector<S>&, const GraphModel&);     \
  template DiagonalBlocks<S> diagonal_regroup<S>(const SparseVector<S>&);                 \
  template SparseVector<S> diagonal_ungroup<S>(const DiagonalBlocks<S>&);                 \
  template DiagonalBlocks<S> generalized_shift_apply<S>(const DiagonalBlocks<S>&);

LATSHIFT_INSTANTIATE(Rational)
LATSHIFT_INSTANTIATE(Complex)

#undef LATSHIFT_INSTANTIATE

}  // namespace latshift
