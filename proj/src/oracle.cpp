#include "latshift/oracle.hpp"

#include <bit>

#include <omp.h>

#include "latshift/error.hpp"
#include "latshift/shift.hpp"

namespace latshift {

int kernels::max_threads() { return omp_get_max_threads(); }

TruncatedMatrix::TruncatedMatrix(const GraphModel& model, Extent extent)
    : model_(model), extent_(extent), vertices_(truncate(model, extent)) {
  if (vertices_.size() > kMaxVertices)
    throw DomainError("oracle box holds " + std::to_string(vertices_.size()) + " vertices; limit is " +
                      std::to_string(kMaxVertices));
  for (std::size_t t = 0; t < vertices_.size(); ++t) index_.emplace(vertices_[t], t);
  words_ = (vertices_.size() + 63) / 64;
  bits_.assign(words_ * vertices_.size(), 0);
  for (std::size_t row = 0; row < vertices_.size(); ++row)
    for (const auto& c : children(model_, vertices_[row])) {
      const auto col = index_of(c);
      if (col < vertices_.size()) bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
    }
}

std::size_t TruncatedMatrix::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? vertices_.size() : it->second;
}

template <Scalar S>
std::vector<S> TruncatedMatrix::multiply(const std::vector<S>& x, Exec exec) const {
  const auto n = static_cast<std::int64_t>(vertices_.size());
  std::vector<S> y(vertices_.size());
  auto row_kernel = [&](std::int64_t row) {
    S acc{};
    const std::uint64_t* words = bits_.data() + static_cast<std::size_t>(row) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = words[w];
      while (bits) {
        const auto col = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        acc += x[col];
        bits &= bits - 1;
      }
    }
    y[static_cast<std::size_t>(row)] = acc;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t row = 0; row < n; ++row) row_kernel(row);
  } else {
    for (std::int64_t row = 0; row < n; ++row) row_kernel(row);
  }
  return y;
}

TruncatedMatrix truncated_matrix(const GraphModel& model, Extent extent) { return TruncatedMatrix(model, extent); }

template <Scalar S>
SparseVector<S> matrix_power_apply(const TruncatedMatrix& mat, const SparseVector<S>& vec, int n, Exec exec) {
  if (n < 0) throw DomainError("power must be nonnegative");
  if (!(vec.model() == mat.model())) throw DomainError("vector and oracle matrix live on different models");
  std::vector<S> x(mat.size());
  for (const auto& [v, value] : vec) {
    const auto idx = mat.index_of(v);
    if (idx == mat.size()) throw DomainError("support vertex " + to_string(v) + " escapes the oracle box");
    x[idx] = value;
  }
  for (int step = 0; step < n; ++step) x = mat.multiply(x, exec);
  SparseVector<S> out(vec.model());
  for (std::size_t t = 0; t < x.size(); ++t) out.add(mat.vertices()[t], x[t]);
  return out;
}

template <Scalar S>
Magnitude<S> equivalence_check(const GraphModel& model, const SparseVector<S>& vec, int n, Extent extent,
                               Exec exec) {
  for (const auto& [v, value] : vec)
    if (shell(model, v) > extent.bound) throw DomainError("vector support exceeds the requested extent");
  const TruncatedMatrix mat(model, Extent{extent.bound + n});
  const auto expected = matrix_power_apply(mat, vec, n, exec);
  const bool closed = model.kind() != ModelKind::SkipPath && model.kind() != ModelKind::DiamondChain;
  const auto actual = closed ? power_closed(model, vec, n) : power_apply(model, vec, n);
  return max_deviation(expected, actual);
}

template std::vector<Rational> TruncatedMatrix::multiply<Rational>(const std::vector<Rational>&, Exec) const;
template std::vector<Complex> TruncatedMatrix::multiply<Complex>(const std::vector<Complex>&, Exec) const;

#define LATSHIFT_INSTANTIATE(S)                                                                  \
  template SparseVector<S> matrix_power_apply<S>(const TruncatedMatrix&, const SparseVector<S>&, int, Exec); \
  template Magnitude<S> equivalence_check<S>(const GraphModel&, const SparseVector<S>&, int, Extent, Exec);

LATSHIFT_INSTANTIATE(Rational)
LATSHIFT_INSTANTIATE(Complex)

#undef LATSHIFT_INSTANTIATE

}  // namespace latshift
