#include "latshift/rightinv.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "latshift/error.hpp"

namespace latshift {

namespace {

std::size_t tri_index(int i, int s) { return static_cast<std::size_t>(i * (i - 1) / 2 + (s - 1)); }

}  // namespace

AlphaTable::AlphaTable(int m, int n) : m_(m), n_(n), entries_(tri_index(m + 1, 1)) {
  if (m < 1 || n < 1) throw DomainError("alpha table needs m >= 1 and n >= 1");
  std::vector<BigInt> binom(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) binom[static_cast<std::size_t>(l)] = binomial(n, l);
  // Substituting the expansion of R_n e_{i-l, j+l} into the recursion lands
  // every term on the same vertex v_{s, i+j-s+n}, so row i is a combination
  // of the rows above it.
  for (int i = 1; i <= m; ++i) {
    entries_[tri_index(i, i)] = 1;
    for (int s = 1; s < i; ++s) {
      Rational acc = 0;
      for (int l = 1; l <= i - s; ++l)
        acc -= Rational(binom[static_cast<std::size_t>(l)]) * entries_[tri_index(i - l, s)];
      entries_[tri_index(i, s)] = acc;
    }
  }
}

const Rational& AlphaTable::operator()(int i, int s) const {
  if (i < 1 || i > m_ || s < 1 || s > i) throw DomainError("alpha index out of range");
  return entries_[tri_index(i, s)];
}

void AlphaTable::write_csv(std::ostream& os) const {
  os << "i,s,numerator,denominator\n";
  for (int i = 1; i <= m_; ++i)
    for (int s = 1; s <= i; ++s) {
      const auto& a = (*this)(i, s);
      os << i << ',' << s << ',' << a.get_num().get_str() << ',' << a.get_den().get_str() << '\n';
    }
}

AlphaTable alpha_table(int m, int n) { return AlphaTable(m, n); }

template <Scalar S>
SparseVector<S> right_inverse_strip(const SparseVector<S>& vec, int n) {
  const auto& model = vec.model();
  if (model.kind() != ModelKind::Strip && model.kind() != ModelKind::BilateralStrip)
    throw UnsupportedModel("right_inverse_strip needs a strip model, got " + to_string(model));
  const AlphaTable table(model.m(), n);
  SparseVector<S> out(model);
  for (const auto& [v, x] : vec) {
    const int i = static_cast<int>(v.i);
    for (int s = 1; s <= i; ++s) {
      S alpha;
      if constexpr (ScalarTraits<S>::exact)
        alpha = table(i, s);
      else
        alpha = S(table(i, s).get_d());
      out.add(model.vertex(s, v.i + v.j - s + n), S(alpha * x));
    }
  }
  return out;
}

template <Scalar S>
DiagonalBasisParams<S>::DiagonalBasisParams(std::vector<S> values) : values_(std::move(values)) {
  using T = ScalarTraits<S>;
  for (std::size_t a = 0; a < values_.size(); ++a) {
    if (T::is_zero(values_[a])) throw DomainError("diagonal basis parameters must be nonzero");
    if (T::is_zero(S(values_[a] + T::from_int(1))))
      throw DomainError("diagonal basis parameter -1 makes (1 + a)^{-n} undefined");
    for (std::size_t b = 0; b < a; ++b)
      if (T::is_zero(S(values_[a] - values_[b])))
        throw DomainError("diagonal basis parameters must be pairwise distinct");
  }
}

template <Scalar S>
DiagonalBasisParams<S> DiagonalBasisParams<S>::defaults(int top_diagonal) {
  if (top_diagonal < 0) throw DomainError("top diagonal must be nonnegative");
  std::vector<S> values;
  const long denom = 2L * top_diagonal + 3;
  for (long t = 0; t <= top_diagonal; ++t) {
    Rational a = Rational(t, denom) + Rational(1, 2);
    a.canonicalize();
    if constexpr (ScalarTraits<S>::exact)
      values.push_back(a);
    else
      values.push_back(S(a.get_d()));
  }
  return DiagonalBasisParams(std::move(values));
}

template <Scalar S>
SparseVector<S> diagonal_basis_vector(const DiagonalBasisParams<S>& params, int t, int k) {
  if (k < 0 || t < 0 || static_cast<std::size_t>(t) >= params.size())
    throw DomainError("basis index out of range");
  const auto model = GraphModel::quadrant();
  SparseVector<S> out(model);
  S power = ScalarTraits<S>::from_int(1);
  for (int j = 0; j <= k; ++j) {
    out.add(model.vertex(k - j, j), power);
    power *= params[static_cast<std::size_t>(t)];
  }
  return out;
}

template <Scalar S>
std::vector<S> diagonal_coordinates(const DiagonalBasisParams<S>& params, const std::vector<S>& slice) {
  const std::size_t size = slice.size();
  if (size == 0) return {};
  if (params.size() < size)
    throw DomainError("diagonal " + std::to_string(size - 1) + " needs " + std::to_string(size) +
                      " basis parameters, got " + std::to_string(params.size()));
  // sum_t c_t a_t^j = x_j: Bjorck-Pereyra elimination for the dual Vandermonde system
  std::vector<S> c = slice;
  const std::size_t n = size - 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = n; i > k; --i) c[i] = S(c[i] - params[k] * c[i - 1]);
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t i = k + 1; i <= n; ++i) c[i] = S(c[i] / S(params[i] - params[i - k - 1]));
    for (std::size_t i = k; i < n; ++i) c[i] = S(c[i] - c[i + 1]);
  }
  return c;
}

template <Scalar S>
SparseVector<S> right_inverse_quadrant(const SparseVector<S>& vec, int n, const DiagonalBasisParams<S>& params) {
  using T = ScalarTraits<S>;
  const auto model = GraphModel::quadrant();
  if (!(vec.model() == model)) throw UnsupportedModel("right_inverse_quadrant needs a quadrant vector");
  if (n < 0) throw DomainError("power must be nonnegative");

  std::map<std::int64_t, std::vector<S>> slices;
  for (const auto& [v, x] : vec) {
    auto& slice = slices[v.i + v.j];
    slice.resize(static_cast<std::size_t>(v.i + v.j + 1));
    slice[static_cast<std::size_t>(v.j)] = x;
  }

  SparseVector<S> out(model);
  for (auto& [k, slice] : slices) {
    const auto coords = diagonal_coordinates(params, slice);
    for (std::size_t t = 0; t < coords.size(); ++t) {
      if (T::is_zero(coords[t])) continue;
      const S& a = params[t];
      S scale = S(coords[t] / ipow(S(T::from_int(1) + a), n));
      for (std::int64_t j = 0; j <= k + n; ++j) {
        out.add(model.vertex(k + n - j, j), scale);
        scale *= a;
      }
    }
  }
  return out;
}

SparseVector<Rational> hc_approximant(const GraphModel& model, const std::vector<ScheduleStep>& schedule,
                                      const std::optional<DiagonalBasisParams<Rational>>& params) {
  SparseVector<Rational> out(model);
  const bool strip = model.kind() == ModelKind::Strip || model.kind() == ModelKind::BilateralStrip;
  const bool quadrant = model.kind() == ModelKind::Quadrant;
  if (!strip && !quadrant) throw UnsupportedModel("no right inverse implemented on " + to_string(model));

  int previous = 0;
  std::int64_t top = 0;
  for (const auto& step : schedule) {
    if (step.power <= previous) throw DomainError("schedule powers must be positive and strictly increasing");
    previous = step.power;
    step.target.require_same_model(out);
    for (const auto& [v, x] : step.target) top = std::max(top, v.i + v.j);
  }
  std::optional<DiagonalBasisParams<Rational>> basis = params;
  if (quadrant && !basis) basis = DiagonalBasisParams<Rational>::defaults(static_cast<int>(top));

  for (const auto& step : schedule) {
    if (strip)
      out += right_inverse_strip(step.target, step.power);
    else
      out += right_inverse_quadrant(step.target, step.power, *basis);
  }
  return out;
}

template class DiagonalBasisParams<Rational>;
template class DiagonalBasisParams<Complex>;

#define LATSHIFT_INSTANTIATE(S)                                                                           \
  template SparseVector<S> right_inverse_strip<S>(const SparseVector<S>&, int);                           \
  template SparseVector<S> diagonal_basis_vector<S>(const DiagonalBasisParams<S>&, int, int);             \
  template std::vector<S> diagonal_coordinates<S>(const DiagonalBasisParams<S>&, const std::vector<S>&); \
  template SparseVector<S> right_inverse_quadrant<S>(const SparseVector<S>&, int, const DiagonalBasisParams<S>&);

LATSHIFT_INSTANTIATE(Rational)
LATSHIFT_INSTANTIATE(Complex)

#undef LATSHIFT_INSTANTIATE

}  // namespace latshift
