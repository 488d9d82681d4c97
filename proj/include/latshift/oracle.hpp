#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "latshift/graph.hpp"
#include "latshift/kernels.hpp"
#include "latshift/sparse_vector.hpp"

namespace latshift {

/// Dense 0/1 matrix of P_box B P_box: entry (u, v) = 1 iff v in Chi(u).
/// Rows are bit-packed; the ordering is graph::truncate's.
class TruncatedMatrix {
 public:
  static constexpr std::size_t kMaxVertices = 20000;

  TruncatedMatrix(const GraphModel& model, Extent extent);

  const GraphModel& model() const { return model_; }
  Extent extent() const { return extent_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  bool entry(std::size_t row, std::size_t col) const {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
  }
  /// Position of v in vertices(), or size() when v lies outside the box.
  std::size_t index_of(const Vertex& v) const;

  /// y = M x, with M's rows processed serially or in an OpenMP loop.
  template <Scalar S>
  std::vector<S> multiply(const std::vector<S>& x, Exec exec) const;

 private:
  GraphModel model_;
  Extent extent_;
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

TruncatedMatrix truncated_matrix(const GraphModel& model, Extent extent);

/// M^n x for a vector supported inside the matrix box.
template <Scalar S>
SparseVector<S> matrix_power_apply(const TruncatedMatrix& mat, const SparseVector<S>& vec, int n,
                                   Exec exec = Exec::Parallel);

/// Max |oracle - shift| for B^n vec, where the oracle box is `extent`
/// enlarged by n and the shift side is power_closed (power_apply on models
/// without a closed form). vec must lie inside `extent`.
template <Scalar S>
Magnitude<S> equivalence_check(const GraphModel& model, const SparseVector<S>& vec, int n, Extent extent,
                               Exec exec = Exec::Parallel);

}  // namespace latshift
