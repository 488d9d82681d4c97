#pragma once

#include <cstdint>
#include <map>

#include "latshift/graph.hpp"
#include "latshift/sparse_vector.hpp"

namespace latshift {

/// (Bf)(v) = sum_{u in Chi(v)} f(u); equivalently B e_u = sum_{p in Par(u)} e_p.
template <Scalar S>
SparseVector<S> apply(const GraphModel& model, const SparseVector<S>& vec);

/// B^n f by n-fold application; n = 0 is the identity.
template <Scalar S>
SparseVector<S> power_apply(const GraphModel& model, const SparseVector<S>& vec, int n);

/// B^n f through the binomial closed forms:
///   strips     B^n e_{i,j} = sum_l C(n,l) e_{i-l, j-(n-l)}, out-of-range terms dropped
///   quadrant   l from max(0, n-j) to min(n, i)
///   half-plane l from 0 to min(n, i)
///   path-cycle the two parity formulas for B^{2t-1} and B^{2t}
/// Throws UnsupportedModel for SkipPath and DiamondChain.
template <Scalar S>
SparseVector<S> power_closed(const GraphModel& model, const SparseVector<S>& vec, int n);

/// Restriction f -> f|_V from BilateralStrip(m) to Strip(m) or from
/// HalfPlane to Quadrant. Intertwines the two shifts: R B~ = B R.
template <Scalar S>
SparseVector<S> restrict_to(const SparseVector<S>& vec, const GraphModel& target);

/// Half-plane (or quadrant) vector grouped by anti-diagonals k = i + j:
/// blocks[k][i] = f(v_{i, k-i}).
template <Scalar S>
struct DiagonalBlocks {
  ModelKind model = ModelKind::HalfPlane;
  std::map<std::int64_t, std::map<std::int64_t, S>> blocks;

  bool operator==(const DiagonalBlocks&) const = default;
};

template <Scalar S>
DiagonalBlocks<S> diagonal_regroup(const SparseVector<S>& vec);

template <Scalar S>
SparseVector<S> diagonal_ungroup(const DiagonalBlocks<S>& blocks);

/// Generalized shift B_{I+B0}: output block k = (I + B0)(block k+1), where
/// B0 is the unweighted unilateral backward shift on the layer index.
template <Scalar S>
DiagonalBlocks<S> generalized_shift_apply(const DiagonalBlocks<S>& blocks);

}  // namespace latshift
