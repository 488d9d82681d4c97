#pragma once

#include <map>
#include <utility>

#include "latshift/error.hpp"
#include "latshift/graph.hpp"
#include "latshift/scalar.hpp"

namespace latshift {

/// Finitely supported function V -> S on one graph model. Zero values are
/// never stored, so two vectors are equal iff their entry maps are equal.
template <Scalar S>
class SparseVector {
 public:
  using Traits = ScalarTraits<S>;
  using Map = std::map<Vertex, S>;

  explicit SparseVector(GraphModel model) : model_(model) {}

  static SparseVector unit(const GraphModel& model, const Vertex& v) {
    SparseVector out(model);
    out.add(v, Traits::from_int(1));
    return out;
  }

  const GraphModel& model() const { return model_; }
  const Map& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  S at(const Vertex& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? S{} : it->second;
  }

  void add(const Vertex& v, const S& value) {
    if (Traits::is_zero(value)) return;
    model_.require(v);
    auto [it, inserted] = entries_.try_emplace(v, value);
    if (!inserted) {
      it->second += value;
      if (Traits::is_zero(it->second)) entries_.erase(it);
    }
  }

  void set(const Vertex& v, const S& value) {
    model_.require(v);
    if (Traits::is_zero(value))
      entries_.erase(v);
    else
      entries_[v] = value;
  }

  void add_scaled(const SparseVector& other, const S& factor) {
    require_same_model(other);
    if (Traits::is_zero(factor)) return;
    for (const auto& [v, x] : other.entries_) add(v, S(x * factor));
  }

  SparseVector scaled(const S& factor) const {
    SparseVector out(model_);
    out.add_scaled(*this, factor);
    return out;
  }

  SparseVector& operator+=(const SparseVector& other) {
    add_scaled(other, Traits::from_int(1));
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    add_scaled(other, Traits::from_int(-1));
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }

  bool operator==(const SparseVector& other) const {
    return model_ == other.model_ && entries_ == other.entries_;
  }

  void require_same_model(const SparseVector& other) const {
    if (!(model_ == other.model_))
      throw DomainError("model mismatch: " + to_string(model_) + " vs " + to_string(other.model_));
  }

 private:
  GraphModel model_;
  Map entries_;
};

/// Largest |a(v) - b(v)| over the union of supports.
template <Scalar S>
Magnitude<S> max_deviation(const SparseVector<S>& a, const SparseVector<S>& b) {
  Magnitude<S> best{};
  auto diff = a - b;
  for (const auto& [v, x] : diff) {
    auto m = ScalarTraits<S>::abs(x);
    if (m > best) best = m;
  }
  return best;
}

/// Converts an exact vector to the floating representation.
SparseVector<Complex> to_float(const SparseVector<Rational>& vec);

}  // namespace latshift
