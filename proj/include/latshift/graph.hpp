#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latshift {

enum class ModelKind : std::uint8_t {
  Strip,           // [1..m] x N, 1-based
  BilateralStrip,  // [1..m] x Z
  Quadrant,        // N0 x N0, 0-based
  HalfPlane,       // layer i >= 0, j in Z
  PathCycle,       // N with the extra edge v2 -> v1
  SkipPath,        // v_k -> v_{k+1}, v_k -> v_{k+2}
  DiamondChain,    // v_{k,k} -> {v_{k+1,k}, v_{k,k+1}} -> v_{k+1,k+1}
};

std::string to_string(ModelKind kind);

/// True for the one-index families (PathCycle, SkipPath).
constexpr bool is_path(ModelKind kind) {
  return kind == ModelKind::PathCycle || kind == ModelKind::SkipPath;
}

/// A vertex of one of the built-in models. Path vertices v_k are stored as
/// (i = 0, j = k) so that j-dependent weight rules apply to them unchanged.
struct Vertex {
  ModelKind kind = ModelKind::Strip;
  std::int64_t i = 0;
  std::int64_t j = 0;

  static constexpr Vertex lattice(ModelKind kind, std::int64_t i, std::int64_t j) {
    return {kind, i, j};
  }
  static constexpr Vertex path(ModelKind kind, std::int64_t k) { return {kind, 0, k}; }

  constexpr std::int64_t k() const { return j; }

  auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);

class GraphModel {
 public:
  static GraphModel strip(int m);
  static GraphModel bilateral_strip(int m);
  static GraphModel quadrant() { return GraphModel(ModelKind::Quadrant, 0); }
  static GraphModel half_plane() { return GraphModel(ModelKind::HalfPlane, 0); }
  static GraphModel path_cycle() { return GraphModel(ModelKind::PathCycle, 0); }
  static GraphModel skip_path() { return GraphModel(ModelKind::SkipPath, 0); }
  static GraphModel diamond_chain() { return GraphModel(ModelKind::DiamondChain, 0); }

  ModelKind kind() const { return kind_; }
  /// Strip height; zero for models without one.
  int m() const { return m_; }

  bool admissible(const Vertex& v) const;
  /// Throws DomainError unless v is admissible.
  void require(const Vertex& v) const;

  Vertex vertex(std::int64_t i, std::int64_t j) const { return Vertex::lattice(kind_, i, j); }
  Vertex vertex(std::int64_t k) const { return Vertex::path(kind_, k); }

  bool operator==(const GraphModel&) const = default;

 private:
  GraphModel(ModelKind kind, int m) : kind_(kind), m_(m) {}

  ModelKind kind_;
  int m_;
};

std::string to_string(const GraphModel& model);

/// Finite box, one radius interpreted per model:
///   Strip 1 <= j <= bound, BilateralStrip |j| <= bound, Quadrant i+j <= bound,
///   HalfPlane i <= bound and |j| <= bound, paths 1 <= k <= bound,
///   DiamondChain max(i, j) <= bound.
struct Extent {
  std::int64_t bound = 0;
};

/// Which shell of the extent a vertex belongs to (the smallest bound whose
/// box contains it).
std::int64_t shell(const GraphModel& model, const Vertex& v);

// Children and parents are returned sorted and duplicate-free.
std::vector<Vertex> children(const GraphModel& model, const Vertex& v);
std::vector<Vertex> parents(const GraphModel& model, const Vertex& v);
std::vector<Vertex> children_n(const GraphModel& model, const Vertex& v, int n);

/// Row-major (by i, then j) enumeration of the box.
std::vector<Vertex> truncate(const GraphModel& model, Extent extent);

/// A vertex v with |Par(v)| > 1 and Chi(Par(v)) = {v}. Its presence rules out
/// hypercyclicity of B for every weight.
std::optional<Vertex> structural_obstruction(const GraphModel& model, Extent search_bound);

}  // namespace latshift
