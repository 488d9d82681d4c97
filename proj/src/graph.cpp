#include "latshift/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "latshift/error.hpp"

namespace latshift {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Strip: return "strip";
    case ModelKind::BilateralStrip: return "bistrip";
    case ModelKind::Quadrant: return "quadrant";
    case ModelKind::HalfPlane: return "halfplane";
    case ModelKind::PathCycle: return "pathcycle";
    case ModelKind::SkipPath: return "skippath";
    case ModelKind::DiamondChain: return "diamond";
  }
  return "?";
}

std::string to_string(const Vertex& v) {
  if (is_path(v.kind)) return "v_" + std::to_string(v.k());
  return "v_{" + std::to_string(v.i) + "," + std::to_string(v.j) + "}";
}

GraphModel GraphModel::strip(int m) {
  if (m < 1) throw DomainError("strip height must be positive");
  return GraphModel(ModelKind::Strip, m);
}

GraphModel GraphModel::bilateral_strip(int m) {
  if (m < 1) throw DomainError("strip height must be positive");
  return GraphModel(ModelKind::BilateralStrip, m);
}

std::string to_string(const GraphModel& model) {
  switch (model.kind()) {
    case ModelKind::Strip:
    case ModelKind::BilateralStrip:
      return to_string(model.kind()) + ":" + std::to_string(model.m());
    default:
      return to_string(model.kind());
  }
}

bool GraphModel::admissible(const Vertex& v) const {
  if (v.kind != kind_) return false;
  switch (kind_) {
    case ModelKind::Strip: return v.i >= 1 && v.i <= m_ && v.j >= 1;
    case ModelKind::BilateralStrip: return v.i >= 1 && v.i <= m_;
    case ModelKind::Quadrant: return v.i >= 0 && v.j >= 0;
    case ModelKind::HalfPlane: return v.i >= 0;
    case ModelKind::PathCycle:
    case ModelKind::SkipPath: return v.i == 0 && v.j >= 1;
    case ModelKind::DiamondChain: return v.i >= 1 && v.j >= 1 && std::abs(v.i - v.j) <= 1;
  }
  return false;
}

void GraphModel::require(const Vertex& v) const {
  if (!admissible(v))
    throw DomainError("vertex " + to_string(v) + " is not admissible in model " + latshift::to_string(*this));
}

std::int64_t shell(const GraphModel& model, const Vertex& v) {
  switch (model.kind()) {
    case ModelKind::Strip: return v.j;
    case ModelKind::BilateralStrip: return std::abs(v.j);
    case ModelKind::Quadrant: return v.i + v.j;
    case ModelKind::HalfPlane: return std::max(v.i, std::abs(v.j));
    case ModelKind::PathCycle:
    case ModelKind::SkipPath: return v.k();
    case ModelKind::DiamondChain: return std::max(v.i, v.j);
  }
  return 0;
}

namespace {

std::vector<Vertex> sorted(std::vector<Vertex> out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Vertex> children(const GraphModel& model, const Vertex& v) {
  model.require(v);
  const auto kind = model.kind();
  std::vector<Vertex> out;
  switch (kind) {
    case ModelKind::Strip:
    case ModelKind::BilateralStrip:
      out.push_back(Vertex::lattice(kind, v.i, v.j + 1));
      if (v.i < model.m()) out.push_back(Vertex::lattice(kind, v.i + 1, v.j));
      break;
    case ModelKind::Quadrant:
    case ModelKind::HalfPlane:
      out.push_back(Vertex::lattice(kind, v.i, v.j + 1));
      out.push_back(Vertex::lattice(kind, v.i + 1, v.j));
      break;
    case ModelKind::PathCycle:
      out.push_back(Vertex::path(kind, v.k() + 1));
      if (v.k() == 2) out.push_back(Vertex::path(kind, 1));
      break;
    case ModelKind::SkipPath:
      out.push_back(Vertex::path(kind, v.k() + 1));
      out.push_back(Vertex::path(kind, v.k() + 2));
      break;
    case ModelKind::DiamondChain:
      if (v.i == v.j) {
        out.push_back(Vertex::lattice(kind, v.i + 1, v.j));
        out.push_back(Vertex::lattice(kind, v.i, v.j + 1));
      } else {
        const auto top = std::max(v.i, v.j);
        out.push_back(Vertex::lattice(kind, top, top));
      }
      break;
  }
  return sorted(std::move(out));
}

std::vector<Vertex> parents(const GraphModel& model, const Vertex& v) {
  model.require(v);
  const auto kind = model.kind();
  std::vector<Vertex> out;
  switch (kind) {
    case ModelKind::Strip:
      if (v.j > 1) out.push_back(Vertex::lattice(kind, v.i, v.j - 1));
      if (v.i > 1) out.push_back(Vertex::lattice(kind, v.i - 1, v.j));
      break;
    case ModelKind::BilateralStrip:
      out.push_back(Vertex::lattice(kind, v.i, v.j - 1));
      if (v.i > 1) out.push_back(Vertex::lattice(kind, v.i - 1, v.j));
      break;
    case ModelKind::Quadrant:
      if (v.j > 0) out.push_back(Vertex::lattice(kind, v.i, v.j - 1));
      if (v.i > 0) out.push_back(Vertex::lattice(kind, v.i - 1, v.j));
      break;
    case ModelKind::HalfPlane:
      out.push_back(Vertex::lattice(kind, v.i, v.j - 1));
      if (v.i > 0) out.push_back(Vertex::lattice(kind, v.i - 1, v.j));
      break;
    case ModelKind::PathCycle:
      if (v.k() == 1)
        out.push_back(Vertex::path(kind, 2));
      else
        out.push_back(Vertex::path(kind, v.k() - 1));
      break;
    case ModelKind::SkipPath:
      if (v.k() > 1) out.push_back(Vertex::path(kind, v.k() - 1));
      if (v.k() > 2) out.push_back(Vertex::path(kind, v.k() - 2));
      break;
    case ModelKind::DiamondChain:
      if (v.i == v.j) {
        if (v.i > 1) {
          out.push_back(Vertex::lattice(kind, v.i, v.i - 1));
          out.push_back(Vertex::lattice(kind, v.i - 1, v.i));
        }
      } else {
        const auto low = std::min(v.i, v.j);
        out.push_back(Vertex::lattice(kind, low, low));
      }
      break;
  }
  return sorted(std::move(out));
}

std::vector<Vertex> children_n(const GraphModel& model, const Vertex& v, int n) {
  if (n < 1) throw DomainError("children_n needs n >= 1");
  std::set<Vertex> frontier{v};
  model.require(v);
  for (int step = 0; step < n; ++step) {
    std::set<Vertex> next;
    for (const auto& u : frontier)
      for (const auto& c : children(model, u)) next.insert(c);
    frontier = std::move(next);
  }
  return {frontier.begin(), frontier.end()};
}

std::vector<Vertex> truncate(const GraphModel& model, Extent extent) {
  const auto kind = model.kind();
  const auto n = extent.bound;
  std::vector<Vertex> out;
  if (n < 0) return out;
  switch (kind) {
    case ModelKind::Strip:
      for (std::int64_t i = 1; i <= model.m(); ++i)
        for (std::int64_t j = 1; j <= n; ++j) out.push_back(Vertex::lattice(kind, i, j));
      break;
    case ModelKind::BilateralStrip:
      for (std::int64_t i = 1; i <= model.m(); ++i)
        for (std::int64_t j = -n; j <= n; ++j) out.push_back(Vertex::lattice(kind, i, j));
      break;
    case ModelKind::Quadrant:
      for (std::int64_t i = 0; i <= n; ++i)
        for (std::int64_t j = 0; i + j <= n; ++j) out.push_back(Vertex::lattice(kind, i, j));
      break;
    case ModelKind::HalfPlane:
      for (std::int64_t i = 0; i <= n; ++i)
        for (std::int64_t j = -n; j <= n; ++j) out.push_back(Vertex::lattice(kind, i, j));
      break;
    case ModelKind::PathCycle:
    case ModelKind::SkipPath:
      for (std::int64_t k = 1; k <= n; ++k) out.push_back(Vertex::path(kind, k));
      break;
    case ModelKind::DiamondChain:
      for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = std::max<std::int64_t>(1, i - 1); j <= std::min(n, i + 1); ++j)
          out.push_back(Vertex::lattice(kind, i, j));
      break;
  }
  return out;
}

std::optional<Vertex> structural_obstruction(const GraphModel& model, Extent search_bound) {
  for (const auto& v : truncate(model, search_bound)) {
    const auto pars = parents(model, v);
    if (pars.size() < 2) continue;
    const bool single_child = std::all_of(pars.begin(), pars.end(), [&](const Vertex& p) {
      const auto ch = children(model, p);
      return ch.size() == 1 && ch.front() == v;
    });
    if (single_child) return v;
  }
  return std::nullopt;
}

}  // namespace latshift
