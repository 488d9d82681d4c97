#include "latshift/serialize.hpp"

#include <ostream>

#include "latshift/error.hpp"

namespace latshift {

Json to_json(const GraphModel& model) {
  Json out;
  out["kind"] = to_string(model.kind());
  if (model.kind() == ModelKind::Strip || model.kind() == ModelKind::BilateralStrip) out["m"] = model.m();
  return out;
}

GraphModel model_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "strip") return GraphModel::strip(j.at("m").get<int>());
  if (kind == "bistrip") return GraphModel::bilateral_strip(j.at("m").get<int>());
  if (kind == "quadrant") return GraphModel::quadrant();
  if (kind == "halfplane") return GraphModel::half_plane();
  if (kind == "pathcycle") return GraphModel::path_cycle();
  if (kind == "skippath") return GraphModel::skip_path();
  if (kind == "diamond") return GraphModel::diamond_chain();
  throw DomainError("unknown model kind: " + kind);
}

Json to_json(const Vertex& v) {
  if (is_path(v.kind)) return Json{{"k", v.k()}};
  return Json{{"i", v.i}, {"j", v.j}};
}

Vertex vertex_from_json(const GraphModel& model, const Json& j) {
  Vertex v = j.contains("k") ? model.vertex(j.at("k").get<std::int64_t>())
                             : model.vertex(j.at("i").get<std::int64_t>(), j.at("j").get<std::int64_t>());
  model.require(v);
  return v;
}

Json to_json(const SparseVector<Rational>& vec) {
  Json out = Json::array();
  for (const auto& [v, x] : vec)
    out.push_back({{"vertex", to_json(v)}, {"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}});
  return out;
}

Json to_json(const SparseVector<Complex>& vec) {
  Json out = Json::array();
  for (const auto& [v, x] : vec) out.push_back({{"vertex", to_json(v)}, {"re", x.real()}, {"im", x.imag()}});
  return out;
}

namespace {

std::string as_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

SparseVector<Rational> exact_vector_from_json(const GraphModel& model, const Json& j) {
  SparseVector<Rational> out(model);
  for (const auto& item : j) {
    Rational q(BigInt(as_text(item.at("num")), 10), BigInt(as_text(item.at("den")), 10));
    if (sgn(q.get_den()) == 0) throw DomainError("zero denominator in vector entry");
    q.canonicalize();
    out.add(vertex_from_json(model, item.at("vertex")), q);
  }
  return out;
}

SparseVector<Complex> float_vector_from_json(const GraphModel& model, const Json& j) {
  SparseVector<Complex> out(model);
  for (const auto& item : j)
    out.add(vertex_from_json(model, item.at("vertex")),
            Complex(item.at("re").get<double>(), item.value("im", 0.0)));
  return out;
}

Json to_json(const CriterionReport& report) {
  Json out;
  out["criterion"] = report.criterion;
  out["verdict"] = to_string(report.verdict);
  out["horizon"] = report.horizon;
  Json evidence = Json::array();
  for (const auto& e : report.evidence) {
    Json item;
    item["label"] = e.label;
    if (e.n) item["n"] = *e.n;
    item["value"] = e.value;
    if (e.exact) item["exact"] = *e.exact;
    evidence.push_back(std::move(item));
  }
  out["evidence"] = std::move(evidence);
  out["exact_family_certificate"] = report.exact_family_certificate;
  return out;
}

Json to_json(const BoundednessReport& report) {
  Json out;
  out["criterion"] = "boundedness";
  out["verdict"] = to_string(report.verdict);
  out["horizon"] = report.extent.bound;
  Json evidence = Json::array();
  Json c{{"label", "C"}, {"value", report.constant}};
  if (report.constant_exact) c["exact"] = to_string(*report.constant_exact);
  evidence.push_back(std::move(c));
  evidence.push_back({{"label", "C_half_extent"}, {"value", report.half_extent_constant}});
  evidence.push_back({{"label", "growth_factor"}, {"value", report.growth_factor}});
  out["evidence"] = std::move(evidence);
  return out;
}

Json to_json(const RegionReport& report) {
  Json out;
  out["criterion"] = "gs-region";
  out["verdict"] = to_string(report.verdict);
  out["horizon"] = report.extent;
  out["evidence"] = Json::array({
      Json{{"label", "q_hat"}, {"value", report.q_hat}},
      Json{{"label", "points"}, {"value", report.points.size()}},
      Json{{"label", "sub-unit-nonempty"}, {"value", report.any_sub_unit}},
      Json{{"label", "super-unit-nonempty"}, {"value", report.any_super_unit}},
  });
  return out;
}

void write_trace_csv(std::ostream& os, const CriterionReport& report) {
  os << "n,quantity\n";
  os.precision(17);
  for (const auto& p : report.trace) os << p.n << ',' << p.quantity << '\n';
}

void write_region_csv(std::ostream& os, const RegionReport& report) {
  os << "r,s_re,s_im,in_norm,abs_lambda,region\n";
  os.precision(17);
  for (const auto& p : report.points)
    os << p.r << ',' << p.s.real() << ',' << p.s.imag() << ',' << (p.in_norm ? 1 : 0) << ',' << p.abs_lambda << ','
       << p.tag << '\n';
}

void write_vector_csv(std::ostream& os, const SparseVector<Rational>& vec) {
  os << "i,j,re,im\n";
  for (const auto& [v, x] : vec) os << v.i << ',' << v.j << ',' << to_string(x) << ",0\n";
}

void write_vector_csv(std::ostream& os, const SparseVector<Complex>& vec) {
  os << "i,j,re,im\n";
  os.precision(17);
  for (const auto& [v, x] : vec) os << v.i << ',' << v.j << ',' << x.real() << ',' << x.imag() << '\n';
}

}  // namespace latshift
