#include "latshift/space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "latshift/error.hpp"

namespace latshift {

Param Param::parse(std::string_view text) {
  try {
    return Param(parse_rational(text));
  } catch (const DomainError&) {
    std::string s(text);
    char* end = nullptr;
    double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw DomainError("malformed parameter: " + s);
    return Param(x);
  }
}

std::string Param::str() const {
  if (exact) return to_string(*exact);
  std::ostringstream os;
  os.precision(17);
  os << approx;
  return os.str();
}

namespace {

bool is_zero(const WeightEntry& e) {
  return e.exact ? sgn(*e.exact) == 0 : e.approx == Complex{};
}

void require_nonzero(const Param& p, const char* what) {
  if (p.exact ? sgn(*p.exact) == 0 : p.approx == 0.0)
    throw DomainError(std::string(what) + " must be nonzero");
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

WeightEntry parse_entry(const std::string& re, const std::string& im) {
  Param real = Param::parse(re);
  Param imag = im.empty() ? Param(0) : Param::parse(im);
  WeightEntry e;
  if (real.exact && imag.exact && sgn(*imag.exact) == 0)
    e = WeightEntry(*real.exact);
  else
    e = WeightEntry(Complex(real.approx, imag.approx));
  if (is_zero(e)) throw DomainError("weight table contains a zero entry");
  return e;
}

template <class Fn>
void for_each_csv_row(const std::filesystem::path& path, std::size_t min_cells, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open weight table " + path.string());
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_csv_line(line);
    if (first) {
      first = false;
      if (!cells.empty() && !cells[0].empty() && std::isalpha(static_cast<unsigned char>(cells[0][0])))
        continue;  // header
    }
    if (cells.size() < min_cells) throw DomainError("short row in " + path.string() + ": " + line);
    fn(cells);
  }
}

}  // namespace

WeightFamily WeightFamily::constant(Param c) {
  require_nonzero(c, "constant weight");
  return WeightFamily(Kind::Constant, std::move(c));
}

WeightFamily WeightFamily::geometric_j(Param beta) {
  require_nonzero(beta, "geometric base");
  return WeightFamily(Kind::GeometricJ, std::move(beta));
}

WeightFamily WeightFamily::geometric_sum(Param beta) {
  require_nonzero(beta, "geometric base");
  return WeightFamily(Kind::GeometricSum, std::move(beta));
}

WeightFamily WeightFamily::polynomial_j(Param d) { return WeightFamily(Kind::PolynomialJ, std::move(d)); }

WeightFamily WeightFamily::one_coordinate(std::map<std::int64_t, WeightEntry> layers,
                                          std::optional<WeightRule> fallback) {
  for (const auto& [i, e] : layers)
    if (is_zero(e)) throw DomainError("weight table contains a zero entry");
  WeightFamily out(Kind::OneCoordinate, Param(0));
  out.table_ = std::make_shared<TableData>(TableData{{}, std::move(layers), std::move(fallback)});
  return out;
}

WeightFamily WeightFamily::table(std::map<std::pair<std::int64_t, std::int64_t>, WeightEntry> entries,
                                 std::optional<WeightRule> fallback) {
  for (const auto& [key, e] : entries)
    if (is_zero(e)) throw DomainError("weight table contains a zero entry");
  WeightFamily out(Kind::Table, Param(0));
  out.table_ = std::make_shared<TableData>(TableData{std::move(entries), {}, std::move(fallback)});
  return out;
}

WeightFamily WeightFamily::load_table_csv(const std::filesystem::path& path) {
  std::map<std::pair<std::int64_t, std::int64_t>, WeightEntry> entries;
  for_each_csv_row(path, 3, [&](const std::vector<std::string>& c) {
    auto i = std::stoll(c[0]);
    auto j = std::stoll(c[1]);
    entries[{i, j}] = parse_entry(c[2], c.size() > 3 ? c[3] : std::string());
  });
  return table(std::move(entries));
}

WeightFamily WeightFamily::load_one_coordinate_csv(const std::filesystem::path& path) {
  std::map<std::int64_t, WeightEntry> layers;
  for_each_csv_row(path, 2, [&](const std::vector<std::string>& c) {
    layers[std::stoll(c[0])] = parse_entry(c[1], c.size() > 2 ? c[2] : std::string());
  });
  return one_coordinate(std::move(layers));
}

std::string WeightFamily::describe() const {
  switch (kind_) {
    case Kind::Constant: return "const:" + param_.str();
    case Kind::GeometricJ: return "geomJ:" + param_.str();
    case Kind::GeometricSum: return "geomSum:" + param_.str();
    case Kind::PolynomialJ: return "polyJ:" + param_.str();
    case Kind::OneCoordinate:
      return "onecoord[" + std::to_string(table_->layers.size()) + "]" +
             (table_->fallback ? "+" + table_->fallback->name : "");
    case Kind::Table:
      return "table[" + std::to_string(table_->entries.size()) + "]" +
             (table_->fallback ? "+" + table_->fallback->name : "");
  }
  return "?";
}

bool WeightFamily::is_exact() const {
  switch (kind_) {
    case Kind::Constant:
    case Kind::GeometricJ:
    case Kind::GeometricSum: return param_.exact.has_value();
    case Kind::PolynomialJ: return param_.exact && param_.exact->get_den() == 1;
    case Kind::OneCoordinate:
    case Kind::Table: {
      auto exact_entry = [](const auto& kv) { return kv.second.exact.has_value(); };
      if (!std::all_of(table_->entries.begin(), table_->entries.end(), exact_entry)) return false;
      if (!std::all_of(table_->layers.begin(), table_->layers.end(), exact_entry)) return false;
      return !table_->fallback || static_cast<bool>(table_->fallback->exact);
    }
  }
  return false;
}

WeightEntry WeightFamily::eval(const Vertex& v) const {
  auto from_rule = [&]() -> WeightEntry {
    if (!table_->fallback)
      throw DomainError("no weight for " + to_string(v) + " (table miss, no default rule)");
    const auto& rule = *table_->fallback;
    WeightEntry e(rule.approx(v));
    if (rule.exact) e.exact = rule.exact(v);
    if (is_zero(e)) throw DomainError("weight rule " + rule.name + " vanishes at " + to_string(v));
    return e;
  };

  switch (kind_) {
    case Kind::Constant:
      return param_.exact ? WeightEntry(*param_.exact) : WeightEntry(Complex(param_.approx, 0.0));
    case Kind::GeometricJ:
    case Kind::GeometricSum: {
      const auto e = kind_ == Kind::GeometricJ ? v.j : v.i + v.j;
      if (param_.exact) return WeightEntry(ipow(*param_.exact, e));
      return WeightEntry(ipow(Complex(param_.approx, 0.0), e));
    }
    case Kind::PolynomialJ: {
      if (v.j + 1 <= 0) throw DomainError("polynomial weight undefined at " + to_string(v));
      if (param_.exact && param_.exact->get_den() == 1)
        return WeightEntry(ipow(Rational(v.j + 1), -param_.exact->get_num().get_si()));
      return WeightEntry(Complex(std::pow(static_cast<double>(v.j + 1), -param_.approx), 0.0));
    }
    case Kind::OneCoordinate: {
      auto it = table_->layers.find(v.i);
      return it != table_->layers.end() ? it->second : from_rule();
    }
    case Kind::Table: {
      auto it = table_->entries.find({v.i, v.j});
      return it != table_->entries.end() ? it->second : from_rule();
    }
  }
  throw DomainError("unknown weight kind");
}

Rational WeightFamily::eval_exact(const Vertex& v) const {
  auto e = eval(v);
  if (!e.exact) throw DomainError("weight " + describe() + " has no exact value at " + to_string(v));
  return *e.exact;
}

double WeightFamily::abs(const Vertex& v) const {
  auto e = eval(v);
  return e.exact ? Rational(::abs(*e.exact)).get_d() : std::abs(e.approx);
}

double WeightFamily::log_abs(const Vertex& v) const {
  switch (kind_) {
    case Kind::GeometricJ:
      return static_cast<double>(v.j) * std::log(std::fabs(param_.approx));
    case Kind::GeometricSum:
      return static_cast<double>(v.i + v.j) * std::log(std::fabs(param_.approx));
    default: {
      auto e = eval(v);
      return e.exact ? latshift::log_abs(*e.exact) : std::log(std::abs(e.approx));
    }
  }
}

template <>
Rational eval_weight<Rational>(const WeightFamily& family, const Vertex& v) {
  return family.eval_exact(v);
}

template <>
Complex eval_weight<Complex>(const WeightFamily& family, const Vertex& v) {
  return family.eval_approx(v);
}

SpaceSpec SpaceSpec::lp(double p) {
  if (!(p >= 1.0) || std::isinf(p)) throw DomainError("l^p needs 1 <= p < infinity");
  return {Kind::Lp, p};
}

std::string SpaceSpec::describe() const {
  if (kind == Kind::C0) return "c0";
  std::ostringstream os;
  os << "l" << p;
  return os.str();
}

template <Scalar S>
double norm(const SparseVector<S>& vec, const WeightFamily& family, SpaceSpec spec) {
  double acc = 0.0;
  for (const auto& [v, x] : vec) {
    double term;
    if constexpr (ScalarTraits<S>::exact) {
      auto mu = family.eval(v);
      term = mu.exact ? Rational(::abs(Rational(x * *mu.exact))).get_d() : std::abs(x.get_d() * mu.approx);
    } else {
      term = std::abs(x * family.eval_approx(v));
    }
    if (spec.kind == SpaceSpec::Kind::C0)
      acc = std::max(acc, term);
    else
      acc += std::pow(term, spec.p);
  }
  return spec.kind == SpaceSpec::Kind::C0 ? acc : std::pow(acc, 1.0 / spec.p);
}

template double norm<Rational>(const SparseVector<Rational>&, const WeightFamily&, SpaceSpec);
template double norm<Complex>(const SparseVector<Complex>&, const WeightFamily&, SpaceSpec);

Rational norm_pow_exact(const SparseVector<Rational>& vec, const WeightFamily& family, unsigned p) {
  if (p == 0) throw DomainError("exponent must be >= 1");
  Rational acc = 0;
  for (const auto& [v, x] : vec) acc += ipow(Rational(::abs(Rational(x * family.eval_exact(v)))), p);
  return acc;
}

Rational sup_norm_exact(const SparseVector<Rational>& vec, const WeightFamily& family) {
  Rational best = 0;
  for (const auto& [v, x] : vec) best = std::max(best, Rational(::abs(Rational(x * family.eval_exact(v)))));
  return best;
}

std::string to_string(BoundednessReport::Verdict v) {
  return v == BoundednessReport::Verdict::BoundedEvidence ? "bounded-evidence" : "unbounded-evidence";
}

BoundednessReport boundedness_report(const GraphModel& model, const WeightFamily& family, Extent extent,
                                     double growth_factor) {
  BoundednessReport report;
  report.extent = extent;
  report.growth_factor = growth_factor;
  const bool exact = family.is_exact();
  std::optional<Rational> best_exact;
  std::map<std::int64_t, double> per_shell;
  const auto half = extent.bound / 2;

  for (const auto& v : truncate(model, extent)) {
    auto ch = children(model, v);
    if (ch.empty()) continue;
    double min_log = HUGE_VAL;
    for (const auto& u : ch) min_log = std::min(min_log, family.log_abs(u));
    const double ratio = std::exp(family.log_abs(v) - min_log);
    auto& slot = per_shell[shell(model, v)];
    slot = std::max(slot, ratio);
    if (shell(model, v) <= half) report.half_extent_constant = std::max(report.half_extent_constant, ratio);
    if (exact) {
      Rational mu = ::abs(family.eval_exact(v));
      Rational min_child;
      bool first = true;
      for (const auto& u : ch) {
        Rational mu_u = ::abs(family.eval_exact(u));
        if (first || mu_u < min_child) min_child = mu_u;
        first = false;
      }
      Rational r = mu / min_child;
      if (!best_exact || r > *best_exact) best_exact = r;
    }
  }

  double running = 0.0;
  for (const auto& [s, value] : per_shell) {
    running = std::max(running, value);
    report.trace.emplace_back(s, running);
  }
  report.constant = running;
  if (best_exact) {
    report.constant_exact = best_exact;
    report.constant = best_exact->get_d();
  }
  report.verdict = report.constant > growth_factor * report.half_extent_constant
                       ? BoundednessReport::Verdict::UnboundedEvidence
                       : BoundednessReport::Verdict::BoundedEvidence;
  return report;
}

}  // namespace latshift
