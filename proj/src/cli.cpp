#include "latshift/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

#include "latshift/criteria.hpp"
#include "latshift/error.hpp"
#include "latshift/oracle.hpp"
#include "latshift/rightinv.hpp"
#include "latshift/serialize.hpp"
#include "latshift/shift.hpp"
#include "latshift/spectral.hpp"

namespace latshift::cli {

namespace {

std::pair<std::string, std::string> split_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return {std::string(text), {}};
  return {std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
  }
}

Param parse_param(const std::string& text) {
  if (text == "phi") return Param(kGoldenRatio);
  try {
    return Param::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

GraphModel parse_model(std::string_view text) {
  auto [kind, arg] = split_descriptor(text);
  if (kind == "strip") return GraphModel::strip(parse_int(arg, "strip height"));
  if (kind == "bistrip") return GraphModel::bilateral_strip(parse_int(arg, "strip height"));
  if (!arg.empty()) throw UsageError("model '" + kind + "' takes no parameter");
  if (kind == "quadrant") return GraphModel::quadrant();
  if (kind == "halfplane") return GraphModel::half_plane();
  if (kind == "pathcycle") return GraphModel::path_cycle();
  if (kind == "skippath") return GraphModel::skip_path();
  if (kind == "diamond") return GraphModel::diamond_chain();
  throw UsageError("unknown model '" + std::string(text) + "'");
}

WeightFamily parse_weight(std::string_view text) {
  auto [kind, arg] = split_descriptor(text);
  if (arg.empty()) throw UsageError("weight descriptor needs kind:param, got '" + std::string(text) + "'");
  if (kind == "const") return WeightFamily::constant(parse_param(arg));
  if (kind == "geomJ") return WeightFamily::geometric_j(parse_param(arg));
  if (kind == "geomSum") return WeightFamily::geometric_sum(parse_param(arg));
  if (kind == "polyJ") return WeightFamily::polynomial_j(parse_param(arg));
  if (kind == "onecoord") return WeightFamily::load_one_coordinate_csv(arg);
  if (kind == "table") return WeightFamily::load_table_csv(arg);
  throw UsageError("unknown weight kind '" + kind + "'");
}

SparseVector<Rational> parse_vector(const GraphModel& model, std::string_view text) {
  static const std::regex term(
      R"(\s*([+-])?\s*(?:([0-9][0-9./]*(?:[eE][+-]?[0-9]+)?)\s*\*\s*)?e:\s*(-?[0-9]+)(?:\s*,\s*(-?[0-9]+))?\s*)");
  SparseVector<Rational> out(model);
  std::string s(text);
  auto begin = s.cbegin();
  bool first = true;
  if (s.find_first_not_of(" \t") == std::string::npos) return out;  // empty means zero
  while (begin != s.cend()) {
    std::smatch m;
    if (!std::regex_search(begin, s.cend(), m, term, std::regex_constants::match_continuous))
      throw UsageError("malformed vector near '" + std::string(begin, s.cend()) + "'");
    if (!first && !m[1].matched) throw UsageError("vector terms must be joined by + or -");
    Rational coeff = 1;
    if (m[2].matched) {
      try {
        coeff = parse_rational(m[2].str());
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }
    if (m[1].matched && m[1].str() == "-") coeff = -coeff;
    const auto a = std::stoll(m[3].str());
    Vertex v;
    if (is_path(model.kind())) {
      if (m[4].matched) throw UsageError("path models take atoms e:k");
      v = model.vertex(a);
    } else {
      if (!m[4].matched) throw UsageError("lattice models take atoms e:i,j");
      v = model.vertex(a, std::stoll(m[4].str()));
    }
    out.add(v, coeff);
    begin = m[0].second;
    first = false;
  }
  return out;
}

SpaceSpec parse_space(std::string_view text) {
  auto [kind, arg] = split_descriptor(text);
  if (kind == "c0") return SpaceSpec::c0();
  if (kind == "l1") return SpaceSpec::lp(1.0);
  if (kind == "l2") return SpaceSpec::lp(2.0);
  if (kind == "lp") {
    try {
      return SpaceSpec::lp(std::stod(arg));
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed exponent '" + arg + "'");
    }
  }
  throw UsageError("unknown space '" + std::string(text) + "'");
}

namespace {

struct Grid {
  double lo = 0;
  double hi = 0;
  int count = 0;
};

Grid parse_grid(const std::string& text) {
  std::stringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
    throw UsageError("grid must be lo:hi:count, got '" + text + "'");
  try {
    Grid g{std::stod(a), std::stod(b), std::stoi(c)};
    if (g.count < 0) throw UsageError("grid count must be nonnegative");
    return g;
  } catch (const std::invalid_argument&) {
    throw UsageError("grid must be lo:hi:count, got '" + text + "'");
  }
}

std::vector<double> expand(const Grid& g) {
  std::vector<double> out;
  for (int t = 0; t < g.count; ++t)
    out.push_back(g.count == 1 ? g.lo : g.lo + (g.hi - g.lo) * t / (g.count - 1));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected i,j but got '" + text + "'");
  return {parse_int(text.substr(0, comma), "index"), parse_int(text.substr(comma + 1), "index")};
}

std::string error_line(const std::string& kind, const std::string& message, int code) {
  Json j{{"error", kind}, {"message", message}, {"exit_code", code}};
  return j.dump();
}

/// Random exact vector inside the box of the given radius.
SparseVector<Rational> random_vector(const GraphModel& model, std::int64_t bound, std::mt19937_64& rng) {
  const auto box = truncate(model, Extent{bound});
  SparseVector<Rational> out(model);
  if (box.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  std::uniform_int_distribution<int> terms(1, 5);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  for (int t = terms(rng); t > 0; --t) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    out.add(box[pick(rng)], q);
  }
  return out;
}

std::int64_t support_radius(const SparseVector<Rational>& vec) {
  std::int64_t r = 0;
  for (const auto& [v, x] : vec) r = std::max(r, shell(vec.model(), v));
  return r;
}

struct Options {
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 1;

  std::string model = "strip:1";
  std::string weight = "const:1";
  std::string vec;
  std::string scalar = "exact";
  std::string method = "closed";
  std::string criterion;
  std::string family = "quadrant";
  std::string space = "l2";
  std::string params;
  std::string r_text = "1";
  std::string s_text;
  double s_im = 0.0;
  std::string p_text = "2";
  std::string anchor = "0,0";
  std::string r_grid = "1.01:1.2:5";
  std::string s_abs = "0.05:0.95:19";
  std::string s_arg = "0:0:1";
  std::vector<std::string> steps;
  int n = 1;
  int m = 1;
  int levels = 8;
  int random = 0;
  std::int64_t horizon = 100;
  std::int64_t window = kDefaultWindow;
  std::int64_t extent = -1;
  std::int64_t margin_steps = 1;
  double margin = kDefaultMargin;
  double growth = 2.0;
  bool alpha = false;
};

class Dispatcher {
 public:
  Dispatcher(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }
  bool csv() const { return o_.format == "csv"; }

  template <Scalar S>
  void emit_vector(const char* command, const SparseVector<S>& vec, Json extra = Json::object()) {
    if (csv()) {
      write_vector_csv(out_, vec);
      return;
    }
    Json j;
    j["command"] = command;
    j["model"] = to_json(vec.model());
    for (auto& [key, value] : extra.items()) j[key] = value;
    j["scalar"] = ScalarTraits<S>::name;
    j["result"] = to_json(vec);
    emit(j);
  }

  template <Scalar S>
  SparseVector<S> convert(const SparseVector<Rational>& v) {
    if constexpr (ScalarTraits<S>::exact)
      return v;
    else
      return to_float(v);
  }

  template <Scalar S>
  void run_apply() {
    const auto model = parse_model(o_.model);
    const auto vec = convert<S>(parse_vector(model, o_.vec));
    emit_vector("apply", latshift::apply(model, vec));
  }

  template <Scalar S>
  void run_power() {
    const auto model = parse_model(o_.model);
    const auto vec = convert<S>(parse_vector(model, o_.vec));
    SparseVector<S> result(model);
    if (o_.method == "closed")
      result = power_closed(model, vec, o_.n);
    else if (o_.method == "iterate")
      result = power_apply(model, vec, o_.n);
    else if (o_.method == "oracle") {
      const auto radius = o_.extent >= 0 ? o_.extent : support_radius(parse_vector(model, o_.vec));
      result = matrix_power_apply(truncated_matrix(model, Extent{radius + o_.n}), vec, o_.n);
    } else
      throw UsageError("unknown method '" + o_.method + "'");
    emit_vector("power", result, Json{{"n", o_.n}, {"method", o_.method}});
  }

  void run_rightinv() {
    if (o_.alpha) {
      const auto table = alpha_table(o_.m, o_.n);
      if (csv()) {
        table.write_csv(out_);
        return;
      }
      Json rows = Json::array();
      for (int i = 1; i <= table.m(); ++i)
        for (int s = 1; s <= i; ++s) rows.push_back({{"i", i}, {"s", s}, {"alpha", to_string(table(i, s))}});
      emit(Json{{"command", "rightinv"}, {"m", o_.m}, {"n", o_.n}, {"alpha", rows}});
      return;
    }
    const auto model = parse_model(o_.model);
    const auto vec = parse_vector(model, o_.vec);
    if (model.kind() == ModelKind::Quadrant) {
      const auto params = quadrant_params(support_radius(vec));
      emit_vector("rightinv", right_inverse_quadrant(vec, o_.n, params), Json{{"n", o_.n}});
    } else {
      emit_vector("rightinv", right_inverse_strip(vec, o_.n), Json{{"n", o_.n}});
    }
  }

  DiagonalBasisParams<Rational> quadrant_params(std::int64_t top) {
    if (o_.params.empty()) return DiagonalBasisParams<Rational>::defaults(static_cast<int>(top));
    std::vector<Rational> values;
    std::stringstream ss(o_.params);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        values.push_back(parse_rational(item));
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }
    return DiagonalBasisParams<Rational>(std::move(values));
  }

  void run_hc_assemble() {
    const auto model = parse_model(o_.model);
    std::vector<ScheduleStep> schedule;
    std::int64_t top = 0;
    for (const auto& text : o_.steps) {
      const auto at = text.find('@');
      if (at == std::string::npos) throw UsageError("schedule steps are written n@vector, got '" + text + "'");
      ScheduleStep step{parse_int(text.substr(0, at), "power"), parse_vector(model, text.substr(at + 1))};
      top = std::max(top, support_radius(step.target));
      schedule.push_back(std::move(step));
    }
    std::optional<DiagonalBasisParams<Rational>> params;
    if (model.kind() == ModelKind::Quadrant) params = quadrant_params(top);
    const auto f = hc_approximant(model, schedule, params);

    const auto weight = parse_weight(o_.weight);
    const auto space = parse_space(o_.space);
    Json residuals = Json::array();
    for (const auto& step : schedule) {
      const auto diff = power_closed(model, f, step.power) - step.target;
      Json item{{"n", step.power}, {"norm", norm(diff, weight, space)}};
      if (weight.is_exact() && space.kind == SpaceSpec::Kind::Lp && space.p == 2.0)
        item["norm_squared_exact"] = to_string(norm_pow_exact(diff, weight, 2));
      residuals.push_back(std::move(item));
    }
    if (csv()) {
      write_vector_csv(out_, f);
      return;
    }
    Json j{{"command", "hc-assemble"}, {"model", to_json(model)}, {"weight", weight.describe()},
           {"space", space.describe()}, {"result", to_json(f)}, {"residuals", residuals}};
    emit(j);
  }

  void run_check() {
    const auto weight = parse_weight(o_.weight);
    StripScanOptions scan;
    scan.horizon = o_.horizon;
    scan.window = o_.window;
    scan.thresholds = default_thresholds(o_.levels);
    const auto& c = o_.criterion;
    if (c == "bounded") {
      const auto report = boundedness_report(parse_model(o_.model), weight, Extent{o_.horizon}, o_.growth);
      if (csv()) {
        out_ << "shell,sup_ratio\n";
        out_.precision(17);
        for (const auto& [s, value] : report.trace) out_ << s << ',' << value << '\n';
      } else {
        emit(to_json(report));
      }
      return;
    }
    if (c == "structural") {
      const auto witness = structural_obstruction(parse_model(o_.model), Extent{o_.horizon});
      Json j{{"criterion", "structural"},
             {"verdict", witness ? to_string(Verdict::ObstructionCertified) : std::string("none-found-within-bound")},
             {"horizon", o_.horizon},
             {"evidence", Json::array()}};
      if (witness) j["evidence"].push_back({{"label", "witness"}, {"vertex", to_json(*witness)}});
      emit(j);
      return;
    }
    CriterionReport report;
    if (c == "strip")
      report = strip_criterion(weight, o_.m, scan);
    else if (c == "bistrip")
      report = strip_criterion_bilateral(weight, o_.m, scan);
    else if (c == "quad-mix")
      report = quadrant_mixing_test(weight, o_.horizon, o_.margin);
    else if (c == "quad-obstruct")
      report = quadrant_obstruction_test(weight, o_.horizon);
    else if (c == "skip")
      report = skip_graph_test(weight, o_.horizon, o_.margin);
    else
      throw UsageError("unknown criterion '" + c + "'");
    if (csv())
      write_trace_csv(out_, report);
    else
      emit(to_json(report));
  }

  template <Scalar S>
  void run_eigen(const S& r, const S& s) {
    const bool quadrant = o_.family == "quadrant";
    if (!quadrant && o_.family != "skip") throw UsageError("eigen family is quadrant or skip");
    const auto extent = o_.extent >= 0 ? o_.extent : 15;
    const auto pair = quadrant ? eigenvector_quadrant(r, s, extent) : eigenvector_skip(s, extent);
    const auto model = quadrant ? GraphModel::quadrant() : GraphModel::skip_path();
    const auto residual = eigen_residual(model, pair, o_.margin_steps);
    if (csv()) {
      write_vector_csv(out_, pair.vec);
      return;
    }
    Json j{{"command", "eigen"}, {"family", to_string(pair.family)}, {"extent", extent}};
    if constexpr (ScalarTraits<S>::exact) {
      j["lambda"] = to_string(pair.lambda);
      j["residual"] = to_string(residual);
    } else {
      j["lambda"] = {{"re", pair.lambda.real()}, {"im", pair.lambda.imag()}};
      j["residual"] = residual;
    }
    j["interior_margin"] = o_.margin_steps;
    j["result"] = to_json(pair.vec);
    emit(j);
  }

  void run_eigen() {
    if (o_.s_text.empty()) throw UsageError("--s is required");
    Param r = parse_param(o_.r_text);
    Param s = parse_param(o_.s_text);
    if (o_.scalar == "exact" && r.exact && s.exact && o_.s_im == 0.0)
      run_eigen<Rational>(*r.exact, *s.exact);
    else
      run_eigen<Complex>(Complex(r.approx, 0.0), Complex(s.approx, o_.s_im));
  }

  void run_gs_scan() {
    const auto weight = parse_weight(o_.weight);
    const auto rs = expand(parse_grid(o_.r_grid));
    std::vector<Complex> ss;
    for (double a : expand(parse_grid(o_.s_abs)))
      for (double theta : expand(parse_grid(o_.s_arg))) ss.push_back(std::polar(a, theta));
    const auto report = gs_region_scan(weight, rs, ss, o_.extent >= 0 ? o_.extent : 60);
    if (csv())
      write_region_csv(out_, report);
    else
      emit(to_json(report));
  }

  template <Scalar S>
  void run_oracle_check() {
    const auto model = parse_model(o_.model);
    if (o_.random > 0) {
      std::mt19937_64 rng(o_.seed);
      const auto bound = o_.extent >= 0 ? o_.extent : 6;
      double worst = 0.0;
      Json cases = Json::array();
      for (int t = 0; t < o_.random; ++t) {
        const auto vec = random_vector(model, bound, rng);
        const auto dev = ScalarTraits<S>::to_double(equivalence_check(model, convert<S>(vec), o_.n, Extent{bound}));
        worst = std::max(worst, dev);
        cases.push_back({{"vector", to_json(vec)}, {"deviation", dev}});
      }
      if (csv()) {
        out_ << "case,deviation\n";
        out_.precision(17);
        for (std::size_t t = 0; t < cases.size(); ++t) out_ << t << ',' << cases[t]["deviation"].get<double>() << '\n';
        return;
      }
      emit(Json{{"command", "oracle-check"}, {"model", to_json(model)}, {"n", o_.n}, {"extent", bound},
                {"seed", o_.seed}, {"instances", o_.random}, {"max_deviation", worst}, {"cases", cases}});
      return;
    }
    const auto exact = parse_vector(model, o_.vec);
    const auto bound = o_.extent >= 0 ? o_.extent : support_radius(exact);
    const auto dev = equivalence_check(model, convert<S>(exact), o_.n, Extent{bound});
    if (csv()) {
      out_.precision(17);
      out_ << "n,extent,max_deviation\n" << o_.n << ',' << bound << ',' << dev << '\n';
      return;
    }
    Json j{{"command", "oracle-check"}, {"model", to_json(model)}, {"n", o_.n}, {"extent", bound}};
    if constexpr (ScalarTraits<S>::exact)
      j["max_deviation"] = to_string(dev);
    else
      j["max_deviation"] = dev;
    emit(j);
  }

  void run_nec_sum() {
    const auto weight = parse_weight(o_.weight);
    const auto [i, j] = parse_pair(o_.anchor);
    const auto result = necessary_sum(weight, parse_param(o_.p_text), o_.n, i, j);
    if (csv()) {
      out_.precision(17);
      out_ << "value,exact\n" << result.value << ',' << (result.exact ? to_string(*result.exact) : "") << '\n';
      return;
    }
    Json out{{"command", "nec-sum"}, {"weight", weight.describe()}, {"p", o_.p_text}, {"n", o_.n},
             {"anchor", {i, j}}, {"value", result.value}};
    if (result.exact) out["exact"] = to_string(*result.exact);
    emit(out);
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Backward shifts on lattice graphs: powers, right inverses, criteria, eigenvectors", "latshift"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "latshift 1.0 (csv schema 1)");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out_path, "Write the report to this file instead of stdout");
  app.add_option("--seed", o.seed, "Seed for randomized sweeps");

  auto* apply_cmd = app.add_subcommand("apply", "Apply the backward shift (Bf)(v) = sum over children of f");
  apply_cmd->add_option("--model", o.model, "Graph model")->required();
  apply_cmd->add_option("--vec", o.vec, "Vector, e.g. '2*e:1,3 - e:2,2'")->required();
  apply_cmd->add_option("--scalar", o.scalar, "exact | float")->check(CLI::IsMember({"exact", "float"}));

  auto* power_cmd = app.add_subcommand(
      "power", "B^n f by iteration, by the binomial closed forms (strips, quadrant, half-plane) and "
               "path-cycle parity formulas, or by the dense oracle matrix");
  power_cmd->add_option("--model", o.model, "Graph model")->required();
  power_cmd->add_option("--vec", o.vec, "Vector")->required();
  power_cmd->add_option("--n", o.n, "Power")->required();
  power_cmd->add_option("--method", o.method, "closed | iterate | oracle")
      ->check(CLI::IsMember({"closed", "iterate", "oracle"}));
  power_cmd->add_option("--extent", o.extent, "Oracle box radius (default: support radius)");
  power_cmd->add_option("--scalar", o.scalar, "exact | float")->check(CLI::IsMember({"exact", "float"}));

  auto* rightinv_cmd = app.add_subcommand(
      "rightinv", "Right inverse R_n with B^n R_n = I: layer recursion on strips, Vandermonde anti-diagonal "
                  "basis on the quadrant; --alpha prints the strip coefficient table");
  rightinv_cmd->add_option("--model", o.model, "strip:M, bistrip:M or quadrant");
  rightinv_cmd->add_option("--vec", o.vec, "Vector");
  rightinv_cmd->add_option("--n", o.n, "Power")->required();
  rightinv_cmd->add_option("--params", o.params, "Quadrant basis parameters a_0,a_1,... (rationals)");
  rightinv_cmd->add_flag("--alpha", o.alpha, "Print the coefficient table alpha(i,s) instead");
  rightinv_cmd->add_option("--m", o.m, "Strip height for --alpha");

  auto* hc_cmd = app.add_subcommand(
      "hc-assemble", "Hypercyclicity Criterion approximant f = sum_k R_{n_k} g_k with residual norms "
                     "||B^{n_k} f - g_k||");
  hc_cmd->add_option("--model", o.model, "Graph model")->required();
  hc_cmd->add_option("--step", o.steps, "Schedule step n@vector (repeatable, increasing n)")->required();
  hc_cmd->add_option("--params", o.params, "Quadrant basis parameters");
  hc_cmd->add_option("--weight", o.weight, "Weight used for residual norms");
  hc_cmd->add_option("--space", o.space, "l1 | l2 | lp:P | c0");

  auto* check_cmd = app.add_subcommand(
      "check", "Finite-horizon criteria: strip (layer-dependent decay n^{m-i}|mu|), bistrip (two-sided "
               "decay), quad-mix (limsup |mu|^{1/(i+j)} < 2), quad-obstruct (|mu| >= c 2^{i+j}), skip "
               "(golden-ratio threshold), bounded (|mu_v| <= C min over children), structural "
               "(vertex whose parents all have it as only child)");
  check_cmd->add_option("--criterion", o.criterion, "Criterion")
      ->required()
      ->check(CLI::IsMember({"strip", "bistrip", "quad-mix", "quad-obstruct", "skip", "bounded", "structural"}));
  check_cmd->add_option("--weight", o.weight, "Weight descriptor");
  check_cmd->add_option("--model", o.model, "Graph model (bounded, structural)");
  check_cmd->add_option("--m", o.m, "Strip height");
  check_cmd->add_option("--horizon", o.horizon, "Horizon N / extent D / search bound");
  check_cmd->add_option("--window", o.window, "Window J");
  check_cmd->add_option("--levels", o.levels, "Number of thresholds 2^-1..2^-K");
  check_cmd->add_option("--margin", o.margin, "Margin for limsup tests");
  check_cmd->add_option("--growth", o.growth, "Growth factor for the boundedness verdict");

  auto* eigen_cmd = app.add_subcommand(
      "eigen", "Eigenvectors f_{r,s} = r^{i+2j} s^{i+j} of B on the quadrant (lambda = s(r^2+r)) or "
               "f_s = s^n of the skip-edge shift (lambda = s(1+s)), with interior residual");
  eigen_cmd->add_option("--family", o.family, "quadrant | skip")->check(CLI::IsMember({"quadrant", "skip"}));
  eigen_cmd->add_option("--r", o.r_text, "r >= 1 (quadrant)");
  eigen_cmd->add_option("--s", o.s_text, "s (real part)")->required();
  eigen_cmd->add_option("--s-im", o.s_im, "Imaginary part of s (forces the float path)");
  eigen_cmd->add_option("--extent", o.extent, "Truncation extent");
  eigen_cmd->add_option("--margin", o.margin_steps, "Interior margin for the residual");
  eigen_cmd->add_option("--scalar", o.scalar, "exact | float")->check(CLI::IsMember({"exact", "float"}));

  auto* gs_cmd = app.add_subcommand(
      "gs-scan", "Godefroy-Shapiro region scan: membership |s| q r^2 < 1 and |lambda| = |s|(r^2+r) versus 1");
  gs_cmd->add_option("--weight", o.weight, "Weight descriptor");
  gs_cmd->add_option("--r-grid", o.r_grid, "lo:hi:count");
  gs_cmd->add_option("--s-abs", o.s_abs, "lo:hi:count for |s|");
  gs_cmd->add_option("--s-arg", o.s_arg, "lo:hi:count for arg s (radians)");
  gs_cmd->add_option("--extent", o.extent, "Diagonal bound for the limsup estimate");

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "Compare B^n against the dense truncated-matrix oracle (max deviation)");
  oracle_cmd->add_option("--model", o.model, "Graph model")->required();
  oracle_cmd->add_option("--vec", o.vec, "Vector (omit with --random)");
  oracle_cmd->add_option("--n", o.n, "Power")->required();
  oracle_cmd->add_option("--extent", o.extent, "Box radius of the vector support");
  oracle_cmd->add_option("--random", o.random, "Number of random vectors instead of --vec");
  oracle_cmd->add_option("--scalar", o.scalar, "exact | float")->check(CLI::IsMember({"exact", "float"}));

  auto* nec_cmd = app.add_subcommand(
      "nec-sum", "Necessary-condition sum over the anti-diagonal: sum_l C(n,l)^{p'} / |mu_{i+l,j+n-l}|^{p'}");
  nec_cmd->add_option("--weight", o.weight, "Weight descriptor");
  nec_cmd->add_option("--p", o.p_text, "Exponent p > 1");
  nec_cmd->add_option("--n", o.n, "Power")->required();
  nec_cmd->add_option("--anchor", o.anchor, "Quadrant anchor i,j");

  std::ostringstream help_out;
  std::ostringstream help_err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_line("usage", e.what(), kExitUsage) << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << error_line("usage", "cannot open output file " + o.out_path, kExitUsage) << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;
  Dispatcher d(o, sink);
  const bool exact = o.scalar == "exact";
  try {
    if (apply_cmd->parsed())
      exact ? d.run_apply<Rational>() : d.run_apply<Complex>();
    else if (power_cmd->parsed())
      exact ? d.run_power<Rational>() : d.run_power<Complex>();
    else if (rightinv_cmd->parsed())
      d.run_rightinv();
    else if (hc_cmd->parsed())
      d.run_hc_assemble();
    else if (check_cmd->parsed())
      d.run_check();
    else if (eigen_cmd->parsed())
      d.run_eigen();
    else if (gs_cmd->parsed())
      d.run_gs_scan();
    else if (oracle_cmd->parsed())
      exact ? d.run_oracle_check<Rational>() : d.run_oracle_check<Complex>();
    else if (nec_cmd->parsed())
      d.run_nec_sum();
  } catch (const UsageError& e) {
    err << error_line("usage", e.what(), kExitUsage) << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << error_line("domain", e.what(), kExitDomain) << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace latshift::cli
