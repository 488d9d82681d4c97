#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "latshift/error.hpp"
#include "latshift/space.hpp"
#include "oracles.hpp"

using namespace latshift;

namespace {

WeightFamily square_exponent_rule() {
  // mu_{i,j} = 2^{-(i+j)^2}
  return WeightFamily::rule(WeightRule{
      "2^-(i+j)^2",
      [](const Vertex& v) { return Complex(std::ldexp(1.0, -static_cast<int>((v.i + v.j) * (v.i + v.j))), 0.0); },
      [](const Vertex& v) -> std::optional<Rational> {
        BigInt den = 1;
        den <<= static_cast<mp_bitcnt_t>((v.i + v.j) * (v.i + v.j));
        return Rational(BigInt(1), den);
      }});
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(parse_rational("007") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("binomial and integer powers") {
  for (int n = 0; n <= 40; ++n)
    for (int k = -1; k <= n + 1; ++k) REQUIRE(binomial(n, k) == oracle::pascal(n, k));
  CHECK(ipow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(ipow(Rational(5), 0) == Rational(1));
  CHECK(std::abs(ipow(Complex(0, 1), 2) - Complex(-1, 0)) < 1e-15);
  CHECK_THROWS_AS(ipow(Rational(0), -1), DomainError);
  BigInt huge = 1;
  huge <<= 5000;
  CHECK(log_abs(Rational(huge)) == doctest::Approx(5000 * std::log(2.0)));
}

TEST_CASE("eval_weight") {
  const auto s = GraphModel::strip(3);
  CHECK(eval_weight<Rational>(WeightFamily::geometric_j(Rational(1, 2)), s.vertex(3, 4)) == Rational(1, 16));
  const auto q = GraphModel::quadrant();
  CHECK(eval_weight<Rational>(WeightFamily::geometric_sum(2), q.vertex(1, 2)) == 8);
  CHECK(eval_weight<Rational>(WeightFamily::constant(1), q.vertex(7, 9)) == 1);
  CHECK(eval_weight<Complex>(WeightFamily::polynomial_j(2), q.vertex(0, 3)).real() == doctest::Approx(1.0 / 16));
  CHECK(eval_weight<Rational>(WeightFamily::polynomial_j(2), q.vertex(0, 3)) == Rational(1, 16));

  // bilateral negative j
  const auto b = GraphModel::bilateral_strip(1);
  CHECK(eval_weight<Rational>(WeightFamily::geometric_j(Rational(1, 2)), b.vertex(1, -3)) == 8);
}

TEST_CASE("weight errors") {
  CHECK_THROWS_AS(WeightFamily::constant(0), DomainError);
  CHECK_THROWS_AS(WeightFamily::geometric_j(0), DomainError);
  const auto tab = WeightFamily::table({{{0, 0}, WeightEntry(Rational(3))}});
  const auto q = GraphModel::quadrant();
  CHECK(tab.eval_exact(q.vertex(0, 0)) == 3);
  CHECK_THROWS_AS(tab.eval(q.vertex(1, 0)), DomainError);
  CHECK_THROWS_AS(WeightFamily::table({{{0, 0}, WeightEntry(Rational(0))}}), DomainError);
  CHECK_THROWS_AS(WeightFamily::load_table_csv("/nonexistent/weights.csv"), DomainError);
  CHECK_THROWS_AS(SpaceSpec::lp(0.5), DomainError);
}

TEST_CASE("one-coordinate families with a fallback rule") {
  const auto fam = WeightFamily::one_coordinate(
      {{0, WeightEntry(Rational(5))}},
      WeightRule{"2^-i", [](const Vertex& v) { return Complex(std::ldexp(1.0, -static_cast<int>(v.i)), 0.0); },
                 [](const Vertex& v) -> std::optional<Rational> { return oracle::power(Rational(1, 2), v.i); }});
  const auto h = GraphModel::half_plane();
  CHECK(fam.eval_exact(h.vertex(0, -7)) == 5);
  CHECK(fam.eval_exact(h.vertex(3, 11)) == Rational(1, 8));
  CHECK(fam.eval_exact(h.vertex(3, -11)) == Rational(1, 8));
  CHECK(fam.is_exact());
}

TEST_CASE("CSV weight tables") {
  const auto dir = std::filesystem::temp_directory_path() / "latshift_space_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "table.csv");
    f << "i,j,re,im\n0,0,1/2,0\n1,0,3,0\n0,1,0.25,0\n";
    std::ofstream g(dir / "layers.csv");
    g << "0,2,0\n1,4,0\n";
    std::ofstream h(dir / "complex.csv");
    h << "i,j,re,im\n0,0,0,1\n";
  }
  const auto q = GraphModel::quadrant();
  const auto tab = WeightFamily::load_table_csv(dir / "table.csv");
  CHECK(tab.eval_exact(q.vertex(0, 0)) == Rational(1, 2));
  CHECK(tab.eval_exact(q.vertex(0, 1)) == Rational(1, 4));
  const auto layers = WeightFamily::load_one_coordinate_csv(dir / "layers.csv");
  CHECK(layers.eval_exact(q.vertex(1, 9)) == 4);
  const auto cplx = WeightFamily::load_table_csv(dir / "complex.csv");
  CHECK_FALSE(cplx.is_exact());
  CHECK(cplx.eval_approx(q.vertex(0, 0)) == Complex(0, 1));
  CHECK(cplx.abs(q.vertex(0, 0)) == doctest::Approx(1.0));
  std::filesystem::remove_all(dir);
}

TEST_CASE("norm examples") {
  const auto s1 = GraphModel::strip(1);
  const auto e11 = SparseVector<Rational>::unit(s1, s1.vertex(1, 1));
  CHECK(norm(e11, WeightFamily::constant(1), SpaceSpec::lp(2)) == 1.0);

  const auto s2 = GraphModel::strip(2);
  auto v = SparseVector<Rational>::unit(s2, s2.vertex(1, 1)) + SparseVector<Rational>::unit(s2, s2.vertex(2, 1));
  const auto half = WeightFamily::geometric_j(Rational(1, 2));
  CHECK(norm(v, half, SpaceSpec::lp(1)) == doctest::Approx(1.0));
  CHECK(norm_pow_exact(v, half, 1) == 1);

  const auto q = GraphModel::quadrant();
  const auto w = SparseVector<Rational>::unit(q, q.vertex(0, 2)).scaled(3);
  CHECK(norm(w, WeightFamily::geometric_sum(2), SpaceSpec::c0()) == doctest::Approx(12.0));
  CHECK(sup_norm_exact(w, WeightFamily::geometric_sum(2)) == 12);
  CHECK(norm(SparseVector<Rational>(q), WeightFamily::constant(1), SpaceSpec::lp(3)) == 0.0);
}

TEST_CASE("boundedness reports") {
  const auto r1 = boundedness_report(GraphModel::strip(2), WeightFamily::geometric_j(Rational(1, 2)), Extent{50});
  CHECK(r1.verdict == BoundednessReport::Verdict::BoundedEvidence);
  REQUIRE(r1.constant_exact.has_value());
  CHECK(*r1.constant_exact == 2);
  CHECK(r1.constant == doctest::Approx(2.0));

  const auto r2 = boundedness_report(GraphModel::quadrant(), WeightFamily::constant(1), Extent{50});
  CHECK(r2.verdict == BoundednessReport::Verdict::BoundedEvidence);
  CHECK(r2.constant == doctest::Approx(1.0));

  const auto r3 = boundedness_report(GraphModel::quadrant(), square_exponent_rule(), Extent{30});
  CHECK(r3.verdict == BoundednessReport::Verdict::UnboundedEvidence);
  // direct ratio scan: at i+j = s the ratio is 2^{2s+1}
  CHECK(r3.constant == doctest::Approx(std::ldexp(1.0, 2 * 30 + 1)));
}

TEST_CASE("property: norm homogeneity, triangle inequality and p-monotonicity") {
  std::mt19937_64 rng(20240601);
  const auto q = GraphModel::quadrant();
  const auto w = WeightFamily::geometric_sum(Rational(3, 2));
  const auto one = WeightFamily::constant(1);
  const std::vector<SpaceSpec> spaces{SpaceSpec::lp(1), SpaceSpec::lp(2), SpaceSpec::lp(3.5), SpaceSpec::c0()};
  for (int t = 0; t < 200; ++t) {
    const auto f = oracle::random_vector(q, 10, rng);
    const auto g = oracle::random_vector(q, 10, rng);
    const auto c = oracle::random_rational(rng);
    for (const auto& sp : spaces) {
      const double nf = norm(f, w, sp);
      CHECK(norm(f.scaled(c), w, sp) == doctest::Approx(std::fabs(c.get_d()) * nf).epsilon(1e-12));
      CHECK(norm(f + g, w, sp) <= nf + norm(g, w, sp) + 1e-12 * (nf + 1));
    }
    const double n_inf = norm(f, one, SpaceSpec::c0());
    const double n2 = norm(f, one, SpaceSpec::lp(2));
    const double n1 = norm(f, one, SpaceSpec::lp(1));
    CHECK(n_inf <= n2 + 1e-12);
    CHECK(n2 <= n1 + 1e-12);
    // exact and float evaluations agree
    CHECK(norm(to_float(f), w, SpaceSpec::lp(2)) == doctest::Approx(norm(f, w, SpaceSpec::lp(2))).epsilon(1e-12));
    CHECK(std::sqrt(norm_pow_exact(f, w, 2).get_d()) == doctest::Approx(norm(f, w, SpaceSpec::lp(2))));
  }
}

TEST_CASE("property: every edge in the extent satisfies |mu_v| <= C |mu_u|") {
  const std::vector<std::pair<GraphModel, WeightFamily>> cases{
      {GraphModel::strip(3), WeightFamily::geometric_j(Rational(1, 3))},
      {GraphModel::quadrant(), WeightFamily::polynomial_j(2)},
      {GraphModel::half_plane(), WeightFamily::geometric_sum(Rational(5, 4))},
      {GraphModel::skip_path(), WeightFamily::geometric_j(Rational(2, 3))},
  };
  for (const auto& [g, fam] : cases) {
    const auto rep = boundedness_report(g, fam, Extent{20});
    for (const auto& v : truncate(g, Extent{20}))
      for (const auto& u : children(g, v))
        if (shell(g, u) <= 20) CHECK(fam.abs(v) <= rep.constant * fam.abs(u) * (1 + 1e-12));
  }
}
