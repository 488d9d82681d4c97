#include <doctest.h>

#include <cmath>
#include <random>

#include "latshift/error.hpp"
#include "latshift/shift.hpp"
#include "latshift/spectral.hpp"
#include "oracles.hpp"

using namespace latshift;

TEST_CASE("quadrant eigenvectors") {
  const auto q = GraphModel::quadrant();
  const auto p = eigenvector_quadrant(Rational(1), Rational(1, 2), 3);
  CHECK(p.lambda == 1);
  for (const auto& v : truncate(q, Extent{3})) CHECK(p.vec.at(v) == oracle::power(Rational(1, 2), v.i + v.j));
  CHECK(p.vec.size() == 10);

  const auto p2 = eigenvector_quadrant(Rational(2), Rational(1, 8), 12);
  CHECK(p2.vec.at(q.vertex(1, 1)) == Rational(1, 8));
  CHECK(p2.lambda == Rational(3, 4));
  const auto bf = latshift::apply(q, p2.vec);
  CHECK(bf.at(q.vertex(1, 1)) / p2.vec.at(q.vertex(1, 1)) == Rational(3, 4));

  CHECK_THROWS_AS(eigenvector_quadrant(Rational(1), Rational(0), 5), DomainError);
  CHECK_THROWS_AS(eigenvector_quadrant(Rational(1, 2), Rational(1, 3), 5), DomainError);
  CHECK_THROWS_AS(eigenvector_quadrant(Complex(1, 1), Complex(0.5, 0), 5), DomainError);
}

TEST_CASE("skip eigenvectors") {
  const auto sk = GraphModel::skip_path();
  const auto p = eigenvector_skip(Rational(1, 2), 20);
  CHECK(p.lambda == Rational(3, 4));
  CHECK(p.vec.at(sk.vertex(20)) == oracle::power(Rational(1, 2), 20));
  CHECK(p.vec.at(sk.vertex(21)) == 0);
  CHECK(eigenvector_skip(Rational(-1), 10).lambda == 0);
  CHECK(eigenvector_skip(Rational(1, 3), 30).lambda == Rational(4, 9));
  CHECK(eigen_residual(sk, eigenvector_skip(Rational(1, 3), 30), 2) == 0);
}

TEST_CASE("eigen residuals") {
  const auto q = GraphModel::quadrant();
  const auto sk = GraphModel::skip_path();
  CHECK(eigen_residual(q, eigenvector_quadrant(Rational(1), Rational(1, 2), 10), 1) == 0);
  CHECK(eigen_residual(sk, eigenvector_skip(Rational(1, 2), 20), 2) == 0);
  // the skip family needs two steps of interior: margin 1 sees the cut
  CHECK(eigen_residual(sk, eigenvector_skip(Rational(1, 2), 20), 1) > 0);

  // generic vector: strictly positive residual
  auto p = eigenvector_quadrant(Rational(1), Rational(1, 2), 10);
  p.vec.add(q.vertex(2, 3), Rational(1, 7));
  CHECK(eigen_residual(q, p, 1) > 0);

  CHECK_THROWS_AS(eigen_residual(q, eigenvector_quadrant(Rational(1), Rational(1, 2), 4), 5), DomainError);
  CHECK_THROWS_AS(eigen_residual(q, eigenvector_quadrant(Rational(1), Rational(1, 2), 4), 0), DomainError);
  CHECK_THROWS_AS(eigen_residual(sk, eigenvector_quadrant(Rational(1), Rational(1, 2), 4), 1), DomainError);

  // weighted residual
  const auto w = WeightFamily::geometric_sum(3);
  CHECK(eigen_residual(q, eigenvector_quadrant(Rational(2), Rational(1, 5), 8), 1, &w) == 0);
}

TEST_CASE("property: exact eigen-identities on random rational parameters") {
  std::mt19937_64 rng(77);
  const auto q = GraphModel::quadrant();
  const auto sk = GraphModel::skip_path();
  for (int t = 0; t < 20; ++t) {
    const Rational r = Rational(1) + Rational(std::uniform_int_distribution<long>(0, 8)(rng), 4);
    const Rational s = oracle::random_rational(rng) / 8;
    const auto pair = eigenvector_quadrant(r, s, 15);
    CHECK(pair.lambda == s * (r * r + r));
    CHECK(eigen_residual(q, pair, 1) == 0);
    const auto skp = eigenvector_skip(s, 30);
    CHECK(skp.lambda == s * (1 + s));
    CHECK(eigen_residual(sk, skp, 2) == 0);
  }
}

TEST_CASE("float eigen residuals are small relative to the entries") {
  std::mt19937_64 rng(78);
  const auto q = GraphModel::quadrant();
  for (int t = 0; t < 20; ++t) {
    const double r = std::uniform_real_distribution<double>(1.0, 1.5)(rng);
    const Complex s = std::polar(std::uniform_real_distribution<double>(0.05, 0.4)(rng),
                                 std::uniform_real_distribution<double>(-3.0, 3.0)(rng));
    const auto pair = eigenvector_quadrant(Complex(r, 0), s, 15);
    double scale = 0;
    for (const auto& [v, x] : pair.vec) scale = std::max(scale, std::abs(x) * std::abs(pair.lambda));
    CHECK(eigen_residual(q, pair, 1) <= 1e-12 * scale);
    CHECK(std::abs(pair.lambda - s * (r * r + r)) <= 1e-15 * std::abs(pair.lambda));
  }
}

TEST_CASE("norm membership along growing truncations") {
  // |s| q r^2 < 1 with GeometricSum(q): the weighted norms stabilise
  const auto w = WeightFamily::geometric_sum(Rational(3, 2));
  auto tail = [&](const Rational& r, const Rational& s) {
    const double a = norm(eigenvector_quadrant(r, s, 30).vec, w, SpaceSpec::lp(2));
    const double b = norm(eigenvector_quadrant(r, s, 60).vec, w, SpaceSpec::lp(2));
    return std::pair{a, b};
  };
  const auto [a1, b1] = tail(Rational(1), Rational(1, 2));  // 3/4 < 1
  CHECK(b1 == doctest::Approx(a1).epsilon(1e-6));
  const auto [a2, b2] = tail(Rational(1), Rational(4, 5));  // 6/5 > 1
  CHECK(b2 > 100 * a2);
}

TEST_CASE("Godefroy-Shapiro region scan") {
  std::vector<Complex> ss;
  for (int t = 1; t <= 18; ++t) ss.emplace_back(0.05 * t, 0.0);
  const auto r1 = gs_region_scan(WeightFamily::constant(1), {1.05}, ss, 60);
  CHECK(r1.any_sub_unit);
  CHECK(r1.any_super_unit);
  CHECK(r1.verdict == Verdict::MixingEvidence);
  for (const auto& p : r1.points) {
    CHECK(p.in_norm == (std::abs(p.s) * r1.q_hat * p.r * p.r < 1));
    CHECK(p.abs_lambda == doctest::Approx(std::abs(p.s) * (p.r * p.r + p.r)));
  }

  std::vector<double> rs;
  for (int t = 0; t <= 10; ++t) rs.push_back(1.0 + 0.1 * t);
  const auto r2 = gs_region_scan(WeightFamily::geometric_sum(2), rs, ss, 60);
  CHECK_FALSE(r2.any_super_unit);
  CHECK(r2.verdict == Verdict::Inconclusive);

  const auto r3 = gs_region_scan(WeightFamily::constant(1), {}, {}, 60);
  CHECK(r3.points.empty());
  CHECK(r3.verdict == Verdict::Inconclusive);
  CHECK_THROWS_AS(gs_region_scan(WeightFamily::constant(1), {0.5}, ss, 60), DomainError);

  const auto serial = gs_region_scan(WeightFamily::constant(1), rs, ss, 60, Exec::Serial);
  const auto par = gs_region_scan(WeightFamily::constant(1), rs, ss, 60, Exec::Parallel);
  REQUIRE(serial.points.size() == par.points.size());
  for (std::size_t t = 0; t < serial.points.size(); ++t) CHECK(serial.points[t].tag == par.points[t].tag);
}

TEST_CASE("eigenvector span covers a finite box") {
  // r and s drawn independently
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<long> num(1, 96);
  for (std::int64_t k = 0; k <= 4; ++k) {
    std::vector<std::pair<Rational, Rational>> pts;
    const auto need = static_cast<std::size_t>((k + 1) * (k + 2) / 2);
    while (pts.size() < need) {
      Rational r(97 + num(rng), 97);
      Rational s(num(rng), 97);
      r.canonicalize();
      s.canonicalize();
      pts.emplace_back(r, s);
    }
    CHECK(eigen_span_rank(pts, k) == need);

    // independent rank computation on the same truncations
    std::vector<std::vector<Rational>> rows;
    const auto box = truncate(GraphModel::quadrant(), Extent{k});
    for (const auto& [r, s] : pts) {
      std::vector<Rational> row;
      for (const auto& v : box) row.push_back(oracle::power(r, v.i + 2 * v.j) * oracle::power(s, v.i + v.j));
      rows.push_back(row);
    }
    CHECK(oracle::rank(rows) == need);
  }
  // points along one rational curve in (rs, r^2 s) fall short of spanning
  std::vector<std::pair<Rational, Rational>> curve;
  for (long t = 0; t < 10; ++t) {
    Rational r(17 + t, 17), s(t + 1, t + 7);
    r.canonicalize();
    s.canonicalize();
    curve.emplace_back(r, s);
  }
  CHECK(eigen_span_rank(curve, 3) < 10);
  // repeated points cannot span
  CHECK(eigen_span_rank({{Rational(1), Rational(1, 2)}, {Rational(1), Rational(1, 2)}, {Rational(1), Rational(1, 2)}},
                        1) == 1);
}
