#include <doctest.h>

#include <random>

#include "latshift/error.hpp"
#include "latshift/shift.hpp"
#include "oracles.hpp"

using namespace latshift;

namespace {

using Vec = SparseVector<Rational>;

Vec e(const GraphModel& g, std::int64_t i, std::int64_t j) { return Vec::unit(g, g.vertex(i, j)); }
Vec e(const GraphModel& g, std::int64_t k) { return Vec::unit(g, g.vertex(k)); }

std::vector<GraphModel> closed_form_models() {
  return {GraphModel::strip(1), GraphModel::strip(2),   GraphModel::strip(3),      GraphModel::strip(5),
          GraphModel::bilateral_strip(3), GraphModel::quadrant(), GraphModel::half_plane(), GraphModel::path_cycle()};
}

}  // namespace

TEST_CASE("apply examples") {
  const auto s3 = GraphModel::strip(3);
  CHECK(latshift::apply(s3, e(s3, 2, 2)) == e(s3, 1, 2) + e(s3, 2, 1));
  CHECK(latshift::apply(s3, e(s3, 1, 1)).empty());
  const auto pc = GraphModel::path_cycle();
  CHECK(latshift::apply(pc, e(pc, 1)) == e(pc, 2));
  CHECK_THROWS_AS(latshift::apply(GraphModel::quadrant(), e(s3, 1, 1)), DomainError);
}

TEST_CASE("power_apply examples") {
  const auto s3 = GraphModel::strip(3);
  CHECK(power_apply(s3, e(s3, 2, 5), 0) == e(s3, 2, 5));
  CHECK(power_apply(s3, e(s3, 3, 3), 2) == e(s3, 1, 3) + e(s3, 2, 2).scaled(2) + e(s3, 3, 1));
  const auto q = GraphModel::quadrant();
  CHECK(power_apply(q, e(q, 1, 1), 2) == e(q, 0, 0).scaled(2));
  CHECK_THROWS_AS(power_apply(q, e(q, 1, 1), -1), DomainError);
}

TEST_CASE("power_closed examples") {
  const auto s2 = GraphModel::strip(2);
  // B^n e_{2, j+n} = n e_{1, j+1} + e_{2, j} with j = 1, n = 5
  CHECK(power_closed(s2, e(s2, 2, 6), 5) == e(s2, 1, 2).scaled(5) + e(s2, 2, 1));

  const auto pc = GraphModel::path_cycle();
  Vec f(pc);
  for (int k = 1; k <= 6; ++k) f.add(pc.vertex(k), Rational(k * k + 1));
  auto fk = [&](int k) { return f.at(pc.vertex(k)); };
  Vec expect(pc);
  expect.add(pc.vertex(1), fk(2) + fk(4));
  expect.add(pc.vertex(2), fk(1) + fk(3) + fk(5));
  expect.add(pc.vertex(3), fk(6));
  CHECK(power_closed(pc, f, 3) == expect);
  CHECK(power_apply(pc, f, 3) == expect);

  const auto q = GraphModel::quadrant();
  CHECK(power_closed(q, e(q, 0, 0), 1).empty());
  CHECK(power_closed(q, e(q, 5, 5), 10) == e(q, 0, 0).scaled(252));

  CHECK_THROWS_AS(power_closed(GraphModel::skip_path(), e(GraphModel::skip_path(), 3), 1), UnsupportedModel);
  CHECK_THROWS_AS(power_closed(GraphModel::diamond_chain(), e(GraphModel::diamond_chain(), 2, 2), 1),
                  UnsupportedModel);
}

TEST_CASE("path-cycle parity formulas for every power") {
  // B^{2t-1} f = (sum_{j<=t} f_{2j}, sum_{j<=t+1} f_{2j-1}, f_{2t+2}, f_{2t+3}, ...)
  // B^{2t}   f = (sum_{j<=t+1} f_{2j-1}, sum_{j<=t+1} f_{2j}, f_{2t+3}, ...)
  const auto pc = GraphModel::path_cycle();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int len = 12;
    std::vector<Rational> f(len + 1);
    Vec vec(pc);
    for (int k = 1; k <= len; ++k) {
      f[k] = oracle::random_rational(rng);
      vec.add(pc.vertex(k), f[k]);
    }
    auto at = [&](int k) { return k >= 1 && k <= len ? f[k] : Rational(0); };
    for (int n = 1; n <= 14; ++n) {
      Vec expect(pc);
      const int t = (n + 1) / 2;
      Rational a = 0, b = 0;
      if (n % 2 == 1) {
        for (int j = 1; j <= t; ++j) a += at(2 * j);
        for (int j = 1; j <= t + 1; ++j) b += at(2 * j - 1);
        expect.add(pc.vertex(1), a);
        expect.add(pc.vertex(2), b);
        for (int k = 3; k <= len; ++k) expect.add(pc.vertex(k), at(k + 2 * t - 1));
      } else {
        for (int j = 1; j <= t + 1; ++j) a += at(2 * j - 1);
        for (int j = 1; j <= t + 1; ++j) b += at(2 * j);
        expect.add(pc.vertex(1), a);
        expect.add(pc.vertex(2), b);
        for (int k = 3; k <= len; ++k) expect.add(pc.vertex(k), at(k + 2 * t));
      }
      CAPTURE(n);
      REQUIRE(power_closed(pc, vec, n) == expect);
    }
  }
}

TEST_CASE("property: closed form equals iteration on basis vectors") {
  for (int m = 1; m <= 5; ++m) {
    const auto g = GraphModel::strip(m);
    for (int n = 0; n <= 40; n += (n < 10 ? 1 : 3))
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= 20; ++j) REQUIRE(power_closed(g, e(g, i, j), n) == power_apply(g, e(g, i, j), n));
  }
  const auto q = GraphModel::quadrant();
  for (int n = 0; n <= 25; ++n)
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; i + j <= 20; ++j) REQUIRE(power_closed(q, e(q, i, j), n) == power_apply(q, e(q, i, j), n));
}

TEST_CASE("property: closed form equals walk counting on random vectors") {
  std::mt19937_64 rng(99);
  for (const auto& g : closed_form_models()) {
    CAPTURE(to_string(g));
    for (int t = 0; t < 100; ++t) {
      const auto f = oracle::random_vector(g, 8, rng);
      const int n = std::uniform_int_distribution<int>(0, 12)(rng);
      const auto closed = power_closed(g, f, n);
      REQUIRE(closed == power_apply(g, f, n));
      // every vertex reaching the support in n steps lies in the enlarged box
      REQUIRE(closed == oracle::walk_power(g, f, n, truncate(g, Extent{8 + n})));
    }
  }
}

TEST_CASE("property: linearity and semigroup") {
  std::mt19937_64 rng(5);
  for (const auto& g : {GraphModel::strip(3), GraphModel::quadrant(), GraphModel::skip_path(),
                        GraphModel::diamond_chain(), GraphModel::half_plane()}) {
    for (int t = 0; t < 50; ++t) {
      const auto f = oracle::random_vector(g, 10, rng);
      const auto h = oracle::random_vector(g, 10, rng);
      const auto a = oracle::random_rational(rng);
      const auto b = oracle::random_rational(rng);
      REQUIRE(latshift::apply(g, f.scaled(a) + h.scaled(b)) ==
              latshift::apply(g, f).scaled(a) + latshift::apply(g, h).scaled(b));
      const int n = std::uniform_int_distribution<int>(0, 6)(rng);
      const int k = std::uniform_int_distribution<int>(0, 6)(rng);
      REQUIRE(power_apply(g, f, n + k) == power_apply(g, power_apply(g, f, n), k));
    }
  }
}

TEST_CASE("binomial mass on the quadrant") {
  const auto q = GraphModel::quadrant();
  for (int n = 0; n <= 30; ++n) {
    const auto r = power_closed(q, e(q, n + 2, n), n);
    Rational mass = 0;
    for (const auto& [v, x] : r) mass += x;
    BigInt two_n = 1;
    two_n <<= n;
    REQUIRE(mass == Rational(two_n));
  }
}

TEST_CASE("float path matches exact path") {
  std::mt19937_64 rng(17);
  const auto g = GraphModel::strip(4);
  for (int t = 0; t < 30; ++t) {
    const auto f = oracle::random_vector(g, 10, rng);
    const auto exact = to_float(power_closed(g, f, 9));
    const auto fl = power_closed(g, to_float(f), 9);
    CHECK(max_deviation(exact, fl) <= 1e-9);
  }
}

TEST_CASE("restriction") {
  const auto h = GraphModel::half_plane();
  const auto q = GraphModel::quadrant();
  CHECK(restrict_to(e(h, 2, -1) + e(h, 1, 3), q) == e(q, 1, 3));
  CHECK(restrict_to(Vec(h), q).empty());
  const auto b = GraphModel::bilateral_strip(3);
  const auto s = GraphModel::strip(3);
  CHECK(restrict_to(e(b, 2, 0) + e(b, 2, 1), s) == e(s, 2, 1));
  CHECK_THROWS_AS(restrict_to(e(h, 1, 1), s), DomainError);
  CHECK_THROWS_AS(restrict_to(e(b, 1, 1), GraphModel::strip(2)), DomainError);
}

TEST_CASE("property: restriction intertwines the shifts") {
  std::mt19937_64 rng(31);
  const auto h = GraphModel::half_plane();
  const auto q = GraphModel::quadrant();
  const auto b = GraphModel::bilateral_strip(4);
  const auto s = GraphModel::strip(4);
  for (int t = 0; t < 200; ++t) {
    const auto f = oracle::random_vector(h, 8, rng);
    REQUIRE(restrict_to(latshift::apply(h, f), q) == latshift::apply(q, restrict_to(f, q)));
    const auto g = oracle::random_vector(b, 8, rng);
    REQUIRE(restrict_to(latshift::apply(b, g), s) == latshift::apply(s, restrict_to(g, s)));
  }
}

TEST_CASE("diagonal regrouping") {
  const auto h = GraphModel::half_plane();
  const auto b1 = diagonal_regroup(e(h, 2, 1));
  REQUIRE(b1.blocks.size() == 1);
  CHECK(b1.blocks.at(3) == std::map<std::int64_t, Rational>{{2, 1}});

  const auto b2 = diagonal_regroup(e(h, 0, 0) + e(h, 1, -1));
  CHECK(b2.blocks.at(0) == std::map<std::int64_t, Rational>{{0, 1}, {1, 1}});

  const auto shifted = generalized_shift_apply(diagonal_regroup(e(h, 1, 2)));
  CHECK(shifted.blocks.at(2) == std::map<std::int64_t, Rational>{{0, 1}, {1, 1}});
  CHECK(shifted == diagonal_regroup(latshift::apply(h, e(h, 1, 2))));

  CHECK(generalized_shift_apply(diagonal_regroup(Vec(h))).blocks.empty());
  CHECK_THROWS_AS(diagonal_regroup(e(GraphModel::strip(2), 1, 1)), DomainError);
}

TEST_CASE("property: regrouping round trip and the generalized shift identity") {
  std::mt19937_64 rng(2718);
  const auto h = GraphModel::half_plane();
  const auto q = GraphModel::quadrant();
  for (int t = 0; t < 200; ++t) {
    const auto f = oracle::random_vector(h, 9, rng);
    REQUIRE(diagonal_ungroup(diagonal_regroup(f)) == f);
    REQUIRE(diagonal_regroup(latshift::apply(h, f)) == generalized_shift_apply(diagonal_regroup(f)));
    const auto g = oracle::random_vector(q, 9, rng);
    REQUIRE(diagonal_ungroup(diagonal_regroup(g)) == g);
    REQUIRE(diagonal_regroup(latshift::apply(q, g)) == generalized_shift_apply(diagonal_regroup(g)));
  }
}
