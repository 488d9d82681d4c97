#include <doctest.h>

#include <cmath>

#include "latshift/kernels.hpp"

using namespace latshift;

TEST_CASE("map_indices writes every slot once under both policies") {
  auto fn = [](std::int64_t t) { return std::sin(static_cast<double>(t)) * static_cast<double>(t * t); };
  const auto a = kernels::map_indices<double>(10007, fn, Exec::Serial);
  const auto b = kernels::map_indices<double>(10007, fn, Exec::Parallel);
  REQUIRE(a.size() == 10007);
  CHECK(a == b);
  CHECK(kernels::map_indices<int>(0, [](std::int64_t) { return 1; }, Exec::Parallel).empty());
  CHECK(kernels::map_indices<int>(-3, [](std::int64_t) { return 1; }, Exec::Serial).empty());
  CHECK(kernels::max_threads() >= 1);
}
