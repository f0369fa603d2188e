#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "alphapart/params.hpp"

using namespace alphapart;

namespace {

const double kAlphas[] = {0.5, 1.0 / 3.0, 2.0 / 3.0, 0.7};

AlphaParams make(double a) {
  if (a == 0.5) return AlphaParams::from_rational(1, 2);
  if (a == 1.0 / 3.0) return AlphaParams::from_rational(1, 3);
  if (a == 2.0 / 3.0) return AlphaParams::from_rational(2, 3);
  return AlphaParams::from_real(a);
}

} // namespace

TEST_CASE("g(k) examples") {
  CHECK(g_of_k(AlphaParams::from_rational(1, 2), 1) == 3);
  CHECK(g_of_k(AlphaParams::from_rational(1, 3), 2) == 19); // 3^3 - 2^3
  CHECK(g_of_k(AlphaParams::from_real(0.7), 1) == 2);       // ceil(2^{1/0.7}) - 1
}

TEST_CASE("g_prefix examples and telescoping") {
  auto p = AlphaParams::from_rational(1, 2);
  auto pre = g_prefix(p, 3);
  REQUIRE(pre.size() == 3);
  CHECK(pre[0].g == 3);
  CHECK(pre[1].g == 5);
  CHECK(pre[2].g == 7);

  auto one = g_prefix(p, 1);
  CHECK(one[0].g == 3); // = ceil(2^2) - 1

  auto p7 = AlphaParams::from_real(0.7);
  auto pre7 = g_prefix(p7, 2);
  CHECK(pre7[0].g == 2);
  std::int64_t total = pre7[0].g + pre7[1].g;
  // telescoping: sum = ceil(3^beta) - 1
  CHECK(total == static_cast<std::int64_t>(std::ceil(std::pow(3.0, 1.0 / 0.7))) - 1);
}

TEST_CASE("telescoping identity across alphas") {
  for (double a : kAlphas) {
    auto params = make(a);
    for (std::int64_t k_max : {1, 7, 100, 1000}) {
      auto pre = g_prefix(params, k_max);
      std::int64_t sum = 0;
      for (const auto& pm : pre) sum += pm.g;
      // independent ceiling via long double; exact-integer powers (integer
      // beta) round instead of ceil
      long double v = std::pow(static_cast<long double>(k_max + 1),
                               static_cast<long double>(params.beta));
      long double near = std::abs(v - std::round(v));
      long double c = near < 1e-9 ? std::round(v) : std::ceil(v);
      CHECK(sum == static_cast<std::int64_t>(c) - 1);
    }
  }
}

TEST_CASE("multiplicity lower bound and sandwich") {
  for (double a : kAlphas) {
    auto params = make(a);
    auto pre = g_prefix(params, 2000);
    for (const auto& [k, g] : pre) {
      CHECK(g >= 1);
      CHECK(static_cast<double>(g) >
            (params.beta - 1.0) * std::pow(static_cast<double>(k), params.beta - 1.0));
      const double ideal = std::pow(k + 1.0, params.beta) -
                           std::pow(static_cast<double>(k), params.beta);
      CHECK(std::abs(static_cast<double>(g) - ideal) <= 1.0 + 1e-7);
    }
  }
}

TEST_CASE("rational and extended-precision paths agree for alpha = 1/2") {
  const std::int64_t k_max = 1'000'000;
  auto exact = g_prefix(AlphaParams::from_rational(1, 2), k_max);
  auto guarded = g_prefix(AlphaParams::from_real(0.5), k_max);
  REQUIRE(exact.size() == guarded.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    REQUIRE(exact[i].g == guarded[i].g);
  }
}

TEST_CASE("m is the integer with m < beta <= m+1") {
  CHECK(AlphaParams::from_rational(1, 2).m == 1);  // beta = 2
  CHECK(AlphaParams::from_rational(1, 3).m == 2);  // beta = 3
  CHECK(AlphaParams::from_rational(2, 3).m == 1);  // beta = 1.5
  CHECK(AlphaParams::from_real(0.7).m == 1);       // beta ~ 1.43
  CHECK(AlphaParams::from_real(0.25).m == 3);      // beta = 4
  CHECK(AlphaParams::from_real(0.9).m == 1);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(AlphaParams::from_real(1.2), validation_error);
  CHECK_THROWS_AS(AlphaParams::from_real(0.0), validation_error);
  CHECK_THROWS_AS(AlphaParams::from_real(-0.5), validation_error);
  CHECK_THROWS_AS(AlphaParams::from_rational(2, 4), validation_error); // not coprime
  CHECK_THROWS_AS(AlphaParams::from_rational(3, 2), validation_error); // p >= q
  CHECK_THROWS_AS(AlphaParams::from_rational(0, 2), validation_error);
  CHECK_THROWS_AS(AlphaParams::from_real(0.5, 0.0), validation_error); // delta
  CHECK_THROWS_AS(g_of_k(AlphaParams::from_real(0.5), 0), validation_error);
}

TEST_CASE("MultiplicityTable matches g_of_k under incremental growth") {
  auto params = AlphaParams::from_real(0.7);
  MultiplicityTable table(params);
  CHECK(table.g(5) == g_of_k(params, 5));
  CHECK(table.g(1) == g_of_k(params, 1));
  CHECK(table.g(333) == g_of_k(params, 333));
  for (std::int64_t k : {2, 10, 100, 334}) CHECK(table.g(k) == g_of_k(params, k));
}
