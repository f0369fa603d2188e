// Internal certified-truncation engine shared by the saddle and asym sums.
//
// Sums sum_{k>=1} term(k) for terms eventually dominated by
// tail_cap * k^poly_degree * exp(-k*tau).  Stops once
//   k*tau > poly_degree*ln(k) + 40   and   |term_k| <= eps*|partial sum|,
// then certifies the remainder with the integral bound
//   sum_{k>K} cap k^p e^{-k tau} <= cap * Int_K^inf x^p e^{-x tau} dx
//                                 <= 2 cap K^p e^{-K tau} / tau
// (valid since K tau > p ln K + 40 >= 2(p+1) for the p used here), and keeps
// summing while the certificate exceeds eps*|sum|.

#ifndef ALPHAPART_SRC_SUMMATION_HPP
#define ALPHAPART_SRC_SUMMATION_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include "alphapart/errors.hpp"

namespace alphapart::detail {

inline constexpr std::int64_t kTermCap = 100'000'000;

struct SumResult {
  double value = 0.0;
  double tail_bound = 0.0;
  std::int64_t K = 0;
};

template <class Term>
SumResult certified_sum(double tau, double poly_degree, double tail_cap,
                        double eps, Term&& term) {
  // even the cap index cannot reach the stop rule: fail before looping
  if (static_cast<double>(kTermCap) * tau <=
      poly_degree * std::log(static_cast<double>(kTermCap)) + 40.0)
    throw truncation_error("certified_sum cannot converge within " +
                           std::to_string(kTermCap) + " terms (tau=" +
                           std::to_string(tau) + ")");
  double sum = 0.0;
  for (std::int64_t k = 1;; ++k) {
    if (k > kTermCap)
      throw truncation_error("certified_sum exceeded " +
                             std::to_string(kTermCap) + " terms (tau=" +
                             std::to_string(tau) + ")");
    const double t = term(k);
    sum += t;
    const double kd = static_cast<double>(k);
    if (kd * tau > poly_degree * std::log(kd) + 40.0 &&
        std::abs(t) <= eps * (std::abs(sum) + 1e-300)) {
      const double tail =
          2.0 * tail_cap * std::pow(kd, poly_degree) * std::exp(-kd * tau) / tau;
      if (tail <= eps * (std::abs(sum) + 1e-300)) return {sum, tail, k};
    }
  }
}

// g(k) <= (beta 2^{beta-1} + 1) k^{beta-1} for all k >= 1, from
// g(k) <= (k+1)^beta - k^beta + 1 <= beta (2k)^{beta-1} + 1.
inline double multiplicity_cap(double beta) {
  return beta * std::pow(2.0, beta - 1.0) + 1.0;
}

} // namespace alphapart::detail

#endif
