#include <cmath>

#include "alphapart/saddle.hpp"
#include "summation.hpp"

namespace alphapart::saddle {

namespace {

// Inner sum over l: sum_{l>=1} (-u)^l l^{j-1} x^l with x = e^{-k tau}.
// For j=0 the sum is -log(1+ux); for j>=1 it is the Eulerian rational
// function of y = -ux (these are the exact values of the alternating
// series where it converges, and its continuation for ux >= 1):
//   j=1: y/(1-y)    j=2: y/(1-y)^2
//   j=3: y(1+y)/(1-y)^3    j=4: y(1+4y+y^2)/(1-y)^4
double inner_ell_sum(int j, double ux) {
  if (j == 0) return -std::log1p(ux);
  const double y = -ux;
  const double d = 1.0 - y; // = 1 + ux > 1
  switch (j) {
    case 1: return y / d;
    case 2: return y / (d * d);
    case 3: return y * (1.0 + y) / (d * d * d);
    default: return y * (1.0 + y * (4.0 + y)) / (d * d * d * d);
  }
}

} // namespace

double h_sum(const AlphaParams& params, double gamma, int j, double tau,
             double u) {
  if (!(gamma > 0.0)) throw validation_error("h_sum requires gamma > 0");
  if (!(tau > 0.0)) throw validation_error("h_sum requires tau > 0");
  if (j < 0 || j > 4) throw validation_error("h_sum supports j in [0,4]");
  if (!(u > 0.0)) throw validation_error("h_sum requires u > 0");
  // |inner| <= 6 u e^{-k tau} once u e^{-k tau} <= 1/2, which the stop rule's
  // +40 margin guarantees for all u <= 1/delta
  auto res = detail::certified_sum(
      tau, gamma + j, 6.0 * u, params.precision.eps_num, [&](std::int64_t k) {
        const double kd = static_cast<double>(k);
        return std::pow(kd, gamma + j) * inner_ell_sum(j, u * std::exp(-kd * tau));
      });
  return res.value;
}

} // namespace alphapart::saddle
