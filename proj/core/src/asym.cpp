#include "alphapart/asym.hpp"

#include <cmath>

#include "alphapart/saddle.hpp"
#include "alphapart/special.hpp"
#include "summation.hpp"

namespace alphapart::asym {

std::pair<double, double> mu_sigma_sums(const AlphaParams& params, double eta) {
  if (!(eta > 0.0)) throw validation_error("mu_sigma_sums requires eta > 0");
  MultiplicityTable g(params);
  const double beta = params.beta;
  const double cap = detail::multiplicity_cap(beta);
  const double eps = params.precision.eps_num;

  // terms written with E = e^{-eta k} to stay overflow-free:
  //   1/(e^{eta k}+1)       = E/(1+E)
  //   e^{eta k}/(e^{eta k}+1)^2 = E/(1+E)^2
  auto mu = detail::certified_sum(eta, beta - 1.0, cap, eps, [&](std::int64_t k) {
    const double E = std::exp(-k * eta);
    return g.g(k) * E / (1.0 + E);
  });
  auto s0 = detail::certified_sum(eta, beta - 1.0, cap, eps, [&](std::int64_t k) {
    const double E = std::exp(-k * eta);
    const double D = 1.0 + E;
    return g.g(k) * E / (D * D);
  });
  auto s1 = detail::certified_sum(eta, beta, cap, eps, [&](std::int64_t k) {
    const double E = std::exp(-k * eta);
    const double D = 1.0 + E;
    return g.g(k) * k * E / (D * D);
  });
  auto s2 = detail::certified_sum(eta, beta + 1.0, cap, eps, [&](std::int64_t k) {
    const double E = std::exp(-k * eta);
    const double D = 1.0 + E;
    return g.g(k) * static_cast<double>(k) * k * E / (D * D);
  });
  return {mu.value, s0.value - s1.value * s1.value / s2.value};
}

std::pair<double, double> c1_c2_constants(const AlphaParams& params) {
  const double beta = params.beta;
  using special::eta_value;
  using special::gamma;
  const double e_bm1 = eta_value(beta - 1.0).value;
  const double e_b = eta_value(beta).value;
  const double e_bp1 = eta_value(beta + 1.0).value;
  const double g_b = gamma(beta).value;
  const double g_bp1 = gamma(beta + 1.0).value;
  const double g_bp2 = gamma(beta + 2.0).value;

  const double D = std::pow(beta * e_bp1 * g_bp1, -beta / (beta + 1.0));
  const double c1 = beta * e_b * g_b * D;
  const double t1 = beta * e_bm1 * g_b;
  const double t2 = -std::pow(beta * e_b * g_bp1, 2.0) / (beta * e_bp1 * g_bp2);
  return {c1, (t1 + t2) * D};
}

AsymptoticEstimate predict(const AlphaParams& params, std::int64_t n) {
  if (n < 1) throw validation_error("predict requires n >= 1");
  AsymptoticEstimate est;
  est.n = n;
  est.eta = saddle::solve_saddle(params, n, 1.0).r;
  auto [mu, s2] = mu_sigma_sums(params, est.eta);
  est.mu_n = mu;
  est.sigma2_n = s2;
  auto [c1, c2] = c1_c2_constants(params);
  est.c1 = c1;
  est.c2 = c2;
  est.exponent = params.beta / (params.beta + 1.0);
  est.mu_leading = c1 * std::pow(static_cast<double>(n), est.exponent);
  est.sigma2_leading = c2 * std::pow(static_cast<double>(n), est.exponent);
  return est;
}

} // namespace alphapart::asym
