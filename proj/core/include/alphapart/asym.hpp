// Closed-form asymptotic predictions for the length of a random restricted
// alpha-partition: the summand-form mean/variance
//   mu_n      = sum_k g(k) / (e^{eta k} + 1)
//   sigma_n^2 = sum_k g(k) e^{eta k}/(e^{eta k}+1)^2
//               - (sum_k g(k) k e^{eta k}/(e^{eta k}+1)^2)^2
//                 / sum_k g(k) k^2 e^{eta k}/(e^{eta k}+1)^2
// at the saddle point eta = r(n,1), and their leading-order constants
// c1, c2 with mu_n ~ c1 n^{1/(1+alpha)}, sigma_n^2 ~ c2 n^{1/(1+alpha)}.

#ifndef ALPHAPART_ASYM_HPP
#define ALPHAPART_ASYM_HPP

#include <cstdint>
#include <utility>

#include "alphapart/params.hpp"

namespace alphapart::asym {

struct AsymptoticEstimate {
  std::int64_t n = 0;
  double eta = 0.0;      // r(n, 1)
  double mu_n = 0.0;     // summand form at eta
  double sigma2_n = 0.0; // summand form at eta
  double c1 = 0.0;
  double c2 = 0.0;
  double exponent = 0.0; // beta/(beta+1) = 1/(1+alpha)
  double mu_leading = 0.0;     // c1 n^exponent
  double sigma2_leading = 0.0; // c2 n^exponent
};

// (mu_n, sigma_n^2) by certified truncated summation at the given eta > 0.
std::pair<double, double> mu_sigma_sums(const AlphaParams& params, double eta);

// (c1, c2) from the closed forms.  With eta(s) = -Li_s(-1) the Dirichlet eta
// function and D = (beta eta(beta+1) Gamma(beta+1))^{-beta/(beta+1)}:
//   c1 = beta eta(beta) Gamma(beta) D
//   c2 = (beta eta(beta-1) Gamma(beta)
//         - (beta eta(beta) Gamma(beta+1))^2 / (beta eta(beta+1) Gamma(beta+2))) D
// c2 is the leading constant of the summand-form sigma_n^2 above (equivalently
// of f_u + f_uu - f_utau^2/f_tautau at (eta,1)).
std::pair<double, double> c1_c2_constants(const AlphaParams& params);

AsymptoticEstimate predict(const AlphaParams& params, std::int64_t n);

} // namespace alphapart::asym

#endif
