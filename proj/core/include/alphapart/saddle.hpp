// Saddle-point machinery for the bivariate generating function
//   Q(z,u) = prod_k (1 + u z^k)^{g(k)},   f(tau,u) = log Q(e^{-tau}, u).
// Solves the saddle equation -f_tau(r,u) = n, evaluates the partial
// derivatives of f by certified truncated summation, the circle modulus
// ratio |Q(e^{-(r+iy)},u)| / Q(e^{-r},u), and the harmonic sums h_{gamma,j}.
//
// All sums are truncated at an index K where the integral tail bound
// certifies a relative error below params.precision.eps_num; truncation
// beyond a hard cap throws truncation_error.

#ifndef ALPHAPART_SADDLE_HPP
#define ALPHAPART_SADDLE_HPP

#include <cstdint>
#include <vector>

#include "alphapart/params.hpp"

namespace alphapart::saddle {

struct SaddleSolution {
  std::int64_t n = 0;
  double u = 1.0;
  double r = 0.0;        // unique positive root of -f_tau(r,u) = n
  double residual = 0.0; // |n + f_tau(r,u)| at the returned r
  std::int64_t K_trunc = 0;
  double f_value = 0.0;
  double f_tau = 0.0;
  double B_squared = 0.0; // f_tautau(r,u) > 0
  double f_tau3 = 0.0;
  double t_n = 0.0;       // r^{1 + 3 beta / 7}, the integral split point
};

// d^j f / d tau^j for j = 0..j_max (j_max in [0,4]) at (tau, u).
std::vector<double> eval_f_derivatives(const AlphaParams& params, double tau,
                                       double u, int j_max);

// The u-direction partials needed by the moment identities.
struct UPartials {
  double f_u = 0.0;   //  sum g(k) / (e^{k tau} + u)
  double f_uu = 0.0;  // -sum g(k) / (e^{k tau} + u)^2
  double f_utau = 0.0; // -sum k g(k) e^{k tau} / (e^{k tau} + u)^2
};
UPartials eval_u_partials(const AlphaParams& params, double tau, double u);

// Bracketed bisection refined with Newton steps on the monotone equation
// sum_k k g(k) / (u^{-1} e^{kr} + 1) = n.
SaddleSolution solve_saddle(const AlphaParams& params, std::int64_t n, double u);

// |Q(e^{-(r+iy)}, u)| / Q(e^{-r}, u) for 0 < |y| <= pi, via the product
// identity |1 + u e^{-k(r+iy)}|^2 = (1 + u e^{-kr})^2 - 2 u e^{-kr}(1 - cos ky).
double q_ratio_on_circle(const AlphaParams& params, const SaddleSolution& sol,
                         double y);

// log of the saddle-point approximation of Q_n(u):
//   n r + f(r,u) - (1/2) log(2 pi B^2).
double saddle_qn_approx(const AlphaParams& params, const SaddleSolution& sol);

// h_{gamma,j}(tau,u) = sum_k k^{gamma+j} sum_l (-u)^l l^{j-1} e^{-k l tau},
// gamma > 0, 0 <= j <= 4.  Leading small-tau order is
// Li_{gamma+2}(-u) Gamma(gamma+j+1) tau^{-gamma-j-1}.
double h_sum(const AlphaParams& params, double gamma, int j, double tau,
             double u);

} // namespace alphapart::saddle

#endif
