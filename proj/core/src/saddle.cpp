#include "alphapart/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphapart/special.hpp"
#include "summation.hpp"

namespace alphapart::saddle {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_u(const AlphaParams& params, double u) {
  if (!(u >= params.delta) || !(u <= 1.0 / params.delta))
    throw validation_error("u must lie in [delta, 1/delta] = [" +
                           std::to_string(params.delta) + ", " +
                           std::to_string(1.0 / params.delta) + "], got " +
                           std::to_string(u));
}

// One tau-derivative term ladder; E = e^{-k tau}, D = 1 + uE.
// j=0: g log(1+uE);  j=1: -g k uE/D;  j=2: g k^2 uE/D^2;
// j=3: -g k^3 uE(1-uE)/D^3;  j=4: g k^4 uE(1-4uE+(uE)^2)/D^4.
double ladder_term(std::int64_t k, double g, double tau, double u, int j) {
  const double kd = static_cast<double>(k);
  const double E = std::exp(-kd * tau);
  const double uE = u * E;
  const double D = 1.0 + uE;
  switch (j) {
    case 0: return g * std::log1p(uE);
    case 1: return -g * kd * uE / D;
    case 2: return g * kd * kd * uE / (D * D);
    case 3: return -g * kd * kd * kd * uE * (1.0 - uE) / (D * D * D);
    default:
      return g * kd * kd * kd * kd * uE * (1.0 - uE * (4.0 - uE)) /
             (D * D * D * D);
  }
}

struct SaddleSum {
  double value = 0.0;
  std::int64_t K = 0;
};

// -f_tau = sum_k k g(k) / (u^{-1} e^{kr} + 1), the saddle equation LHS.
SaddleSum minus_f_tau(MultiplicityTable& g, double r, double u, double eps,
                      double beta) {
  auto res = detail::certified_sum(
      r, beta + 1.0, u * detail::multiplicity_cap(beta), eps,
      [&](std::int64_t k) {
        return -ladder_term(k, static_cast<double>(g.g(k)), r, u, 1);
      });
  return {res.value, res.K};
}

} // namespace

std::vector<double> eval_f_derivatives(const AlphaParams& params, double tau,
                                       double u, int j_max) {
  if (!(tau > 0.0)) throw validation_error("eval_f_derivatives requires tau > 0");
  if (j_max < 0 || j_max > 4)
    throw validation_error("eval_f_derivatives supports j_max in [0,4]");
  check_u(params, u);
  MultiplicityTable g(params);
  const double beta = params.beta;
  const double cap = detail::multiplicity_cap(beta);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(j_max) + 1);
  for (int j = 0; j <= j_max; ++j) {
    auto res = detail::certified_sum(
        tau, beta - 1.0 + j, 2.0 * u * cap, params.precision.eps_num,
        [&](std::int64_t k) {
          return ladder_term(k, static_cast<double>(g.g(k)), tau, u, j);
        });
    out.push_back(res.value);
  }
  return out;
}

UPartials eval_u_partials(const AlphaParams& params, double tau, double u) {
  if (!(tau > 0.0)) throw validation_error("eval_u_partials requires tau > 0");
  check_u(params, u);
  MultiplicityTable g(params);
  const double beta = params.beta;
  const double cap = detail::multiplicity_cap(beta);
  const double eps = params.precision.eps_num;
  UPartials p;
  p.f_u = detail::certified_sum(tau, beta - 1.0, cap, eps,
                                [&](std::int64_t k) {
                                  double E = std::exp(-k * tau);
                                  return g.g(k) * E / (1.0 + u * E);
                                })
              .value;
  p.f_uu = detail::certified_sum(tau, beta - 1.0, cap, eps,
                                 [&](std::int64_t k) {
                                   double E = std::exp(-k * tau);
                                   double D = 1.0 + u * E;
                                   return -g.g(k) * E * E / (D * D);
                                 })
               .value;
  p.f_utau = detail::certified_sum(tau, beta, cap, eps,
                                   [&](std::int64_t k) {
                                     double E = std::exp(-k * tau);
                                     double D = 1.0 + u * E;
                                     return -g.g(k) * k * E / (D * D);
                                   })
                 .value;
  return p;
}

SaddleSolution solve_saddle(const AlphaParams& params, std::int64_t n, double u) {
  if (n < 1) throw validation_error("solve_saddle requires n >= 1");
  check_u(params, u);
  MultiplicityTable g(params);
  const double beta = params.beta;
  const double eps = params.precision.eps_num;
  const double nd = static_cast<double>(n);

  // leading-order inversion of n = -f_tau(r,u):
  //   n ~ beta (-Li_{beta+1}(-u)) Gamma(beta+1) r^{-(beta+1)}
  const double lead = beta * (-special::polylog_neg(beta + 1.0, u).value) *
                      special::gamma(beta + 1.0).value;
  double r0 = std::pow(lead / nd, 1.0 / (beta + 1.0));

  double lo = r0 / 8.0, hi = r0 * 8.0;
  auto S = [&](double r) { return minus_f_tau(g, r, u, eps, beta).value; };
  int expand = 0;
  while (S(lo) <= nd) {
    lo *= 0.5;
    if (++expand > 70) throw truncation_error("saddle bracket expansion failed (low)");
  }
  expand = 0;
  while (S(hi) >= nd) {
    hi *= 2.0;
    if (++expand > 70) throw truncation_error("saddle bracket expansion failed (high)");
  }

  // bisection to ~3 digits, Newton to machine precision (S' = -f_tautau < 0)
  double r = 0.5 * (lo + hi);
  while ((hi - lo) > 1e-3 * lo) {
    r = 0.5 * (lo + hi);
    (S(r) > nd ? lo : hi) = r;
  }
  r = 0.5 * (lo + hi);
  for (int it = 0; it < 12; ++it) {
    const double sr = S(r);
    const double b2 = detail::certified_sum(
                          r, beta + 1.0, 2.0 * u * detail::multiplicity_cap(beta),
                          eps,
                          [&](std::int64_t k) {
                            return ladder_term(k, static_cast<double>(g.g(k)), r,
                                               u, 2);
                          })
                          .value;
    const double step = (sr - nd) / b2; // Newton on S(r) - n with S' = -B^2
    const double next = std::clamp(r + step, lo, hi);
    if (std::abs(next - r) < 1e-14 * r) {
      r = next;
      break;
    }
    r = next;
  }

  SaddleSolution sol;
  sol.n = n;
  sol.u = u;
  sol.r = r;
  auto ladder = eval_f_derivatives(params, r, u, 3);
  sol.f_value = ladder[0];
  sol.f_tau = ladder[1];
  sol.B_squared = ladder[2];
  sol.f_tau3 = ladder[3];
  sol.residual = std::abs(nd + sol.f_tau);
  sol.K_trunc = minus_f_tau(g, r, u, eps, beta).K;
  sol.t_n = std::pow(r, 1.0 + 3.0 * beta / 7.0);
  return sol;
}

double q_ratio_on_circle(const AlphaParams& params, const SaddleSolution& sol,
                         double y) {
  if (!(std::abs(y) > 0.0) || !(std::abs(y) <= kPi + 1e-15))
    throw validation_error("q_ratio_on_circle requires 0 < |y| <= pi");
  MultiplicityTable g(params);
  const double beta = params.beta;
  const double r = sol.r, u = sol.u;
  auto res = detail::certified_sum(
      r, beta - 1.0, 8.0 * u * detail::multiplicity_cap(beta),
      params.precision.eps_num, [&](std::int64_t k) {
        const double E = std::exp(-k * r);
        const double D = 1.0 + u * E;
        const double sh = std::sin(0.5 * k * y);
        // x = 2 u E (1 - cos ky) / D^2 lies in [0, 1)
        const double x = 4.0 * u * E * sh * sh / (D * D);
        return g.g(k) * std::log1p(-std::min(x, 1.0 - 1e-16));
      });
  return std::exp(0.5 * res.value);
}

double saddle_qn_approx(const AlphaParams& params, const SaddleSolution& sol) {
  (void)params;
  return static_cast<double>(sol.n) * sol.r + sol.f_value -
         0.5 * std::log(2.0 * kPi * sol.B_squared);
}

} // namespace alphapart::saddle
