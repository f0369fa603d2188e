// Special functions needed by the asymptotic formulas: Gamma, Riemann zeta
// (s > 1), the Dirichlet eta function and the polylogarithm at negative real
// arguments.  Double precision throughout; the asymptotic expansions these
// feed are the accuracy bottleneck, not the constants.

#ifndef ALPHAPART_SPECIAL_HPP
#define ALPHAPART_SPECIAL_HPP

#include <cmath>

#include "alphapart/errors.hpp"

namespace alphapart::special {

struct SpecialValue {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

// Gamma(s) for s > 0.
SpecialValue gamma(double s);

// zeta(s) for s > 1, direct series with an Euler-Maclaurin tail.
SpecialValue zeta(double s);

// Dirichlet eta: (1 - 2^{1-s}) zeta(s) = -Li_s(-1), for s > 0.  Uses the
// accelerated alternating series for 0 < s <= 1.
SpecialValue eta_value(double s);

// Li_s(-u) for s > 0, u > 0.  Alternating series for u <= 1; the
// Fermi-Dirac integral representation
//   -Li_s(-e^mu) = (1/Gamma(s)) Int_0^inf t^{s-1} / (e^{t-mu} + 1) dt
// with mu = ln u for u > 1.
SpecialValue polylog_neg(double s, double u);

namespace detail {

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k
// for totally monotone a_k; error ~ (3+sqrt(8))^{-n_terms}.
template <class TermFn>
double alternating_sum(TermFn&& a, int n_terms) {
  const double w = 3.0 + std::sqrt(8.0);
  double d = 0.5 * (std::pow(w, n_terms) + std::pow(1.0 / w, n_terms));
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n_terms; ++k) {
    c = b - c;
    s += c * a(k);
    b *= (k + n_terms) * (k - n_terms) / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

// The two internal evaluation routes of polylog_neg, exposed so tests can
// check their agreement on the overlap u <= 1.
double polylog_neg_series(double s, double u);   // u in (0, 1]
double polylog_neg_integral(double s, double u); // any u > 0

} // namespace detail

} // namespace alphapart::special

#endif
