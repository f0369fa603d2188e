#include "alphapart/special.hpp"

#include <array>
#include <cmath>
#include <string>

namespace alphapart::special {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Bernoulli numbers B_2, B_4, ..., B_16.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6,  -1.0 / 30,     1.0 / 42, -1.0 / 30,
    5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the rule
// is symmetric).
constexpr std::array<double, 8> kGlNodes = {
    0.0,
    0.2011940939974345223006283033945962078128,
    0.3941513470775633698972073709810454683627,
    0.5709721726085388475372267372539106412383,
    0.7244177313601700474161860546139380096308,
    0.8482065834104272162006483207742168513662,
    0.9372733924007059043077589477102094712439,
    0.9879925180204854284895657185866125811469};
constexpr std::array<double, 8> kGlWeights = {
    0.2025782419255612728806201999675193148386,
    0.1984314853271115764561183264438393248186,
    0.1861610000155622110268005618664228245062,
    0.1662692058169939335532008604812088111309,
    0.1395706779261543144478047945110283225208,
    0.1071592204671719350118695466858693034155,
    0.0703660474881081247092674164506673384667,
    0.0307532419961172683546283935772044177217};

template <class F>
double gl15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double acc = kGlWeights[0] * f(c);
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kGlNodes[i];
    acc += kGlWeights[i] * (f(c - dx) + f(c + dx));
  }
  return acc * h;
}

template <class F>
double adaptive_gl(F&& f, double a, double b, double abs_tol, int depth) {
  const double whole = gl15(f, a, b);
  const double mid = 0.5 * (a + b);
  const double halves = gl15(f, a, mid) + gl15(f, mid, b);
  const double err = std::abs(halves - whole);
  // the relative floor keeps refinement from chasing rounding noise
  if (err <= abs_tol || err <= 4e-16 * std::abs(halves) || depth >= 30)
    return halves;
  return adaptive_gl(f, a, mid, 0.5 * abs_tol, depth + 1) +
         adaptive_gl(f, mid, b, 0.5 * abs_tol, depth + 1);
}

double eta_series(double s) {
  // a_k = 1/(k+1)^s is totally monotone for s > 0.
  return detail::alternating_sum(
      [s](int k) { return std::pow(k + 1.0, -s); }, 48);
}

double zeta_em(double s) {
  constexpr int N = 16;
  double head = 0.0;
  for (int n = 1; n < N; ++n) head += std::pow(n, -s);
  double nn = static_cast<double>(N);
  double v = head + std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
  // Euler-Maclaurin correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}
  double rising = s;            // s(s+1)...(s+2j-2)
  double fact = 2.0;            // (2j)!
  double npow = std::pow(nn, -s - 1.0);
  for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
    v += kBernoulli[j] / fact * rising * npow;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    fact *= (2.0 * j + 3.0) * (2.0 * j + 4.0);
    npow /= nn * nn;
  }
  return v;
}

} // namespace

SpecialValue gamma(double s) {
  if (!(s > 0.0))
    throw validation_error("gamma requires s > 0, got " + std::to_string(s));
  double v = std::tgamma(s);
  return {v, 8e-16 * std::abs(v) + 1e-300};
}

SpecialValue zeta(double s) {
  if (!(s > 1.0))
    throw validation_error("zeta requires s > 1, got " + std::to_string(s));
  double v = zeta_em(s);
  return {v, 4e-15 * std::abs(v)};
}

SpecialValue eta_value(double s) {
  if (!(s > 0.0))
    throw validation_error("eta_value requires s > 0, got " + std::to_string(s));
  if (s > 1.0) {
    double v = (1.0 - std::exp2(1.0 - s)) * zeta_em(s);
    return {v, 8e-15 * std::abs(v)};
  }
  return {eta_series(s), 1e-14};
}

namespace detail {

double polylog_neg_series(double s, double u) {
  // Li_s(-u) = -u * sum_{k>=0} (-1)^k u^k/(k+1)^s, valid for 0 < u <= 1.
  return -u * alternating_sum(
                  [s, u](int k) { return std::pow(u, k) * std::pow(k + 1.0, -s); },
                  48);
}

double polylog_neg_integral(double s, double u) {
  const double mu = std::log(u);
  const double T = mu + 40.0;
  // Substitute t = x^p to flatten the t^{s-1} endpoint for small s.
  const int p = s >= 2.5 ? 1 : static_cast<int>(std::ceil(3.0 / s));
  auto integrand = [s, mu, p](double x) {
    if (x <= 0.0) return 0.0; // exponent p*s-1 > 0, integrand vanishes at 0
    double t = std::pow(x, p);
    double w = t - mu;
    double frac = w > 0 ? std::exp(-w) / (1.0 + std::exp(-w))
                        : 1.0 / (std::exp(w) + 1.0);
    return p * std::pow(x, p * s - 1.0) * frac;
  };
  const double X = std::pow(T, 1.0 / p);
  double I = adaptive_gl(integrand, 0.0, X, 1e-13, 0);
  // analytic tail: integrand ~ t^{s-1} e^{mu-t} beyond T = mu+40
  double tail = std::exp(mu - T) * std::pow(T, s - 1.0) *
                (1.0 + (s - 1.0) / T + (s - 1.0) * (s - 2.0) / (T * T));
  I += tail;
  return -I / std::tgamma(s);
}

} // namespace detail

SpecialValue polylog_neg(double s, double u) {
  if (!(s > 0.0) || !(u > 0.0))
    throw validation_error("polylog_neg requires s > 0 and u > 0");
  if (u <= 1.0) return {detail::polylog_neg_series(s, u), 1e-13};
  return {detail::polylog_neg_integral(s, u), 1e-12};
}

} // namespace alphapart::special
