#include "alphapart/params.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <numeric>
#include <string>

namespace alphapart {

namespace {

void validate_common(double alpha, double delta, const NumericPolicy& policy) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw validation_error("alpha must lie in (0,1), got " + std::to_string(alpha));
  if (!(delta > 0.0) || !(delta <= 1.0))
    throw validation_error("delta must lie in (0,1], got " + std::to_string(delta));
  if (!(policy.eps_num > 0.0) || policy.guard_digits < 4)
    throw validation_error("invalid numeric policy");
}

int integer_m_below(double beta) {
  // m < beta <= m+1
  double c = std::ceil(beta);
  int m = (c == beta) ? static_cast<int>(beta) - 1 : static_cast<int>(c) - 1;
  if (m < 1) m = 1; // beta > 1 always; guards rounding at alpha close to 1
  return m;
}

// ceil(k^{q/p}) for the exact rational path: the smallest M with M^p >= k^q.
mpz_class ceil_pow_rational(std::int64_t k, std::int64_t p, std::int64_t q) {
  mpz_class kq;
  mpz_ui_pow_ui(kq.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(q));
  mpz_class root;
  int exact = mpz_root(root.get_mpz_t(), kq.get_mpz_t(),
                       static_cast<unsigned long>(p));
  return exact ? root : root + 1;
}

// ceil(k^beta) with beta = 1/alpha for an exact binary alpha.  Encloses
// k^beta in an MPFR interval via directed rounding; the ceiling is certified
// when both endpoints agree.  Doubles the working precision up to 4 times.
mpz_class ceil_pow_real(std::int64_t k, double alpha, int digits) {
  if (k == 1) return 1;
  mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
  for (int attempt = 0; attempt <= 4; ++attempt) {
    mpfr_t a, b_lo, b_hi, kk, lo, hi;
    mpfr_inits2(prec, a, b_lo, b_hi, kk, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(a, alpha, MPFR_RNDN); // exact, double fits
    mpfr_ui_div(b_lo, 1, a, MPFR_RNDD);
    mpfr_ui_div(b_hi, 1, a, MPFR_RNDU);
    mpfr_set_si(kk, static_cast<long>(k), MPFR_RNDN);
    // k >= 2, beta > 0: k^beta increasing in beta, so directed rounding of
    // both the exponent and pow itself gives a true enclosure.
    mpfr_pow(lo, kk, b_lo, MPFR_RNDD);
    mpfr_pow(hi, kk, b_hi, MPFR_RNDU);
    mpz_class cl, ch;
    mpfr_get_z(cl.get_mpz_t(), lo, MPFR_RNDU); // = ceil(lo): lo > 0
    mpfr_get_z(ch.get_mpz_t(), hi, MPFR_RNDU);
    mpfr_clears(a, b_lo, b_hi, kk, lo, hi, static_cast<mpfr_ptr>(nullptr));
    if (cl == ch) return cl;
    prec *= 2;
  }
  throw precision_error("ceil(k^beta) guard exhausted at k=" + std::to_string(k));
}

mpz_class ceil_pow(const AlphaParams& params, std::int64_t k) {
  if (params.alpha_rational)
    return ceil_pow_rational(k, params.alpha_rational->first,
                             params.alpha_rational->second);
  return ceil_pow_real(k, params.alpha, params.precision.guard_digits);
}

std::int64_t to_int64(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p())
    throw validation_error(std::string(what) + " exceeds 64-bit range");
  return static_cast<std::int64_t>(v.get_si());
}

} // namespace

AlphaParams AlphaParams::from_real(double alpha, double delta,
                                   NumericPolicy policy) {
  validate_common(alpha, delta, policy);
  AlphaParams p;
  p.alpha = alpha;
  p.beta = 1.0 / alpha;
  p.m = integer_m_below(p.beta);
  p.delta = delta;
  p.precision = policy;
  return p;
}

AlphaParams AlphaParams::from_rational(std::int64_t pn, std::int64_t qd,
                                       double delta, NumericPolicy policy) {
  if (pn <= 0 || qd <= 0 || pn >= qd)
    throw validation_error("rational alpha requires 0 < p < q");
  if (std::gcd(pn, qd) != 1)
    throw validation_error("rational alpha requires coprime p/q");
  double alpha = static_cast<double>(pn) / static_cast<double>(qd);
  validate_common(alpha, delta, policy);
  AlphaParams p;
  p.alpha = alpha;
  p.alpha_rational = {pn, qd};
  p.beta = static_cast<double>(qd) / static_cast<double>(pn);
  // exact test for integer beta: p | q
  p.m = (qd % pn == 0) ? static_cast<int>(qd / pn) - 1
                       : static_cast<int>(qd / pn);
  p.delta = delta;
  p.precision = policy;
  return p;
}

std::int64_t g_of_k(const AlphaParams& params, std::int64_t k) {
  if (k < 1) throw validation_error("g_of_k requires k >= 1");
  mpz_class g = ceil_pow(params, k + 1) - ceil_pow(params, k);
  return to_int64(g, "g(k)");
}

std::vector<PartMultiplicity> g_prefix(const AlphaParams& params,
                                       std::int64_t k_max) {
  if (k_max < 1) throw validation_error("g_prefix requires k_max >= 1");
  std::vector<PartMultiplicity> out;
  out.reserve(static_cast<std::size_t>(k_max));
  mpz_class prev = ceil_pow(params, 1);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    mpz_class next = ceil_pow(params, k + 1);
    out.push_back({k, to_int64(next - prev, "g(k)")});
    prev = next;
  }
  return out;
}

void MultiplicityTable::ensure(std::int64_t k_max) {
  std::int64_t have = size();
  if (k_max <= have) return;
  // grow geometrically so repeated small extensions stay linear overall
  std::int64_t target = std::max(k_max, have + have / 2 + 16);
  mpz_class prev = ceil_pow(params_, have + 1);
  values_.reserve(static_cast<std::size_t>(target));
  for (std::int64_t k = have + 1; k <= target; ++k) {
    mpz_class next = ceil_pow(params_, k + 1);
    mpz_class g = next - prev;
    values_.push_back(to_int64(g, "g(k)"));
    prev = next;
  }
}

} // namespace alphapart
