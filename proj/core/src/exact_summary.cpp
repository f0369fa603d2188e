#include "alphapart/exact.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace alphapart::exact {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / 1.4142135623730951); }

} // namespace

DistributionSummary distribution_summary(const CountTable& table,
                                         std::int64_t n,
                                         std::span<const double> t_grid) {
  if (n < 1 || n > table.n_max())
    throw validation_error("distribution_summary: n outside table range");
  DistributionSummary s;
  s.n = n;
  const std::int64_t w = table.width(n);
  s.q_n = table.row_sum(n);
  assert(s.q_n > 0); // g(1) >= 1, so every n >= 1 has a partition

  mpz_class sum_j = 0, sum_j2 = 0;
  for (std::int64_t j = 1; j < w; ++j) {
    sum_j += j * table.at(n, j);
    sum_j2 += j * j * table.at(n, j);
  }
  s.mean = mpq_class(sum_j, s.q_n);
  s.mean.canonicalize();
  s.variance = mpq_class(sum_j2, s.q_n) - s.mean * s.mean;
  s.variance.canonicalize();

  const double mean_d = s.mean.get_d();
  const double sd = std::sqrt(s.variance.get_d());

  mpq_class cum(0);
  s.cdf.reserve(static_cast<std::size_t>(w));
  double ks = 0.0;
  for (std::int64_t j = 0; j < w; ++j) {
    cum += mpq_class(table.at(n, j), s.q_n);
    cum.canonicalize();
    s.cdf.emplace_back(j, cum);
    // degenerate single-point distributions have sd == 0; the normal
    // comparison degenerates to a step at the mean
    double phi = sd > 0.0
                     ? normal_cdf((static_cast<double>(j) + 0.5 - mean_d) / sd)
                     : (static_cast<double>(j) + 0.5 >= mean_d ? 1.0 : 0.0);
    ks = std::max(ks, std::abs(cum.get_d() - phi));
  }
  s.ks_to_normal = ks;

  // MGF samples: M(t) = sum_j P(j) exp((j - mean) t / sd), log-sum-exp for
  // headroom at large j t / sd
  std::vector<double> logp(static_cast<std::size_t>(w),
                           -std::numeric_limits<double>::infinity());
  for (std::int64_t j = 0; j < w; ++j) {
    if (table.at(n, j) != 0) {
      mpq_class p(table.at(n, j), s.q_n);
      p.canonicalize();
      logp[static_cast<std::size_t>(j)] = std::log(p.get_d());
    }
  }
  s.mgf_samples.reserve(t_grid.size());
  for (double t : t_grid) {
    double hi = -std::numeric_limits<double>::infinity();
    for (std::int64_t j = 0; j < w; ++j) {
      double e = logp[static_cast<std::size_t>(j)];
      if (e == -std::numeric_limits<double>::infinity()) continue;
      double z = sd > 0.0 ? e + (static_cast<double>(j) - mean_d) * t / sd : e;
      hi = std::max(hi, z);
    }
    double acc = 0.0;
    for (std::int64_t j = 0; j < w; ++j) {
      double e = logp[static_cast<std::size_t>(j)];
      if (e == -std::numeric_limits<double>::infinity()) continue;
      double z = sd > 0.0 ? e + (static_cast<double>(j) - mean_d) * t / sd : e;
      acc += std::exp(z - hi);
    }
    s.mgf_samples.emplace_back(t, std::exp(hi) * acc);
  }
  return s;
}

std::pair<mpq_class, mpq_class> tail_probability(
    const DistributionSummary& summary, double x) {
  if (!(x >= 0.0)) throw validation_error("tail_probability requires x >= 0");
  // (j - mean)/sd >= x  <=>  j >= mean and (j - mean)^2 >= x^2 * variance,
  // all in exact rationals (x is a dyadic rational as a double)
  mpq_class x2(x);
  x2 *= x2;
  const mpq_class rhs = x2 * summary.variance;
  mpq_class upper(0), lower(0);
  mpq_class prev_cdf(0);
  for (const auto& [j, cdf] : summary.cdf) {
    mpq_class p = cdf - prev_cdf;
    prev_cdf = cdf;
    if (p == 0) continue;
    mpq_class dev = mpq_class(j) - summary.mean;
    if (dev >= 0 && dev * dev >= rhs) upper += p;
    if (dev <= 0 && dev * dev >= rhs) lower += p;
  }
  upper.canonicalize();
  lower.canonicalize();
  return {upper, lower};
}

} // namespace alphapart::exact
