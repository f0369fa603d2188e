// Ground-truth engine: exact big-integer counts q(n), q(n,k) of restricted
// alpha-partitions, the exact length distribution with rational moments,
// its MGF samples and tail masses.  Everything here is exact except the
// explicitly real-valued diagnostics (KS distance, MGF samples).

#ifndef ALPHAPART_EXACT_HPP
#define ALPHAPART_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alphapart/params.hpp"

namespace alphapart::exact {

// Dense-in-n, banded-in-j table of q(n', j) for 0 <= n' <= n_max.  Row n'
// stores j = 0..width(n')-1 where width-1 is the exact maximal feasible
// length for n' (greedy minimal-sum bound), so the overflow column is
// provably zero; it is tracked anyway and asserted by tests.
class CountTable {
public:
  CountTable(AlphaParams params, std::int64_t n_max,
             std::vector<std::vector<mpz_class>> counts, std::int64_t k_cap,
             mpz_class overflow = 0);

  const AlphaParams& params() const { return params_; }
  std::int64_t n_max() const { return n_max_; }
  std::int64_t k_cap() const { return k_cap_; }

  // q(n, j); zero outside the stored band.
  const mpz_class& at(std::int64_t n, std::int64_t j) const;
  // number of stored length entries for row n (j = 0..width-1)
  std::int64_t width(std::int64_t n) const;
  // q(n) = sum_j q(n, j)
  mpz_class row_sum(std::int64_t n) const;

  const mpz_class& overflow_column() const { return overflow_; }

private:
  AlphaParams params_;
  std::int64_t n_max_ = 0;
  std::int64_t k_cap_ = 0;
  std::vector<std::vector<mpz_class>> counts_;
  mpz_class overflow_ = 0;
  mpz_class zero_ = 0;
};

// Expands prod_k (1 + u z^k)^{g(k)} mod z^{n_max+1} by in-place dynamic
// programming over part values; binomial coefficients are exact.
// Throws resource_error if the projected table exceeds memory_budget_bytes.
CountTable build_count_table(const AlphaParams& params, std::int64_t n_max,
                             std::size_t memory_budget_bytes = std::size_t{2}
                                                               << 30);

// Independent exponential-time oracle (test scale, n <= 40): enumerates
// multiplicity vectors (m_k) with sum k*m_k = n, 0 <= m_k <= g(k), weight
// prod C(g(k), m_k), without the generating-function DP.
std::vector<std::pair<std::int64_t, mpz_class>> brute_force_counts(
    const AlphaParams& params, std::int64_t n);

struct DistributionSummary {
  std::int64_t n = 0;
  mpz_class q_n;
  mpq_class mean;
  mpq_class variance;
  // (j, P(length <= j)) at every stored j of row n
  std::vector<std::pair<std::int64_t, mpq_class>> cdf;
  // sup_j |P(length <= j) - Phi((j + 1/2 - mean)/sd)| (continuity corrected)
  double ks_to_normal = 0.0;
  // (t, M_n(t)) with M_n(t) = E exp((length - mean) t / sd)
  std::vector<std::pair<double, double>> mgf_samples;
};

DistributionSummary distribution_summary(const CountTable& table,
                                         std::int64_t n,
                                         std::span<const double> t_grid);

// Exact tail masses (P((len-mean)/sd >= x), P((len-mean)/sd <= -x)) for
// x >= 0; comparisons are done in exact rational arithmetic.
std::pair<mpq_class, mpq_class> tail_probability(
    const DistributionSummary& summary, double x);

// The Lemma-1 coefficient-ratio route: exact univariate series
//   q[n]    = [z^n] Q(z,1)
//   q_u[n]  = [z^n] Q_u(z,1)
//   q_uu[n] = [z^n] Q_uu(z,1)
// via the log-derivative recurrence and truncated convolutions.  Reaches
// n ~ 10^4-10^5 where the bivariate table would not fit; agrees with
// CountTable row sums exactly wherever both exist.
struct MomentSeries {
  std::vector<mpz_class> q;
  std::vector<mpz_class> q_u;
  std::vector<mpz_class> q_uu;

  std::int64_t n_max() const { return static_cast<std::int64_t>(q.size()) - 1; }
  mpq_class mean(std::int64_t n) const;
  mpq_class variance(std::int64_t n) const;
};

MomentSeries moment_series(const AlphaParams& params, std::int64_t n_max);

// ---- serialization ----
// CSV columns: n, j, count (decimal strings, RFC-4180 quoting not needed
// for pure digits).  Emits rows for n = n_filter only, or all n if < 0.
void write_csv(const CountTable& table, std::ostream& os,
               std::int64_t n_filter = -1);
// JSON with big integers/rationals as decimal strings.
std::string to_json_string(const DistributionSummary& summary, int indent = -1);
void write_csv(const DistributionSummary& summary, std::ostream& os);

} // namespace alphapart::exact

#endif
