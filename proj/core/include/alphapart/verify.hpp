// CLT verification harness: convergence diagnostics tying the exact engine
// to the saddle/asymptotic predictions (KS distance to the normal, MGF
// deviation from t^2/2, mean/variance gaps, exponential tail checks, the
// circle-decay shape of the I2 error integral) plus a Boltzmann rejection
// sampler for large-n empirical evidence.

#ifndef ALPHAPART_VERIFY_HPP
#define ALPHAPART_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "alphapart/exact.hpp"
#include "alphapart/params.hpp"
#include "alphapart/saddle.hpp"

namespace alphapart::verify {

struct TailCheck {
  std::int64_t n = 0;
  double x = 0.0;
  double exact_upper = 0.0;
  double exact_lower = 0.0;
  double bound = 0.0; // e^{-x^2/2}
  bool pass = false;  // max(exact tails) <= slack_factor * bound
};

struct CltReport {
  double alpha = 0.0;
  std::vector<std::int64_t> n_grid;
  std::vector<double> t_grid;
  std::vector<double> ks_values;
  // max over the t-grid of |ln M_n(t) - t^2/2|, per n
  std::vector<std::pair<std::int64_t, double>> mgf_deviation;
  std::vector<double> mean_rel_gap; // |exact mean - mu(eta)| / exact mean
  std::vector<double> var_rel_gap;  // |exact var - sigma^2(eta)| / exact var
  std::vector<TailCheck> tail_checks;
  // second tail regime threshold T = n^{beta/(6 beta + 6)}, per n
  std::vector<double> tail_threshold_T;
  // multiplicative slack standing in for the theorem's 1 + O((log n)^{-3})
  double slack_factor = 2.0;
};

// Runs the full diagnostic at each n of the grid.  The overload taking a
// prebuilt CountTable (with table.n_max() >= max n_grid) avoids rebuilding
// the expensive exact table.
CltReport run_clt_report(const AlphaParams& params,
                         std::span<const std::int64_t> n_grid,
                         std::span<const double> t_grid);
CltReport run_clt_report(const exact::CountTable& table,
                         std::span<const std::int64_t> n_grid,
                         std::span<const double> t_grid);

struct CircleDecayPoint {
  double y = 0.0;
  double ratio = 0.0; // |Q(e^{-(r+iy)},u)| / Q(e^{-r},u)
  double c3 = 0.0;    // -ln(ratio) * r^{beta/7}
};

// Evaluates the circle ratio on y_grid (subset of [t_n, pi]); c3 must stay
// bounded below by a positive constant across grids and across n.
std::vector<CircleDecayPoint> check_i2_bound(const AlphaParams& params,
                                             std::int64_t n, double u,
                                             std::span<const double> y_grid);

struct SampleBatch {
  std::int64_t n = 0;
  double r_used = 0.0;
  std::int64_t attempts = 0;
  std::int64_t accepted = 0;
  std::vector<std::int64_t> lengths;
  std::uint64_t seed = 0;
  std::string rng_id; // documented generator identifier
};

// Boltzmann rejection sampler: each part-value class k draws a
// Binomial(g(k), p_k) count with p_k = e^{-kr}/(1+e^{-kr}) and r = r(n,1);
// conditioned on total = n the partition is uniform on Pi(n).  Samples until
// target_accepted successes or attempt_cap attempts; zero successes at the
// cap is an acceptance-starvation error.  Deterministic given seed.
SampleBatch sample_partitions(const AlphaParams& params, std::int64_t n,
                              std::int64_t target_accepted, std::uint64_t seed,
                              std::int64_t attempt_cap = 1'000'000);

// ---- serialization ----
std::string to_json_string(const CltReport& report, int indent = -1);
// tidy CSV: one row per (n, metric[, x]) pair
void write_csv(const CltReport& report, std::ostream& os);
std::string to_json_string(const SampleBatch& batch, int indent = -1);
void write_csv(const SampleBatch& batch, std::ostream& os); // one length per row

} // namespace alphapart::verify

#endif
