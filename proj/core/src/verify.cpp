#include "alphapart/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "alphapart/asym.hpp"

namespace alphapart::verify {

namespace {

constexpr std::array<double, 4> kTailX = {0.5, 1.0, 1.5, 2.0};

} // namespace

CltReport run_clt_report(const AlphaParams& params,
                         std::span<const std::int64_t> n_grid,
                         std::span<const double> t_grid) {
  std::int64_t n_max = 1;
  for (auto n : n_grid) n_max = std::max(n_max, n);
  auto table = exact::build_count_table(params, n_max);
  return run_clt_report(table, n_grid, t_grid);
}

CltReport run_clt_report(const exact::CountTable& table,
                         std::span<const std::int64_t> n_grid,
                         std::span<const double> t_grid) {
  const AlphaParams& params = table.params();
  for (double t : t_grid)
    if (!(t >= -3.0) || !(t <= 3.0))
      throw validation_error("run_clt_report requires t_grid within [-3, 3]");
  CltReport rep;
  rep.alpha = params.alpha;
  rep.n_grid.assign(n_grid.begin(), n_grid.end());
  rep.t_grid.assign(t_grid.begin(), t_grid.end());

  for (std::int64_t n : n_grid) {
    auto summary = exact::distribution_summary(table, n, t_grid);
    rep.ks_values.push_back(summary.ks_to_normal);

    double dev = 0.0;
    for (const auto& [t, M] : summary.mgf_samples)
      dev = std::max(dev, std::abs(std::log(M) - 0.5 * t * t));
    rep.mgf_deviation.emplace_back(n, dev);

    // single-point distributions (tiny n) have zero variance; the gap
    // diagnostics still need eta, which exists for every n >= 1
    const double eta = saddle::solve_saddle(params, n, 1.0).r;
    auto [mu_f, s2_f] = asym::mu_sigma_sums(params, eta);
    const double mean_d = summary.mean.get_d();
    const double var_d = summary.variance.get_d();
    rep.mean_rel_gap.push_back(std::abs(mean_d - mu_f) /
                               std::max(mean_d, 1e-300));
    rep.var_rel_gap.push_back(var_d > 0.0 ? std::abs(var_d - s2_f) / var_d
                                          : std::abs(var_d - s2_f));

    for (double x : kTailX) {
      auto [up, lo] = exact::tail_probability(summary, x);
      TailCheck tc;
      tc.n = n;
      tc.x = x;
      tc.exact_upper = up.get_d();
      tc.exact_lower = lo.get_d();
      tc.bound = std::exp(-0.5 * x * x);
      tc.pass = std::max(tc.exact_upper, tc.exact_lower) <=
                rep.slack_factor * tc.bound;
      rep.tail_checks.push_back(tc);
    }
    rep.tail_threshold_T.push_back(std::pow(
        static_cast<double>(n), params.beta / (6.0 * params.beta + 6.0)));
  }
  return rep;
}

std::vector<CircleDecayPoint> check_i2_bound(const AlphaParams& params,
                                             std::int64_t n, double u,
                                             std::span<const double> y_grid) {
  auto sol = saddle::solve_saddle(params, n, u);
  constexpr double kPi = 3.141592653589793238462643383279502884;
  std::vector<CircleDecayPoint> out;
  out.reserve(y_grid.size());
  const double scale = std::pow(sol.r, params.beta / 7.0);
  for (double y : y_grid) {
    if (!(y >= sol.t_n) || !(y <= kPi + 1e-12))
      throw validation_error("check_i2_bound requires y_grid within [t_n, pi]");
    CircleDecayPoint p;
    p.y = y;
    p.ratio = saddle::q_ratio_on_circle(params, sol, y);
    p.c3 = -std::log(p.ratio) * scale;
    out.push_back(p);
  }
  return out;
}

} // namespace alphapart::verify
