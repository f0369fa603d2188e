// Boltzmann rejection sampler.  Under the product measure where each of the
// g(k) integers in class k is included independently with probability
// p_k = e^{-kr}/(1+e^{-kr}), the class counts are Binomial(g(k), p_k) and
// the conditional law given sum k*count_k = n is uniform on Pi(n).

#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "alphapart/verify.hpp"

namespace alphapart::verify {

namespace {

// splitmix64: z_{i+1} = z_i + 0x9E3779B97F4A7C15, output mixed; splittable,
// fully specified, identical across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform on [0,1) from the top 53 bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Per-class binomial CDF table, truncated where the remaining mass is below
// 1e-17 (the sampler then clamps to the last stored count).
struct ClassSampler {
  std::int64_t k = 0;
  std::vector<double> cdf;

  std::int64_t draw(double uni) const {
    for (std::size_t i = 0; i < cdf.size(); ++i)
      if (uni < cdf[i]) return static_cast<std::int64_t>(i);
    return static_cast<std::int64_t>(cdf.size()) - 1;
  }
};

} // namespace

SampleBatch sample_partitions(const AlphaParams& params, std::int64_t n,
                              std::int64_t target_accepted, std::uint64_t seed,
                              std::int64_t attempt_cap) {
  if (n < 1) throw validation_error("sample_partitions requires n >= 1");
  if (target_accepted < 1)
    throw validation_error("sample_partitions requires target_accepted >= 1");

  auto sol = saddle::solve_saddle(params, n, 1.0);
  const double r = sol.r;
  MultiplicityTable g(params);

  // Classes beyond the cut have total expected count
  // sum_{k>K} g(k) p_k <= 2 C K^{beta-1} e^{-Kr}/r < 1e-18 once
  // K r > beta ln K + 45 -- far below the double rounding of p_k itself --
  // and are treated as empty.
  std::vector<ClassSampler> classes;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double E = std::exp(-k * r);
    const double p = E / (1.0 + E);
    const double gk = static_cast<double>(g.g(k));
    if (gk * p < 1e-18 &&
        k * r > params.beta * std::log(static_cast<double>(k)) + 45.0)
      break;
    ClassSampler cs;
    cs.k = k;
    const double q0 = std::pow(1.0 - p, gk);
    double pmf = q0, cdf = q0;
    cs.cdf.push_back(cdf);
    const double odds = p / (1.0 - p);
    for (std::int64_t i = 1; i <= g.g(k) && cdf < 1.0 - 1e-17; ++i) {
      pmf *= (gk - static_cast<double>(i) + 1.0) / static_cast<double>(i) * odds;
      cdf += pmf;
      cs.cdf.push_back(cdf);
    }
    classes.push_back(std::move(cs));
  }

  SplitMix64 rng(seed);
  SampleBatch batch;
  batch.n = n;
  batch.r_used = r;
  batch.seed = seed;
  batch.rng_id = "splitmix64";

  while (batch.accepted < target_accepted && batch.attempts < attempt_cap) {
    ++batch.attempts;
    std::int64_t total = 0, length = 0;
    for (const auto& cs : classes) {
      const std::int64_t cnt = cs.draw(rng.uniform());
      if (cnt > 0) {
        total += cs.k * cnt;
        length += cnt;
        if (total > n) break; // overshoot, reject early
      }
    }
    if (total == n) {
      ++batch.accepted;
      batch.lengths.push_back(length);
    }
  }
  if (batch.accepted == 0)
    throw truncation_error("sampler starved: no acceptance in " +
                           std::to_string(batch.attempts) + " attempts");
  return batch;
}

} // namespace alphapart::verify
