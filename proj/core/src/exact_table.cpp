#include "alphapart/exact.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace alphapart::exact {

namespace {

// Exact maximal length per target size: the j smallest available parts
// (value k with multiplicity g(k)) have minimal total minsum(j); row n can
// hold lengths j with minsum(j) <= n.
std::vector<std::int64_t> max_length_profile(MultiplicityTable& g,
                                             std::int64_t n_max) {
  std::vector<std::int64_t> maxlen(static_cast<std::size_t>(n_max) + 1, 0);
  std::int64_t k = 1, used = 0, sum = 0, j = 0;
  std::vector<std::int64_t> minsum{0};
  while (sum + k <= n_max) {
    if (used == g.g(k)) {
      ++k;
      used = 0;
      continue;
    }
    sum += k;
    ++used;
    minsum.push_back(sum);
  }
  j = 0;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    while (j + 1 < static_cast<std::int64_t>(minsum.size()) &&
           minsum[static_cast<std::size_t>(j + 1)] <= n)
      ++j;
    maxlen[static_cast<std::size_t>(n)] = j;
  }
  return maxlen;
}

} // namespace

CountTable::CountTable(AlphaParams params, std::int64_t n_max,
                       std::vector<std::vector<mpz_class>> counts,
                       std::int64_t k_cap, mpz_class overflow)
    : params_(std::move(params)),
      n_max_(n_max),
      k_cap_(k_cap),
      counts_(std::move(counts)),
      overflow_(std::move(overflow)) {}

const mpz_class& CountTable::at(std::int64_t n, std::int64_t j) const {
  if (n < 0 || n > n_max_ || j < 0) throw validation_error("CountTable::at out of range");
  const auto& row = counts_[static_cast<std::size_t>(n)];
  if (j >= static_cast<std::int64_t>(row.size())) return zero_;
  return row[static_cast<std::size_t>(j)];
}

std::int64_t CountTable::width(std::int64_t n) const {
  if (n < 0 || n > n_max_) throw validation_error("CountTable::width out of range");
  return static_cast<std::int64_t>(counts_[static_cast<std::size_t>(n)].size());
}

mpz_class CountTable::row_sum(std::int64_t n) const {
  mpz_class acc = 0;
  const auto& row = counts_[static_cast<std::size_t>(n)];
  for (const auto& v : row) acc += v;
  return acc;
}

CountTable build_count_table(const AlphaParams& params, std::int64_t n_max,
                             std::size_t memory_budget_bytes) {
  if (n_max < 1) throw validation_error("build_count_table requires n_max >= 1");
  MultiplicityTable g(params);
  const auto maxlen = max_length_profile(g, n_max);

  // projected footprint: one mpz per band entry; q(n) has O(n^{beta/(beta+1)})
  // digits, so budget with a generous 64 bytes/entry floor plus digit growth
  std::size_t entries = 0;
  for (auto w : maxlen) entries += static_cast<std::size_t>(w) + 1;
  const double digits = 1.2 * std::pow(static_cast<double>(n_max),
                                       params.beta / (params.beta + 1.0));
  const std::size_t per_entry =
      64 + static_cast<std::size_t>(digits / 2.4); // bits/ln10 ~ bytes/2.4 digits
  if (entries * per_entry > memory_budget_bytes)
    throw resource_error("count table would need ~" +
                         std::to_string(entries * per_entry >> 20) +
                         " MiB, over the configured budget");

  std::vector<std::vector<mpz_class>> rows(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n)
    rows[static_cast<std::size_t>(n)].resize(
        static_cast<std::size_t>(maxlen[static_cast<std::size_t>(n)]) + 1);
  rows[0][0] = 1;

  // multiply in place by (1 + u z^k)^{g(k)} = sum_i C(g(k),i) u^i z^{ki},
  // descending n so that source rows still hold the previous product
  mpz_class overflow = 0;
  mpz_class binom;
  std::vector<mpz_class> binoms;
  for (std::int64_t k = 1; k <= n_max; ++k) {
    const std::int64_t gk = g.g(k);
    const std::int64_t i_cap = std::min(gk, n_max / k);
    binoms.assign(1, mpz_class(1));
    binoms.reserve(static_cast<std::size_t>(i_cap) + 1);
    for (std::int64_t i = 1; i <= i_cap; ++i) {
      binom = binoms.back() * (gk - i + 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      static_cast<unsigned long>(i));
      binoms.push_back(binom);
    }
    for (std::int64_t n = n_max; n >= k; --n) {
      auto& dst = rows[static_cast<std::size_t>(n)];
      const std::int64_t jw = static_cast<std::int64_t>(dst.size());
      const std::int64_t imax = std::min(i_cap, n / k);
      for (std::int64_t i = 1; i <= imax; ++i) {
        const auto& src = rows[static_cast<std::size_t>(n - k * i)];
        const std::int64_t src_top = static_cast<std::int64_t>(src.size()) - 1 + i;
        const std::int64_t j_hi = std::min(jw - 1, src_top);
        const mpz_srcptr b = binoms[static_cast<std::size_t>(i)].get_mpz_t();
        for (std::int64_t j = i; j <= j_hi; ++j) {
          mpz_addmul(dst[static_cast<std::size_t>(j)].get_mpz_t(), b,
                     src[static_cast<std::size_t>(j - i)].get_mpz_t());
        }
        // contributions past the band would exceed the feasible length, so
        // their sources are zero; routed to the overflow column regardless
        for (std::int64_t j = j_hi + 1; j <= src_top; ++j) {
          mpz_addmul(overflow.get_mpz_t(), b,
                     src[static_cast<std::size_t>(j - i)].get_mpz_t());
        }
      }
    }
  }
  return CountTable(params, n_max, std::move(rows),
                    maxlen[static_cast<std::size_t>(n_max)], std::move(overflow));
}

std::vector<std::pair<std::int64_t, mpz_class>> brute_force_counts(
    const AlphaParams& params, std::int64_t n) {
  if (n < 1) throw validation_error("brute_force_counts requires n >= 1");
  if (n > 40)
    throw validation_error("brute_force_counts is an exponential oracle, n <= 40");
  MultiplicityTable g(params);
  std::vector<mpz_class> by_length(static_cast<std::size_t>(n) + 1);

  // DFS over multiplicities of part values k, k-1, ..., 1
  struct Walker {
    MultiplicityTable& g;
    std::vector<mpz_class>& out;
    void walk(std::int64_t k, std::int64_t rem, std::int64_t len,
              const mpz_class& weight) {
      if (rem == 0) {
        out[static_cast<std::size_t>(len)] += weight;
        return;
      }
      if (k == 0) return;
      const std::int64_t gk = g.g(k);
      const std::int64_t m_cap = std::min(gk, rem / k);
      mpz_class w = weight, bin = 1;
      // m = 0 first, then increase with incremental binomial C(gk, m)
      walk(k - 1, rem, len, weight);
      for (std::int64_t m = 1; m <= m_cap; ++m) {
        bin *= gk - m + 1;
        mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(),
                        static_cast<unsigned long>(m));
        w = weight * bin;
        walk(k - 1, rem - k * m, len + m, w);
      }
    }
  } walker{g, by_length};
  walker.walk(n, n, 0, mpz_class(1));

  std::vector<std::pair<std::int64_t, mpz_class>> result;
  for (std::int64_t j = 1; j <= n; ++j)
    if (by_length[static_cast<std::size_t>(j)] != 0)
      result.emplace_back(j, by_length[static_cast<std::size_t>(j)]);
  return result;
}

} // namespace alphapart::exact
