// Problem instance for restricted alpha-partitions: representations
//   n = floor(a_1^alpha) + ... + floor(a_l^alpha),  1 <= a_1 < ... < a_l,
// for a fixed 0 < alpha < 1.  Part value k is available with multiplicity
//   g(k) = ceil((k+1)^beta) - ceil(k^beta),  beta = 1/alpha,
// the number of integers a with floor(a^alpha) = k.

#ifndef ALPHAPART_PARAMS_HPP
#define ALPHAPART_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "alphapart/errors.hpp"

namespace alphapart {

struct NumericPolicy {
  // Target relative tolerance for truncated infinite sums.
  double eps_num = 1e-12;
  // Working precision (decimal digits) for the ceil(k^beta) guard when
  // alpha has no exact rational form.
  int guard_digits = 30;
};

struct AlphaParams {
  double alpha = 0.5;
  double beta = 2.0; // 1/alpha
  int m = 1;         // the integer with m < beta <= m+1
  // Present iff alpha was given exactly as p/q (coprime, p < q); enables the
  // exact integer path for g(k).
  std::optional<std::pair<std::int64_t, std::int64_t>> alpha_rational;
  // u ranges over [delta, 1/delta] throughout.
  double delta = 0.25;
  NumericPolicy precision;

  // beta given as an exact binary double; g(k) goes through the
  // extended-precision guard.
  static AlphaParams from_real(double alpha, double delta = 0.25,
                               NumericPolicy policy = {});
  // alpha = p/q exactly; g(k) is computed by exact integer arithmetic.
  static AlphaParams from_rational(std::int64_t p, std::int64_t q,
                                   double delta = 0.25,
                                   NumericPolicy policy = {});
};

struct PartMultiplicity {
  std::int64_t k = 0; // part value
  std::int64_t g = 0; // multiplicity bound, g(k) >= 1
};

// g(k) = ceil((k+1)^beta) - ceil(k^beta).  Exact integer arithmetic when
// alpha_rational is set, otherwise MPFR interval enclosure with the
// doubling guard (throws precision_error if 4 doublings cannot certify
// the ceilings).
std::int64_t g_of_k(const AlphaParams& params, std::int64_t k);

// (k, g(k)) for k = 1..k_max using k_max+1 ceiling evaluations (telescoping).
std::vector<PartMultiplicity> g_prefix(const AlphaParams& params,
                                       std::int64_t k_max);

// Lazily grown prefix of g values for one fixed instance.  The summation
// and table code extends it on demand; reads after ensure() are plain
// array accesses.
class MultiplicityTable {
public:
  explicit MultiplicityTable(const AlphaParams& params) : params_(params) {}

  void ensure(std::int64_t k_max);

  std::int64_t g(std::int64_t k) {
    if (k > static_cast<std::int64_t>(values_.size())) ensure(k);
    return values_[static_cast<std::size_t>(k - 1)];
  }

  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  const AlphaParams& params() const { return params_; }

private:
  AlphaParams params_;
  std::vector<std::int64_t> values_; // values_[k-1] = g(k)
};

} // namespace alphapart

#endif
