// Lemma-1 coefficient-ratio route.  With L(z) = d/du log Q(z,u)|_{u=1} the
// series Q, Q_u = Q L and Q_uu = Q (L^2 + L_u) give exact moments from three
// truncated convolutions; Q itself comes from the Euler log-derivative
// recurrence n q(n) = sum_j e(j) q(n-j).  The divisor-sum coefficient arrays
//   e(j)  = sum_{dl=j} (-1)^{l-1} d g(d)
//   d1(j) = sum_{dl=j} (-1)^{l-1} g(d)          ([z^j] L(z,1))
//   d2(j) = sum_{dl=j} (-1)^{l-1} (l-1) g(d)    ([z^j] L_u(z,1))
// follow from log prod (1+u z^k)^{g(k)} = sum g(k) log(1+u z^k).

#include "alphapart/exact.hpp"

namespace alphapart::exact {

MomentSeries moment_series(const AlphaParams& params, std::int64_t n_max) {
  if (n_max < 1) throw validation_error("moment_series requires n_max >= 1");
  MultiplicityTable g(params);
  g.ensure(n_max);
  const std::size_t N = static_cast<std::size_t>(n_max);

  std::vector<mpz_class> e(N + 1), d1(N + 1), d2(N + 1);
  for (std::int64_t d = 1; d <= n_max; ++d) {
    const std::int64_t gd = g.g(d);
    for (std::int64_t l = 1, j = d; j <= n_max; ++l, j += d) {
      if (l & 1) {
        e[static_cast<std::size_t>(j)] += d * gd;
        d1[static_cast<std::size_t>(j)] += gd;
        d2[static_cast<std::size_t>(j)] += (l - 1) * gd;
      } else {
        e[static_cast<std::size_t>(j)] -= d * gd;
        d1[static_cast<std::size_t>(j)] -= gd;
        d2[static_cast<std::size_t>(j)] -= (l - 1) * gd;
      }
    }
  }

  MomentSeries ms;
  ms.q.assign(N + 1, 0);
  ms.q_u.assign(N + 1, 0);
  ms.q_uu.assign(N + 1, 0);
  ms.q[0] = 1;

  mpz_class acc;
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    for (std::size_t j = 1; j <= n; ++j)
      mpz_addmul(acc.get_mpz_t(), e[j].get_mpz_t(), ms.q[n - j].get_mpz_t());
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(),
                    static_cast<unsigned long>(n));
    ms.q[n] = acc;
  }
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    for (std::size_t j = 1; j <= n; ++j)
      mpz_addmul(acc.get_mpz_t(), d1[j].get_mpz_t(), ms.q[n - j].get_mpz_t());
    ms.q_u[n] = acc;
  }
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      mpz_addmul(acc.get_mpz_t(), d1[j].get_mpz_t(), ms.q_u[n - j].get_mpz_t());
      mpz_addmul(acc.get_mpz_t(), d2[j].get_mpz_t(), ms.q[n - j].get_mpz_t());
    }
    ms.q_uu[n] = acc;
  }
  return ms;
}

mpq_class MomentSeries::mean(std::int64_t n) const {
  if (n < 1 || n > n_max()) throw validation_error("MomentSeries::mean out of range");
  mpq_class m(q_u[static_cast<std::size_t>(n)], q[static_cast<std::size_t>(n)]);
  m.canonicalize();
  return m;
}

mpq_class MomentSeries::variance(std::int64_t n) const {
  if (n < 1 || n > n_max()) throw validation_error("MomentSeries::variance out of range");
  const std::size_t i = static_cast<std::size_t>(n);
  mpq_class m(q_u[i], q[i]);
  m.canonicalize();
  mpq_class v(q_uu[i], q[i]);
  v.canonicalize();
  v += m - m * m;
  v.canonicalize();
  return v;
}

} // namespace alphapart::exact
