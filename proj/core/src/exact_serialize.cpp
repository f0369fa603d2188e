#include <nlohmann/json.hpp>

#include <cstdio>
#include <ostream>

#include "alphapart/exact.hpp"

namespace alphapart::exact {

void write_csv(const CountTable& table, std::ostream& os, std::int64_t n_filter) {
  os << "n,j,count\n";
  const std::int64_t lo = n_filter >= 0 ? n_filter : 1;
  const std::int64_t hi = n_filter >= 0 ? n_filter : table.n_max();
  for (std::int64_t n = lo; n <= hi; ++n) {
    for (std::int64_t j = 1; j < table.width(n); ++j) {
      const mpz_class& v = table.at(n, j);
      if (v == 0) continue;
      os << n << ',' << j << ',' << v.get_str() << '\n';
    }
  }
}

std::string to_json_string(const DistributionSummary& s, int indent) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["q_n"] = s.q_n.get_str();
  j["mean"] = s.mean.get_str();
  j["variance"] = s.variance.get_str();
  j["ks_to_normal"] = s.ks_to_normal;
  auto& cdf = j["cdf"] = nlohmann::ordered_json::array();
  for (const auto& [jj, p] : s.cdf)
    cdf.push_back({{"j", jj}, {"p_le", p.get_str()}});
  auto& mgf = j["mgf_samples"] = nlohmann::ordered_json::array();
  for (const auto& [t, m] : s.mgf_samples)
    mgf.push_back({{"t", t}, {"M", m}});
  return j.dump(indent);
}

void write_csv(const DistributionSummary& s, std::ostream& os) {
  os << "n,j,p_le,mean,variance\n";
  for (const auto& [jj, p] : s.cdf) {
    os << s.n << ',' << jj << ',' << p.get_str() << ',' << s.mean.get_str()
       << ',' << s.variance.get_str() << '\n';
  }
}

} // namespace alphapart::exact
