#include <nlohmann/json.hpp>

#include <iomanip>
#include <ostream>

#include "alphapart/verify.hpp"

namespace alphapart::verify {

std::string to_json_string(const CltReport& rep, int indent) {
  nlohmann::ordered_json j;
  j["alpha"] = rep.alpha;
  j["n_grid"] = rep.n_grid;
  j["t_grid"] = rep.t_grid;
  j["slack_factor"] = rep.slack_factor;
  j["ks_values"] = rep.ks_values;
  auto& mg = j["mgf_deviation"] = nlohmann::ordered_json::array();
  for (const auto& [n, d] : rep.mgf_deviation)
    mg.push_back({{"n", n}, {"max_abs_dev", d}});
  j["mean_rel_gap"] = rep.mean_rel_gap;
  j["var_rel_gap"] = rep.var_rel_gap;
  j["tail_threshold_T"] = rep.tail_threshold_T;
  auto& tc = j["tail_checks"] = nlohmann::ordered_json::array();
  for (const auto& t : rep.tail_checks)
    tc.push_back({{"n", t.n},
                  {"x", t.x},
                  {"exact_upper", t.exact_upper},
                  {"exact_lower", t.exact_lower},
                  {"bound", t.bound},
                  {"pass", t.pass}});
  return j.dump(indent);
}

void write_csv(const CltReport& rep, std::ostream& os) {
  os << std::setprecision(17);
  os << "alpha,n,metric,x,value\n";
  for (std::size_t i = 0; i < rep.n_grid.size(); ++i) {
    const auto n = rep.n_grid[i];
    os << rep.alpha << ',' << n << ",ks,," << rep.ks_values[i] << '\n';
    os << rep.alpha << ',' << n << ",mgf_deviation,,"
       << rep.mgf_deviation[i].second << '\n';
    os << rep.alpha << ',' << n << ",mean_rel_gap,," << rep.mean_rel_gap[i]
       << '\n';
    os << rep.alpha << ',' << n << ",var_rel_gap,," << rep.var_rel_gap[i]
       << '\n';
    os << rep.alpha << ',' << n << ",tail_threshold_T,,"
       << rep.tail_threshold_T[i] << '\n';
  }
  for (const auto& t : rep.tail_checks) {
    os << rep.alpha << ',' << t.n << ",tail_upper," << t.x << ','
       << t.exact_upper << '\n';
    os << rep.alpha << ',' << t.n << ",tail_lower," << t.x << ','
       << t.exact_lower << '\n';
    os << rep.alpha << ',' << t.n << ",tail_bound," << t.x << ',' << t.bound
       << '\n';
    os << rep.alpha << ',' << t.n << ",tail_pass," << t.x << ',' << t.pass
       << '\n';
  }
}

std::string to_json_string(const SampleBatch& b, int indent) {
  nlohmann::ordered_json j;
  j["n"] = b.n;
  j["r_used"] = b.r_used;
  j["attempts"] = b.attempts;
  j["accepted"] = b.accepted;
  j["seed"] = b.seed;
  j["rng_id"] = b.rng_id;
  j["lengths"] = b.lengths;
  return j.dump(indent);
}

void write_csv(const SampleBatch& b, std::ostream& os) {
  os << "length\n";
  for (auto l : b.lengths) os << l << '\n';
}

} // namespace alphapart::verify
