#include "alphapart_cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "alphapart/asym.hpp"
#include "alphapart/exact.hpp"
#include "alphapart/saddle.hpp"
#include "alphapart/special.hpp"
#include "alphapart/verify.hpp"
#include "alphapart/version.hpp"

namespace alphapart::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

const char* command_name(Command c) {
  switch (c) {
    case Command::kCount: return "count";
    case Command::kSaddle: return "saddle";
    case Command::kAsym: return "asym";
    case Command::kVerify: return "verify";
    case Command::kSample: return "sample";
    case Command::kHCheck: return "h-check";
  }
  return "?";
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = command_name(c.command);
  j["alpha"] = c.alpha_text;
  j["delta"] = c.delta;
  j["eps_num"] = c.eps_num;
  j["guard_digits"] = c.guard_digits;
  switch (c.command) {
    case Command::kCount:
      j["n"] = c.n;
      j["t_grid"] = c.t_grid;
      break;
    case Command::kSaddle:
      j["n"] = c.n;
      j["u"] = c.u;
      break;
    case Command::kAsym:
      j["n"] = c.n;
      break;
    case Command::kVerify:
      j["n_grid"] = c.n_grid;
      j["t_grid"] = c.t_grid;
      break;
    case Command::kSample:
      j["n"] = c.n;
      j["target_accepted"] = c.target_accepted;
      j["attempt_cap"] = c.attempt_cap;
      j["seed"] = c.seed;
      break;
    case Command::kHCheck:
      j["gamma"] = c.h_gamma;
      j["j"] = c.h_j;
      j["u"] = c.u;
      j["tau_grid"] = c.tau_grid;
      break;
  }
  j["format"] = c.format;
  return j;
}

std::string alpha_slug(const std::string& alpha_text) {
  std::string s = alpha_text;
  for (auto& ch : s)
    if (ch == '/' || ch == '.') ch = '-';
  return s;
}

std::string default_filename(const RunConfig& c) {
  std::ostringstream name;
  name << command_name(c.command) << "_a" << alpha_slug(c.alpha_text);
  if (c.command == Command::kVerify) {
    name << "_n";
    for (std::size_t i = 0; i < c.n_grid.size(); ++i)
      name << (i ? "-" : "") << c.n_grid[i];
  } else if (c.command == Command::kHCheck) {
    name << "_g" << c.h_gamma << "_j" << c.h_j;
  } else {
    name << "_n" << c.n;
  }
  if (c.command == Command::kSample) name << "_s" << c.seed;
  name << (c.format == "csv" ? ".csv" : ".json");
  return name.str();
}

fs::path resolve_out_path(const RunConfig& c) {
  if (!c.out_path.empty()) return c.out_path;
  fs::path dir;
  if (!c.out_dir.empty()) {
    dir = c.out_dir;
  } else if (const char* env = std::getenv("ALPHAPART_OUT_DIR")) {
    dir = env;
  } else {
    dir = ".";
  }
  return dir / default_filename(c);
}

// temp file in the target directory, then rename (atomic on POSIX)
void write_atomically(const fs::path& path, const std::string& content) {
  fs::path dir = path.parent_path();
  if (!dir.empty()) fs::create_directories(dir);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw error("cannot open " + tmp.string() + " for writing");
    os << content;
  }
  fs::rename(tmp, path);
}

std::string csv_preamble(const RunConfig& c) {
  std::ostringstream os;
  os << "# alphapart " << kVersion << "\n# config: " << config_json(c).dump()
     << "\n";
  return os.str();
}

std::string json_document(const RunConfig& c, json result) {
  json doc;
  doc["version"] = kVersion;
  doc["config"] = config_json(c);
  doc["result"] = std::move(result);
  return doc.dump(2) + "\n";
}

struct Outcome {
  std::string content;
  std::string summary;
};

Outcome run_count(const RunConfig& c, const AlphaParams& params) {
  if (c.n < 1) throw validation_error("count requires --n >= 1");
  auto table = exact::build_count_table(params, c.n);
  auto summary = exact::distribution_summary(table, c.n, c.t_grid);
  Outcome out;
  if (c.format == "csv") {
    std::ostringstream os;
    os << csv_preamble(c);
    exact::write_csv(table, os, c.n);
    out.content = os.str();
  } else {
    out.content = json_document(
        c, json::parse(exact::to_json_string(summary)));
  }
  std::ostringstream s;
  s << "count: alpha=" << c.alpha_text << " n=" << c.n
    << " q(n)=" << summary.q_n.get_str() << " mean=" << summary.mean.get_str()
    << " ks=" << summary.ks_to_normal;
  out.summary = s.str();
  return out;
}

Outcome run_saddle(const RunConfig& c, const AlphaParams& params) {
  if (c.n < 1) throw validation_error("saddle requires --n >= 1");
  auto sol = saddle::solve_saddle(params, c.n, c.u);
  const double log_qn = saddle::saddle_qn_approx(params, sol);
  json r;
  r["n"] = sol.n;
  r["u"] = sol.u;
  r["r"] = sol.r;
  r["residual"] = sol.residual;
  r["K_trunc"] = sol.K_trunc;
  r["f"] = sol.f_value;
  r["f_tau"] = sol.f_tau;
  r["B_squared"] = sol.B_squared;
  r["f_tau3"] = sol.f_tau3;
  r["t_n"] = sol.t_n;
  r["log_qn_approx"] = log_qn;
  Outcome out;
  if (c.format == "csv") {
    std::ostringstream os;
    os << csv_preamble(c)
       << "n,u,r,residual,K_trunc,f,f_tau,B_squared,f_tau3,t_n,log_qn_approx\n";
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%lld,%.17g,%.17g,%.17g,%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  static_cast<long long>(sol.n), sol.u, sol.r, sol.residual,
                  static_cast<long long>(sol.K_trunc), sol.f_value, sol.f_tau,
                  sol.B_squared, sol.f_tau3, sol.t_n, log_qn);
    os << buf;
    out.content = os.str();
  } else {
    out.content = json_document(c, std::move(r));
  }
  std::ostringstream s;
  s << "saddle: alpha=" << c.alpha_text << " n=" << c.n << " u=" << c.u
    << " r=" << sol.r << " residual=" << sol.residual;
  out.summary = s.str();
  return out;
}

Outcome run_asym(const RunConfig& c, const AlphaParams& params) {
  if (c.n < 1) throw validation_error("asym requires --n >= 1");
  auto est = asym::predict(params, c.n);
  json r;
  r["n"] = est.n;
  r["eta"] = est.eta;
  r["mu_n"] = est.mu_n;
  r["sigma2_n"] = est.sigma2_n;
  r["c1"] = est.c1;
  r["c2"] = est.c2;
  r["exponent"] = est.exponent;
  r["mu_leading"] = est.mu_leading;
  r["sigma2_leading"] = est.sigma2_leading;
  Outcome out;
  if (c.format == "csv") {
    std::ostringstream os;
    os << csv_preamble(c)
       << "n,eta,mu_n,sigma2_n,c1,c2,exponent,mu_leading,sigma2_leading\n";
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  static_cast<long long>(est.n), est.eta, est.mu_n,
                  est.sigma2_n, est.c1, est.c2, est.exponent, est.mu_leading,
                  est.sigma2_leading);
    os << buf;
    out.content = os.str();
  } else {
    out.content = json_document(c, std::move(r));
  }
  std::ostringstream s;
  s << "asym: alpha=" << c.alpha_text << " n=" << c.n << " mu_n=" << est.mu_n
    << " sigma2_n=" << est.sigma2_n << " exponent=" << est.exponent;
  out.summary = s.str();
  return out;
}

Outcome run_verify(const RunConfig& c, const AlphaParams& params) {
  if (c.n_grid.empty()) throw validation_error("verify requires --n-grid");
  auto report = verify::run_clt_report(params, c.n_grid, c.t_grid);
  Outcome out;
  if (c.format == "csv") {
    std::ostringstream os;
    os << csv_preamble(c);
    verify::write_csv(report, os);
    out.content = os.str();
  } else {
    out.content =
        json_document(c, json::parse(verify::to_json_string(report)));
  }
  std::ostringstream s;
  s << "verify: alpha=" << c.alpha_text << " n_max=" << c.n_grid.back()
    << " ks_final=" << report.ks_values.back();
  out.summary = s.str();
  return out;
}

Outcome run_sample(const RunConfig& c, const AlphaParams& params) {
  if (c.n < 1) throw validation_error("sample requires --n >= 1");
  auto batch = verify::sample_partitions(params, c.n, c.target_accepted,
                                         c.seed, c.attempt_cap);
  Outcome out;
  if (c.format == "csv") {
    std::ostringstream os;
    os << csv_preamble(c);
    verify::write_csv(batch, os);
    out.content = os.str();
  } else {
    out.content =
        json_document(c, json::parse(verify::to_json_string(batch)));
  }
  std::ostringstream s;
  s << "sample: alpha=" << c.alpha_text << " n=" << c.n << " accepted="
    << batch.accepted << "/" << batch.attempts << " rng=" << batch.rng_id;
  out.summary = s.str();
  return out;
}

Outcome run_hcheck(const RunConfig& c, const AlphaParams& params) {
  if (c.tau_grid.empty()) throw validation_error("h-check requires --tau-grid");
  // leading order: h_{gamma,j}(tau,u) ~ Li_{gamma+2}(-u) Gamma(gamma+j+1) tau^{-gamma-j-1}
  const double limit = special::polylog_neg(c.h_gamma + 2.0, c.u).value *
                       special::gamma(c.h_gamma + c.h_j + 1.0).value;
  json rows = json::array();
  std::ostringstream csv;
  csv << csv_preamble(c) << "tau,h,h_scaled,limit,rel_gap\n";
  char buf[512];
  double final_gap = 0.0;
  for (double tau : c.tau_grid) {
    const double h = saddle::h_sum(params, c.h_gamma, c.h_j, tau, c.u);
    const double scaled = h * std::pow(tau, c.h_gamma + c.h_j + 1.0);
    const double gap = std::abs(scaled - limit) / std::abs(limit);
    final_gap = gap;
    rows.push_back({{"tau", tau},
                    {"h", h},
                    {"h_scaled", scaled},
                    {"limit", limit},
                    {"rel_gap", gap}});
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", tau, h,
                  scaled, limit, gap);
    csv << buf;
  }
  Outcome out;
  out.content = c.format == "csv" ? csv.str() : json_document(c, std::move(rows));
  std::ostringstream s;
  s << "h-check: alpha=" << c.alpha_text << " gamma=" << c.h_gamma
    << " j=" << c.h_j << " final_rel_gap=" << final_gap;
  out.summary = s.str();
  return out;
}

} // namespace

AlphaParams params_from_config(const RunConfig& c) {
  NumericPolicy policy;
  policy.eps_num = c.eps_num;
  policy.guard_digits = c.guard_digits;
  const auto slash = c.alpha_text.find('/');
  try {
    if (slash != std::string::npos) {
      const std::int64_t p = std::stoll(c.alpha_text.substr(0, slash));
      const std::int64_t q = std::stoll(c.alpha_text.substr(slash + 1));
      return AlphaParams::from_rational(p, q, c.delta, policy);
    }
    std::size_t used = 0;
    const double a = std::stod(c.alpha_text, &used);
    if (used != c.alpha_text.size())
      throw validation_error("cannot parse alpha '" + c.alpha_text + "'");
    return AlphaParams::from_real(a, c.delta, policy);
  } catch (const std::invalid_argument&) {
    throw validation_error("cannot parse alpha '" + c.alpha_text + "'");
  } catch (const std::out_of_range&) {
    throw validation_error("alpha '" + c.alpha_text + "' out of range");
  }
}

int run(const RunConfig& config) {
  try {
    const AlphaParams params = params_from_config(config);
    if (config.format != "json" && config.format != "csv")
      throw validation_error("format must be json or csv");
    Outcome out;
    switch (config.command) {
      case Command::kCount: out = run_count(config, params); break;
      case Command::kSaddle: out = run_saddle(config, params); break;
      case Command::kAsym: out = run_asym(config, params); break;
      case Command::kVerify: out = run_verify(config, params); break;
      case Command::kSample: out = run_sample(config, params); break;
      case Command::kHCheck: out = run_hcheck(config, params); break;
    }
    const fs::path path = resolve_out_path(config);
    write_atomically(path, out.content);
    std::cout << out.summary << " -> " << path.string() << "\n";
    return 0;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

int main_impl(int argc, const char* const* argv) {
  CLI::App app{"restricted alpha-partition statistics"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha_text,
                    "alpha in (0,1); 'p/q' uses the exact integer path")
        ->required();
    sub->add_option("--delta", cfg.delta, "u-range bound, u in [delta,1/delta]");
    sub->add_option("--eps", cfg.eps_num, "relative tolerance for sums");
    sub->add_option("--guard-digits", cfg.guard_digits,
                    "extended precision digits for ceil(k^beta)");
    sub->add_option("--format", cfg.format, "json|csv");
    sub->add_option("--out", cfg.out_path, "output file path");
    sub->add_option("--out-dir", cfg.out_dir,
                    "output directory (default $ALPHAPART_OUT_DIR or .)");
  };

  auto* count = app.add_subcommand("count", "exact length distribution at n");
  add_common(count);
  count->add_option("--n", cfg.n, "target size")->required();
  count->add_option("--t-grid", cfg.t_grid, "MGF sample points in [-3,3]");

  auto* sad = app.add_subcommand("saddle", "solve the saddle point r(n,u)");
  add_common(sad);
  sad->add_option("--n", cfg.n, "target size")->required();
  sad->add_option("--u", cfg.u, "length-marking variable");

  auto* asy = app.add_subcommand("asym", "asymptotic mean/variance prediction");
  add_common(asy);
  asy->add_option("--n", cfg.n, "target size")->required();

  auto* ver = app.add_subcommand("verify", "CLT convergence report");
  add_common(ver);
  ver->add_option("--n-grid", cfg.n_grid, "sizes to evaluate")->required();
  ver->add_option("--t-grid", cfg.t_grid, "MGF sample points in [-3,3]");

  auto* smp = app.add_subcommand("sample", "Boltzmann rejection sampler");
  add_common(smp);
  smp->add_option("--n", cfg.n, "target size")->required();
  smp->add_option("--count", cfg.target_accepted, "accepted samples wanted");
  smp->add_option("--seed", cfg.seed, "PRNG seed");
  smp->add_option("--attempt-cap", cfg.attempt_cap, "max attempts");

  auto* hch = app.add_subcommand("h-check", "harmonic sum leading-order check");
  add_common(hch);
  hch->add_option("--gamma", cfg.h_gamma, "outer exponent gamma > 0");
  hch->add_option("--j", cfg.h_j, "derivative order j in [0,4]");
  hch->add_option("--u", cfg.u, "length-marking variable");
  hch->add_option("--tau-grid", cfg.tau_grid, "tau values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return 2;
  }

  if (count->parsed()) cfg.command = Command::kCount;
  if (sad->parsed()) cfg.command = Command::kSaddle;
  if (asy->parsed()) cfg.command = Command::kAsym;
  if (ver->parsed()) cfg.command = Command::kVerify;
  if (smp->parsed()) cfg.command = Command::kSample;
  if (hch->parsed()) cfg.command = Command::kHCheck;
  if (cfg.t_grid.empty())
    cfg.t_grid = {-2.0, -1.5, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0};
  return run(cfg);
}

} // namespace alphapart::cli
