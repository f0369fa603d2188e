// Command line surface: count / saddle / asym / verify / sample / h-check.
// Parsing is separated from execution so tests can drive run() directly.

#ifndef ALPHAPART_TOOLS_CLI_HPP
#define ALPHAPART_TOOLS_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphapart/params.hpp"

namespace alphapart::cli {

enum class Command { kCount, kSaddle, kAsym, kVerify, kSample, kHCheck };

struct RunConfig {
  Command command = Command::kCount;
  std::string alpha_text = "1/2"; // as given: "p/q" or a decimal
  double delta = 0.25;
  double eps_num = 1e-12;
  int guard_digits = 30;

  std::int64_t n = 0;
  std::vector<std::int64_t> n_grid;
  double u = 1.0;
  std::vector<double> t_grid;
  std::string format = "json"; // json|csv
  std::string out_path;        // empty: derive from config into out_dir
  std::string out_dir;         // empty: $ALPHAPART_OUT_DIR or "."
  std::uint64_t seed = 1;

  // sample
  std::int64_t target_accepted = 1000;
  std::int64_t attempt_cap = 1'000'000;
  // h-check
  double h_gamma = 2.0;
  int h_j = 0;
  std::vector<double> tau_grid = {0.1, 0.05, 0.02, 0.01};
};

// Builds AlphaParams from the textual alpha ("p/q" takes the exact integer
// path).  Throws validation_error on malformed or out-of-range input.
AlphaParams params_from_config(const RunConfig& config);

// Exit status: 0 success, 2 validation error, 3 numeric/truncation failure.
int run(const RunConfig& config);

// Full CLI entry point (parse + run), returns the process exit status.
int main_impl(int argc, const char* const* argv);

} // namespace alphapart::cli

#endif
