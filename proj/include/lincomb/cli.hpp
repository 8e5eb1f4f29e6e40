#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lincomb/constructions.hpp"
#include "lincomb/extremal_search.hpp"

namespace lincomb {

enum class OutputFormat { Json, Csv, Text };

/// Everything one invocation needs. Defaults match the command-line defaults.
struct RunConfig {
  std::string command;

  // Objective: a preset, inline coefficient lists, or a coefficient file.
  std::string preset;
  std::size_t preset_i = 1;
  std::vector<double> alpha, beta, gamma, delta;
  std::string form_file;

  std::string family = "all";
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::Json;
  std::string in_path;
  std::string out_dir;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  std::size_t solver_budget = kGernertSolverBudget;

  // construct
  std::size_t k = 1;
  std::size_t n = 0;  // 0: 21k

  // verify
  std::string suite = "all";
  std::size_t trials = 0;
  std::size_t max_order = 0;

  // search / phi
  std::string method = "auto";
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  std::size_t restarts = 8;
  std::size_t steps = 1000;
  bool seed_gernert = false;

  // amplify
  std::size_t big_n = 0;
  double c_ref = 0.0;
  bool c_ref_set = false;
  double eps = 0.05;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Resolves the objective: form file, then inline lists, then preset; mu1+mu2
/// when none is given. Throws std::invalid_argument when sources conflict.
LinearForm resolve_form(const RunConfig& c);

/// Reproducibility header: tool version, config echo, seed, tolerances.
nlohmann::ordered_json run_header(const RunConfig& c);

/// Runs one configured command. The header goes to `err` as one JSON line,
/// results to `out`, and artifacts to c.out_dir when set. Returns 0 when every
/// check passes, 1 on a check failure, 2 on bad input or configuration.
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

/// Parses argv with the subcommand grammar and calls run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "[2, -1, -1]": values rounded to 10 significant digits.
std::string format_spectrum_text(const std::vector<double>& values);

}  // namespace lincomb
