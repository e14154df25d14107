#pragma once

// Command-line front end, callable in-process so the tests can drive it.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "althecke/json_io.hpp"

namespace althecke::cli {

enum ExitCode : int { ok = 0, usage = 1, not_semisimple = 2, check_failed = 3 };

struct RunConfig {
  std::string command;
  int n = 1;
  int level = 1;
  std::optional<int> e;
  int xi_num = 1;
  bool xi_one = false;
  std::string kappa;  // empty: all zeros
  double tol = kDefaultTolerance;
  std::string format = "json";
  std::string out;
  bool force = false;
  std::string lambda;              // specht only
  std::string system = "alternating";  // specht only
  bool no_hash = false;            // verify only
};

/// Algebra parameters from the flags; throws std::invalid_argument.
AlgebraParams make_params(const RunConfig& cfg);

/// Each command fills `report` and returns an exit code.
int cmd_tableaux(const RunConfig& cfg, Json& report);
int cmd_specht(const RunConfig& cfg, Json& report);
int cmd_verify(const RunConfig& cfg, Json& report);
int cmd_classify(const RunConfig& cfg, Json& report);
int cmd_report(const RunConfig& cfg, Json& report);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

/// Full entry point: parses args (without the program name), runs the
/// command and writes the report to `out` or to --out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace althecke::cli
