#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csm/json_io.hpp"

namespace csm::cli {

using json_io::Json;

enum class OutputFormat { Table, Json };

struct CheckOutcome {
  std::string name;
  bool pass = true;
  /// Concrete failure descriptions (row, column, coefficient); empty on pass.
  std::vector<std::string> witness;
};

struct SkippedCheck {
  std::string name;
  std::string reason;
};

struct RunReport {
  std::string command;
  /// "sha256:<hex>" over the command echo and the bytes of every input.
  std::string inputsDigest;
  std::vector<CheckOutcome> checks;
  std::vector<SkippedCheck> skipped;
  /// 0 all checks pass, 1 a check failed, 2 input error.
  int exitStatus = 0;
  std::optional<std::string> error;
  Json data = Json::object();
  /// Human-readable body for --output table.
  std::string body;

  void check(const std::string& name, std::vector<std::string> witness);
  void skip(const std::string& name, const std::string& reason);
  bool allPass() const;
};

Json toJson(const RunReport& report);
/// Table-mode rendering: body, check lines, verdict.
std::string renderText(const RunReport& report, bool quiet);

struct GrassmannianArgs {
  int k = 0;
  int n = 0;
  std::optional<std::string> fixture;
  std::optional<std::string> csmFile;
  std::optional<std::string> ssmFile;
};

struct ConstructibleArgs {
  std::string path;
  std::optional<std::string> function;
  std::optional<std::string> indicator;
  std::optional<std::string> euler;
  std::optional<std::string> behrend;
};

/// Each command catches InputError itself and reports exit status 2.
RunReport cmdGrassmannian(const GrassmannianArgs& args);
RunReport cmdCellsPn(int n);
RunReport cmdArrangement(const std::string& path);
RunReport cmdConstructible(const ConstructibleArgs& args);

/// Full command line: parses flags, runs the command, writes the report to
/// `out` (errors to `err`) and returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256Hex(const std::string& bytes);

}  // namespace csm::cli
