#pragma once

// Command-line front end: `compute`, `detect`, `cable` and `table`.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cablekh/invariants.hpp"

namespace cablekh {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;      // unparseable input or bad arguments
inline constexpr int kExitResource = 3;   // a cap or budget was exceeded
inline constexpr int kExitInvariant = 4;  // internal invariant or theorem violation

enum class OutputFormat { kJson, kText };

struct RunConfig {
  Algorithm algorithm = Algorithm::kAuto;
  bool reduced = false;
  int cable_n = 2;
  int max_crossings = 20;  // dense cube cap
  std::size_t budget = std::size_t{1} << 25;  // generator / object budget
  int oracle_cap = 20;
  OutputFormat format = OutputFormat::kText;
  std::uint64_t seed = 20240601;
  bool include_expensive = false;
  int jobs = 0;  // 0: hardware concurrency

  ComputeOptions compute_options() const;
  DetectOptions detect_options() const;
};

struct TableRow {
  std::string name;
  std::string pd;
  int components = 1;
  bool expensive = false;
};

/// Reads a JSON-lines knot table (fields name, pd, components, optional
/// expensive). Blank lines are skipped; a malformed line throws InputError.
std::vector<TableRow> read_knot_table(std::istream& in);

/// Detection on one table row. Input errors (unparseable PD, component
/// mismatch, links) become a report with `error` set and no verdict; an
/// internal invariant failure becomes verdict error.
DetectionReport detect_row(const TableRow& row, const RunConfig& cfg);

/// Exit code summarizing a batch: a verdict of error or a failed check is a
/// theorem/invariant violation; everything else is success.
int table_exit_code(const std::vector<DetectionReport>& reports);

/// Parses `args` (without the program name), runs the subcommand and returns
/// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cablekh
