#include "cablekh/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cablekh/cable.hpp"
#include "cablekh/errors.hpp"
#include "cablekh/report.hpp"

#ifndef CABLEKH_DEFAULT_TABLE
#define CABLEKH_DEFAULT_TABLE "data/knots.jsonl"
#endif

namespace cablekh {

using nlohmann::json;

ComputeOptions RunConfig::compute_options() const {
  ComputeOptions o;
  o.algorithm = algorithm;
  o.cube.max_crossings = max_crossings;
  o.cube.max_generators = budget;
  o.scan.max_objects = budget;
  return o;
}

DetectOptions RunConfig::detect_options() const {
  DetectOptions o;
  o.compute = compute_options();
  o.oracle.max_crossings = oracle_cap;
  o.cable_n = cable_n;
  return o;
}

std::vector<TableRow> read_knot_table(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      TableRow row;
      row.name = j.at("name").get<std::string>();
      row.pd = j.at("pd").get<std::string>();
      row.components = j.at("components").get<int>();
      row.expensive = j.value("expensive", false);
      rows.push_back(std::move(row));
    } catch (const json::exception& e) {
      throw InputError("knot table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

namespace {

void require_oracle_agreement(DetectionReport& r) {
  if (!r.all_checks_pass() && r.verdict) r.verdict = Verdict::kError;
}

}  // namespace

DetectionReport detect_row(const TableRow& row, const RunConfig& cfg) {
  DetectionReport r;
  r.name = row.name;
  try {
    const LinkDiagram d = parse_pd(row.pd);
    r.crossings = d.num_crossings();
    if (d.num_components() != row.components) {
      throw InputError("table says " + std::to_string(row.components) +
                       " components, diagram has " + std::to_string(d.num_components()));
    }
    r = detect_unknot(d, row.name, cfg.detect_options());
    require_oracle_agreement(r);
  } catch (const InputError& e) {
    r.error = std::string("input: ") + e.what();
  } catch (const ResourceError& e) {
    r.error = std::string("resource: ") + e.what();
  } catch (const std::logic_error& e) {
    r.verdict = Verdict::kError;
    r.error = std::string("invariant: ") + e.what();
  }
  return r;
}

int table_exit_code(const std::vector<DetectionReport>& reports) {
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kError || !r.all_checks_pass()) return kExitInvariant;
  }
  return kExitOk;
}

namespace {

std::string read_pd_source(const std::string& source) {
  if (source.empty() || source[0] != '@') return source;
  std::ifstream f(source.substr(1));
  if (!f) throw InputError("cannot open PD file " + source.substr(1));
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

LinkDiagram with_default_basepoint(const LinkDiagram& d) {
  if (d.basepoint() || d.empty()) return d;
  const auto edges = d.edges();
  return set_basepoint(d, edges.empty() ? d.free_loop_id(0) : edges.front());
}

int cmd_compute(const std::string& pd, int cable_n, const RunConfig& cfg, std::ostream& out) {
  LinkDiagram d = parse_pd(read_pd_source(pd));
  const int input_crossings = d.num_crossings();
  if (cable_n > 1) d = seifert_framed_cable(d, cable_n);
  if (cfg.reduced) d = with_default_basepoint(d);
  const BettiTable t = compute_betti(d, cfg.reduced, cfg.compute_options());
  const LaurentPoly euler = graded_euler(t);

  if (cfg.format == OutputFormat::kJson) {
    json j = {
        {"crossings", input_crossings},
        {"diagram_crossings", d.num_crossings()},
        {"components", d.num_components()},
        {"cable", cable_n},
        {"reduced", cfg.reduced},
        {"betti", betti_to_json(t)},
        {"total_rank", t.total()},
        {"poincare", format_poincare(t)},
        {"euler", poly_to_json(euler)},
    };
    out << j.dump() << '\n';
  } else {
    out << "diagram: " << d.num_crossings() << " crossings, " << d.num_components()
        << " components, writhe " << writhe(d) << (cfg.reduced ? ", reduced" : "") << '\n';
    out << format_betti_grid(t);
    out << "total rank: " << t.total() << '\n';
    out << "poincare: " << format_poincare(t) << '\n';
    out << "euler: " << euler.to_string() << '\n';
  }
  return kExitOk;
}

void print_report(const DetectionReport& r, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    out << report_to_json(r).dump() << '\n';
    return;
  }
  out << format_report_table({r});
  out << "betti table of the cable:\n" << format_betti_grid(r.betti);
  for (const auto& c : r.checks) out << (c.pass ? "  pass  " : "  FAIL  ") << c.name << '\n';
}

int cmd_detect(const std::string& pd, const std::string& name, const RunConfig& cfg,
               std::ostream& out) {
  const LinkDiagram d = parse_pd(read_pd_source(pd));
  DetectionReport r = detect_unknot(d, name, cfg.detect_options());
  require_oracle_agreement(r);
  print_report(r, cfg.format, out);
  if (!r.verdict && !r.error.empty() && cfg.cable_n == 2) return kExitResource;
  return table_exit_code({r});
}

int cmd_cable(const std::string& pd, const RunConfig& cfg, std::ostream& out) {
  const LinkDiagram d = parse_pd(read_pd_source(pd));
  LinkDiagram c = seifert_framed_cable(d, cfg.cable_n);
  // The cable carries a basepoint for reduced homology; only print it when
  // the user supplied one.
  if (!d.basepoint()) c = clear_basepoint(c);
  if (cfg.format == OutputFormat::kJson) {
    out << json{{"pd", to_pd(c)},
                {"crossings", c.num_crossings()},
                {"components", c.num_components()}}
               .dump()
        << '\n';
  } else {
    out << to_pd(c) << '\n';
  }
  return kExitOk;
}

int cmd_table(const std::string& path, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open knot table " + path);
  std::vector<TableRow> rows;
  int skipped = 0;
  for (auto& row : read_knot_table(f)) {
    if (row.expensive && !cfg.include_expensive) {
      ++skipped;
      continue;
    }
    rows.push_back(std::move(row));
  }

  std::vector<DetectionReport> reports(rows.size());
  std::vector<char> done(rows.size(), 0);
  std::size_t next_to_print = 0;
  std::mutex out_mutex;
  std::atomic<std::size_t> next_row{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next_row.fetch_add(1);
      if (i >= rows.size()) return;
      DetectionReport r = detect_row(rows[i], cfg);
      std::lock_guard<std::mutex> lock(out_mutex);
      reports[i] = std::move(r);
      done[i] = 1;
      // JSON lines stream in input order; the text table is aligned at the end.
      while (next_to_print < rows.size() && done[next_to_print]) {
        const auto& ready = reports[next_to_print];
        if (cfg.format == OutputFormat::kJson) out << report_to_json(ready).dump() << '\n';
        if (ready.verdict == Verdict::kError) {
          err << "THEOREM VIOLATION: " << ready.name << " has 2-cable rank "
              << ready.total_rank << (ready.error.empty() ? "" : " (" + ready.error + ")")
              << '\n';
        }
        ++next_to_print;
      }
    }
  };

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t jobs = cfg.jobs > 0 ? static_cast<std::size_t>(cfg.jobs) : hw;
  jobs = std::min(jobs, std::max<std::size_t>(rows.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::map<std::string, int> counts;
  for (const auto& r : reports) {
    counts[r.verdict ? to_string(*r.verdict) : "no_verdict"] += 1;
  }
  const int code = table_exit_code(reports);
  if (cfg.format == OutputFormat::kJson) {
    json summary = {{"rows", reports.size()},
                    {"skipped_expensive", skipped},
                    {"unknot", counts["unknot"]},
                    {"nontrivial", counts["nontrivial"]},
                    {"error", counts["error"]},
                    {"no_verdict", counts["no_verdict"]},
                    {"exit_code", code}};
    out << json{{"summary", summary}}.dump() << '\n';
  } else {
    if (!reports.empty()) out << format_report_table(reports);
    out << "summary: " << reports.size() << " rows, " << counts["unknot"] << " unknot, "
        << counts["nontrivial"] << " nontrivial, " << counts["error"] << " error, "
        << counts["no_verdict"] << " without verdict, " << skipped << " expensive skipped\n";
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Khovanov homology over Z/2 of links and their cables; unknot detection "
               "from 2-cables."};
  app.name("cablekh");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  const std::map<std::string, Algorithm> algorithms = {
      {"dense", Algorithm::kDense}, {"scan", Algorithm::kScan}, {"auto", Algorithm::kAuto}};
  const std::map<std::string, OutputFormat> formats = {{"json", OutputFormat::kJson},
                                                       {"text", OutputFormat::kText}};
  app.add_option("--algorithm", cfg.algorithm, "dense cube, scanning reduction, or auto")
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--max-crossings", cfg.max_crossings, "crossing cap of the dense cube")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "generator budget (dense) / object budget (scan)")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-cap", cfg.oracle_cap, "crossing cap of the Kauffman bracket oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed recorded for reproducible batch runs");
  app.add_option("--jobs", cfg.jobs, "worker threads for table runs (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string pd;
  std::string name = "input";
  std::string table_path = CABLEKH_DEFAULT_TABLE;
  int compute_cable = 1;

  auto* compute = app.add_subcommand("compute", "Betti table of a link (or of its cable)");
  compute->add_option("--pd", pd, "PD code, or @file")->required();
  compute->add_flag("--reduced", cfg.reduced, "reduced homology (default basepoint if none)");
  compute->add_option("--cable", compute_cable, "compute on the Seifert-framed n-cable")
      ->check(CLI::PositiveNumber);

  auto* detect = app.add_subcommand("detect", "unknot detection from the 2-cable");
  detect->add_option("--pd", pd, "PD code of a knot, or @file")->required();
  detect->add_option("--name", name, "name recorded in the report");
  detect->add_option("--cable", cfg.cable_n, "cable order (verdicts only for 2)")
      ->check(CLI::PositiveNumber);

  auto* cable = app.add_subcommand("cable", "print the Seifert-framed n-cable as PD");
  cable->add_option("--pd", pd, "PD code of a knot, or @file")->required();
  cable->add_option("--cable", cfg.cable_n, "cable order")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "batch detection over a JSON-lines knot table");
  table->add_option("file", table_path, "knot table (default: bundled table)");
  table->add_flag("--include-expensive", cfg.include_expensive, "also run rows marked expensive");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) return cmd_compute(pd, compute_cable, cfg, out);
    if (*detect) return cmd_detect(pd, name, cfg, out);
    if (*cable) return cmd_cable(pd, cfg, out);
    if (*table) return cmd_table(table_path, cfg, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitInput;
}

}  // namespace cablekh
