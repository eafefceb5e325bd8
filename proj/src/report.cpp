#include "cablekh/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "cablekh/errors.hpp"

namespace cablekh {

using nlohmann::json;

json betti_to_json(const BettiTable& t) {
  json out = json::array();
  for (const auto& [b, r] : t.ranks) out.push_back({{"i", b.i}, {"j", b.j}, {"rank", r}});
  return out;
}

BettiTable betti_from_json(const json& j) {
  BettiTable t;
  for (const auto& e : j) {
    t.add({e.at("i").get<int>(), e.at("j").get<int>()}, e.at("rank").get<std::size_t>());
  }
  return t;
}

json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"coeff", c}});
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& e : j) p.add(e.at("exp").get<int>(), e.at("coeff").get<std::int64_t>());
  return p;
}

json report_to_json(const DetectionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  json out = {
      {"name", r.name},
      {"crossings", r.crossings},
      {"cable_crossings", r.cable_crossings},
      {"betti", betti_to_json(r.betti)},
      {"total_rank", r.total_rank},
      {"reduced_rank", r.reduced_rank},
      {"euler", poly_to_json(r.euler)},
      {"verdict", r.verdict ? json(to_string(*r.verdict)) : json(nullptr)},
      {"colored_interval", r.colored_interval
                               ? json::array({r.colored_interval->lo, r.colored_interval->hi})
                               : json(nullptr)},
      {"checks", checks},
      {"timings_ms", r.timings_ms},
      {"error", r.error},
  };
  return out;
}

DetectionReport report_from_json(const json& j) {
  try {
    DetectionReport r;
    r.name = j.at("name").get<std::string>();
    r.crossings = j.at("crossings").get<int>();
    r.cable_crossings = j.at("cable_crossings").get<int>();
    r.betti = betti_from_json(j.at("betti"));
    r.total_rank = j.at("total_rank").get<std::int64_t>();
    r.reduced_rank = j.at("reduced_rank").get<std::int64_t>();
    r.euler = poly_from_json(j.at("euler"));
    if (!j.at("verdict").is_null()) {
      r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
      if (!r.verdict) throw InputError("unknown verdict");
    }
    if (!j.at("colored_interval").is_null()) {
      const auto& iv = j.at("colored_interval");
      r.colored_interval = RankInterval{iv.at(0).get<std::int64_t>(), iv.at(1).get<std::int64_t>()};
    }
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>()});
    }
    r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string format_betti_grid(const BettiTable& t) {
  if (t.ranks.empty()) return "(zero)\n";
  std::set<int> is, js;
  for (const auto& [b, r] : t.ranks) {
    is.insert(b.i);
    js.insert(b.j);
  }
  const int lo_i = *is.begin(), hi_i = *is.rbegin();
  const int lo_j = *js.begin(), hi_j = *js.rbegin();
  // Unreduced tables live in one parity of j; step 2 keeps the grid compact.
  bool parity = true;
  for (int j : js) parity = parity && ((j - lo_j) % 2 == 0);
  const int step = parity ? 2 : 1;

  std::ostringstream out;
  constexpr int w = 4;
  out << std::setw(w) << "j\\i";
  for (int i = lo_i; i <= hi_i; ++i) out << std::setw(w) << i;
  out << '\n';
  for (int j = hi_j; j >= lo_j; j -= step) {
    out << std::setw(w) << j;
    for (int i = lo_i; i <= hi_i; ++i) {
      const std::size_t r = t.at({i, j});
      if (r == 0) out << std::setw(w) << '.';
      else out << std::setw(w) << r;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_report_table(const std::vector<DetectionReport>& reports) {
  const std::vector<std::string> header = {"name",    "cr",      "cable_cr", "rank",
                                           "reduced", "verdict", "colored",  "checks",
                                           "ms",      "error"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    std::ostringstream ms;
    double total = 0;
    for (const auto& [k, v] : r.timings_ms) total += v;
    ms << std::fixed << std::setprecision(1) << total;
    const auto passed = std::count_if(r.checks.begin(), r.checks.end(),
                                      [](const CheckResult& c) { return c.pass; });
    const std::string verdict = r.verdict ? to_string(*r.verdict) : "-";
    rows.push_back({
        r.name,
        std::to_string(r.crossings),
        std::to_string(r.cable_crossings),
        std::to_string(r.total_rank),
        std::to_string(r.reduced_rank),
        verdict,
        r.colored_interval ? "[" + std::to_string(r.colored_interval->lo) + "," +
                                 std::to_string(r.colored_interval->hi) + "]"
                           : "-",
        std::to_string(passed) + "/" + std::to_string(r.checks.size()),
        ms.str(),
        r.error,
    });
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      if (c + 1 == row.size()) {
        out << row[c];  // trailing free-text column is not padded
        break;
      }
      const bool left = c == 0 || c == 5;
      out << (left ? std::left : std::right) << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

}  // namespace cablekh
