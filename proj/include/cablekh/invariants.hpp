#pragma once

// Decategorified oracles and unknot detection from 2-cables.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cablekh/diagram.hpp"
#include "cablekh/homology.hpp"

namespace cablekh {

/// Exact Laurent polynomial in one variable with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exp, std::int64_t coeff = 1);

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(int exp) const;
  bool is_zero() const { return terms_.empty(); }
  void add(int exp, std::int64_t coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact division; nullopt when the divisor does not divide.
  std::optional<LaurentPoly> divide(const LaurentPoly& divisor) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  std::map<int, std::int64_t> terms_;
};

/// sum over (i, j) of (-1)^i b(i,j) q^j.
LaurentPoly graded_euler(const BettiTable& t);

struct OracleOptions {
  int max_crossings = 20;
};

/// Unnormalized Jones polynomial from the Kauffman bracket state sum with
/// writhe correction; the unknot gives q + q^-1.
LaurentPoly kauffman_jones(const LinkDiagram& d, const OracleOptions& options = {});

/// |J(i)| where J is the unnormalized polynomial divided by q + q^-1.
/// nullopt when that division is not exact.
std::optional<std::int64_t> determinant_from_jones(const LaurentPoly& unnormalized);

/// Passes iff the determinant read off the Jones polynomial is 0.
bool determinant_check(const LaurentPoly& unnormalized);

struct RankInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

/// Colored (2-colored) rank bounds from the 2-cable rank: [rank-1, rank+1].
RankInterval colored_rank_interval(std::int64_t unreduced_cable_rank);

/// Rank of the 2-colored categorification: 3 for the unknot, >= 11 otherwise.
inline constexpr std::int64_t kColoredUnknotRank = 3;
inline constexpr std::int64_t kColoredNontrivialMin = 11;
inline constexpr std::int64_t kCableUnknotRank = 4;
inline constexpr std::int64_t kCableNontrivialMin = 12;

enum class Verdict { kUnknot, kNontrivial, kError };

std::string to_string(Verdict v);
std::optional<Verdict> verdict_from_string(const std::string& s);

/// unknot iff rank == 4; nontrivial iff rank >= 12 and even; anything else
/// contradicts the detection theorem.
Verdict classify_cable_rank(std::int64_t unreduced_rank);

struct CheckResult {
  std::string name;
  bool pass = false;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct DetectionReport {
  std::string name;
  int crossings = 0;
  int cable_crossings = 0;
  BettiTable betti;  // unreduced, of the cable
  std::int64_t total_rank = 0;
  std::int64_t reduced_rank = 0;
  LaurentPoly euler;
  std::optional<Verdict> verdict;  // absent when the run failed
  std::optional<RankInterval> colored_interval;
  std::vector<CheckResult> checks;
  std::map<std::string, double> timings_ms;
  std::string error;  // resource or input failure; empty on success

  bool all_checks_pass() const;
  friend bool operator==(const DetectionReport&, const DetectionReport&) = default;
};

struct DetectOptions {
  ComputeOptions compute;
  OracleOptions oracle;
  int cable_n = 2;
};

/// Cables the knot (Seifert framing), computes unreduced and reduced
/// homology, and classifies. Input errors throw; resource exhaustion is
/// reported in `error` with no verdict.
DetectionReport detect_unknot(const LinkDiagram& knot, const std::string& name = "",
                              const DetectOptions& options = {});

}  // namespace cablekh
