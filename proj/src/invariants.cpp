#include "cablekh/invariants.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <sstream>

#include "cablekh/cable.hpp"
#include "cablekh/errors.hpp"

namespace cablekh {

LaurentPoly LaurentPoly::monomial(int exp, std::int64_t coeff) {
  LaurentPoly p;
  p.add(exp, coeff);
  return p;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(int exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  }
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  LaurentPoly rest = *this;
  LaurentPoly quotient;
  const auto [lead_exp, lead_coeff] = *divisor.terms_.rbegin();
  const int low_exp = divisor.terms_.begin()->first;
  if (is_zero()) return quotient;
  // every quotient exponent q satisfies q + low_exp >= lowest exponent here
  const int floor_exp = terms_.begin()->first - low_exp;
  while (!rest.is_zero()) {
    const auto [e, c] = *rest.terms_.rbegin();
    if (c % lead_coeff != 0) return std::nullopt;
    if (e - lead_exp < floor_exp) return std::nullopt;
    const LaurentPoly step = monomial(e - lead_exp, c / lead_coeff);
    quotient += step;
    rest = rest - step * divisor;
  }
  return quotient;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentPoly graded_euler(const BettiTable& t) {
  LaurentPoly p;
  for (const auto& [b, r] : t.ranks) {
    p.add(b.j, (b.i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(r));
  }
  return p;
}

namespace {

// Own circle counter, independent of the cube module. The A-smoothing of
// X[a,b,c,d] joins a-b and c-d.
int count_state_circles(const LinkDiagram& d, std::uint64_t b_choices, std::vector<int>& parent) {
  const int ids = d.max_edge() + 1;
  parent.resize(ids);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int circles = static_cast<int>(d.edges().size());
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --circles;
    }
  };
  for (int k = 0; k < d.num_crossings(); ++k) {
    const auto& e = d.crossings()[k].edges;
    if ((b_choices >> k) & 1u) {
      unite(e[0], e[3]);
      unite(e[1], e[2]);
    } else {
      unite(e[0], e[1]);
      unite(e[2], e[3]);
    }
  }
  return circles + d.num_free_loops();
}

}  // namespace

LaurentPoly kauffman_jones(const LinkDiagram& d, const OracleOptions& options) {
  const int n = d.num_crossings();
  if (n > options.max_crossings) {
    throw ResourceError("Kauffman bracket oracle limited to " +
                        std::to_string(options.max_crossings) + " crossings");
  }
  if (d.empty()) throw InputError("Jones polynomial of the empty diagram");

  // tally[b][circles] = number of states with b B-smoothings and that many circles
  const int max_circles = 2 * n + d.num_free_loops() + 1;
  std::vector<std::vector<std::int64_t>> tally(n + 1, std::vector<std::int64_t>(max_circles + 1));
  std::vector<int> parent;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    tally[std::popcount(s)][count_state_circles(d, s, parent)] += 1;
  }

  // Bracket in A: sum A^(n - 2b) (-A^2 - A^-2)^(circles - 1).
  const LaurentPoly loop = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  std::vector<LaurentPoly> loop_pow(max_circles + 1);
  loop_pow[0] = LaurentPoly::monomial(0);
  for (int k = 1; k <= max_circles; ++k) loop_pow[k] = loop_pow[k - 1] * loop;
  LaurentPoly bracket;
  for (int b = 0; b <= n; ++b) {
    for (int c = 1; c <= max_circles; ++c) {
      if (tally[b][c] == 0) continue;
      bracket += LaurentPoly::monomial(n - 2 * b, tally[b][c]) * loop_pow[c - 1];
    }
  }

  // f = (-A^3)^(-w) <D>, then A^2 = -q^-1 and multiply by q + q^-1.
  const int w = writhe(d);
  const LaurentPoly f = LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1) * bracket;
  LaurentPoly in_q;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw InvariantError("odd power of A in the normalized bracket");
    const int half = e / 2;
    in_q.add(-half, (half % 2 == 0) ? c : -c);
  }
  return in_q * (LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
}

std::optional<std::int64_t> determinant_from_jones(const LaurentPoly& unnormalized) {
  const auto normalized =
      unnormalized.divide(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
  if (!normalized) return std::nullopt;
  // Evaluate at q = i.
  std::int64_t re = 0, im = 0;
  for (const auto& [e, c] : normalized->terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  if (re != 0 && im != 0) return std::nullopt;
  return (re < 0 ? -re : re) + (im < 0 ? -im : im);
}

bool determinant_check(const LaurentPoly& unnormalized) {
  const auto det = determinant_from_jones(unnormalized);
  return det && *det == 0;
}

RankInterval colored_rank_interval(std::int64_t unreduced_cable_rank) {
  if (unreduced_cable_rank <= 0) {
    throw InputError("cable rank must be positive for a nonempty link");
  }
  return {unreduced_cable_rank - 1, unreduced_cable_rank + 1};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kUnknot: return "unknot";
    case Verdict::kNontrivial: return "nontrivial";
    case Verdict::kError: return "error";
  }
  return "error";
}

std::optional<Verdict> verdict_from_string(const std::string& s) {
  if (s == "unknot") return Verdict::kUnknot;
  if (s == "nontrivial") return Verdict::kNontrivial;
  if (s == "error") return Verdict::kError;
  return std::nullopt;
}

Verdict classify_cable_rank(std::int64_t unreduced_rank) {
  if (unreduced_rank == kCableUnknotRank) return Verdict::kUnknot;
  if (unreduced_rank >= kCableNontrivialMin && unreduced_rank % 2 == 0) {
    return Verdict::kNontrivial;
  }
  return Verdict::kError;
}

bool DetectionReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

DetectionReport detect_unknot(const LinkDiagram& knot, const std::string& name,
                              const DetectOptions& options) {
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };
  if (knot.num_components() != 1) {
    throw InputError("detection needs a knot; diagram has " +
                     std::to_string(knot.num_components()) + " components");
  }

  DetectionReport r;
  r.name = name;
  r.crossings = knot.num_crossings();

  auto t0 = Clock::now();
  const LinkDiagram cable = seifert_framed_cable(knot, options.cable_n);
  r.timings_ms["cable"] = ms_since(t0);
  r.cable_crossings = cable.num_crossings();

  try {
    t0 = Clock::now();
    r.betti = compute_betti(cable, false, options.compute);
    r.timings_ms["unreduced"] = ms_since(t0);
    t0 = Clock::now();
    r.reduced_rank = static_cast<std::int64_t>(compute_betti(cable, true, options.compute).total());
    r.timings_ms["reduced"] = ms_since(t0);
  } catch (const ResourceError& e) {
    r.error = e.what();
    return r;
  }
  r.total_rank = static_cast<std::int64_t>(r.betti.total());
  r.euler = graded_euler(r.betti);

  r.checks.push_back({"rank_doubling", r.total_rank == 2 * r.reduced_rank});
  if (cable.num_components() >= 2) {
    bool unlinked = true;
    for (int a = 0; a < cable.num_components(); ++a) {
      for (int b = a + 1; b < cable.num_components(); ++b) {
        unlinked = unlinked && linking_number(cable, a, b) == 0;
      }
    }
    r.checks.push_back({"cable_linking_zero", unlinked});
  }

  if (cable.num_crossings() <= options.oracle.max_crossings) {
    t0 = Clock::now();
    const LaurentPoly jones = kauffman_jones(cable, options.oracle);
    r.timings_ms["oracle"] = ms_since(t0);
    r.checks.push_back({"euler_equals_jones", jones == r.euler});
    if (options.cable_n == 2) r.checks.push_back({"determinant_zero", determinant_check(jones)});
  }

  if (options.cable_n != 2) {
    r.error = "verdicts are only defined for 2-cables";
    return r;
  }

  r.verdict = classify_cable_rank(r.total_rank);
  r.colored_interval = colored_rank_interval(r.total_rank);
  if (*r.verdict == Verdict::kUnknot) {
    r.checks.push_back({"colored_interval_contains_3",
                        r.colored_interval->contains(kColoredUnknotRank)});
  } else if (*r.verdict == Verdict::kNontrivial) {
    r.checks.push_back({"colored_interval_at_least_11",
                        r.colored_interval->lo >= kColoredNontrivialMin});
    r.checks.push_back({"reduced_rank_at_least_6", r.reduced_rank >= 6});
  }
  return r;
}

}  // namespace cablekh
