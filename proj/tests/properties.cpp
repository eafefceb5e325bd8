// Randomized structural checks on closures of random braids (at most 8
// crossings). Usage: property_tests [--seed=N] [--cases=N] [--verbose]

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cablekh/cube.hpp"
#include "cablekh/homology.hpp"
#include "cablekh/invariants.hpp"

using namespace cablekh;

namespace {

constexpr int kMaxCrossings = 8;

struct Braid {
  int strands = 2;
  std::vector<int> word;

  LinkDiagram closure() const { return braid_closure(strands, word); }
  std::string str() const {
    std::ostringstream out;
    out << strands << ":[";
    for (std::size_t k = 0; k < word.size(); ++k) out << (k ? "," : "") << word[k];
    out << ']';
    return out.str();
  }
};

class Runner {
 public:
  explicit Runner(bool verbose) : verbose_(verbose) {}

  void check(bool ok, const std::string& property, const Braid& b, const std::string& detail = "") {
    ++checks_[property];
    if (ok) return;
    ++failures_;
    std::cout << "FAIL " << property << " on braid " << b.str()
              << (detail.empty() ? "" : " (" + detail + ")") << '\n';
  }
  void note(const std::string& s) const {
    if (verbose_) std::cout << s << '\n';
  }
  int failures() const { return failures_; }
  const std::map<std::string, int>& checks() const { return checks_; }

 private:
  bool verbose_;
  int failures_ = 0;
  std::map<std::string, int> checks_;
};

Braid random_braid(std::mt19937_64& rng, int max_len) {
  Braid b;
  b.strands = std::uniform_int_distribution<int>(2, 4)(rng);
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::uniform_int_distribution<int> gen(1, b.strands - 1);
  std::bernoulli_distribution sign(0.5);
  for (int k = 0; k < len; ++k) b.word.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return b;
}

BettiTable mirrored(const BettiTable& t) {
  BettiTable m;
  for (const auto& [b, r] : t.ranks) m.add({-b.i, -b.j}, r);
  return m;
}

std::vector<EdgeId> basepoint_choices(const LinkDiagram& d) {
  std::vector<EdgeId> out = d.edges();
  for (int k = 0; k < d.num_free_loops(); ++k) out.push_back(d.free_loop_id(k));
  return out;
}

// One move applied to a braid, yielding a diagram of the same link that
// differs by a single Reidemeister move.
struct MovePair {
  std::string move;
  Braid before, after;
};

MovePair random_move(std::mt19937_64& rng, const Braid& base) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::bernoulli_distribution sign(0.5);
  MovePair m{"", base, base};
  auto pos = [&](const Braid& b) {
    return std::uniform_int_distribution<std::size_t>(0, b.word.size())(rng);
  };
  switch (pick(rng)) {
    case 0: {  // R1: Markov stabilization adds a strand and a curl
      m.move = "R1";
      m.after.strands = base.strands + 1;
      m.after.word.push_back(sign(rng) ? base.strands : -base.strands);
      break;
    }
    case 1: {  // R2: insert s s^-1
      m.move = "R2";
      const int k = std::uniform_int_distribution<int>(1, base.strands - 1)(rng);
      const int s = sign(rng) ? k : -k;
      const auto at = pos(base);
      m.after.word.insert(m.after.word.begin() + static_cast<long>(at), {s, -s});
      break;
    }
    default: {  // R3: s_k s_{k+1} s_k -> s_{k+1} s_k s_{k+1}
      m.move = "R3";
      if (base.strands < 3) {
        m.before.strands = m.after.strands = 3;
      }
      const int strands = m.before.strands;
      const int k = std::uniform_int_distribution<int>(1, strands - 2)(rng);
      const int e = sign(rng) ? 1 : -1;
      const auto at = pos(base);
      m.before.word.insert(m.before.word.begin() + static_cast<long>(at),
                           {e * k, e * (k + 1), e * k});
      m.after.word.insert(m.after.word.begin() + static_cast<long>(at),
                          {e * (k + 1), e * k, e * (k + 1)});
      break;
    }
  }
  return m;
}

void check_diagram(Runner& run, const Braid& b) {
  const LinkDiagram d = b.closure();
  const BettiTable dense = betti(build_complex(d, false));
  const BettiTable scan = scan_compute(d, false);

  run.check(boundary_squares_to_zero(build_complex(d, false)), "d^2 = 0", b);
  run.check(dense == scan, "scan = dense (unreduced)", b,
            format_poincare(dense) + " vs " + format_poincare(scan));
  run.check(graded_euler(dense) == kauffman_jones(d), "euler = jones", b);

  std::size_t reduced_rank = 0;
  bool first = true;
  for (EdgeId bp : basepoint_choices(d)) {
    const LinkDiagram based = set_basepoint(d, bp);
    const BettiTable r = scan_compute(based, true);
    if (first) {
      const BigradedComplex rc = build_complex(based, true);
      run.check(boundary_squares_to_zero(rc), "d^2 = 0 (reduced)", b);
      run.check(betti(rc) == r, "scan = dense (reduced)", b);
      reduced_rank = r.total();
      first = false;
    }
    run.check(r.total() == reduced_rank, "reduced rank independent of basepoint", b,
              "basepoint " + std::to_string(bp));
  }
  run.check(2 * reduced_rank == dense.total(), "rank doubling", b);

  const LinkDiagram m = mirror(d);
  const BettiTable mt = scan_compute(m, false);
  run.check(mt.total() == dense.total(), "total rank invariant under mirror", b);
  run.check(mt == mirrored(dense), "mirror negates bidegrees", b);
}

void check_move(Runner& run, const MovePair& m) {
  const BettiTable a = betti(build_complex(m.before.closure(), false));
  const BettiTable b = betti(build_complex(m.after.closure(), false));
  run.check(a == b, "invariance under " + m.move, m.before, "after " + m.after.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  int cases = 240;
  bool verbose = false;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg.rfind("--seed=", 0) == 0) seed = std::stoull(arg.substr(7));
    else if (arg.rfind("--cases=", 0) == 0) cases = std::stoi(arg.substr(8));
    else if (arg == "--verbose") verbose = true;
    else {
      std::cerr << "usage: property_tests [--seed=N] [--cases=N] [--verbose]\n";
      return 2;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  Runner run(verbose);
  int moves = 0;
  for (int c = 0; c < cases; ++c) {
    const Braid b = random_braid(rng, kMaxCrossings);
    run.note("case " + std::to_string(c) + ": " + b.str());
    check_diagram(run, b);

    // Room for the move: R1 adds 1 crossing, R2 2, R3 3 (inserted on both sides).
    Braid base = b;
    if (base.word.size() > kMaxCrossings - 3) base.word.resize(kMaxCrossings - 3);
    const MovePair m = random_move(rng, base);
    check_move(run, m);
    ++moves;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  for (const auto& [name, n] : run.checks()) std::cout << "  " << n << " checks: " << name << '\n';
  std::cout << cases << " random diagrams, " << moves << " move pairs, seed " << seed << ", "
            << run.failures() << " failures, " << secs << " s\n";
  return run.failures() == 0 ? 0 : 1;
}
