#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cablekh/cube.hpp"
#include "cablekh/diagram.hpp"

namespace cablekh {

/// Ranks of homology per (homological, quantum) bidegree. Zero entries are
/// never stored.
struct BettiTable {
  std::map<Bidegree, std::size_t> ranks;

  std::size_t total() const;
  std::size_t at(Bidegree b) const;
  void add(Bidegree b, std::size_t rank);

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// b(i,j) = dim C(i,j) - rank d(i,j) - rank d(i-1,j).
BettiTable betti(const BigradedComplex& c);

/// Tensor with the homology of the unknot (q + q^-1), `copies` times.
BettiTable tensor_unknot(const BettiTable& t, int copies = 1);

std::string format_poincare(const BettiTable& t);

struct ScanOptions {
  std::size_t max_objects = std::size_t{1} << 22;
  int max_boundary_points = 100;
};

struct ScanStats {
  int peak_boundary_points = 0;
  std::size_t peak_objects = 0;
  std::vector<int> order;  // crossing indices in processing order
};

/// Crossing order for the scanner: greedy on shared boundary, best start.
/// Edges listed in `cut` never close up.
std::vector<int> scan_order(const LinkDiagram& d, std::optional<EdgeId> cut = std::nullopt);

/// Khovanov homology by adding crossings one at a time to a tangle complex,
/// delooping closed circles and cancelling isomorphisms after every step.
BettiTable scan_compute(const LinkDiagram& d, bool reduced, const ScanOptions& options = {},
                        ScanStats* stats = nullptr);

enum class Algorithm { kDense, kScan, kAuto };

struct ComputeOptions {
  Algorithm algorithm = Algorithm::kAuto;
  CubeOptions cube;
  ScanOptions scan;
  /// kAuto uses the dense cube up to this many crossings.
  int auto_dense_crossings = 10;
};

BettiTable compute_betti(const LinkDiagram& d, bool reduced, const ComputeOptions& options = {});

}  // namespace cablekh
