#pragma once

// The cube of resolutions and the Khovanov complex over GF(2).
//
// Crossing X[a,b,c,d] has 0-smoothing {a-b, c-d} and 1-smoothing {a-d, b-c}.
// Labels are bitmasks over circles: a set bit means the circle carries x,
// a clear bit means it carries 1. Gradings:
//   i = |state| - n_-
//   j = (#1 - #x) + |state| + n_+ - 2 n_-      (+1 in the reduced complex)

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "cablekh/diagram.hpp"
#include "cablekh/gf2.hpp"

namespace cablekh {

struct Bidegree {
  int i = 0;  // homological
  int j = 0;  // quantum
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct ResolutionState {
  std::uint64_t choices = 0;  // bit k set: 1-smoothing at crossing k
  int num_circles = 0;
  std::vector<int> circle_of_edge;  // by edge id, free-loop ids included; -1 if unused
  std::vector<EdgeId> circle_rep;   // smallest edge id on each circle

  int circle_of(EdgeId e) const { return circle_of_edge.at(e); }
  int ones() const;
};

ResolutionState resolve(const LinkDiagram& d, std::uint64_t choices);
/// Checked variant; one entry per crossing.
ResolutionState resolve(const LinkDiagram& d, const std::vector<bool>& choices);

/// The map induced on labelings by a single 0 -> 1 change.
class EdgeMap {
 public:
  enum class Kind { kMerge, kSplit };

  Kind kind() const { return kind_; }
  /// Images of a labeling of the source state (zero, one or two terms).
  std::vector<std::uint64_t> apply(std::uint64_t labels) const;

 private:
  friend EdgeMap edge_map(const LinkDiagram&, const ResolutionState&, const ResolutionState&);

  Kind kind_ = Kind::kMerge;
  std::vector<int> carry_;  // source circle -> target circle, -1 for the split circle
  int src_a_ = -1, src_b_ = -1;  // merged circles (merge) or split circle in src_a_
  int dst_a_ = -1, dst_b_ = -1;  // merged circle in dst_a_ (merge) or both halves
};

/// Requires `to` to differ from `from` by exactly one 0 -> 1 bit.
EdgeMap edge_map(const LinkDiagram& d, const ResolutionState& from,
                 const ResolutionState& to);

struct Generator {
  std::uint64_t state = 0;
  std::uint64_t labels = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct BigradedComplex {
  bool reduced = false;
  std::map<Bidegree, std::vector<Generator>> groups;
  /// Keyed by source bidegree (i, j); maps into (i + 1, j). Rows index the
  /// target basis, columns the source basis.
  std::map<Bidegree, SparseMatrix> boundaries;

  std::size_t dimension() const;
  std::size_t dimension(Bidegree b) const;
};

struct CubeOptions {
  int max_crossings = 20;
  std::size_t max_generators = std::size_t{1} << 25;
};

/// Full cube construction. Reduced complexes keep the generators whose
/// basepoint circle is labeled x.
BigradedComplex build_complex(const LinkDiagram& d, bool reduced,
                              const CubeOptions& options = {});

/// Number of generators build_complex would create, without building.
std::size_t count_generators(const LinkDiagram& d, bool reduced);

/// Checks that consecutive boundaries compose to zero.
bool boundary_squares_to_zero(const BigradedComplex& c);

}  // namespace cablekh
