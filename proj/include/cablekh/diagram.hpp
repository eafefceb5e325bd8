#pragma once

// Oriented link diagrams in planar-diagram (PD) form.
//
// A crossing lists its four edges counterclockwise starting from the incoming
// under-strand, so slots 0 and 2 are the under-strand (in, out) and slots 1
// and 3 are the over-strand. Crossingless unknotted components are carried as
// a free-loop count. Each free loop k is addressed by the virtual edge id
// max_edge() + 1 + k so that basepoints can sit on it.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cablekh {

using EdgeId = int;

struct Crossing {
  std::array<EdgeId, 4> edges{};
  int sign = 0;  // +1 or -1, recomputed from orientations on construction

  EdgeId under_in() const { return edges[0]; }
  EdgeId under_out() const { return edges[2]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Position of an edge end: crossing index and slot (0..3).
struct SlotRef {
  int crossing = -1;
  int slot = -1;

  int global() const { return 4 * crossing + slot; }
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

class LinkDiagram {
 public:
  /// Empty diagram (no components). Useful only as a neutral element.
  LinkDiagram() = default;

  /// Validates the edge multiset, traces components, orients them and
  /// computes crossing signs. Throws InputError on any inconsistency.
  LinkDiagram(std::vector<std::array<EdgeId, 4>> crossings, int free_loops,
              std::optional<EdgeId> basepoint = std::nullopt);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_free_loops() const { return free_loops_; }
  int num_components() const {
    return static_cast<int>(components_.size()) + free_loops_;
  }
  bool empty() const { return crossings_.empty() && free_loops_ == 0; }

  /// Components that carry crossings, each listed in travel order.
  const std::vector<std::vector<EdgeId>>& edge_components() const {
    return components_;
  }

  /// Largest real edge id (0 when there are no crossings).
  EdgeId max_edge() const { return max_edge_; }
  /// All real edge ids, ascending.
  std::vector<EdgeId> edges() const;
  EdgeId free_loop_id(int k) const { return max_edge_ + 1 + k; }
  bool is_free_loop(EdgeId e) const {
    return e > max_edge_ && e <= max_edge_ + free_loops_;
  }
  bool has_edge(EdgeId e) const;

  /// Component index of an edge or free-loop id. Free loops come after the
  /// edge components.
  int component_of(EdgeId e) const;

  /// Where an edge starts (leaves a crossing) and ends (enters one).
  SlotRef tail(EdgeId e) const { return tail_.at(e); }
  SlotRef head(EdgeId e) const { return head_.at(e); }
  /// The edge end sharing an edge with the given slot.
  SlotRef partner(SlotRef s) const;

  std::optional<EdgeId> basepoint() const { return basepoint_; }

  int positive_crossings() const;
  int negative_crossings() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_ &&
           a.basepoint_ == b.basepoint_;
  }

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::optional<EdgeId> basepoint_;
  EdgeId max_edge_ = 0;
  std::vector<std::vector<EdgeId>> components_;
  std::vector<int> component_of_edge_;  // indexed by edge id, -1 if unused
  std::vector<SlotRef> tail_;           // indexed by edge id
  std::vector<SlotRef> head_;
};

/// Parses whitespace-separated `X[a,b,c,d]`, `U<k>` and `*<edge>` tokens.
LinkDiagram parse_pd(std::string_view text);
/// Inverse of parse_pd.
std::string to_pd(const LinkDiagram& d);

int writhe(const LinkDiagram& d);
LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
LinkDiagram set_basepoint(const LinkDiagram& d, EdgeId edge);
LinkDiagram clear_basepoint(const LinkDiagram& d);

/// Half the signed count of crossings between two distinct components.
int linking_number(const LinkDiagram& d, int component_a, int component_b);

/// Relabels edges 1..2c consecutively along each component in travel order,
/// components ordered by their smallest current label. `relabel` receives the
/// old -> new map for real edges and free-loop ids.
LinkDiagram renumbered(const LinkDiagram& d,
                       std::map<EdgeId, EdgeId>* relabel = nullptr);

/// Closure of a braid on `strands` strands. Generator +k (resp. -k) is the
/// positive (negative) crossing of positions k-1 and k, counted from the left.
LinkDiagram braid_closure(int strands, std::span<const int> word);

}  // namespace cablekh
