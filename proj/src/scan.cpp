// Tangle-by-tangle Khovanov complex over GF(2).
//
// Objects are crossingless matchings of the current boundary points with a
// (homological, quantum) shift. A morphism between matchings a and b is a sum
// of dotted-disk cobordisms: one disk on every cycle of a u b, each carrying
// at most one dot, encoded as a bitmask over those cycles (cycles ordered by
// their smallest boundary point). Any glued surface reduces to that basis:
//   genus > 0            -> 0  (a handle is twice a dot)
//   two or more dots     -> 0
//   closed sphere        -> 1 with exactly one dot, else 0
//   one dot, b boundaries -> every boundary disk dotted
//   no dot, b boundaries  -> sum over the b ways to leave one disk undotted
// The only isomorphisms between shifted matchings are identities, so
// Gaussian elimination cancels exactly the entries between equal matchings
// with equal quantum shift.
//
// Reduced homology cuts the link at the basepoint and keeps the two ends as
// boundary points. A dot on the sheet through the head end is set to zero.
// Such terms form an ideal closed under gluing and composition (the sheet
// and its dot survive every evaluation rule), so they are dropped as soon as
// they appear, which keeps the reduced complexes sparse.

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "cablekh/errors.hpp"
#include "cablekh/homology.hpp"

namespace cablekh {

namespace {

using Matching = std::string;  // m[p] = partner of boundary point p
using Morphism = std::vector<std::uint64_t>;  // sorted, each mask appears once

void toggle_term(Morphism& m, std::uint64_t mask) {
  auto it = std::lower_bound(m.begin(), m.end(), mask);
  if (it != m.end() && *it == mask) {
    m.erase(it);
  } else {
    m.insert(it, mask);
  }
}

void add_into(Morphism& dst, const Morphism& src) {
  for (std::uint64_t t : src) toggle_term(dst, t);
}

/// Cycle index of every point of a u b, cycles numbered by smallest point.
int pair_cycles(const Matching& a, const Matching& b, std::vector<int>& cycle) {
  const int n = static_cast<int>(a.size());
  cycle.assign(n, -1);
  int count = 0;
  for (int p = 0; p < n; ++p) {
    if (cycle[p] >= 0) continue;
    int q = p;
    do {
      cycle[q] = count;
      const int r = static_cast<unsigned char>(a[q]);
      cycle[r] = count;
      q = static_cast<unsigned char>(b[r]);
    } while (q != p);
    ++count;
  }
  return count;
}

class SurfaceEvaluator {
 public:
  void reset(int disks) {
    parent_.resize(disks);
    for (int i = 0; i < disks; ++i) parent_[i] = i;
    dots_.assign(disks, 0);
    joins_.clear();
    cycle_disk_.clear();
  }
  void dot(int disk) { dots_[disk] += 1; }
  void join(int a, int b) {
    joins_.push_back(a);
    int ra = find(a), rb = find(b);
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }
  /// Registers the next result cycle as lying on `disk`.
  void cycle_on(int disk) { cycle_disk_.push_back(disk); }

  /// Appends the basis expansion (masks over result cycles) to `terms`.
  void evaluate(std::vector<std::uint64_t>& terms) {
    const int disks = static_cast<int>(parent_.size());
    comp_.assign(disks, Component{});
    for (int d = 0; d < disks; ++d) {
      auto& c = comp_[find(d)];
      c.disks += 1;
      c.dots += dots_[d];
    }
    for (int a : joins_) comp_[find(a)].joins += 1;
    for (std::size_t k = 0; k < cycle_disk_.size(); ++k) {
      comp_[find(cycle_disk_[k])].cycles |= std::uint64_t{1} << k;
    }

    scratch_.assign(1, 0);
    for (int d = 0; d < disks; ++d) {
      if (find(d) != d) continue;
      const Component& c = comp_[d];
      const int chi = c.disks - c.joins;
      const int boundary = std::popcount(c.cycles);
      const int twice_genus = 2 - chi - boundary;
      if (twice_genus < 0 || (twice_genus & 1)) {
        throw InvariantError("glued surface has inconsistent Euler characteristic");
      }
      if (twice_genus > 0 || c.dots >= 2) return;
      if (boundary == 0) {
        if (c.dots == 1) continue;
        return;
      }
      if (c.dots == 1) {
        for (auto& t : scratch_) t |= c.cycles;
        continue;
      }
      next_.clear();
      for (std::uint64_t t : scratch_) {
        for (std::uint64_t rest = c.cycles; rest; rest &= rest - 1) {
          const std::uint64_t bit = rest & (~rest + 1);
          next_.push_back(t | (c.cycles & ~bit));
        }
      }
      scratch_.swap(next_);
    }
    terms.insert(terms.end(), scratch_.begin(), scratch_.end());
  }

 private:
  struct Component {
    int disks = 0;
    int joins = 0;
    int dots = 0;
    std::uint64_t cycles = 0;
  };

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::vector<int> parent_;
  std::vector<int> dots_;
  std::vector<int> joins_;
  std::vector<int> cycle_disk_;
  std::vector<Component> comp_;
  std::vector<std::uint64_t> scratch_, next_;
};

class MatchingPool {
 public:
  int intern(const Matching& m) {
    auto [it, inserted] = ids_.emplace(m, static_cast<int>(list_.size()));
    if (inserted) list_.push_back(m);
    return it->second;
  }
  const Matching& operator[](int id) const { return list_[id]; }

 private:
  std::unordered_map<Matching, int> ids_;
  std::vector<Matching> list_;
};

struct Object {
  int matching = 0;
  int h = 0;
  int q = 0;
  bool alive = true;
};

class TangleComplex {
 public:
  std::vector<Object> objects;
  std::vector<std::map<std::uint32_t, Morphism>> out;
  std::vector<std::set<std::uint32_t>> in;

  std::uint32_t add_object(Object o) {
    objects.push_back(o);
    out.emplace_back();
    in.emplace_back();
    return static_cast<std::uint32_t>(objects.size() - 1);
  }

  void add_entry(std::uint32_t from, std::uint32_t to, const Morphism& m) {
    if (m.empty()) return;
    Morphism& slot = out[from][to];
    add_into(slot, m);
    if (slot.empty()) {
      out[from].erase(to);
      in[to].erase(from);
    } else {
      in[to].insert(from);
    }
  }

  void kill(std::uint32_t x) {
    for (std::uint32_t s : in[x]) out[s].erase(x);
    for (const auto& [t, m] : out[x]) in[t].erase(x);
    in[x].clear();
    out[x].clear();
    objects[x].alive = false;
  }

  std::size_t alive_count() const {
    return static_cast<std::size_t>(
        std::count_if(objects.begin(), objects.end(), [](const Object& o) { return o.alive; }));
  }
};

/// Result of gluing one matching of the old boundary to one smoothing of the
/// new crossing.
struct Glued {
  int matching = 0;                 // on the new boundary, circles removed
  std::vector<int> circle_nodes;    // one node per closed circle
};

class Scanner {
 public:
  Scanner(const LinkDiagram& d, std::optional<EdgeId> cut, const ScanOptions& options,
          ScanStats* stats)
      : d_(d), cut_(cut), options_(options), stats_(stats) {
    if (cut_) marked_slot_ = d_.head(*cut_).global();
    cx_.add_object(Object{pool_.intern(Matching{}), 0, 0, true});
  }

  void add_crossing(int x);
  BettiTable finish(bool reduced);

 private:
  bool is_cut(int global_slot) const {
    return cut_ && d_.crossings()[global_slot / 4].edges[global_slot % 4] == *cut_;
  }

  Glued glue(int old_matching, int smoothing);
  void glue_morphism(int a, int b, std::uint64_t f_mask, int s, int t, std::uint64_t g_mask,
                     const Glued& A, const Glued& B, std::vector<std::uint64_t>& terms);
  Morphism compose(int a, int b, int c, const Morphism& f, const Morphism& g);
  void cancel_all();
  void cancel(std::uint32_t b, std::uint32_t t);
  void compact();
  /// Mask of the cycle through the marked end in `cycles`, 0 when unmarked.
  std::uint64_t marked_cycle_bit(int marked_index, const std::vector<int>& cycles) const {
    return marked_index < 0 ? 0 : std::uint64_t{1} << cycles[marked_index];
  }
  bool is_iso(std::uint32_t from, std::uint32_t to) const {
    const Object& a = cx_.objects[from];
    const Object& b = cx_.objects[to];
    return a.matching == b.matching && a.q == b.q;
  }

  const LinkDiagram& d_;
  std::optional<EdgeId> cut_;
  ScanOptions options_;
  ScanStats* stats_;

  MatchingPool pool_;
  TangleComplex cx_;
  std::vector<int> ports_;  // global slot ids of the open boundary
  int marked_slot_ = -1;    // head end of the cut edge (reduced only)
  int marked_index_ = -1;   // its position in ports_, -1 while closed

  // Per-step gluing data.
  int old_points_ = 0;
  std::vector<int> glue_partner_;  // node -> node, -1 if open; nodes: old points then 4 slots
  std::vector<int> new_index_;     // node -> new boundary index, -1 if glued
  int new_points_ = 0;
  std::map<std::pair<int, int>, Glued> glue_cache_;

  SurfaceEvaluator surface_;
  std::vector<int> cyc_a_, cyc_b_, cyc_r_;
};

// Smoothings on crossing slots: 0 joins {0,1},{2,3}; 1 joins {0,3},{1,2}.
constexpr int kSmoothing[2][4] = {{1, 0, 3, 2}, {3, 2, 1, 0}};

Matching smoothing_matching(int s) {
  Matching m(4, 0);
  for (int k = 0; k < 4; ++k) m[k] = static_cast<char>(kSmoothing[s][k]);
  return m;
}

Glued Scanner::glue(int old_matching, int s) {
  auto key = std::make_pair(old_matching, s);
  auto hit = glue_cache_.find(key);
  if (hit != glue_cache_.end()) return hit->second;

  const Matching& a = pool_[old_matching];
  const int nodes = old_points_ + 4;
  auto arc = [&](int u) {
    return u < old_points_ ? static_cast<int>(static_cast<unsigned char>(a[u]))
                           : old_points_ + kSmoothing[s][u - old_points_];
  };
  std::vector<char> seen(nodes, 0);
  Matching m(new_points_, 0);
  for (int u = 0; u < nodes; ++u) {
    if (new_index_[u] < 0 || seen[u]) continue;
    int v = u;
    seen[v] = 1;
    while (true) {
      v = arc(v);
      seen[v] = 1;
      if (new_index_[v] >= 0) break;
      v = glue_partner_[v];
      seen[v] = 1;
    }
    m[new_index_[u]] = static_cast<char>(new_index_[v]);
    m[new_index_[v]] = static_cast<char>(new_index_[u]);
  }
  Glued g;
  for (int u = 0; u < nodes; ++u) {
    if (seen[u]) continue;
    g.circle_nodes.push_back(u);
    int v = u;
    do {
      seen[v] = 1;
      v = arc(v);
      seen[v] = 1;
      v = glue_partner_[v];
    } while (v != u);
  }
  g.matching = pool_.intern(m);
  glue_cache_.emplace(key, g);
  return g;
}

void Scanner::glue_morphism(int a, int b, std::uint64_t f_mask, int s, int t,
                            std::uint64_t g_mask, const Glued& A, const Glued& B,
                            std::vector<std::uint64_t>& terms) {
  const int nf = pair_cycles(pool_[a], pool_[b], cyc_a_);
  static const Matching kSmooth[2] = {smoothing_matching(0), smoothing_matching(1)};
  const int ng = pair_cycles(kSmooth[s], kSmooth[t], cyc_b_);

  auto disk = [&](int node) {
    return node < old_points_ ? cyc_a_[node] : nf + cyc_b_[node - old_points_];
  };

  surface_.reset(nf + ng);
  for (int k = 0; k < nf; ++k) {
    if ((f_mask >> k) & 1u) surface_.dot(k);
  }
  for (int k = 0; k < ng; ++k) {
    if ((g_mask >> k) & 1u) surface_.dot(nf + k);
  }
  for (int u = 0; u < old_points_ + 4; ++u) {
    const int v = glue_partner_[u];
    if (v > u) surface_.join(disk(u), disk(v));
  }

  // Result cycles: through the new boundary first, then closed circles.
  const int r0 = pair_cycles(pool_[A.matching], pool_[B.matching], cyc_r_);
  std::vector<int> rep(r0, -1);
  for (int u = 0; u < old_points_ + 4; ++u) {
    const int p = new_index_[u];
    if (p >= 0 && rep[cyc_r_[p]] < 0) rep[cyc_r_[p]] = u;
  }
  for (int c = 0; c < r0; ++c) surface_.cycle_on(disk(rep[c]));
  for (int node : A.circle_nodes) surface_.cycle_on(disk(node));
  for (int node : B.circle_nodes) surface_.cycle_on(disk(node));
  surface_.evaluate(terms);
}

void Scanner::add_crossing(int x) {
  // Classify the crossing's four slots.
  std::unordered_map<int, int> port_index;
  for (int i = 0; i < static_cast<int>(ports_.size()); ++i) port_index[ports_[i]] = i;
  old_points_ = static_cast<int>(ports_.size());
  const int nodes = old_points_ + 4;
  glue_partner_.assign(nodes, -1);
  for (int k = 0; k < 4; ++k) {
    const int slot = 4 * x + k;
    if (is_cut(slot)) continue;
    const int other = d_.partner(SlotRef{x, k}).global();
    if (other / 4 == x) {
      glue_partner_[old_points_ + k] = old_points_ + other % 4;
    } else if (auto it = port_index.find(other); it != port_index.end()) {
      glue_partner_[old_points_ + k] = it->second;
      glue_partner_[it->second] = old_points_ + k;
    }
  }
  new_index_.assign(nodes, -1);
  std::vector<int> next_ports;
  for (int u = 0; u < nodes; ++u) {
    if (glue_partner_[u] >= 0) continue;
    new_index_[u] = static_cast<int>(next_ports.size());
    next_ports.push_back(u < old_points_ ? ports_[u] : 4 * x + (u - old_points_));
  }
  new_points_ = static_cast<int>(next_ports.size());
  const auto marked_it = std::find(next_ports.begin(), next_ports.end(), marked_slot_);
  const int marked_next =
      marked_it == next_ports.end() ? -1 : static_cast<int>(marked_it - next_ports.begin());
  if (new_points_ > options_.max_boundary_points) {
    throw ResourceError("tangle boundary exceeds " +
                        std::to_string(options_.max_boundary_points) + " points");
  }
  glue_cache_.clear();

  const int sign = d_.crossings()[x].sign;
  const int dh[2] = {sign > 0 ? 0 : -1, sign > 0 ? 1 : 0};
  const int dq[2] = {sign > 0 ? 1 : -2, sign > 0 ? 2 : -1};

  // New objects: (old object, smoothing, circle labels). Label bit set = x.
  TangleComplex next;
  const std::size_t old_count = cx_.objects.size();
  std::vector<std::array<std::uint32_t, 2>> base(old_count, {UINT32_MAX, UINT32_MAX});
  std::vector<std::array<Glued, 2>> glued(old_count);
  for (std::size_t o = 0; o < old_count; ++o) {
    const Object& obj = cx_.objects[o];
    if (!obj.alive) continue;
    for (int s = 0; s < 2; ++s) {
      glued[o][s] = glue(obj.matching, s);
      const int k = static_cast<int>(glued[o][s].circle_nodes.size());
      base[o][s] = static_cast<std::uint32_t>(next.objects.size());
      for (std::uint32_t alpha = 0; alpha < (1u << k); ++alpha) {
        const int xs = std::popcount(alpha);
        next.add_object(Object{glued[o][s].matching, obj.h + dh[s],
                               obj.q + dq[s] + (k - xs) - xs, true});
      }
    }
  }
  if (next.objects.size() > options_.max_objects) {
    throw ResourceError("scan exceeded the object budget of " +
                        std::to_string(options_.max_objects));
  }

  // Routes each basis term to its delooped (source label, target label) entry.
  std::vector<std::uint64_t> terms;
  auto route = [&](std::uint32_t src_base, std::uint32_t dst_base, const Glued& A,
                   const Glued& B) {
    const int r0 = pair_cycles(pool_[A.matching], pool_[B.matching], cyc_r_);
    const int ka = static_cast<int>(A.circle_nodes.size());
    const int kb = static_cast<int>(B.circle_nodes.size());
    const std::uint64_t killed = marked_cycle_bit(marked_next, cyc_r_);
    std::map<std::pair<std::uint32_t, std::uint32_t>, Morphism> buckets;
    for (std::uint64_t t : terms) {
      const std::uint64_t low = r0 >= 64 ? t : t & ((std::uint64_t{1} << r0) - 1);
      if (low & killed) continue;
      const std::uint32_t a_dots = static_cast<std::uint32_t>((t >> r0) & ((1u << ka) - 1));
      const std::uint32_t b_dots = static_cast<std::uint32_t>((t >> (r0 + ka)) & ((1u << kb) - 1));
      // Source circle labeled 1 is capped by an undotted cup: needs the dot.
      const std::uint32_t alpha = ~a_dots & ((1u << ka) - 1);
      // Target circle labeled x is closed by an undotted cap: needs the dot.
      const std::uint32_t beta = b_dots;
      toggle_term(buckets[{src_base + alpha, dst_base + beta}], low);
    }
    for (const auto& [key, m] : buckets) next.add_entry(key.first, key.second, m);
    terms.clear();
  };

  for (std::size_t o = 0; o < old_count; ++o) {
    if (!cx_.objects[o].alive) continue;
    const int a = cx_.objects[o].matching;
    // f (x) id for every old differential entry
    for (const auto& [target, f] : cx_.out[o]) {
      const int b = cx_.objects[target].matching;
      for (int s = 0; s < 2; ++s) {
        for (std::uint64_t mask : f) {
          glue_morphism(a, b, mask, s, s, 0, glued[o][s], glued[target][s], terms);
        }
        route(base[o][s], base[target][s], glued[o][s], glued[target][s]);
      }
    }
    // id (x) saddle
    glue_morphism(a, a, 0, 0, 1, 0, glued[o][0], glued[o][1], terms);
    route(base[o][0], base[o][1], glued[o][0], glued[o][1]);
  }

  cx_ = std::move(next);
  ports_ = std::move(next_ports);
  marked_index_ = marked_next;
  if (stats_) {
    stats_->peak_boundary_points = std::max(stats_->peak_boundary_points, new_points_);
    stats_->peak_objects = std::max(stats_->peak_objects, cx_.objects.size());
  }
  cancel_all();
  compact();
}

Morphism Scanner::compose(int a, int b, int c, const Morphism& f, const Morphism& g) {
  const Matching& mb = pool_[b];
  const int nf = pair_cycles(pool_[a], mb, cyc_a_);
  const int ng = pair_cycles(mb, pool_[c], cyc_b_);
  const int r = pair_cycles(pool_[a], pool_[c], cyc_r_);
  std::vector<int> rep(r, -1);
  for (int p = 0; p < static_cast<int>(cyc_r_.size()); ++p) {
    if (rep[cyc_r_[p]] < 0) rep[cyc_r_[p]] = p;
  }
  std::vector<std::uint64_t> terms;
  for (std::uint64_t fm : f) {
    for (std::uint64_t gm : g) {
      surface_.reset(nf + ng);
      for (int k = 0; k < nf; ++k) {
        if ((fm >> k) & 1u) surface_.dot(k);
      }
      for (int k = 0; k < ng; ++k) {
        if ((gm >> k) & 1u) surface_.dot(nf + k);
      }
      for (int p = 0; p < static_cast<int>(mb.size()); ++p) {
        const int q = static_cast<unsigned char>(mb[p]);
        if (p < q) surface_.join(cyc_a_[p], nf + cyc_b_[p]);
      }
      for (int k = 0; k < r; ++k) surface_.cycle_on(cyc_a_[rep[k]]);
      surface_.evaluate(terms);
    }
  }
  const std::uint64_t killed = marked_cycle_bit(marked_index_, cyc_r_);
  Morphism out;
  for (std::uint64_t t : terms) {
    if (!(t & killed)) toggle_term(out, t);
  }
  return out;
}

void Scanner::cancel(std::uint32_t b, std::uint32_t t) {
  const Morphism& phi = cx_.out[b].at(t);
  if (phi.size() != 1 || phi[0] != 0) {
    throw InvariantError("degree-zero endomorphism is not the identity");
  }
  std::vector<std::uint32_t> sources;
  for (std::uint32_t c : cx_.in[t]) {
    if (c != b) sources.push_back(c);
  }
  std::vector<std::pair<std::uint32_t, Morphism>> targets;
  for (const auto& [dst, g] : cx_.out[b]) {
    if (dst != t) targets.emplace_back(dst, g);
  }
  const int mb = cx_.objects[b].matching;
  for (std::uint32_t c : sources) {
    const Morphism f = cx_.out[c].at(t);
    const int mc = cx_.objects[c].matching;
    for (const auto& [dst, g] : targets) {
      Morphism m = compose(mc, mb, cx_.objects[dst].matching, f, g);
      cx_.add_entry(c, dst, m);
    }
  }
  cx_.kill(b);
  cx_.kill(t);
}

void Scanner::cancel_all() {
  // Cheapest first: cancelling b -> t adds up to (|in t| - 1)(|out b| - 1)
  // entries, so the fill-in bound starts at zero and grows only once no
  // cheaper isomorphism is left.
  std::size_t limit = 0;
  while (true) {
    bool any_iso = false, cancelled = false;
    for (std::uint32_t b = 0; b < cx_.objects.size(); ++b) {
      if (!cx_.objects[b].alive) continue;
      std::uint32_t hit = UINT32_MAX;
      std::size_t best = SIZE_MAX;
      const std::size_t outs = cx_.out[b].size() - 1;
      for (const auto& [t, m] : cx_.out[b]) {
        if (!is_iso(b, t)) continue;
        any_iso = true;
        const std::size_t cost = outs * (cx_.in[t].size() - 1);
        if (cost < best) {
          best = cost;
          hit = t;
        }
      }
      if (hit != UINT32_MAX && best <= limit) {
        cancel(b, hit);
        cancelled = true;
      }
    }
    if (!any_iso) return;
    if (!cancelled) limit = std::max<std::size_t>(1, 2 * limit);
  }
}

void Scanner::compact() {
  std::vector<std::uint32_t> remap(cx_.objects.size(), UINT32_MAX);
  TangleComplex packed;
  for (std::uint32_t o = 0; o < cx_.objects.size(); ++o) {
    if (cx_.objects[o].alive) remap[o] = packed.add_object(cx_.objects[o]);
  }
  for (std::uint32_t o = 0; o < cx_.objects.size(); ++o) {
    if (remap[o] == UINT32_MAX) continue;
    for (auto& [t, m] : cx_.out[o]) {
      packed.out[remap[o]].emplace(remap[t], std::move(m));
      packed.in[remap[t]].insert(remap[o]);
    }
  }
  cx_ = std::move(packed);
}

BettiTable Scanner::finish(bool reduced) {
  const std::size_t expected_points = reduced ? 2 : 0;
  if (ports_.size() != expected_points) {
    throw InvariantError("scan finished with " + std::to_string(ports_.size()) +
                         " open boundary points");
  }
  BettiTable t;
  for (std::uint32_t o = 0; o < cx_.objects.size(); ++o) {
    const Object& obj = cx_.objects[o];
    if (!obj.alive) continue;
    // Reduced: every end-to-end map is a multiple of the identity or of the
    // basepoint dot; the latter are already gone and the former cancelled.
    if (!cx_.out[o].empty()) throw InvariantError("scan left an uncancelled isomorphism");
    t.add({obj.h, obj.q}, 1);
  }
  return t;
}

}  // namespace

std::vector<int> scan_order(const LinkDiagram& d, std::optional<EdgeId> cut) {
  const int n = d.num_crossings();
  auto neighbour = [&](int x, int k) -> int {
    if (cut && d.crossings()[x].edges[k] == *cut) return -1;
    return d.partner(SlotRef{x, k}).crossing;
  };

  std::vector<int> best;
  int best_peak = INT32_MAX;
  long best_sum = LONG_MAX;
  for (int start = 0; start < n; ++start) {
    std::vector<char> used(n, 0);
    std::vector<int> order;
    int width = 0, peak = 0;
    long sum = 0;
    auto width_after = [&](int x, int& shared) {
      shared = 0;
      int self = 0;
      for (int k = 0; k < 4; ++k) {
        const int y = neighbour(x, k);
        if (y == x) {
          ++self;
        } else if (y >= 0 && used[y]) {
          ++shared;
        }
      }
      return width - shared + (4 - shared - self);
    };
    int next = start;
    while (next >= 0) {
      int shared = 0;
      width = width_after(next, shared);
      used[next] = 1;
      order.push_back(next);
      peak = std::max(peak, width);
      sum += width;
      next = -1;
      int best_shared = -1, best_width = INT32_MAX;
      for (int y = 0; y < n; ++y) {
        if (used[y]) continue;
        int s = 0;
        const int w = width_after(y, s);
        if (s > best_shared || (s == best_shared && w < best_width)) {
          best_shared = s;
          best_width = w;
          next = y;
        }
      }
    }
    if (peak < best_peak || (peak == best_peak && sum < best_sum)) {
      best_peak = peak;
      best_sum = sum;
      best = std::move(order);
    }
  }
  return best;
}

BettiTable scan_compute(const LinkDiagram& d, bool reduced, const ScanOptions& options,
                        ScanStats* stats) {
  if (reduced && !d.basepoint()) {
    throw InputError("reduced homology requested without a basepoint");
  }
  std::optional<EdgeId> cut;
  int extra_loops = d.num_free_loops();
  if (reduced) {
    if (d.is_free_loop(*d.basepoint())) {
      extra_loops -= 1;
    } else {
      cut = *d.basepoint();
    }
  }

  BettiTable core;
  if (d.num_crossings() == 0) {
    core.add({0, 0}, 1);
  } else {
    Scanner scanner(d, cut, options, stats);
    const std::vector<int> order = scan_order(d, cut);
    if (stats) stats->order = order;
    for (int x : order) scanner.add_crossing(x);
    core = scanner.finish(cut.has_value());
  }
  return tensor_unknot(core, extra_loops);
}

}  // namespace cablekh
