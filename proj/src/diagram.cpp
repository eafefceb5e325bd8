#include "cablekh/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "cablekh/errors.hpp"

namespace cablekh {

namespace {

constexpr EdgeId kMaxEdgeId = 1 << 24;

struct EdgeEnds {
  SlotRef ends[2];
  int seen = 0;
};

}  // namespace

LinkDiagram::LinkDiagram(std::vector<std::array<EdgeId, 4>> crossings,
                         int free_loops, std::optional<EdgeId> basepoint)
    : free_loops_(free_loops), basepoint_(basepoint) {
  if (free_loops < 0) throw InputError("negative free-loop count");

  crossings_.reserve(crossings.size());
  for (const auto& e : crossings) {
    for (EdgeId id : e) {
      if (id <= 0) throw InputError("edge ids must be positive");
      if (id > kMaxEdgeId) throw InputError("edge id too large");
      max_edge_ = std::max(max_edge_, id);
    }
    crossings_.push_back(Crossing{e, 0});
  }

  std::vector<EdgeEnds> ends(static_cast<size_t>(max_edge_) + 1);
  for (int c = 0; c < num_crossings(); ++c) {
    for (int k = 0; k < 4; ++k) {
      auto& slot = ends[crossings_[c].edges[k]];
      if (slot.seen >= 2) {
        throw InputError("edge " + std::to_string(crossings_[c].edges[k]) +
                         " appears more than twice");
      }
      slot.ends[slot.seen++] = SlotRef{c, k};
    }
  }
  int distinct = 0;
  for (EdgeId e = 1; e <= max_edge_; ++e) {
    if (ends[e].seen == 1) {
      throw InputError("edge " + std::to_string(e) + " appears only once");
    }
    if (ends[e].seen == 2) ++distinct;
  }
  if (distinct != 2 * num_crossings()) {
    throw InputError("edge count differs from twice the crossing count");
  }

  component_of_edge_.assign(static_cast<size_t>(max_edge_) + 1, -1);
  tail_.assign(static_cast<size_t>(max_edge_) + 1, SlotRef{});
  head_.assign(static_cast<size_t>(max_edge_) + 1, SlotRef{});

  auto other_end = [&](EdgeId e, SlotRef s) {
    return ends[e].ends[0] == s ? ends[e].ends[1] : ends[e].ends[0];
  };

  std::vector<EdgeId> order = edges();
  for (EdgeId start : order) {
    if (component_of_edge_[start] != -1) continue;

    // Walk the strand starting along `start` from its first end.
    std::vector<EdgeId> walk;
    std::vector<SlotRef> from;
    std::vector<int> entered;  // slot entered at the far end of each edge
    SlotRef f = ends[start].ends[0];
    EdgeId e = start;
    while (true) {
      SlotRef t = other_end(e, f);
      walk.push_back(e);
      from.push_back(f);
      entered.push_back(t.slot);
      component_of_edge_[e] = static_cast<int>(components_.size());
      SlotRef next{t.crossing, (t.slot + 2) % 4};
      e = crossings_[next.crossing].edges[next.slot];
      f = next;
      if (e == start && f == ends[start].ends[0]) break;
      if (walk.size() > static_cast<size_t>(2 * num_crossings())) {
        throw InputError("component trace did not close");
      }
    }

    // Direction: under-strands fix it; otherwise follow increasing labels.
    int forward_votes = 0, backward_votes = 0;
    for (int s : entered) {
      if (s == 0) ++forward_votes;
      if (s == 2) ++backward_votes;
    }
    bool reverse = false;
    if (forward_votes > 0 && backward_votes > 0) {
      throw InputError("inconsistent orientation on component through edge " +
                       std::to_string(start));
    } else if (backward_votes > 0) {
      reverse = true;
    } else if (forward_votes == 0) {
      int up = 0, down = 0;
      for (size_t i = 0; i + 1 < walk.size(); ++i) {
        if (walk[i + 1] == walk[i] + 1) ++up;
        if (walk[i + 1] == walk[i] - 1) ++down;
      }
      reverse = down > up;
    }

    const size_t n = walk.size();
    std::vector<EdgeId> travel(n);
    for (size_t i = 0; i < n; ++i) {
      EdgeId id = walk[i];
      SlotRef a = from[i];
      SlotRef b = other_end(id, a);
      if (reverse) std::swap(a, b);
      tail_[id] = a;
      head_[id] = b;
      travel[i] = id;
    }
    if (reverse) std::reverse(travel.begin(), travel.end());
    auto min_it = std::min_element(travel.begin(), travel.end());
    std::rotate(travel.begin(), min_it, travel.end());
    components_.push_back(std::move(travel));
  }

  for (int c = 0; c < num_crossings(); ++c) {
    auto& x = crossings_[c];
    if (!(head_[x.edges[0]] == SlotRef{c, 0})) {
      throw InputError("slot 0 of crossing " + std::to_string(c + 1) +
                       " is not an incoming under-strand");
    }
    bool in1 = head_[x.edges[1]] == SlotRef{c, 1};
    bool in3 = head_[x.edges[3]] == SlotRef{c, 3};
    if (in1 == in3) throw InputError("over-strand orientation is inconsistent");
    x.sign = in3 ? +1 : -1;
  }

  if (basepoint_ && !has_edge(*basepoint_) && !is_free_loop(*basepoint_)) {
    throw InputError("basepoint " + std::to_string(*basepoint_) +
                     " is not an edge of the diagram");
  }
}

std::vector<EdgeId> LinkDiagram::edges() const {
  std::vector<EdgeId> out;
  for (const auto& c : crossings_) {
    for (EdgeId e : c.edges) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool LinkDiagram::has_edge(EdgeId e) const {
  return e > 0 && e <= max_edge_ && component_of_edge_[e] >= 0;
}

int LinkDiagram::component_of(EdgeId e) const {
  if (has_edge(e)) return component_of_edge_[e];
  if (is_free_loop(e)) {
    return static_cast<int>(components_.size()) + (e - max_edge_ - 1);
  }
  throw InputError("unknown edge " + std::to_string(e));
}

SlotRef LinkDiagram::partner(SlotRef s) const {
  EdgeId e = crossings_.at(s.crossing).edges.at(s.slot);
  return tail_[e] == s ? head_[e] : tail_[e];
}

int LinkDiagram::positive_crossings() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(),
                                        [](const Crossing& c) { return c.sign > 0; }));
}

int LinkDiagram::negative_crossings() const {
  return num_crossings() - positive_crossings();
}

// ---------------------------------------------------------------------------

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  LinkDiagram run() {
    std::vector<std::array<EdgeId, 4>> crossings;
    int loops = 0;
    std::optional<EdgeId> basepoint;
    skip_separators();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == 'X') {
        ++pos_;
        expect('[');
        std::array<EdgeId, 4> x{};
        for (int k = 0; k < 4; ++k) {
          if (k > 0) expect(',');
          x[k] = number();
        }
        expect(']');
        crossings.push_back(x);
      } else if (c == 'U') {
        ++pos_;
        loops += number();
      } else if (c == '*') {
        ++pos_;
        if (basepoint) fail("more than one basepoint");
        basepoint = number();
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      if (pos_ < text_.size() && !is_separator(text_[pos_])) {
        fail("tokens must be separated by whitespace");
      }
      skip_separators();
    }
    if (crossings.empty() && loops == 0) fail("empty diagram");
    return LinkDiagram(std::move(crossings), loops, basepoint);
  }

 private:
  static bool is_separator(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',';
  }
  void skip_separators() {
    while (pos_ < text_.size() && is_separator(text_[pos_])) ++pos_;
  }
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  void expect(char c) {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  int number() {
    skip_spaces();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == text_.data() + pos_) fail("expected a number");
    if (value < 0) fail("negative number");
    pos_ = static_cast<size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("PD parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text) { return PdScanner(text).run(); }

std::string to_pd(const LinkDiagram& d) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  for (const auto& c : d.crossings()) {
    sep();
    out << "X[" << c.edges[0] << ',' << c.edges[1] << ',' << c.edges[2] << ','
        << c.edges[3] << ']';
  }
  if (d.num_free_loops() > 0) {
    sep();
    out << 'U' << d.num_free_loops();
  }
  if (d.basepoint()) {
    sep();
    out << '*' << *d.basepoint();
  }
  return out.str();
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<std::array<EdgeId, 4>> out;
  out.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) {
    const auto& e = c.edges;
    // The old over-strand becomes the under-strand; start from its incoming end.
    if (c.sign > 0) {
      out.push_back({e[3], e[0], e[1], e[2]});
    } else {
      out.push_back({e[1], e[2], e[3], e[0]});
    }
  }
  return LinkDiagram(std::move(out), d.num_free_loops(), d.basepoint());
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  const EdgeId offset = a.max_edge();
  std::vector<std::array<EdgeId, 4>> out;
  for (const auto& c : a.crossings()) out.push_back(c.edges);
  for (const auto& c : b.crossings()) {
    out.push_back({c.edges[0] + offset, c.edges[1] + offset, c.edges[2] + offset,
                   c.edges[3] + offset});
  }
  const EdgeId new_max = a.max_edge() + b.max_edge();
  std::optional<EdgeId> bp;
  if (a.basepoint()) {
    EdgeId p = *a.basepoint();
    bp = a.is_free_loop(p) ? new_max + 1 + (p - a.max_edge() - 1) : p;
  } else if (b.basepoint()) {
    EdgeId p = *b.basepoint();
    bp = b.is_free_loop(p)
             ? new_max + 1 + a.num_free_loops() + (p - b.max_edge() - 1)
             : p + offset;
  }
  return LinkDiagram(std::move(out), a.num_free_loops() + b.num_free_loops(), bp);
}

LinkDiagram set_basepoint(const LinkDiagram& d, EdgeId edge) {
  if (!d.has_edge(edge) && !d.is_free_loop(edge)) {
    throw InputError("cannot set basepoint: unknown edge " + std::to_string(edge));
  }
  std::vector<std::array<EdgeId, 4>> x;
  for (const auto& c : d.crossings()) x.push_back(c.edges);
  return LinkDiagram(std::move(x), d.num_free_loops(), edge);
}

LinkDiagram clear_basepoint(const LinkDiagram& d) {
  std::vector<std::array<EdgeId, 4>> x;
  for (const auto& c : d.crossings()) x.push_back(c.edges);
  return LinkDiagram(std::move(x), d.num_free_loops());
}

int linking_number(const LinkDiagram& d, int component_a, int component_b) {
  if (component_a == component_b) throw InputError("linking number needs two components");
  int sum = 0;
  for (const auto& c : d.crossings()) {
    int u = d.component_of(c.edges[0]);
    int o = d.component_of(c.edges[1]);
    if ((u == component_a && o == component_b) || (u == component_b && o == component_a)) {
      sum += c.sign;
    }
  }
  return sum / 2;
}

LinkDiagram renumbered(const LinkDiagram& d, std::map<EdgeId, EdgeId>* relabel) {
  std::vector<EdgeId> map(static_cast<size_t>(d.max_edge()) + 1, 0);
  EdgeId next = 1;
  for (const auto& comp : d.edge_components()) {
    for (EdgeId e : comp) map[e] = next++;
  }
  const EdgeId new_max = next - 1;
  std::vector<std::array<EdgeId, 4>> out;
  for (const auto& c : d.crossings()) {
    out.push_back({map[c.edges[0]], map[c.edges[1]], map[c.edges[2]], map[c.edges[3]]});
  }
  auto translate = [&](EdgeId e) {
    return d.is_free_loop(e) ? new_max + (e - d.max_edge()) : map[e];
  };
  if (relabel) {
    relabel->clear();
    for (EdgeId e : d.edges()) (*relabel)[e] = map[e];
    for (int k = 0; k < d.num_free_loops(); ++k) {
      (*relabel)[d.free_loop_id(k)] = new_max + 1 + k;
    }
  }
  std::optional<EdgeId> bp;
  if (d.basepoint()) bp = translate(*d.basepoint());
  return LinkDiagram(std::move(out), d.num_free_loops(), bp);
}

LinkDiagram braid_closure(int strands, std::span<const int> word) {
  if (strands < 1) throw InputError("braid needs at least one strand");
  EdgeId next = 1;
  std::vector<EdgeId> bottom(strands), current(strands);
  for (int p = 0; p < strands; ++p) bottom[p] = current[p] = next++;

  std::vector<std::array<EdgeId, 4>> out;
  for (int g : word) {
    int k = std::abs(g);
    if (g == 0 || k >= strands) throw InputError("braid generator out of range");
    const int left = k - 1, right = k;
    const EdgeId bl = current[left], br = current[right];
    const EdgeId tl = next++, tr = next++;
    if (g > 0) {
      // bottom-left strand rises to the right over the other one
      out.push_back({br, tr, tl, bl});
    } else {
      out.push_back({bl, br, tr, tl});
    }
    current[left] = tl;
    current[right] = tr;
  }

  // Close up: the top of each position feeds the bottom of the same position.
  std::map<EdgeId, EdgeId> rename;
  int loops = 0;
  for (int p = 0; p < strands; ++p) {
    if (current[p] == bottom[p]) {
      ++loops;
    } else {
      rename[current[p]] = bottom[p];
    }
  }
  for (auto& x : out) {
    for (auto& e : x) {
      auto it = rename.find(e);
      if (it != rename.end()) e = it->second;
    }
  }
  // Untouched positions leave gaps in the labels; compact them.
  std::map<EdgeId, EdgeId> compact;
  for (auto& x : out) {
    for (EdgeId e : x) compact.emplace(e, 0);
  }
  EdgeId id = 1;
  for (auto& [from, to] : compact) to = id++;
  for (auto& x : out) {
    for (auto& e : x) e = compact[e];
  }
  return renumbered(LinkDiagram(std::move(out), loops));
}

}  // namespace cablekh
