#include "cablekh/cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cablekh/errors.hpp"

namespace cablekh {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

int popcount(std::uint64_t x) { return std::popcount(x); }

}  // namespace

int ResolutionState::ones() const { return popcount(choices); }

ResolutionState resolve(const LinkDiagram& d, std::uint64_t choices) {
  const int n = d.num_crossings();
  if (n > 64) throw ResourceError("resolve supports at most 64 crossings");
  if (n < 64 && (choices >> n) != 0) throw InputError("resolution has bits beyond the crossings");

  const int ids = d.max_edge() + d.num_free_loops() + 1;
  std::vector<int> parent(ids);
  std::iota(parent.begin(), parent.end(), 0);
  for (int k = 0; k < n; ++k) {
    const auto& e = d.crossings()[k].edges;
    if ((choices >> k) & 1u) {
      unite(parent, e[0], e[3]);
      unite(parent, e[1], e[2]);
    } else {
      unite(parent, e[0], e[1]);
      unite(parent, e[2], e[3]);
    }
  }

  ResolutionState s;
  s.choices = choices;
  s.circle_of_edge.assign(ids, -1);
  std::vector<int> circle_of_root(ids, -1);
  auto visit = [&](EdgeId e) {
    int r = find(parent, e);
    if (circle_of_root[r] < 0) {
      circle_of_root[r] = s.num_circles++;
      s.circle_rep.push_back(e);
    }
    s.circle_of_edge[e] = circle_of_root[r];
  };
  // ascending ids, so circles come out ordered by smallest edge
  for (EdgeId e : d.edges()) visit(e);
  for (int k = 0; k < d.num_free_loops(); ++k) visit(d.free_loop_id(k));
  return s;
}

ResolutionState resolve(const LinkDiagram& d, const std::vector<bool>& choices) {
  if (static_cast<int>(choices.size()) != d.num_crossings()) {
    throw InputError("resolution length " + std::to_string(choices.size()) +
                     " does not match " + std::to_string(d.num_crossings()) + " crossings");
  }
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < choices.size(); ++k) {
    if (choices[k]) bits |= std::uint64_t{1} << k;
  }
  return resolve(d, bits);
}

EdgeMap edge_map(const LinkDiagram& d, const ResolutionState& from,
                 const ResolutionState& to) {
  const std::uint64_t diff = from.choices ^ to.choices;
  if (std::popcount(diff) != 1 || (from.choices & diff) != 0) {
    throw InputError("states are not cube-adjacent (need a single 0 -> 1 change)");
  }
  const int k = std::countr_zero(diff);
  const auto& e = d.crossings()[k].edges;

  EdgeMap m;
  m.carry_.assign(from.num_circles, -1);
  for (int c = 0; c < from.num_circles; ++c) {
    m.carry_[c] = to.circle_of(from.circle_rep[c]);
  }
  const int a = from.circle_of(e[0]);  // = circle of e[1]
  const int c = from.circle_of(e[2]);  // = circle of e[3]
  if (a != c) {
    m.kind_ = EdgeMap::Kind::kMerge;
    m.src_a_ = std::min(a, c);
    m.src_b_ = std::max(a, c);
    m.dst_a_ = to.circle_of(e[0]);
    if (to.circle_of(e[2]) != m.dst_a_) throw InvariantError("merge produced two circles");
  } else {
    m.kind_ = EdgeMap::Kind::kSplit;
    m.src_a_ = a;
    m.dst_a_ = to.circle_of(e[0]);  // also holds e[3]
    m.dst_b_ = to.circle_of(e[1]);  // also holds e[2]
    if (m.dst_a_ == m.dst_b_) throw InvariantError("split produced one circle");
    m.carry_[a] = -1;
  }
  if (to.num_circles != from.num_circles + (m.kind_ == EdgeMap::Kind::kSplit ? 1 : -1)) {
    throw InvariantError("adjacent states must differ by one circle");
  }
  return m;
}

std::vector<std::uint64_t> EdgeMap::apply(std::uint64_t labels) const {
  std::uint64_t base = 0;
  for (std::size_t c = 0; c < carry_.size(); ++c) {
    const int t = carry_[c];
    if (t < 0) continue;
    if (kind_ == Kind::kMerge && (static_cast<int>(c) == src_a_ || static_cast<int>(c) == src_b_)) {
      continue;
    }
    if ((labels >> c) & 1u) base |= std::uint64_t{1} << t;
  }
  const std::uint64_t xa = std::uint64_t{1} << dst_a_;
  if (kind_ == Kind::kMerge) {
    const bool x1 = (labels >> src_a_) & 1u;
    const bool x2 = (labels >> src_b_) & 1u;
    if (x1 && x2) return {};       // x * x = 0
    if (x1 || x2) return {base | xa};
    return {base};                 // 1 * 1 = 1
  }
  const std::uint64_t xb = std::uint64_t{1} << dst_b_;
  if ((labels >> src_a_) & 1u) return {base | xa | xb};  // x -> x(x)x
  return {base | xb, base | xa};                           // 1 -> 1(x)x + x(x)1
}

// ---------------------------------------------------------------------------

std::size_t BigradedComplex::dimension() const {
  std::size_t n = 0;
  for (const auto& [b, g] : groups) n += g.size();
  return n;
}

std::size_t BigradedComplex::dimension(Bidegree b) const {
  auto it = groups.find(b);
  return it == groups.end() ? 0 : it->second.size();
}

namespace {

struct GradingShift {
  int n_plus = 0;
  int n_minus = 0;
  int reduced = 0;

  Bidegree of(int ones, int circles, std::uint64_t labels) const {
    const int xs = popcount(labels);
    const int i = ones - n_minus;
    const int j = (circles - xs) - xs + ones + n_plus - 2 * n_minus + reduced;
    return {i, j};
  }
};

int basepoint_circle(const LinkDiagram& d, const ResolutionState& s) {
  return s.circle_of(*d.basepoint());
}

void check_reduced_preconditions(const LinkDiagram& d, bool reduced) {
  if (reduced && !d.basepoint()) {
    throw InputError("reduced complex requested without a basepoint");
  }
}

}  // namespace

std::size_t count_generators(const LinkDiagram& d, bool reduced) {
  check_reduced_preconditions(d, reduced);
  const int n = d.num_crossings();
  if (n > 40) return static_cast<std::size_t>(-1);
  std::size_t total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int circles = resolve(d, s).num_circles;
    if (circles >= 63) return static_cast<std::size_t>(-1);
    total += std::size_t{1} << (circles - (reduced ? 1 : 0));
  }
  return total;
}

BigradedComplex build_complex(const LinkDiagram& d, bool reduced, const CubeOptions& options) {
  check_reduced_preconditions(d, reduced);
  const int n = d.num_crossings();
  if (n > options.max_crossings) {
    throw ResourceError("dense cube limited to " + std::to_string(options.max_crossings) +
                        " crossings, diagram has " + std::to_string(n));
  }

  std::vector<ResolutionState> states;
  states.reserve(std::size_t{1} << n);
  std::size_t total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    states.push_back(resolve(d, s));
    const int circles = states.back().num_circles;
    if (circles > 40) throw ResourceError("too many circles in a resolution");
    total += std::size_t{1} << (circles - (reduced ? 1 : 0));
    if (total > options.max_generators) {
      throw ResourceError("dense cube exceeds the generator budget of " +
                          std::to_string(options.max_generators));
    }
  }

  const GradingShift shift{d.positive_crossings(), d.negative_crossings(), reduced ? 1 : 0};
  BigradedComplex cx;
  cx.reduced = reduced;

  // index_of[s][labels] -> position within its group; reduced labelings are
  // stored at labels >> 0 but only those with the basepoint bit set are used.
  std::vector<std::vector<std::uint32_t>> index_of(states.size());
  for (std::uint64_t s = 0; s < states.size(); ++s) {
    const auto& st = states[s];
    const std::uint64_t count = std::uint64_t{1} << st.num_circles;
    index_of[s].assign(count, UINT32_MAX);
    const int bp = reduced ? basepoint_circle(d, st) : -1;
    for (std::uint64_t labels = 0; labels < count; ++labels) {
      if (bp >= 0 && !((labels >> bp) & 1u)) continue;
      auto& group = cx.groups[shift.of(st.ones(), st.num_circles, labels)];
      index_of[s][labels] = static_cast<std::uint32_t>(group.size());
      group.push_back(Generator{s, labels});
    }
  }

  for (const auto& [deg, group] : cx.groups) {
    const Bidegree target{deg.i + 1, deg.j};
    cx.boundaries.emplace(deg, SparseMatrix(cx.dimension(target), group.size()));
  }

  for (std::uint64_t s = 0; s < states.size(); ++s) {
    const auto& from = states[s];
    for (int k = 0; k < n; ++k) {
      if ((s >> k) & 1u) continue;
      const std::uint64_t t = s | (std::uint64_t{1} << k);
      const auto& to = states[t];
      const EdgeMap m = edge_map(d, from, to);
      for (std::uint64_t labels = 0; labels < index_of[s].size(); ++labels) {
        const std::uint32_t col = index_of[s][labels];
        if (col == UINT32_MAX) continue;
        const Bidegree deg = shift.of(from.ones(), from.num_circles, labels);
        auto& matrix = cx.boundaries.at(deg);
        for (std::uint64_t image : m.apply(labels)) {
          const std::uint32_t row = index_of[t][image];
          if (row == UINT32_MAX) throw InvariantError("edge map left the reduced subcomplex");
          if (shift.of(to.ones(), to.num_circles, image) != Bidegree{deg.i + 1, deg.j}) {
            throw InvariantError("edge map does not preserve the quantum grading");
          }
          matrix.toggle(row, col);
        }
      }
    }
  }
  return cx;
}

bool boundary_squares_to_zero(const BigradedComplex& c) {
  for (const auto& [deg, first] : c.boundaries) {
    auto it = c.boundaries.find(Bidegree{deg.i + 1, deg.j});
    if (it == c.boundaries.end()) continue;
    const SparseMatrix product = multiply(it->second, first);
    if (product.nonzeros() != 0) return false;
  }
  return true;
}

}  // namespace cablekh
