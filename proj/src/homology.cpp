#include "cablekh/homology.hpp"

#include <sstream>

#include "cablekh/errors.hpp"

namespace cablekh {

std::size_t BettiTable::total() const {
  std::size_t n = 0;
  for (const auto& [b, r] : ranks) n += r;
  return n;
}

std::size_t BettiTable::at(Bidegree b) const {
  auto it = ranks.find(b);
  return it == ranks.end() ? 0 : it->second;
}

void BettiTable::add(Bidegree b, std::size_t rank) {
  if (rank != 0) ranks[b] += rank;
}

namespace {

// Dense elimination is faster while the packed matrix stays small.
constexpr std::size_t kDenseBitLimit = std::size_t{1} << 28;

std::size_t block_rank(const SparseMatrix& m) {
  if (m.rows == 0 || m.cols == 0 || m.nonzeros() == 0) return 0;
  if (m.rows * m.cols <= kDenseBitLimit) return rank_gf2(m.to_dense());
  return rank_gf2(m);
}

}  // namespace

BettiTable betti(const BigradedComplex& c) {
  std::map<Bidegree, std::size_t> rank_out;
  for (const auto& [deg, m] : c.boundaries) {
    if (m.cols != c.dimension(deg) || m.rows != c.dimension({deg.i + 1, deg.j})) {
      throw InvariantError("boundary block does not match its bidegree");
    }
    rank_out[deg] = block_rank(m);
  }
  BettiTable t;
  for (const auto& [deg, group] : c.groups) {
    const std::size_t out = rank_out.count(deg) ? rank_out[deg] : 0;
    const Bidegree prev{deg.i - 1, deg.j};
    const std::size_t in = rank_out.count(prev) ? rank_out[prev] : 0;
    if (out + in > group.size()) throw InvariantError("boundary ranks exceed the group");
    t.add(deg, group.size() - out - in);
  }
  return t;
}

BettiTable tensor_unknot(const BettiTable& t, int copies) {
  BettiTable cur = t;
  for (int k = 0; k < copies; ++k) {
    BettiTable next;
    for (const auto& [b, r] : cur.ranks) {
      next.add({b.i, b.j + 1}, r);
      next.add({b.i, b.j - 1}, r);
    }
    cur = std::move(next);
  }
  return cur;
}

std::string format_poincare(const BettiTable& t) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, r] : t.ranks) {
    if (!first) out << " + ";
    first = false;
    if (r != 1) out << r << '*';
    out << "t^" << b.i << "*q^" << b.j;
  }
  if (first) out << '0';
  return out.str();
}

BettiTable compute_betti(const LinkDiagram& d, bool reduced, const ComputeOptions& options) {
  Algorithm algo = options.algorithm;
  if (algo == Algorithm::kAuto) {
    const int limit = std::min(options.auto_dense_crossings, options.cube.max_crossings);
    algo = d.num_crossings() <= limit ? Algorithm::kDense : Algorithm::kScan;
  }
  if (algo == Algorithm::kDense) return betti(build_complex(d, reduced, options.cube));
  return scan_compute(d, reduced, options.scan);
}

}  // namespace cablekh
