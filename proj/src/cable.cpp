#include "cablekh/cable.hpp"

#include <map>

#include "cablekh/errors.hpp"

namespace cablekh {

namespace {

void require_knot(const LinkDiagram& d) {
  if (d.num_components() != 1) {
    throw InputError("cabling needs a 1-component diagram, got " +
                     std::to_string(d.num_components()) + " components");
  }
}

void require_n(int n) {
  if (n < 1) throw InputError("cable order must be positive");
}

}  // namespace

CabledDiagram blackboard_cable_with_locus(const LinkDiagram& knot, int n) {
  require_knot(knot);
  require_n(n);

  if (knot.num_crossings() == 0) {
    LinkDiagram unlink({}, n);
    // copy 0 is the first free loop
    return {set_basepoint(unlink, unlink.free_loop_id(0)), {}};
  }

  // Copy k of edge e gets id k * E + e, so copy 0 keeps the original labels
  // and the renumbering below lists copy 0 first.
  const EdgeId E = knot.max_edge();
  auto copy_id = [&](EdgeId e, int k) { return k * E + e; };
  EdgeId fresh = n * E + 1;

  std::vector<std::array<EdgeId, 4>> out;
  out.reserve(static_cast<size_t>(knot.num_crossings()) * n * n);
  for (const auto& x : knot.crossings()) {
    const auto& e = x.edges;
    // Under-strand copies: gaps along the strand, bottom to top.
    std::vector<std::vector<EdgeId>> under(n, std::vector<EdgeId>(n + 1));
    // Over-strand copies: gaps left to right.
    std::vector<std::vector<EdgeId>> over(n, std::vector<EdgeId>(n + 1));
    for (int i = 0; i < n; ++i) {
      under[i][0] = copy_id(e[0], i);
      under[i][n] = copy_id(e[2], i);
      for (int t = 1; t < n; ++t) under[i][t] = fresh++;
    }
    for (int j = 0; j < n; ++j) {
      over[j][0] = copy_id(e[3], j);
      over[j][n] = copy_id(e[1], j);
      for (int t = 1; t < n; ++t) over[j][t] = fresh++;
    }
    for (int i = 0; i < n; ++i) {
      // under copy i sits at x = -i, so its rank from the left is n-1-i
      const int rx = n - 1 - i;
      for (int j = 0; j < n; ++j) {
        // over copy j sits at y = +j (positive) or y = -j (negative)
        const int ry = x.sign > 0 ? j : n - 1 - j;
        out.push_back({under[i][ry], over[j][rx + 1], under[i][ry + 1], over[j][rx]});
      }
    }
  }

  std::optional<EdgeId> bp;
  const EdgeId anchor = knot.basepoint() ? *knot.basepoint() : knot.edge_components()[0][0];
  bp = copy_id(anchor, 0);

  std::map<EdgeId, EdgeId> relabel;
  LinkDiagram raw(std::move(out), 0, bp);
  LinkDiagram cable = renumbered(raw, &relabel);

  const EdgeId locus_edge = knot.edge_components()[0][0];
  std::vector<EdgeId> locus;
  for (int k = 0; k < n; ++k) locus.push_back(relabel.at(copy_id(locus_edge, k)));
  return {std::move(cable), std::move(locus)};
}

LinkDiagram blackboard_cable(const LinkDiagram& knot, int n) {
  return blackboard_cable_with_locus(knot, n).diagram;
}

LinkDiagram full_twist_insertion(const LinkDiagram& d, int n, int sign, int count,
                                 const std::vector<EdgeId>& locus) {
  require_n(n);
  if (count < 0) throw InputError("full twist count must be nonnegative");
  if (sign != 1 && sign != -1) throw InputError("full twist sign must be +1 or -1");
  if (count == 0 || n == 1) return d;
  if (static_cast<int>(locus.size()) != n) {
    throw InputError("insertion locus not found: need " + std::to_string(n) + " strands");
  }
  for (EdgeId e : locus) {
    if (!d.has_edge(e)) throw InputError("insertion locus not found: edge " + std::to_string(e));
  }
  for (size_t a = 0; a < locus.size(); ++a) {
    for (size_t b = a + 1; b < locus.size(); ++b) {
      if (locus[a] == locus[b]) throw InputError("insertion locus repeats an edge");
    }
  }

  std::vector<std::array<EdgeId, 4>> out;
  for (const auto& c : d.crossings()) out.push_back(c.edges);

  EdgeId fresh = d.max_edge() + 1;
  // Cut each locus edge just before its head; the braid fills the gap.
  std::vector<EdgeId> exit_id(n);
  for (int k = 0; k < n; ++k) {
    exit_id[k] = fresh++;
    SlotRef h = d.head(locus[k]);
    out[h.crossing][h.slot] = exit_id[k];
  }

  // Positions left to right; copy k runs k steps left, so it starts at n-1-k.
  std::vector<int> strand_at(n);
  std::vector<EdgeId> current(n);
  for (int k = 0; k < n; ++k) {
    strand_at[n - 1 - k] = k;
    current[n - 1 - k] = locus[k];
  }
  for (int t = 0; t < count; ++t) {
    for (int round = 0; round < n; ++round) {
      for (int p = 1; p < n; ++p) {
        const int left = p - 1, right = p;
        const EdgeId bl = current[left], br = current[right];
        const EdgeId tl = fresh++, tr = fresh++;
        if (sign > 0) {
          out.push_back({br, tr, tl, bl});
        } else {
          out.push_back({bl, br, tr, tl});
        }
        current[left] = tl;
        current[right] = tr;
        std::swap(strand_at[left], strand_at[right]);
      }
    }
  }

  std::map<EdgeId, EdgeId> rename;
  for (int p = 0; p < n; ++p) {
    const int k = strand_at[p];
    if (p != n - 1 - k) throw InvariantError("full twist did not return strands to place");
    rename[exit_id[k]] = current[p];
  }
  for (auto& x : out) {
    for (auto& e : x) {
      auto it = rename.find(e);
      if (it != rename.end()) e = it->second;
    }
  }
  return renumbered(LinkDiagram(std::move(out), d.num_free_loops(), d.basepoint()));
}

LinkDiagram framed_cable(const LinkDiagram& knot, const CableSpec& spec) {
  CabledDiagram bb = blackboard_cable_with_locus(knot, spec.n);
  if (spec.twist_correction == 0) return std::move(bb.diagram);
  const int sign = spec.twist_correction > 0 ? 1 : -1;
  const int count = spec.twist_correction * sign;
  return full_twist_insertion(bb.diagram, spec.n, sign, count, bb.twist_locus);
}

LinkDiagram seifert_framed_cable(const LinkDiagram& knot, int n) {
  require_knot(knot);
  return framed_cable(knot, CableSpec::seifert(knot, n));
}

}  // namespace cablekh
