#pragma once

// n-cables of knot diagrams.
//
// The blackboard cable replaces every edge by n parallel copies (copy k runs
// k steps to the left of the original, seen along the orientation) and every
// crossing by an n x n grid. Its framing is the blackboard framing, so the
// pairwise linking number of copies equals the writhe. The Seifert-framed
// cable corrects this with -writhe full twists inserted on the copies of one
// edge.

#include <vector>

#include "cablekh/diagram.hpp"

namespace cablekh {

struct CableSpec {
  int n = 2;
  int twist_correction = 0;  // signed number of full twists

  static CableSpec seifert(const LinkDiagram& knot, int n) {
    return CableSpec{n, -writhe(knot)};
  }
};

/// A cable together with the n parallel edges where framing twists go,
/// ordered by copy index.
struct CabledDiagram {
  LinkDiagram diagram;
  std::vector<EdgeId> twist_locus;
};

CabledDiagram blackboard_cable_with_locus(const LinkDiagram& knot, int n);

LinkDiagram blackboard_cable(const LinkDiagram& knot, int n);

/// Inserts `count` full twists of the given sign on the parallel strands
/// `locus` (copy order, all oriented the same way). Each full twist on n
/// strands adds n(n-1) crossings.
LinkDiagram full_twist_insertion(const LinkDiagram& d, int n, int sign, int count,
                                 const std::vector<EdgeId>& locus);

LinkDiagram seifert_framed_cable(const LinkDiagram& knot, int n);

/// Applies an arbitrary framing correction.
LinkDiagram framed_cable(const LinkDiagram& knot, const CableSpec& spec);

}  // namespace cablekh
