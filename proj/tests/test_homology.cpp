#include <doctest.h>

#include "cablekh/cable.hpp"
#include "cablekh/errors.hpp"
#include "cablekh/homology.hpp"
#include "knots.hpp"

using namespace cablekh;
using namespace cablekh::test;

namespace {

BettiTable table(std::initializer_list<std::pair<Bidegree, std::size_t>> entries) {
  BettiTable t;
  for (const auto& [b, r] : entries) t.add(b, r);
  return t;
}

BettiTable dense(const LinkDiagram& d, bool reduced) {
  return betti(build_complex(d, reduced));
}

LinkDiagram based(const LinkDiagram& d) {
  const auto edges = d.edges();
  return set_basepoint(d, edges.empty() ? d.free_loop_id(0) : edges.front());
}

}  // namespace

TEST_CASE("unknot homology") {
  const LinkDiagram u = parse_pd("U1");
  const BettiTable expected = table({{{0, -1}, 1}, {{0, 1}, 1}});
  CHECK(dense(u, false) == expected);
  CHECK(scan_compute(u, false) == expected);
  CHECK(scan_compute(based(u), true) == table({{{0, 0}, 1}}));
  CHECK(dense(based(u), true) == table({{{0, 0}, 1}}));
  CHECK(format_poincare(expected) == "t^0*q^-1 + t^0*q^1");
}

TEST_CASE("kinked unknots have unknot homology") {
  const BettiTable expected = table({{{0, -1}, 1}, {{0, 1}, 1}});
  for (const char* pd : {kUnknot1, kUnknot2}) {
    const LinkDiagram d = parse_pd(pd);
    CHECK(dense(d, false) == expected);
    CHECK(scan_compute(d, false) == expected);
    CHECK(dense(mirror(d), false) == expected);
    CHECK(scan_compute(mirror(d), false) == expected);
  }
}

TEST_CASE("two-component unlink") {
  const LinkDiagram u = parse_pd("U1 U1");
  const BettiTable expected = table({{{0, -2}, 1}, {{0, 0}, 2}, {{0, 2}, 1}});
  CHECK(dense(u, false) == expected);
  CHECK(scan_compute(u, false) == expected);
  CHECK(scan_compute(based(u), true).total() == 2);
  CHECK(tensor_unknot(table({{{0, -1}, 1}, {{0, 1}, 1}}), 1) == expected);
}

TEST_CASE("trefoil homology over Z/2") {
  // right-handed: q + q^3 + t^2 q^5 + t^2 q^7 + t^3 q^7 + t^3 q^9
  const BettiTable right = table({{{0, 1}, 1},
                                  {{0, 3}, 1},
                                  {{2, 5}, 1},
                                  {{2, 7}, 1},
                                  {{3, 7}, 1},
                                  {{3, 9}, 1}});
  const LinkDiagram r = parse_pd(kTrefoilRight);
  CHECK(dense(r, false) == right);
  CHECK(scan_compute(r, false) == right);

  BettiTable left;
  for (const auto& [b, k] : right.ranks) left.add({-b.i, -b.j}, k);
  const LinkDiagram l = parse_pd(kTrefoilLeft);
  CHECK(dense(l, false) == left);
  CHECK(scan_compute(l, false) == left);

  CHECK(scan_compute(based(l), true).total() == 3);
  CHECK(dense(based(l), true).total() == 3);
}

TEST_CASE("Hopf link has four generators") {
  const LinkDiagram h = parse_pd(kHopf);
  const BettiTable expected = table({{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}});
  CHECK(dense(h, false) == expected);
  CHECK(scan_compute(h, false) == expected);
  CHECK(scan_compute(based(h), true).total() == 2);
}

TEST_CASE("figure-eight: scan equals dense, reduced rank is the determinant") {
  const LinkDiagram f = parse_pd(kFigureEight);
  const BettiTable t = dense(f, false);
  CHECK(t.total() == 10);
  CHECK(scan_compute(f, false) == t);
  CHECK(scan_compute(based(f), true).total() == 5);
  CHECK(dense(based(f), true).total() == 5);
}

TEST_CASE("free loops tensor with V") {
  const LinkDiagram t = parse_pd(std::string(kTrefoilLeft) + " U1");
  CHECK(scan_compute(t, false) == tensor_unknot(scan_compute(parse_pd(kTrefoilLeft), false)));
  CHECK(dense(t, false) == scan_compute(t, false));
}

TEST_CASE("scan reduced homology with the basepoint on a free loop") {
  LinkDiagram t = parse_pd(std::string(kTrefoilLeft) + " U1");
  t = set_basepoint(t, t.free_loop_id(0));
  CHECK(scan_compute(t, true) == scan_compute(parse_pd(kTrefoilLeft), false));
  CHECK(dense(t, true) == scan_compute(t, true));
}

TEST_CASE("small cables agree between scan and dense") {
  for (const char* pd : {kUnknot1, kUnknot2}) {
    const LinkDiagram c = seifert_framed_cable(parse_pd(pd), 2);
    CHECK(dense(c, false) == scan_compute(c, false));
    CHECK(dense(c, true) == scan_compute(c, true));
    CHECK(scan_compute(c, false).total() == 4);
  }
}

TEST_CASE("scan reports its peak sizes and respects its budgets") {
  const LinkDiagram c = seifert_framed_cable(parse_pd(kTrefoilLeft), 2);
  ScanStats stats;
  const BettiTable t = scan_compute(c, false, {}, &stats);
  CHECK(t.total() == kTrefoilCableRank);
  CHECK(stats.order.size() == 18);
  CHECK(stats.peak_boundary_points > 0);

  ScanOptions tiny;
  tiny.max_objects = 4;
  CHECK_THROWS_AS(scan_compute(c, false, tiny), ResourceError);
  ScanOptions narrow;
  narrow.max_boundary_points = 2;
  CHECK_THROWS_AS(scan_compute(c, false, narrow), ResourceError);
}

TEST_CASE("compute_betti dispatch") {
  const LinkDiagram t = parse_pd(kFigureEight);
  ComputeOptions o;
  o.algorithm = Algorithm::kDense;
  const BettiTable a = compute_betti(t, false, o);
  o.algorithm = Algorithm::kScan;
  const BettiTable b = compute_betti(t, false, o);
  o.algorithm = Algorithm::kAuto;
  CHECK(a == b);
  CHECK(compute_betti(t, false, o) == a);

  o.algorithm = Algorithm::kDense;
  o.cube.max_crossings = 3;
  CHECK_THROWS_AS(compute_betti(t, false, o), ResourceError);
}

TEST_CASE("rank doubling on the bundled cables") {
  for (const char* pd : {kTrefoilLeft, kFigureEight}) {
    const LinkDiagram c = seifert_framed_cable(parse_pd(pd), 2);
    CHECK(scan_compute(c, false).total() == 2 * scan_compute(c, true).total());
  }
}
