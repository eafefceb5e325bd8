#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "cablekh/cable.hpp"
#include "cablekh/errors.hpp"
#include "knots.hpp"

using namespace cablekh;
using namespace cablekh::test;

namespace {

bool pairwise_unlinked(const LinkDiagram& d) {
  for (int a = 0; a < d.num_components(); ++a) {
    for (int b = a + 1; b < d.num_components(); ++b) {
      if (linking_number(d, a, b) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("blackboard cable replaces each crossing by an n x n grid") {
  const LinkDiagram t = parse_pd(kTrefoilLeft);
  for (int n = 1; n <= 4; ++n) {
    const LinkDiagram c = blackboard_cable(t, n);
    CHECK(c.num_crossings() == n * n * 3);
    CHECK(c.num_components() == n);
    // blackboard framing: copies link with the writhe
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) CHECK(linking_number(c, a, b) == writhe(t));
    }
  }
}

TEST_CASE("Seifert-framed cables have the expected size and zero linking") {
  for (const char* pd : {kUnknot1, kUnknot2, kTrefoilLeft, kTrefoilRight, kFigureEight}) {
    const LinkDiagram k = parse_pd(pd);
    const int w = std::abs(writhe(k));
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(pd);
      CAPTURE(n);
      const LinkDiagram c = seifert_framed_cable(k, n);
      CHECK(c.num_crossings() == n * n * k.num_crossings() + n * (n - 1) * w);
      CHECK(c.num_components() == n);
      CHECK(pairwise_unlinked(c));
    }
  }
}

TEST_CASE("documented cable sizes") {
  CHECK(seifert_framed_cable(parse_pd(kTrefoilLeft), 2).num_crossings() == 18);
  CHECK(seifert_framed_cable(parse_pd(kTrefoilLeft), 3).num_crossings() == 45);
  CHECK(seifert_framed_cable(parse_pd(kFigureEight), 2).num_crossings() == 16);
  CHECK(seifert_framed_cable(parse_pd(kUnknot1), 2).num_crossings() == 6);
}

TEST_CASE("cable of the crossingless unknot is the unlink") {
  const LinkDiagram c = seifert_framed_cable(parse_pd("U1"), 2);
  CHECK(c.num_crossings() == 0);
  CHECK(c.num_free_loops() == 2);
  CHECK(to_pd(clear_basepoint(c)) == "U2");
}

TEST_CASE("writhe-0 diagrams need no framing correction") {
  const LinkDiagram f = parse_pd(kFigureEight);
  CHECK(seifert_framed_cable(f, 2) == blackboard_cable(f, 2));
  CHECK(seifert_framed_cable(f, 3) == blackboard_cable(f, 3));
}

TEST_CASE("the cable carries a basepoint on copy 0") {
  const LinkDiagram k = parse_pd(kTrefoilLeft);
  const LinkDiagram c = seifert_framed_cable(k, 2);
  REQUIRE(c.basepoint());
  CHECK(c.component_of(*c.basepoint()) == 0);

  const LinkDiagram based = seifert_framed_cable(set_basepoint(k, 5), 2);
  REQUIRE(based.basepoint());
  CHECK(based.component_of(*based.basepoint()) == 0);
}

TEST_CASE("full twists add n(n-1) crossings each and shift linking") {
  const CabledDiagram bb = blackboard_cable_with_locus(parse_pd(kFigureEight), 2);
  REQUIRE(bb.twist_locus.size() == 2);
  const LinkDiagram twisted = full_twist_insertion(bb.diagram, 2, +1, 3, bb.twist_locus);
  CHECK(twisted.num_crossings() == bb.diagram.num_crossings() + 3 * 2);
  CHECK(linking_number(twisted, 0, 1) == 3);
  const LinkDiagram back = full_twist_insertion(bb.diagram, 2, -1, 2, bb.twist_locus);
  CHECK(linking_number(back, 0, 1) == -2);
  CHECK(full_twist_insertion(bb.diagram, 2, +1, 0, bb.twist_locus) == bb.diagram);
}

TEST_CASE("framed_cable realizes any framing") {
  const LinkDiagram k = parse_pd(kTrefoilRight);
  for (int f = -2; f <= 2; ++f) {
    const LinkDiagram c = framed_cable(k, CableSpec{2, f});
    CHECK(linking_number(c, 0, 1) == writhe(k) + f);
  }
  CHECK(framed_cable(k, CableSpec::seifert(k, 2)) == seifert_framed_cable(k, 2));
}

TEST_CASE("cabling rejects links and bad orders") {
  CHECK_THROWS_AS(seifert_framed_cable(parse_pd(kHopf), 2), InputError);
  CHECK_THROWS_AS(seifert_framed_cable(parse_pd("U1 U1"), 2), InputError);
  CHECK_THROWS_AS(seifert_framed_cable(parse_pd(kTrefoilLeft), 0), InputError);
}
