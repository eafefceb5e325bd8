#pragma once

// PD codes shared by the test binaries.

namespace cablekh::test {

inline constexpr const char* kUnknot0 = "U1";
inline constexpr const char* kUnknot1 = "X[2,2,1,1]";
inline constexpr const char* kUnknot2 = "X[4,2,1,1] X[3,3,4,2]";
inline constexpr const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";
inline constexpr const char* kTrefoilLeft = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline constexpr const char* kTrefoilRight = "X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]";
inline constexpr const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

// Ranks of Seifert-framed 2-cables, scan pipeline, cross-checked against the
// dense cube and the Jones polynomial.
inline constexpr long kTrefoilCableRank = 48;
inline constexpr long kTrefoilCableReducedRank = 24;
inline constexpr long kFigureEightCableRank = 100;
inline constexpr long kFigureEightCableReducedRank = 50;

}  // namespace cablekh::test
