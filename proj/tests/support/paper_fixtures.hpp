#pragma once

// Frozen 9x9 worked examples and sequence prefixes used by the unit and
// acceptance suites.  The {1,3,8} matrices carry the published display with
// its column 0 corrected to the values forced by the defining pair
// <(1 + x^2/2! + x^7/7!)^2, x + x^3/3! + x^8/8!> (the g-series IS column 0)
// and confirmed by exhaustive enumeration; see the matching entries in the
// second-kind column-0 entries of the inverse, re-derived by hand from the
// orthogonality relation.

#include <vector>

namespace srcomb::testing {

using Rows = std::vector<std::vector<long>>;

inline const Rows kMatrixM138r2 = {
    {1},
    {0, 1},
    {2, 0, 1},
    {0, 7, 0, 1},
    {6, 0, 16, 0, 1},
    {0, 50, 0, 30, 0, 1},
    {0, 0, 220, 0, 50, 0, 1},
    {2, 210, 0, 700, 0, 77, 0, 1},
    {0, 17, 2240, 0, 1820, 0, 112, 0, 1},
};

inline const Rows kMatrixT138r2 = {
    {1},
    {0, 1},
    {-2, 0, 1},
    {0, -7, 0, 1},
    {26, 0, -16, 0, 1},
    {0, 160, 0, -30, 0, 1},
    {-860, 0, 580, 0, -50, 0, 1},
    {-2, -7630, 0, 1610, 0, -77, 0, 1},
    {53480, -17, -38080, 0, 3780, 0, -112, 0, 1},
};

inline const Rows kMatrixMOddR2 = {
    {1},
    {0, 1},
    {2, 0, 1},
    {0, 7, 0, 1},
    {8, 0, 16, 0, 1},
    {0, 61, 0, 30, 0, 1},
    {32, 0, 256, 0, 50, 0, 1},
    {0, 547, 0, 791, 0, 77, 0, 1},
    {128, 0, 4096, 0, 2016, 0, 112, 0, 1},
};

inline const Rows kMatrixTOddR2 = {
    {1},
    {0, 1},
    {-2, 0, 1},
    {0, -7, 0, 1},
    {24, 0, -16, 0, 1},
    {0, 149, 0, -30, 0, 1},
    {-720, 0, 544, 0, -50, 0, 1},
    {0, -6483, 0, 1519, 0, -77, 0, 1},
    {40320, 0, -32768, 0, 3584, 0, -112, 0, 1},
};

inline const Rows kMatrixUOddR1 = {
    {1},
    {0, 1},
    {-2, 0, 1},
    {0, -8, 0, 1},
    {16, 0, -20, 0, 1},
    {0, 136, 0, -40, 0, 1},
    {-272, 0, 616, 0, -70, 0, 1},
    {0, -3968, 0, 2016, 0, -112, 0, 1},
    {7936, 0, -28160, 0, 5376, 0, -168, 0, 1},
};

/// Bell polynomial coefficients for (S, r) = ({1,3,8}, 2), n = 0..8, degree
/// ascending; same column-0 (constant-term) correction as the matrices.
inline const Rows kBellPoly138r2 = {
    {1},
    {0, 1},
    {2, 0, 1},
    {0, 7, 0, 1},
    {6, 0, 16, 0, 1},
    {0, 50, 0, 30, 0, 1},
    {0, 0, 220, 0, 50, 0, 1},
    {2, 210, 0, 700, 0, 77, 0, 1},
    {0, 17, 2240, 0, 1820, 0, 112, 0, 1},
};

// OEIS cross-check prefixes (embedded fixtures; no live lookups).
inline const std::vector<long> kA005581 = {7, 16, 30, 50, 77, 112};     // subdiagonal
inline const std::vector<long> kTangent = {2, 16, 272, 7936};           // A000182 tail
inline const std::vector<long> kCyclicAlternating = {8, 136, 3968};     // A024283 tail
inline const std::vector<long> kClassicalBell = {1, 1, 2, 5, 15, 52};   // A000110
inline const std::vector<long> kFibonacci = {1, 2, 3, 5, 8};            // A000045 tail
inline const std::vector<long> kTwoBell = {1, 3, 10, 37, 151, 674};     // A005493
inline const std::vector<long> kInvolutions = {1, 1, 2, 4, 10, 26, 76}; // A000085
inline const std::vector<long> kNoSingletonBell = {1, 0, 1, 1, 4, 11, 41, 162};  // A000296
inline const std::vector<long> kOddBlockBell = {1, 1, 1, 2, 5, 12, 37};          // A003724

}  // namespace srcomb::testing
