#ifndef KNOTINV_TESTS_FIXTURES_HPP
#define KNOTINV_TESTS_FIXTURES_HPP

namespace fixtures {

// Left-handed under this library's convention: s_A = 3, s_B = 2, writhe -3.
inline constexpr const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline constexpr const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
inline constexpr const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";
// Trefoil with crossing 0 switched.
inline constexpr const char* kAlmostAlternatingTrefoil = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]";
// Trefoil with a kink inserted on edge 6.
inline constexpr const char* kKinkedTrefoil = "X[1,4,2,5] X[3,8,4,1] X[5,2,6,3] X[6,7,7,8]";
// The same kink drawn so the diagram stays alternating.
inline constexpr const char* kAlternatingKinkedTrefoil = "X[1,4,2,5] X[3,8,4,1] X[5,2,6,3] X[7,7,8,6]";
// Mirror of 12n888, transcribed from the drawing of its alternating decomposition.
inline constexpr const char* k12n888Mirror =
    "X[23,8,24,9] X[2,17,3,18] X[4,13,5,14] X[6,15,7,16] X[16,1,17,2] X[18,3,19,4] "
    "X[14,5,15,6] X[11,20,12,21] X[7,22,8,23] X[9,24,10,1] X[21,12,22,13] X[19,10,20,11]";
// The almost alternating diagram whose tangle has adj(u1,u2) = 3 and adj(v1,v2) = 0.
inline constexpr const char* kAdjacencyExample =
    "X[11,5,12,4] X[12,10,1,9] X[7,3,8,2] X[1,13,2,16] X[3,14,4,15] X[15,9,16,8] X[13,6,14,7] X[5,11,6,10]";
inline constexpr int kAdjacencyExampleDealternator = 1;

// Jones polynomials of the eleven 12-crossing knots obstructed by the extreme-coefficient test.
inline constexpr const char* kTable1[][2] = {
    {"12n253", "-2t^{-8}+ 4t^{-7}-7t^{-6}+ 9t^{-5}-9t^{-4}+ 10t^{-3}-7t^{-2}+ 5t^{-1}-2"},
    {"12n254", "3t^2-5t^3+ 9t^4-11t^5+ 11t^6-11t^7+ 8t^8-5t^9+ 2t^{10}"},
    {"12n280", "2t^{-1}-4+ 7t-8t^2+ 9t^3-9t^4+ 6t^5-4t^6+ 2t^7"},
    {"12n323", "-2t^{-5}+ 4t^{-4}-6t^{-3}+ 9t^{-2}-9t^{-1}+ 9-7t+ 5t^2-2t^3"},
    {"12n356", "2t^{-4}-5t^{-3}+ 8t^{-2}-10t^{-1}+ 11-10t+ 8t^2-5t^3+ 2t^4"},
    {"12n375", "2t^2-4t^3+ 8t^4-9t^5+ 10t^6-10t^7+ 7t^8-5t^9+ 2t^{10}"},
    {"12n452", "2t^{-1}-4+ 7t-9t^2+ 10t^3-9t^4+ 7t^5-5t^6+ 2t^7"},
    {"12n706", "2t^{-4}-4t^{-3}+ 6t^{-2}-8t^{-1}+ 9-8t+ 6t^2-4t^3+ 2t^4"},
    {"12n729", "3t^2-6t^3+ 10t^4-12t^5+ 13t^6-12t^7+ 9t^8-6t^9+ 2t^{10}"},
    {"12n811", "-2+ 6t-8t^2+ 11t^3-11t^4+ 10t^5-8t^6+ 5t^7-2t^8"},
    {"12n873", "3t^{-4}-7t^{-3}+ 11t^{-2}-14t^{-1}+ 15-14t+ 11t^2-7t^3+ 3t^4"},
};
inline constexpr const char* k11n95 = "2t^2 - 3t^3 + 5t^4 - 6t^5 + 6t^6 - 5t^7 + 4t^8 - 2t^9";

}  // namespace fixtures

#endif  // KNOTINV_TESTS_FIXTURES_HPP
