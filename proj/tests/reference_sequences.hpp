#pragma once

// Published totals over all labeled trees on n = 1..10 vertices, and the
// published limiting fractions. Index i holds the value for n = i + 1.

#include <array>
#include <cstdint>

namespace backbone::reference {

inline constexpr std::array<std::uint64_t, 10> kBrown{
    0, 0, 3, 4, 185, 1026, 30457, 362664, 10245825, 195060070};
inline constexpr std::array<std::uint64_t, 10> kRed{
    0, 2, 0, 48, 120, 4560, 35700, 1048992, 15514128, 456726240};
inline constexpr std::array<std::uint64_t, 10> kGreen{
    1, 0, 6, 12, 320, 2190, 51492, 685496, 17286768, 348213690};
inline constexpr std::array<std::uint64_t, 10> kVertexCovers{
    1, 2, 3, 40, 185, 3936, 35917, 978160, 14301513, 464105440};
inline constexpr std::array<std::uint64_t, 10> kMatchings{
    1, 1, 6, 24, 320, 3270, 55482, 999656, 21718440, 544829130};

inline constexpr double kBrownLimit = 0.2276096757;
inline constexpr double kRedLimit = 0.4104940676;
inline constexpr double kGreenLimit = 0.3618962567;
inline constexpr double kCoverLimit = 0.4328567095;

}  // namespace backbone::reference
