#pragma once

#include <cstdint>

// Counter-based random streams. Every draw is a pure function of
// (seed, key words), so work can be split across threads in any order
// without changing a single bit of output.

namespace strongmatch::rng {

constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t stream(std::uint64_t seed, std::uint64_t a,
                               std::uint64_t b = 0x6a09e667f3bcc908ULL,
                               std::uint64_t c = 0xbb67ae8584caa73bULL) {
    std::uint64_t s = mix64(seed);
    s = mix64(s ^ a);
    s = mix64(s ^ b);
    s = mix64(s ^ c);
    return s;
}

// 53-bit uniform in [0, 1).
constexpr double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double uniform(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0x6a09e667f3bcc908ULL,
                         std::uint64_t c = 0xbb67ae8584caa73bULL) {
    return to_unit(stream(seed, a, b, c));
}

} // namespace strongmatch::rng
