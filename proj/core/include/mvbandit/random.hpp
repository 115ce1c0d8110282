#pragma once
#include <cmath>
#include <cstdint>
#include <random>

namespace mvbandit {

using Rng = std::mt19937_64;

// splitmix64 finalizer; decorrelates seeds derived from (base, stream index)
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream seed for realization `stream_index` of an experiment with `base_seed`.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t stream_index) {
  return splitmix64(splitmix64(base_seed) ^ stream_index);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform in [0,1) with 53-bit resolution; exactly one engine call.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller, two engine calls, no cached spare
// (keeps the stream position a pure function of the draw count).
inline double standard_normal(Rng& rng) {
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
  const double u2 = uniform01(rng);
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace mvbandit
