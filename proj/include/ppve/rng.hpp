#pragma once

#include <cstdint>
#include <random>

namespace ppve {

using Rng = std::mt19937_64;

// SplitMix64 finaliser; a counter-based way to derive well-separated seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for (master seed, index triple).  Every replication in a
// parallel run derives its own stream this way, so results do not depend on
// the worker count or on scheduling order.
inline Rng make_stream(std::uint64_t master, std::uint64_t a = 0,
                       std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ splitmix64(a + 0x632be59bd9b4e019ULL));
  s = splitmix64(s ^ splitmix64(b + 0x9e6c63d0876a9a47ULL));
  s = splitmix64(s ^ splitmix64(c + 0xbf58476d1ce4e5b9ULL));
  return Rng(s);
}

}  // namespace ppve
