#pragma once

#include <cstdint>
#include <random>

namespace plslab {

// splitmix64: cheap, well-mixed stream used to derive per-trial / per-step
// seeds from a master seed.  Keeps every suite trial independently replayable
// from (master_seed, trial_index) alone.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master ^ mix64(stream + 0x632be59bd9b4e019ull));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

// Uniform integer in [lo, hi].  Thin wrapper so call sites stay terse.
inline long long rand_int(Rng& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  return d(rng);
}

inline bool rand_bernoulli(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  std::bernoulli_distribution d(p);
  return d(rng);
}

}  // namespace plslab
