#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hawkesnn {

using Rng = std::mt19937_64;

// splitmix64 finaliser; good avalanche, used only for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Substream rule: every consumer of randomness derives its own seed from
// (master seed, purpose tag, index).  Streams are independent of thread
// scheduling, so parallel runs reproduce serial ones bit for bit.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                    std::uint64_t index = 0) {
  return mix64(mix64(master) ^ mix64(fnv1a(tag)) ^ mix64(index + 1));
}

inline Rng make_rng(std::uint64_t master, std::string_view tag,
                    std::uint64_t index = 0) {
  return Rng(derive_seed(master, tag, index));
}

// Fresh distribution objects per call: std distributions may carry state
// across draws, which would entangle substreams.
inline double draw_uniform(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double draw_normal(Rng& rng, double mean = 0.0, double sd = 1.0) {
  return std::normal_distribution<double>(mean, sd)(rng);
}

inline double draw_exponential(Rng& rng, double rate) {
  return std::exponential_distribution<double>(rate)(rng);
}

inline double draw_gamma(Rng& rng, double shape, double rate) {
  return std::gamma_distribution<double>(shape, 1.0 / rate)(rng);
}

inline long draw_poisson(Rng& rng, double mean) {
  return std::poisson_distribution<long>(mean)(rng);
}

}  // namespace hawkesnn
