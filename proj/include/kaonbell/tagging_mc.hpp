#pragma once

// Monte Carlo of K_L semileptonic tagging: each event is an l+ (K0 component)
// with probability |p|^2/N^2, else an l-. Electron and muon channels are not
// distinguished. Only the probability form of the asymmetry is sampled; decay
// rates are taken to be proportional to those probabilities.
//
// Generator: events are split into fixed chunks of kChunkEvents. Chunk k draws
// from std::mt19937_64 seeded with splitmix64(seed + k * 0x9E3779B97F4A7C15),
// and an event is l+ when the raw 64-bit draw is below floor(P(l+) * 2^64).
// Both algorithms are fully specified, so counts are identical on every
// platform and for every worker count.

#include <cstdint>
#include <string>

#include "kaonbell/quasispin.hpp"

namespace kaonbell {

inline constexpr std::uint64_t kChunkEvents = std::uint64_t{1} << 16;
inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64-chunked-65536";

struct McConfig {
  std::uint64_t n_events;
  std::uint64_t seed;
  MixingParameters mix;
  unsigned workers = 0;  // 0: std::thread::hardware_concurrency()
};

struct McResult {
  std::uint64_t n_plus;
  std::uint64_t n_minus;
  double delta_hat;  // (n_plus - n_minus) / n_events
  double std_error;  // sqrt((1 - delta_hat^2) / n_events)
  std::string generator;
};

/// splitmix64 finalizer, used to derive chunk seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Unsigned threshold t with P(draw < t) = probability for a uniform 64-bit draw.
std::uint64_t tag_threshold(double probability);

/// Throws InvalidInput for n_events < 1.
McResult sample_kl_tags(const McConfig& cfg);

/// Smallest n with delta sqrt(n) >= n_sigma sqrt(1 - delta^2).
/// Throws InvalidInput unless delta in (0, 1) and n_sigma > 0.
std::uint64_t required_events(double delta, double n_sigma);

}  // namespace kaonbell
