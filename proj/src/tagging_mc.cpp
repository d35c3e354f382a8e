#include "kaonbell/tagging_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "kaonbell/error.hpp"
#include "kaonbell/simd/kernels.hpp"

namespace kaonbell {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t count_chunk(std::uint64_t seed, std::uint64_t chunk, std::uint64_t events,
                          std::uint64_t threshold, std::vector<std::uint64_t>& buffer) {
  std::mt19937_64 engine(splitmix64(seed + chunk * kGoldenGamma));
  buffer.resize(events);
  for (auto& draw : buffer) draw = engine();
  return simd::count_below(buffer, threshold);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGoldenGamma;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t tag_threshold(double probability) {
  if (!(probability > 0.0)) return 0;
  const double scaled = std::ldexp(probability, 64);
  if (scaled >= 18446744073709551616.0) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(scaled);
}

McResult sample_kl_tags(const McConfig& cfg) {
  if (cfg.n_events < 1) {
    throw InvalidInput("Monte Carlo needs at least one event");
  }
  const double p_plus = std::norm(cfg.mix.p()) / cfg.mix.norm_squared();
  const std::uint64_t threshold = tag_threshold(p_plus);
  const std::uint64_t chunks = (cfg.n_events + kChunkEvents - 1) / kChunkEvents;

  unsigned workers = cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  std::vector<std::uint64_t> per_chunk(chunks, 0);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    std::vector<std::uint64_t> buffer;
    for (std::uint64_t k = next++; k < chunks; k = next++) {
      const std::uint64_t begin = k * kChunkEvents;
      const std::uint64_t events = std::min(kChunkEvents, cfg.n_events - begin);
      per_chunk[k] = count_chunk(cfg.seed, k, events, threshold, buffer);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::uint64_t n_plus = 0;
  for (const auto c : per_chunk) n_plus += c;
  const std::uint64_t n_minus = cfg.n_events - n_plus;
  const double n = static_cast<double>(cfg.n_events);
  const double delta_hat = (static_cast<double>(n_plus) - static_cast<double>(n_minus)) / n;
  const double std_error = std::sqrt(std::max(0.0, 1.0 - delta_hat * delta_hat) / n);
  return {n_plus, n_minus, delta_hat, std_error, kGeneratorName};
}

std::uint64_t required_events(double delta, double n_sigma) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidInput("required_events needs delta in (0, 1)");
  }
  if (!(n_sigma > 0.0) || !std::isfinite(n_sigma)) {
    throw InvalidInput("required_events needs a positive finite significance");
  }
  const double spread = std::sqrt(1.0 - delta * delta);
  const auto significant = [&](std::uint64_t n) {
    return delta * std::sqrt(static_cast<double>(n)) >= n_sigma * spread;
  };
  const double estimate = std::ceil(n_sigma * n_sigma * (1.0 - delta * delta) / (delta * delta));
  if (!(estimate < 9.0e18)) {
    throw InvalidInput("required_events: sample size overflows 64 bits");
  }
  std::uint64_t n = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(estimate));
  while (n > 1 && significant(n - 1)) --n;
  while (!significant(n)) ++n;
  return n;
}

}  // namespace kaonbell
