#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace hlab {

/// Seeded generator used by every sampler. Streams for independent workers are
/// derived from a master seed with derive_seed so results never depend on
/// scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// FNV-1a over the bytes of text.
std::uint64_t stable_hash(std::string_view text);

/// Seed of a named sub-stream: splitmix64(master ^ stable_hash(stream)).
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace hlab
