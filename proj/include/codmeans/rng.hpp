#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace codmeans {

// Deterministic random source. All randomness in the toolkit flows from a
// single experiment seed through named sub-streams, so individual components
// (initialization, pair sampling, fixtures) stay reproducible in isolation.
//
// Draw helpers are implemented here instead of <random> distributions because
// distribution output is not pinned by the standard; engine output is.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t seed, std::string_view name) {
    // FNV-1a over the stream name, mixed into the seed.
    std::uint64_t h = 14695981039346656037ull;
    for (char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return Rng(seed ^ h);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n); n must be > 0.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform_double(double lo, double hi) {
    return lo + (hi - lo) * uniform_double();
  }

  // Standard normal deviate (Box-Muller).
  double normal() {
    double u1 = uniform_double();
    double u2 = uniform_double();
    while (u1 <= 0.0) u1 = uniform_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform_index(i)]);
    }
  }

  // First k elements of a seeded shuffle: a uniform sample without
  // replacement, preserving nothing about the original order.
  template <typename T>
  std::vector<T> sample(std::vector<T> items, std::size_t k) {
    if (k > items.size()) k = items.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + uniform_index(items.size() - i);
      std::swap(items[i], items[j]);
    }
    items.resize(k);
    return items;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace codmeans
