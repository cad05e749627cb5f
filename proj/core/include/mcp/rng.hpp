#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace mcp {

/// Deterministic random source. Every randomized operation in the library
/// draws through this wrapper: bounded draws and Bernoulli trials are
/// implemented on the raw engine output instead of the standard
/// distributions, whose sequences are implementation-defined, so a seed
/// reproduces bit-identical results on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased draw from [0, bound). bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    assert(bound >= 1);
    auto m = static_cast<unsigned __int128>(next()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  int index(std::size_t bound) { return static_cast<int>(next_below(bound)); }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// True with probability p. Consumes no draw when p is 0 or 1.
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return unit() < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[next_below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mcp
