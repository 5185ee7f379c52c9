#pragma once

#include <cstdint>
#include <random>

namespace hlnet {

/// mt19937_64 with a platform-independent bounded draw (std distributions are
/// implementation-defined, which would break seed reproducibility).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold)
        return r % bound;
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace hlnet
