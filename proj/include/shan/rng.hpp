#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace shan {

/// Seeded RNG with hand-rolled distributions. std::uniform_real_distribution
/// and std::shuffle are implementation-defined, which would break the
/// byte-identical reproducibility contract across toolchains, so everything
/// deterministic is derived from the raw mt19937_64 stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u in (0, 1] so log(u) is finite.
    double u = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    double theta = 2.0 * 3.14159265358979323846 * v;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  /// Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    // Multiply-shift keeps the mapping platform-stable.
    return static_cast<std::size_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Fisher-Yates with the stable index() mapping.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Derives an independent stream, e.g. one per epoch or per image.
  Rng fork(std::uint64_t stream) const {
    std::uint64_t x = seed_mix_ ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    x = x ^ (x >> 31);
    return Rng(x);
  }

  void note_seed(std::uint64_t seed) { seed_mix_ = seed; }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_mix_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Rng whose fork() streams are tied to the original seed.
inline Rng seeded_rng(std::uint64_t seed) {
  Rng r(seed);
  r.note_seed(seed);
  return r;
}

}  // namespace shan
