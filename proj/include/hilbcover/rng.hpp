#pragma once

#include <cstdint>

namespace hilbcover {

// Counter-based generator: every draw is a pure function of (seed, counter,
// stream), so sample batches can be evaluated in any order, or in parallel,
// without changing the result.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(std::uint64_t counter, std::uint64_t stream = 0) const {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (counter + 1) +
                      0xbf58476d1ce4e5b9ULL * (stream + 1);
    return mix(mix(z) ^ 0x94d049bb133111ebULL);
  }

  // uniform in [0,1)
  double u01(std::uint64_t counter, std::uint64_t stream = 0) const {
    return static_cast<double>(bits(counter, stream) >> 11) * 0x1.0p-53;
  }

  // uniform in [lo,hi)
  double uniform(double lo, double hi, std::uint64_t counter, std::uint64_t stream = 0) const {
    return lo + (hi - lo) * u01(counter, stream);
  }

  std::uint64_t index(std::uint64_t n, std::uint64_t counter, std::uint64_t stream = 0) const {
    return bits(counter, stream) % n;
  }

  CounterRng fork(std::uint64_t stream) const { return CounterRng(bits(0, stream ^ 0xabcdef12ULL)); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }
  std::uint64_t seed_;
};

// Deterministic in-place Fisher-Yates shuffle driven by a CounterRng.
template <typename Vector>
void shuffle(Vector& v, const CounterRng& rng, std::uint64_t stream = 0) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.index(i, i, stream));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace hilbcover
