#pragma once

#include <cstdint>
#include <vector>

namespace morsepres {

// SplitMix64. Self-contained so that seeded runs and certificates are
// reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), rejection sampled
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~0ULL) / n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

// Splittable per-trial stream: mix the global seed, then fold in the trial
// index through a second mix. Trial streams are independent of how many
// workers consume them.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t trial) {
  Rng a(seed);
  const std::uint64_t s = a.next();
  Rng b(s ^ (trial + 0x9e3779b97f4a7c15ULL));
  return b.next();
}

}  // namespace morsepres
