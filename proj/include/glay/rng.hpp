#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace glay {

// splitmix64 finalizer; used to derive independent sub-seeds from one seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seeded generator with hand-rolled value mappings.  std::mt19937_64 itself is
// bit-exact everywhere, but the std distributions are not; mapping raw words
// ourselves keeps identical seeds giving identical layouts on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform in [0, n); n == 0 returns 0.  Plain modulo: the tiny bias is
  // irrelevant for layout purposes and the result is platform-stable.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  // Fisher-Yates with our own index draws (std::shuffle leaves the
  // permutation up to the library implementation).
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Unit vector at a deterministic pseudo-random angle.
  std::pair<double, double> unit_vec() {
    double a = uniform() * 6.283185307179586476925287;
    return {std::cos(a), std::sin(a)};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace glay
