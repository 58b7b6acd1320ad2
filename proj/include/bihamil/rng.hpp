#pragma once
#include <cstdint>

#include "rational.hpp"

namespace bihamil {

// splitmix64; deterministic across platforms
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // uniform integer in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // rational with numerator in [-nmax, nmax] and denominator in [1, dmax]
  Rational rational(long nmax, long dmax) {
    return Rational(range(-nmax, nmax), range(1, dmax));
  }

  // nonzero variant
  Rational nonzero_rational(long nmax, long dmax) {
    for (;;) {
      Rational r = rational(nmax, dmax);
      if (r != 0) return r;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace bihamil
