#pragma once

#include <cstdint>
#include <span>

#include "eprgame/rational.hpp"

namespace eprgame {

// SplitMix64 (Steele, Lea & Flood 2014). State advances by the golden-gamma
// constant and each output is the 64-bit xor-shift-multiply finalizer of the
// new state:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Every seeded draw in this project goes through this generator so results
// are bit-stable across platforms and runs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Independent substream k of a master seed: a SplitMix64 seeded with one
// finalized draw of (seed + (k+1) * golden-gamma). Simulation runs and search
// candidates each own substream(seed, index), so results do not depend on
// evaluation order or on how work is partitioned across workers.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t k) {
  SplitMix64 g(seed + (k + 1) * 0x9E3779B97F4A7C15ull);
  return SplitMix64(g.next());
}

inline const mpz_class& two_pow_64() {
  static const mpz_class value = mpz_class(1) << 64;
  return value;
}

// raw / 2^64 as an exact rational in [0,1).
inline Rational unit_rational(std::uint64_t raw) {
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
  Rational q(num, two_pow_64());
  q.canonicalize();
  return q;
}

inline Rational draw_unit(SplitMix64& g) { return unit_rational(g.next()); }

// True with probability p exactly (p in [0,1]).
inline bool draw_bernoulli(SplitMix64& g, const Rational& p) { return draw_unit(g) < p; }

// Index into `probs` (assumed nonnegative, summing to 1) by inversion of the
// cumulative distribution.
inline int draw_categorical(SplitMix64& g, std::span<const Rational> probs) {
  Rational u = draw_unit(g);
  Rational cumulative(0);
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    cumulative += probs[i];
    if (u < cumulative) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace eprgame
