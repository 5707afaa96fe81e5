#pragma once

// Shared fixtures and independent oracles used across the test suites.

#include <array>

#include "eprgame/epr.hpp"
#include "eprgame/rng.hpp"

namespace testutil {

using namespace eprgame;

// A concrete parameter set satisfying every generalized-PD condition.
inline GameParams pd_fixture() {
  return {Rational(7), Rational(9), Rational(4), Rational(1), Rational(5), Rational(3)};
}

// The worked-example ratios scaled so beta = 100:
// alpha/beta = 9/10, theta/beta = 1/100, delta/theta = 1/5,
// omega/beta = 1/100, epsilon/omega = 9/10.
inline GameParams example_params() {
  return {Rational(90), Rational(100), ratio(1, 5), ratio(9, 10), Rational(1), Rational(1)};
}

inline CompletionInput example_independents() {
  return {{ratio(1, 10), ratio(13, 100), ratio(16, 100), ratio(1, 10), ratio(14, 100),
           ratio(2, 5), ratio(13, 100), ratio(1, 4), ratio(37, 100), ratio(1, 5)}};
}

// The worked-example distribution with all 27 nonzero entries hard-coded, so
// tests of the completion and the checks do not depend on each other.
inline JointDistribution example_distribution() {
  JointDistribution d;
  auto set = [&](int i, long num, long den) { d.at(i) = ratio(num, den); };
  set(1, 1, 10);
  set(2, 7, 50);
  set(3, 13, 100);
  set(4, 1, 100);
  set(5, 4, 25);
  set(6, 1, 10);
  set(7, 3, 20);
  set(8, 21, 100);
  set(13, 7, 50);
  set(14, 9, 25);
  set(15, 2, 5);
  set(16, 1, 10);
  set(18, 13, 100);
  set(20, 1, 4);
  set(22, 37, 100);
  set(24, 1, 4);
  set(27, 1, 5);
  set(28, 9, 50);
  set(31, 17, 50);
  set(32, 7, 25);
  set(36, 19, 50);
  set(40, 31, 50);
  set(47, 27, 50);
  set(48, 23, 50);
  set(54, 1, 2);
  set(56, 1, 2);
  set(64, 1, 1);
  return d;
}

inline JointDistribution uniform_distribution() {
  JointDistribution d;
  for (int i = 1; i <= 64; ++i) d.at(i) = ratio(1, 8);
  return d;
}

inline Rational rnd_grid(SplitMix64& g, long denominator) {  // k/denominator, k in 0..denominator
  return ratio(static_cast<long>(g.next() % (denominator + 1)), denominator);
}

inline Rational rnd_open01(SplitMix64& g, long denominator) {  // k/denominator, k in 1..denominator-1
  return ratio(1 + static_cast<long>(g.next() % (denominator - 1)), denominator);
}

// Constructive generator of parameters satisfying every generalized-PD
// inequality: build epsilon < omega < delta, then theta in (delta, 2delta -
// epsilon), alpha above theta, beta in (alpha, 2alpha - delta).
inline GameParams random_pd(SplitMix64& g) {
  Rational eps = rnd_grid(g, 32);
  Rational omega = eps + rnd_open01(g, 32);
  Rational delta = omega + rnd_open01(g, 32);
  Rational theta = delta + rnd_open01(g, 32) * (delta - eps);
  Rational alpha = theta + rnd_open01(g, 32);
  Rational beta = alpha + rnd_open01(g, 32) * (alpha - delta);
  return {alpha, beta, delta, eps, theta, omega};
}

inline CoinMarginals random_first_coins(SplitMix64& g) {  // r, r', r'' in (0,1], seconds zero
  auto pos = [&]() { return ratio(1 + static_cast<long>(g.next() % 64), 64); };
  return {pos(), pos(), pos(), Rational(0), Rational(0), Rational(0)};
}

}  // namespace testutil
