#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "eprgame/epr.hpp"
#include "eprgame/rng.hpp"

namespace eprgame {

struct SimulationConfig {
  JointDistribution distribution;
  MixedProfile profile;
  std::uint64_t runs = 1;
  std::uint64_t seed = 0;
};

struct SimulationResult {
  PayoffTriple mean;                        // exact sample means
  std::array<double, 3> mean_value;         // double view of the means
  std::array<double, 3> standard_error;     // sample std dev / sqrt(runs)
  std::array<std::uint64_t, 8> block_visits;
  std::array<std::uint64_t, 64> index_visits;  // sampled joint outcomes, 1-based minus one
  std::uint64_t runs;
  std::uint64_t seed;
};

// Monte Carlo referee for six-coin/EPR play. Each run: sample the three
// coin/direction choices from (x,y,z), sample an outcome triple from the
// chosen block's conditional distribution, accumulate the outcome payoffs.
// Payoff sums stay exact rationals; doubles appear only in the report.
// Run i draws from substream(seed, i), so the result is independent of any
// partitioning of runs across workers.
inline SimulationResult simulate_runs(const GameParams& g, const SimulationConfig& config) {
  if (config.runs < 1) throw RangeError("simulate_runs requires runs >= 1");
  validate_profile(config.profile);
  detail::require_normalized(config.distribution, "simulate_runs");

  std::array<Rational, 3> sum{Rational(0), Rational(0), Rational(0)};
  std::array<Rational, 3> sum_sq{Rational(0), Rational(0), Rational(0)};
  std::array<std::uint64_t, 8> visits{};
  std::array<std::uint64_t, 64> index_visits{};

  for (std::uint64_t run = 0; run < config.runs; ++run) {
    SplitMix64 rng = substream(config.seed, run);
    PureProfile strategies;
    for (int i = 0; i < 3; ++i)
      strategies[i] =
          draw_bernoulli(rng, config.profile[i]) ? Strategy::First : Strategy::Second;
    BlockIndex block{strategies};
    int base = 8 * (block.number() - 1);
    ++visits[block.number() - 1];
    int pos = 1 + draw_categorical(
                      rng, std::span<const Rational>(&config.distribution.p[base], 8));
    ++index_visits[base + pos - 1];
    PayoffTriple payoff = payoff_for_outcome(g, outcome_of_position(pos));
    for (int i = 0; i < 3; ++i) {
      sum[i] += payoff[i];
      sum_sq[i] += payoff[i] * payoff[i];
    }
  }

  SimulationResult result;
  result.runs = config.runs;
  result.seed = config.seed;
  result.block_visits = visits;
  result.index_visits = index_visits;
  Rational n(static_cast<unsigned long>(config.runs));
  for (int i = 0; i < 3; ++i) {
    Rational mean(sum[i] / n);
    result.mean[i] = mean;
    result.mean_value[i] = mean.get_d();
    if (config.runs >= 2) {
      Rational variance((sum_sq[i] - n * mean * mean) / Rational(n - 1));
      if (variance < 0) variance = 0;  // exact arithmetic should prevent this
      result.standard_error[i] = std::sqrt(Rational(variance / n).get_d());
    } else {
      result.standard_error[i] = 0.0;
    }
  }
  return result;
}

}  // namespace eprgame
