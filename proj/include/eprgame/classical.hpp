#pragma once

#include <array>
#include <utility>
#include <vector>

#include "eprgame/errors.hpp"
#include "eprgame/game.hpp"

namespace eprgame {

// (x, y, z): per-player probabilities of flipping (three-coin play) or of
// choosing the first coin/direction (six-coin and EPR play).
struct MixedProfile {
  Rational x, y, z;

  Rational& operator[](int player) { return player == ALICE ? x : player == BOB ? y : z; }
  const Rational& operator[](int player) const {
    return player == ALICE ? x : player == BOB ? y : z;
  }
};

inline void validate_profile(const MixedProfile& p) {
  for (int i = 0; i < 3; ++i)
    if (p[i] < 0 || p[i] > 1)
      throw RangeError("profile probability out of [0,1]: " + format_rational(p[i]));
}

struct PlayerMargin {
  Rational margin;     // payoff(profile) - payoff(worst unilateral endpoint deviation)
  Rational deviation;  // the binding deviation probability (0 or 1)
};

struct NEReport {
  std::array<PlayerMargin, 3> player;
  bool is_nash;  // all margins >= 0 (equality allowed)
};

// Payoffs are affine in each player's own probability, so it is enough to
// check the endpoint deviations 0 and 1 (skipping the profile's own value at
// a corner). `payoff_of` maps a MixedProfile to a PayoffTriple.
template <class PayoffFn>
NEReport endpoint_ne_report(PayoffFn&& payoff_of, const MixedProfile& profile) {
  const PayoffTriple at_profile = payoff_of(profile);
  NEReport report;
  report.is_nash = true;
  for (int i = 0; i < 3; ++i) {
    bool have = false;
    PlayerMargin best{Rational(0), Rational(0)};
    for (int endpoint = 0; endpoint <= 1; ++endpoint) {
      if (profile[i] == endpoint) continue;
      MixedProfile dev = profile;
      dev[i] = endpoint;
      Rational margin = at_profile[i] - payoff_of(dev)[i];
      if (!have || margin < best.margin) best = {margin, Rational(endpoint)};
      have = true;
    }
    report.player[i] = best;
    if (best.margin < 0) report.is_nash = false;
  }
  return report;
}

// Mixed-strategy payoffs of three-coin play: the trilinear mixture of the
// pure rows, with probability x of playing the first strategy. Under the
// flip association, (1,1,1) weights the (S1,S1',S1'') row.
inline PayoffTriple mixed_payoff_classical(const GameParams& g, const MixedProfile& profile) {
  validate_profile(profile);
  PayoffTriple total{Rational(0), Rational(0), Rational(0)};
  for (const PureProfile& pure : all_pure_profiles()) {
    Rational weight(1);
    for (int i = 0; i < 3; ++i)
      weight *= pure[i] == Strategy::First ? profile[i] : Rational(1 - profile[i]);
    PayoffTriple row = payoff_table(g, pure);
    for (int i = 0; i < 3; ++i) total[i] += weight * row[i];
  }
  return total;
}

inline NEReport is_nash_classical(const GameParams& g, const MixedProfile& profile) {
  validate_profile(profile);
  return endpoint_ne_report([&](const MixedProfile& p) { return mixed_payoff_classical(g, p); },
                            profile);
}

// All pure profiles that survive every unilateral pure deviation.
inline std::vector<PureProfile> enumerate_pure_ne(const GameParams& g) {
  std::vector<PureProfile> out;
  for (const PureProfile& profile : all_pure_profiles()) {
    PayoffTriple at_profile = payoff_table(g, profile);
    bool nash = true;
    for (int i = 0; i < 3 && nash; ++i) {
      PureProfile dev = profile;
      dev[i] = dev[i] == Strategy::First ? Strategy::Second : Strategy::First;
      if (at_profile[i] < payoff_table(g, dev)[i]) nash = false;
    }
    if (nash) out.push_back(profile);
  }
  return out;
}

}  // namespace eprgame
