#pragma once

#include <array>
#include <string>
#include <vector>

#include "eprgame/rational.hpp"

namespace eprgame {

constexpr int ALICE = 0, BOB = 1, CHRIS = 2;

// The six payoff constants of the symmetric three-player, two-strategy game.
// No range restriction here; whether they form a generalized Prisoner's
// Dilemma is a separate check (validate_pd).
struct GameParams {
  Rational alpha, beta, delta, epsilon, theta, omega;
};

// Each player's two pure strategies: the first coin/direction vs the second.
enum class Strategy { First, Second };

// (Alice, Bob, Chris)
using PureProfile = std::array<Strategy, 3>;

// Toss/measurement outcome per player: Plus ~ +1 (head), Minus ~ -1 (tail).
enum class Outcome { Plus, Minus };

using OutcomeTriple = std::array<Outcome, 3>;

struct PayoffTriple {
  Rational alice, bob, chris;

  Rational& operator[](int player) {
    return player == ALICE ? alice : player == BOB ? bob : chris;
  }
  const Rational& operator[](int player) const {
    return player == ALICE ? alice : player == BOB ? bob : chris;
  }
  bool operator==(const PayoffTriple& other) const {
    return alice == other.alice && bob == other.bob && chris == other.chris;
  }
};

// Payoff rows of the symmetric game, keyed by how many players chose their
// second strategy:
//   none  -> (alpha, alpha, alpha)
//   one   -> beta for that player, delta for the other two
//   two   -> epsilon for the lone holdout, theta for the two
//   all   -> (omega, omega, omega)
inline PayoffTriple payoff_table(const GameParams& g, const PureProfile& profile) {
  int seconds = 0;
  for (Strategy s : profile)
    if (s == Strategy::Second) ++seconds;
  PayoffTriple out{Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < 3; ++i) {
    bool second = profile[i] == Strategy::Second;
    switch (seconds) {
      case 0: out[i] = g.alpha; break;
      case 1: out[i] = second ? g.beta : g.delta; break;
      case 2: out[i] = second ? g.theta : g.epsilon; break;
      default: out[i] = g.omega; break;
    }
  }
  return out;
}

// Outcome +1 plays the First-strategy row, -1 the Second.
inline PureProfile profile_of_outcome(const OutcomeTriple& outcome) {
  PureProfile p;
  for (int i = 0; i < 3; ++i)
    p[i] = outcome[i] == Outcome::Plus ? Strategy::First : Strategy::Second;
  return p;
}

inline PayoffTriple payoff_for_outcome(const GameParams& g, const OutcomeTriple& outcome) {
  return payoff_table(g, profile_of_outcome(outcome));
}

// One violated generalized-PD condition. `group` is the condition family:
// 'a' dominance, 'b' monotonicity in cooperating opponents, 'c' pairwise PD.
struct PdViolation {
  char group;
  std::string condition;
  Rational lhs, rhs;  // the condition demanded lhs > rhs strictly
};

// Checks every generalized three-player PD inequality; all are strict, so
// equality counts as a violation. Empty result = valid PD.
inline std::vector<PdViolation> validate_pd(const GameParams& g) {
  std::vector<PdViolation> out;
  auto require = [&](char group, const char* name, const Rational& lhs, const Rational& rhs) {
    if (!(lhs > rhs)) out.push_back({group, name, lhs, rhs});
  };
  require('a', "beta > alpha", g.beta, g.alpha);
  require('a', "omega > epsilon", g.omega, g.epsilon);
  require('a', "theta > delta", g.theta, g.delta);
  require('b', "beta > theta", g.beta, g.theta);
  require('b', "theta > omega", g.theta, g.omega);
  require('b', "alpha > delta", g.alpha, g.delta);
  require('b', "delta > epsilon", g.delta, g.epsilon);
  require('c', "delta > omega", g.delta, g.omega);
  require('c', "alpha > theta", g.alpha, g.theta);
  require('c', "delta > (epsilon + theta)/2", g.delta, Rational(g.epsilon + g.theta) / 2);
  require('c', "alpha > (delta + beta)/2", g.alpha, Rational(g.delta + g.beta) / 2);
  return out;
}

inline const std::array<PureProfile, 8>& all_pure_profiles() {
  using enum Strategy;
  static const std::array<PureProfile, 8> profiles = {{
      {First, First, First},
      {Second, First, First},
      {First, Second, First},
      {First, First, Second},
      {First, Second, Second},
      {Second, First, Second},
      {Second, Second, First},
      {Second, Second, Second},
  }};
  return profiles;
}

inline const std::array<OutcomeTriple, 8>& all_outcome_triples() {
  using enum Outcome;
  static const std::array<OutcomeTriple, 8> outcomes = {{
      {Plus, Plus, Plus},
      {Minus, Plus, Plus},
      {Plus, Minus, Plus},
      {Plus, Plus, Minus},
      {Plus, Minus, Minus},
      {Minus, Plus, Minus},
      {Minus, Minus, Plus},
      {Minus, Minus, Minus},
  }};
  return outcomes;
}

inline std::string strategy_name(int player, Strategy s) {
  static const char* names[2][3] = {{"S1", "S1'", "S1''"}, {"S2", "S2'", "S2''"}};
  return names[s == Strategy::Second ? 1 : 0][player];
}

inline std::string profile_name(const PureProfile& p) {
  return "(" + strategy_name(ALICE, p[ALICE]) + "," + strategy_name(BOB, p[BOB]) + "," +
         strategy_name(CHRIS, p[CHRIS]) + ")";
}

}  // namespace eprgame
