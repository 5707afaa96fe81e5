#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "eprgame/classical.hpp"
#include "eprgame/joint_distribution.hpp"

namespace eprgame {

// Coefficients of the reduced Nash inequalities for factorizable play with
// the second coins never showing +1.
struct ReducedCoefficients {
  Rational delta1, delta2, delta3;
};

inline ReducedCoefficients reduced_coefficients(const GameParams& g) {
  return {Rational(g.alpha - g.beta - 2 * g.delta + 2 * g.theta + g.epsilon - g.omega),
          Rational(g.delta - g.epsilon - g.theta + g.omega),
          Rational(g.epsilon - g.omega)};
}

// The ten free joint probabilities from which the other seventeen nonzero
// entries follow linearly: p1, p3, p5, p6, p13, p15, p18, p20, p22, p27.
struct CompletionInput {
  std::array<Rational, 10> values;
};

inline const std::array<int, 10>& independent_indices() {
  static const std::array<int, 10> idx = {1, 3, 5, 6, 13, 15, 18, 20, 22, 27};
  return idx;
}

inline const std::array<int, 17>& derived_indices() {
  static const std::array<int, 17> idx = {2, 4, 7, 8, 14, 16, 24, 28, 31, 32, 36, 40, 47, 48, 54, 56, 64};
  return idx;
}

// The unique solution of the normalization and causal-communication
// constraints over the 27 permitted entries, as closed forms in the ten
// independents. Templated so the same formulas serve both exact evaluation
// (T = Rational) and symbolic use by the search module (T = affine form).
// Returns all 64 entries 1-based; [0] is unused and the 37 embedded zeros
// are T(0).
template <class T>
std::array<T, 65> completion_entries(const std::array<T, 10>& q) {
  std::array<T, 65> p;
  p.fill(T(0));
  const T &p1 = q[0], &p3 = q[1], &p5 = q[2], &p6 = q[3], &p13 = q[4], &p15 = q[5],
          &p18 = q[6], &p20 = q[7], &p22 = q[8], &p27 = q[9];
  p[1] = p1;
  p[3] = p3;
  p[5] = p5;
  p[6] = p6;
  p[13] = p13;
  p[15] = p15;
  p[18] = p18;
  p[20] = p20;
  p[22] = p22;
  p[27] = p27;

  auto combine = [](std::initializer_list<const T*> plus, std::initializer_list<const T*> minus) {
    T v(0);
    for (const T* a : plus) v += *a;
    for (const T* a : minus) v -= *a;
    return v;
  };
  const T one(1);

  p[2] = combine({&p18, &p22}, {&p1, &p5, &p6});
  p[7] = combine({&p13, &p15}, {&p1, &p3, &p5});
  p[4] = combine({&p18, &p20}, {&p1, &p[2], &p3});
  p[8] = combine({&one}, {&p1, &p[2], &p3, &p[4], &p5, &p6, &p[7]});
  p[14] = combine({&p1, &p[2], &p5, &p6}, {&p13});
  p[16] = combine({&one}, {&p13, &p[14], &p15});
  p[24] = combine({&one}, {&p18, &p20, &p22});
  p[28] = combine({&p1, &p[2], &p3, &p[4]}, {&p27});
  p[31] = combine({&p1, &p3, &p5, &p[7]}, {&p27});
  p[32] = combine({&one}, {&p27, &p[28], &p[31]});
  p[36] = combine({&p1, &p[2], &p3, &p[4]}, {});
  p[40] = combine({&one}, {&p[36]});
  p[47] = combine({&p1, &p3, &p5, &p[7]}, {});
  p[48] = combine({&one}, {&p[47]});
  p[54] = combine({&p1, &p[2], &p5, &p6}, {});
  p[56] = combine({&one}, {&p[54]});
  p[64] = one;
  return p;
}

// Completes the ten independents to the full 64-entry distribution, or throws
// InfeasibleError naming the first derived entry leaving [0,1].
inline JointDistribution complete_distribution(const CompletionInput& input) {
  for (int k = 0; k < 10; ++k)
    if (input.values[k] < 0 || input.values[k] > 1)
      throw RangeError("independent p" + std::to_string(independent_indices()[k]) +
                       " out of [0,1]: " + format_rational(input.values[k]));
  std::array<Rational, 65> entries = completion_entries(input.values);
  for (int idx : derived_indices())
    if (entries[idx] < 0 || entries[idx] > 1)
      throw InfeasibleError("p" + std::to_string(idx),
                            "derived entry p" + std::to_string(idx) + " = " +
                                format_rational(entries[idx]) + " lies outside [0,1]");
  JointDistribution d;
  for (int i = 1; i <= 64; ++i) d.at(i) = entries[i];
  return d;
}

inline CompletionInput read_independents(const JointDistribution& d) {
  CompletionInput input;
  for (int k = 0; k < 10; ++k) input.values[k] = d.at(independent_indices()[k]);
  return input;
}

namespace detail {

inline PayoffTriple pure_payoffs_unchecked(const GameParams& g, const JointDistribution& d,
                                           const BlockIndex& block) {
  PayoffTriple total{Rational(0), Rational(0), Rational(0)};
  int base = 8 * (block.number() - 1);
  for (int pos = 1; pos <= 8; ++pos) {
    const Rational& weight = d.at(base + pos);
    if (weight == 0) continue;
    PayoffTriple row = payoff_for_outcome(g, outcome_of_position(pos));
    for (int i = 0; i < 3; ++i) total[i] += weight * row[i];
  }
  return total;
}

inline PayoffTriple mixed_payoff_unchecked(const GameParams& g, const JointDistribution& d,
                                           const MixedProfile& profile) {
  PayoffTriple total{Rational(0), Rational(0), Rational(0)};
  for (int block = 1; block <= 8; ++block) {
    BlockIndex bi = BlockIndex::from_number(block);
    Rational weight(1);
    for (int i = 0; i < 3; ++i)
      weight *= bi.strategies[i] == Strategy::First ? profile[i] : Rational(1 - profile[i]);
    if (weight == 0) continue;
    PayoffTriple row = pure_payoffs_unchecked(g, d, bi);
    for (int i = 0; i < 3; ++i) total[i] += weight * row[i];
  }
  return total;
}

inline void require_normalized(const JointDistribution& d, const char* op) {
  if (!check_normalization(d).ok)
    throw InvalidInputError(std::string(op) + " requires a normalized distribution");
}

}  // namespace detail

// Expected payoffs when all three players commit to the block's strategies
// and outcomes follow the block's conditional distribution.
inline PayoffTriple epr_pure_payoffs(const GameParams& g, const JointDistribution& d,
                                     const BlockIndex& block) {
  detail::require_normalized(d, "epr_pure_payoffs");
  return detail::pure_payoffs_unchecked(g, d, block);
}

// Trilinear mixture over the eight blocks; x is each player's probability of
// choosing the first coin/direction.
inline PayoffTriple epr_mixed_payoff(const GameParams& g, const JointDistribution& d,
                                     const MixedProfile& profile) {
  validate_profile(profile);
  detail::require_normalized(d, "epr_mixed_payoff");
  return detail::mixed_payoff_unchecked(g, d, profile);
}

inline NEReport epr_is_nash(const GameParams& g, const JointDistribution& d,
                            const MixedProfile& profile) {
  validate_profile(profile);
  detail::require_normalized(d, "epr_is_nash");
  return endpoint_ne_report(
      [&](const MixedProfile& p) { return detail::mixed_payoff_unchecked(g, d, p); }, profile);
}

// The payoff ratios appearing in the (C,C,C) inequalities.
struct GameRatios {
  Rational alpha_beta, theta_beta, delta_theta, omega_beta, epsilon_omega;
};

inline GameRatios game_ratios(const GameParams& g) {
  if (g.beta == 0 || g.theta == 0 || g.omega == 0)
    throw RangeError("ratio form requires beta, theta, omega nonzero");
  return {Rational(g.alpha / g.beta), Rational(g.theta / g.beta), Rational(g.delta / g.theta),
          Rational(g.omega / g.beta), Rational(g.epsilon / g.omega)};
}

inline Rational scale_value(const Rational& c, const Rational& v) { return Rational(c * v); }
inline double scale_value(const Rational& c, double v) { return c.get_d() * v; }

// The three (C,C,C) Nash left-hand sides in ratio form, e.g. for Alice
//   {p5 + (a/b)p1 - p13} + (t/b){p6+p7-p14-p15 + (d/t)(p2+p3)}
//                        + (w/b){p8 - p16 + (e/w)p4}.
// `entry(i)` supplies p_i; T is Rational or an affine form over the
// independents.
template <class T, class EntryFn>
std::array<T, 3> ccc_margin_forms(const GameRatios& ratios, EntryFn&& entry) {
  auto lhs = [&](int head_add, int head_sub, int mid_add1, int mid_add2, int mid_sub1,
                 int mid_sub2, int pair1, int pair2, int tail_sub, int tail_eps) {
    T value = entry(head_add);
    value += scale_value(ratios.alpha_beta, entry(1));
    value -= entry(head_sub);
    T mid = entry(mid_add1);
    mid += entry(mid_add2);
    mid -= entry(mid_sub1);
    mid -= entry(mid_sub2);
    T pair = entry(pair1);
    pair += entry(pair2);
    mid += scale_value(ratios.delta_theta, pair);
    value += scale_value(ratios.theta_beta, mid);
    T tail = entry(8);
    tail -= entry(tail_sub);
    tail += scale_value(ratios.epsilon_omega, entry(tail_eps));
    value += scale_value(ratios.omega_beta, tail);
    return value;
  };
  return {lhs(5, 13, 6, 7, 14, 15, 2, 3, 16, 4),
          lhs(2, 18, 4, 6, 20, 22, 3, 5, 24, 7),
          lhs(3, 27, 4, 7, 28, 31, 2, 5, 32, 6)};
}

namespace detail {

inline void require_embedded(const JointDistribution& d, const char* op) {
  require_normalized(d, op);
  if (!check_embedding_zeros(d).ok)
    throw InvalidInputError(std::string(op) + " requires the embedded zeros to hold");
}

}  // namespace detail

// Per-player (C,C,C) deviation margins normalized by beta. Evaluated in the
// printed ratio form and cross-checked against the generic payoff
// differences; a mismatch would mean a transcription bug, hence logic_error.
inline std::array<Rational, 3> ccc_margins(const GameParams& g, const JointDistribution& d) {
  detail::require_embedded(d, "ccc_margins");
  if (g.beta == 0) throw RangeError("ccc_margins requires beta nonzero");
  PayoffTriple at_ccc = detail::pure_payoffs_unchecked(g, d, BlockIndex::from_number(1));
  std::array<Rational, 3> generic;
  for (int i = 0; i < 3; ++i) {
    BlockIndex dev = BlockIndex::from_number(2 + i);  // lone defector per player
    generic[i] =
        Rational((at_ccc[i] - detail::pure_payoffs_unchecked(g, d, dev)[i]) / g.beta);
  }
  if (g.theta == 0 || g.omega == 0) return generic;  // ratio form undefined
  std::array<Rational, 3> printed =
      ccc_margin_forms<Rational>(game_ratios(g), [&](int i) { return d.at(i); });
  for (int i = 0; i < 3; ++i)
    if (printed[i] != generic[i])
      throw std::logic_error("ccc margin ratio form disagrees with payoff differences");
  return printed;
}

// Per-player (0,0,0) deviation margins in payoff units; closed forms
// (p36, p47, p54) * (omega - epsilon), cross-checked like ccc_margins.
inline std::array<Rational, 3> ddd_margins(const GameParams& g, const JointDistribution& d) {
  detail::require_embedded(d, "ddd_margins");
  Rational gap(g.omega - g.epsilon);
  std::array<Rational, 3> closed = {Rational(d.at(36) * gap), Rational(d.at(47) * gap),
                                    Rational(d.at(54) * gap)};
  PayoffTriple at_ddd = detail::pure_payoffs_unchecked(g, d, BlockIndex::from_number(8));
  for (int i = 0; i < 3; ++i) {
    BlockIndex dev = BlockIndex::from_number(5 + i);  // lone cooperator per player
    Rational generic(at_ddd[i] - detail::pure_payoffs_unchecked(g, d, dev)[i]);
    if (generic != closed[i])
      throw std::logic_error("ddd margin closed form disagrees with payoff differences");
  }
  return closed;
}

// The bracketed factors of the reduced Nash inequalities for factorizable
// embedded play: player i prefers profile over deviation iff
// (own* - own) * bracket_i >= 0.
inline std::array<Rational, 3> reduced_factorizable_ne(const GameParams& g,
                                                       const CoinMarginals& m,
                                                       const MixedProfile& profile) {
  if (m.s != 0 || m.sp != 0 || m.spp != 0)
    throw InvalidInputError("reduced_factorizable_ne requires s = s' = s'' = 0");
  for (const Rational* q : {&m.r, &m.rp, &m.rpp})
    if (*q < 0 || *q > 1) throw RangeError("first-coin marginal out of [0,1]");
  validate_profile(profile);
  ReducedCoefficients k = reduced_coefficients(g);
  Rational rrr(m.r * m.rp * m.rpp);
  const Rational &x = profile.x, &y = profile.y, &z = profile.z;
  std::array<Rational, 3> bracket;
  bracket[ALICE] = Rational(y * z * rrr * k.delta1 + m.r * (z * m.rpp + y * m.rp) * k.delta2 +
                            m.r * k.delta3);
  bracket[BOB] = Rational(x * z * rrr * k.delta1 + m.rp * (z * m.rpp + x * m.r) * k.delta2 +
                          m.rp * k.delta3);
  bracket[CHRIS] = Rational(x * y * rrr * k.delta1 + m.rpp * (y * m.rp + x * m.r) * k.delta2 +
                            m.rpp * k.delta3);
  return bracket;
}

}  // namespace eprgame
