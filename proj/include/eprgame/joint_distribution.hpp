#pragma once

#include <array>
#include <string>
#include <vector>

#include "eprgame/errors.hpp"
#include "eprgame/game.hpp"

namespace eprgame {

// Per-coin probabilities of outcome +1: r, r', r'' for the three first coins,
// s, s', s'' for the three second coins (Alice, Bob, Chris).
struct CoinMarginals {
  Rational r, rp, rpp, s, sp, spp;

  Rational first(int player) const { return player == ALICE ? r : player == BOB ? rp : rpp; }
  Rational second(int player) const { return player == ALICE ? s : player == BOB ? sp : spp; }
};

// Index layout of the 64 joint probabilities p_1..p_64.
//
// Blocks (strategy triples), eight entries each:
//   1 (S1,S1',S1'') -> p_1..p_8      5 (S1,S2',S2'') -> p_33..p_40
//   2 (S2,S1',S1'') -> p_9..p_16     6 (S2,S1',S2'') -> p_41..p_48
//   3 (S1,S2',S1'') -> p_17..p_24    7 (S2,S2',S1'') -> p_49..p_56
//   4 (S1,S1',S2'') -> p_25..p_32    8 (S2,S2',S2'') -> p_57..p_64
//
// Within a block, outcomes (Alice,Bob,Chris) are ordered
//   (+,+,+), (+,-,+), (+,+,-), (+,-,-), (-,+,+), (-,-,+), (-,+,-), (-,-,-)
// i.e. Alice's minus adds 4 to the position, Chris's adds 2, Bob's adds 1.
struct BlockIndex {
  PureProfile strategies;

  int number() const {  // 1..8, canonical order above
    static constexpr int block_of_bits[8] = {1, 2, 3, 7, 4, 6, 5, 8};
    int bits = 0;
    for (int i = 0; i < 3; ++i)
      if (strategies[i] == Strategy::Second) bits |= 1 << i;
    return block_of_bits[bits];
  }

  static BlockIndex from_number(int n) {
    if (n < 1 || n > 8) throw RangeError("block number out of 1..8");
    return BlockIndex{all_pure_profiles()[n - 1]};
  }
};

inline int outcome_position(const OutcomeTriple& outcome) {  // 1..8
  int pos = 1;
  if (outcome[ALICE] == Outcome::Minus) pos += 4;
  if (outcome[CHRIS] == Outcome::Minus) pos += 2;
  if (outcome[BOB] == Outcome::Minus) pos += 1;
  return pos;
}

inline OutcomeTriple outcome_of_position(int pos) {  // 1..8
  int b = pos - 1;
  return OutcomeTriple{(b & 4) ? Outcome::Minus : Outcome::Plus,
                       (b & 1) ? Outcome::Minus : Outcome::Plus,
                       (b & 2) ? Outcome::Minus : Outcome::Plus};
}

// 1..64
inline int index_of(const BlockIndex& block, const OutcomeTriple& outcome) {
  return 8 * (block.number() - 1) + outcome_position(outcome);
}

// The 64 joint probabilities. Plain storage; the invariants (entries >= 0,
// each block summing to 1) are checked by the functions below, not enforced
// on construction.
struct JointDistribution {
  std::array<Rational, 64> p{};  // p[i-1] holds p_i

  Rational& at(int index) {
    if (index < 1 || index > 64) throw RangeError("joint index out of 1..64");
    return p[index - 1];
  }
  const Rational& at(int index) const {
    if (index < 1 || index > 64) throw RangeError("joint index out of 1..64");
    return p[index - 1];
  }
  bool operator==(const JointDistribution& other) const { return p == other.p; }
};

// Factorizable joint probabilities: each entry is the product of the three
// per-player head/tail probabilities selected by the block's strategies.
inline JointDistribution from_marginals(const CoinMarginals& m) {
  for (const Rational* q : {&m.r, &m.rp, &m.rpp, &m.s, &m.sp, &m.spp})
    if (*q < 0 || *q > 1)
      throw RangeError("coin marginal out of [0,1]: " + format_rational(*q));
  JointDistribution d;
  for (int block = 1; block <= 8; ++block) {
    BlockIndex bi = BlockIndex::from_number(block);
    for (int pos = 1; pos <= 8; ++pos) {
      OutcomeTriple outcome = outcome_of_position(pos);
      Rational value(1);
      for (int player = 0; player < 3; ++player) {
        Rational head = bi.strategies[player] == Strategy::First ? m.first(player)
                                                                 : m.second(player);
        value *= outcome[player] == Outcome::Plus ? head : Rational(1 - head);
      }
      d.at(index_of(bi, outcome)) = value;
    }
  }
  return d;
}

struct NormalizationReport {
  bool ok;
  std::array<Rational, 8> block_sums;
  std::vector<int> negative_indices;
};

inline NormalizationReport check_normalization(const JointDistribution& d) {
  NormalizationReport report;
  report.ok = true;
  for (int block = 0; block < 8; ++block) {
    Rational sum(0);
    for (int pos = 1; pos <= 8; ++pos) sum += d.at(8 * block + pos);
    report.block_sums[block] = sum;
    if (sum != 1) report.ok = false;
  }
  for (int i = 1; i <= 64; ++i)
    if (d.at(i) < 0) report.negative_indices.push_back(i);
  if (!report.negative_indices.empty()) report.ok = false;
  return report;
}

// One causal-communication chain: four 4-entry sums that must agree, all
// reading the same player's outcome probability under a fixed own setting
// across the other players' setting choices.
struct MarginalChain {
  const char* label;                        // e.g. "A(+|S1)"
  std::array<std::array<int, 4>, 4> groups; // p-indices of each sum
};

inline const std::array<MarginalChain, 12>& no_signaling_chains() {
  static const std::array<MarginalChain, 12> chains = {{
      // Alice
      {"A(+|S1)", {{{1, 2, 3, 4}, {17, 18, 19, 20}, {25, 26, 27, 28}, {33, 34, 35, 36}}}},
      {"A(-|S1)", {{{5, 6, 7, 8}, {21, 22, 23, 24}, {29, 30, 31, 32}, {37, 38, 39, 40}}}},
      {"A(+|S2)", {{{9, 10, 11, 12}, {41, 42, 43, 44}, {49, 50, 51, 52}, {57, 58, 59, 60}}}},
      {"A(-|S2)", {{{13, 14, 15, 16}, {45, 46, 47, 48}, {53, 54, 55, 56}, {61, 62, 63, 64}}}},
      // Bob (odd/even positions within the relevant blocks)
      {"B(+|S1')", {{{1, 3, 5, 7}, {9, 11, 13, 15}, {25, 27, 29, 31}, {41, 43, 45, 47}}}},
      {"B(-|S1')", {{{2, 4, 6, 8}, {10, 12, 14, 16}, {26, 28, 30, 32}, {42, 44, 46, 48}}}},
      {"B(+|S2')", {{{17, 19, 21, 23}, {33, 35, 37, 39}, {49, 51, 53, 55}, {57, 59, 61, 63}}}},
      {"B(-|S2')", {{{18, 20, 22, 24}, {34, 36, 38, 40}, {50, 52, 54, 56}, {58, 60, 62, 64}}}},
      // Chris
      {"C(+|S1'')", {{{1, 2, 5, 6}, {17, 18, 21, 22}, {9, 10, 13, 14}, {49, 50, 53, 54}}}},
      {"C(-|S1'')", {{{3, 4, 7, 8}, {19, 20, 23, 24}, {11, 12, 15, 16}, {51, 52, 55, 56}}}},
      {"C(+|S2'')", {{{25, 26, 29, 30}, {33, 34, 37, 38}, {41, 42, 45, 46}, {57, 58, 61, 62}}}},
      {"C(-|S2'')", {{{27, 28, 31, 32}, {35, 36, 39, 40}, {43, 44, 47, 48}, {59, 60, 63, 64}}}},
  }};
  return chains;
}

struct ChainViolation {
  std::string chain;               // label of the violated chain
  std::array<Rational, 4> sums;    // the four unequal sums
};

struct NoSignalingReport {
  bool ok;
  std::vector<ChainViolation> violations;
};

// The causal-communication (no-signaling) constraints: every chain's four
// sums must be exactly equal.
inline NoSignalingReport check_no_signaling(const JointDistribution& d) {
  NoSignalingReport report;
  report.ok = true;
  for (const MarginalChain& chain : no_signaling_chains()) {
    std::array<Rational, 4> sums;
    for (int g = 0; g < 4; ++g) {
      Rational sum(0);
      for (int idx : chain.groups[g]) sum += d.at(idx);
      sums[g] = sum;
    }
    if (sums[1] != sums[0] || sums[2] != sums[0] || sums[3] != sums[0]) {
      report.ok = false;
      report.violations.push_back({chain.label, sums});
    }
  }
  return report;
}

// The 37 joint probabilities that must vanish for the embedded game: every
// entry whose block uses a second coin showing +1 for some player.
inline const std::array<int, 37>& embedding_zero_indices() {
  static const std::array<int, 37> indices = {
      9,  10, 11, 12, 17, 19, 21, 23, 25, 26, 29, 30, 33, 34, 35, 37, 38, 39, 41,
      42, 43, 44, 45, 46, 49, 50, 51, 52, 53, 55, 57, 58, 59, 60, 61, 62, 63};
  return indices;
}

struct EmbeddingReport {
  bool ok;
  std::vector<int> nonzero_indices;  // forbidden indices carrying mass
};

inline EmbeddingReport check_embedding_zeros(const JointDistribution& d) {
  EmbeddingReport report;
  report.ok = true;
  for (int idx : embedding_zero_indices())
    if (d.at(idx) != 0) report.nonzero_indices.push_back(idx);
  report.ok = report.nonzero_indices.empty();
  return report;
}

struct MarginalExtraction {
  CoinMarginals marginals;            // single-party sums; not range-checked
  bool factorizable;                  // product reconstruction matches d
  std::vector<int> mismatched_indices;
};

// Reads each player's six single-party marginals off the representative
// blocks, then tests whether the product form reproduces d. The comparison is
// exact by default; a nonzero absolute tolerance gives the float-mode check.
inline MarginalExtraction extract_marginals(const JointDistribution& d,
                                            const Rational& tolerance = Rational(0)) {
  if (!check_normalization(d).ok)
    throw InvalidInputError("extract_marginals requires a normalized distribution");
  MarginalExtraction out;
  out.marginals.r = d.at(1) + d.at(2) + d.at(3) + d.at(4);
  out.marginals.rp = d.at(1) + d.at(3) + d.at(5) + d.at(7);
  out.marginals.rpp = d.at(1) + d.at(2) + d.at(5) + d.at(6);
  out.marginals.s = d.at(9) + d.at(10) + d.at(11) + d.at(12);
  out.marginals.sp = d.at(17) + d.at(19) + d.at(21) + d.at(23);
  out.marginals.spp = d.at(25) + d.at(26) + d.at(29) + d.at(30);
  JointDistribution product = from_marginals(out.marginals);
  for (int i = 1; i <= 64; ++i) {
    Rational diff = abs(Rational(product.at(i) - d.at(i)));
    if (diff > tolerance) out.mismatched_indices.push_back(i);
  }
  out.factorizable = out.mismatched_indices.empty();
  return out;
}

struct PairwiseViolation {
  std::string description;
  Rational lhs, rhs;
};

struct PairwiseReport {
  bool ok;
  std::vector<PairwiseViolation> violations;
};

// Stricter, optional check (not part of the printed constraint set and not
// folded into check_no_signaling): every two-party outcome marginal must be
// independent of the third player's setting choice.
inline PairwiseReport check_no_signaling_pairwise(const JointDistribution& d) {
  PairwiseReport report;
  report.ok = true;
  const auto strategies = std::array<Strategy, 2>{Strategy::First, Strategy::Second};
  const auto outcomes = std::array<Outcome, 2>{Outcome::Plus, Outcome::Minus};
  for (int varying = 0; varying < 3; ++varying) {  // whose setting must not matter
    int p0 = (varying + 1) % 3, p1 = (varying + 2) % 3;
    for (Strategy s0 : strategies)
      for (Strategy s1 : strategies)
        for (Outcome o0 : outcomes)
          for (Outcome o1 : outcomes) {
            std::array<Rational, 2> sums{Rational(0), Rational(0)};
            for (int v = 0; v < 2; ++v) {
              PureProfile block;
              block[p0] = s0;
              block[p1] = s1;
              block[varying] = strategies[v];
              for (Outcome ov : outcomes) {
                OutcomeTriple outcome;
                outcome[p0] = o0;
                outcome[p1] = o1;
                outcome[varying] = ov;
                sums[v] += d.at(index_of(BlockIndex{block}, outcome));
              }
            }
            if (sums[0] != sums[1]) {
              report.ok = false;
              static const char* players = "ABC";
              std::string desc = std::string("Pr(") + players[p0] + "=" +
                                 (o0 == Outcome::Plus ? "+1" : "-1") + "," + players[p1] + "=" +
                                 (o1 == Outcome::Plus ? "+1" : "-1") + " | " +
                                 strategy_name(p0, s0) + "," + strategy_name(p1, s1) +
                                 ") depends on " + players[varying] + "'s setting";
              report.violations.push_back({desc, sums[0], sums[1]});
            }
          }
  }
  return report;
}

}  // namespace eprgame
