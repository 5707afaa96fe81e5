#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "eprgame/epr.hpp"
#include "helpers.hpp"

using namespace eprgame;
using testutil::example_distribution;
using testutil::example_independents;
using testutil::example_params;
using testutil::pd_fixture;
using enum Strategy;

namespace {

// Independent expectation: sum over blocks and outcomes of coin-product
// weights times the payoff row, bypassing JointDistribution entirely.
PayoffTriple brute_factorizable_payoff(const GameParams& g, const CoinMarginals& m,
                                       const MixedProfile& profile) {
  PayoffTriple total{Rational(0), Rational(0), Rational(0)};
  for (const PureProfile& block : all_pure_profiles()) {
    Rational block_weight(1);
    for (int i = 0; i < 3; ++i)
      block_weight *= block[i] == First ? profile[i] : Rational(1 - profile[i]);
    for (const OutcomeTriple& outcome : all_outcome_triples()) {
      Rational outcome_weight(1);
      for (int i = 0; i < 3; ++i) {
        Rational head = block[i] == First ? m.first(i) : m.second(i);
        outcome_weight *= outcome[i] == Outcome::Plus ? head : Rational(1 - head);
      }
      PayoffTriple row = payoff_for_outcome(g, outcome);
      for (int i = 0; i < 3; ++i) total[i] += block_weight * outcome_weight * row[i];
    }
  }
  return total;
}

}  // namespace

TEST_CASE("reduced coefficients of the PD fixture", "[epr]") {
  ReducedCoefficients k = reduced_coefficients(pd_fixture());
  CHECK(k.delta1 == -2);
  CHECK(k.delta2 == 1);
  CHECK(k.delta3 == -2);
}

TEST_CASE("completion reproduces the worked example exactly", "[epr]") {
  JointDistribution d = complete_distribution(example_independents());
  CHECK(d == example_distribution());
  // spot anchors straight from the printed list
  CHECK(d.at(2) == ratio(7, 50));
  CHECK(d.at(4) == ratio(1, 100));
  CHECK(d.at(7) == ratio(3, 20));
  CHECK(d.at(8) == ratio(21, 100));
  CHECK(d.at(14) == ratio(9, 25));
  CHECK(d.at(16) == ratio(1, 10));
  CHECK(d.at(24) == ratio(1, 4));
  CHECK(d.at(28) == ratio(9, 50));
  CHECK(d.at(31) == ratio(17, 50));
  CHECK(d.at(32) == ratio(7, 25));
  CHECK(d.at(36) == ratio(19, 50));
  CHECK(d.at(40) == ratio(31, 50));
  CHECK(d.at(47) == ratio(27, 50));
  CHECK(d.at(48) == ratio(23, 50));
  CHECK(d.at(54) == ratio(1, 2));
  CHECK(d.at(56) == ratio(1, 2));
  CHECK(d.at(64) == 1);
  CHECK(check_normalization(d).ok);
  CHECK(check_no_signaling(d).ok);
  CHECK(check_embedding_zeros(d).ok);
}

TEST_CASE("completion round-trips a factorizable distribution", "[epr]") {
  JointDistribution original = from_marginals(
      {ratio(1, 2), ratio(1, 2), ratio(1, 2), Rational(0), Rational(0), Rational(0)});
  JointDistribution rebuilt = complete_distribution(read_independents(original));
  CHECK(rebuilt == original);
}

TEST_CASE("all-zero independents put all mass on all-minus outcomes", "[epr]") {
  CompletionInput zeros;
  zeros.values.fill(Rational(0));
  JointDistribution d = complete_distribution(zeros);
  for (int i = 1; i <= 64; ++i) {
    bool expected_one =
        i == 8 || i == 16 || i == 24 || i == 32 || i == 40 || i == 48 || i == 56 || i == 64;
    CHECK(d.at(i) == (expected_one ? 1 : 0));
  }
}

TEST_CASE("infeasible independents are named", "[epr]") {
  CompletionInput quarter;
  quarter.values.fill(ratio(1, 4));  // p2 = 1/4 + 1/4 - 3/4 = -1/4
  try {
    complete_distribution(quarter);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.entry == "p2");
  }
  CompletionInput out_of_range = example_independents();
  out_of_range.values[0] = Rational(2);
  CHECK_THROWS_AS(complete_distribution(out_of_range), RangeError);
}

TEST_CASE("completion then reading independents is the identity", "[epr][property]") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    CoinMarginals m{testutil::rnd_grid(rng, 16), testutil::rnd_grid(rng, 16),
                    testutil::rnd_grid(rng, 16), Rational(0), Rational(0), Rational(0)};
    CompletionInput input = read_independents(from_marginals(m));
    JointDistribution completed = complete_distribution(input);
    CompletionInput reread = read_independents(completed);
    CHECK(reread.values == input.values);
    CHECK(completed == from_marginals(m));
  }
}

TEST_CASE("epr pure payoffs", "[epr]") {
  PayoffTriple uniform = epr_pure_payoffs(pd_fixture(), testutil::uniform_distribution(),
                                          BlockIndex::from_number(3));
  CHECK(uniform == PayoffTriple{ratio(19, 4), ratio(19, 4), ratio(19, 4)});

  PayoffTriple all_second =
      epr_pure_payoffs(example_params(), example_distribution(), BlockIndex::from_number(8));
  CHECK(all_second == PayoffTriple{Rational(1), Rational(1), Rational(1)});

  PayoffTriple all_first =
      epr_pure_payoffs(example_params(), example_distribution(), BlockIndex::from_number(1));
  CHECK(all_first.alice == ratio(25523, 1000));
}

TEST_CASE("epr mixed payoff corners equal block payoffs", "[epr]") {
  const JointDistribution d = example_distribution();
  const GameParams g = example_params();
  CHECK(epr_mixed_payoff(g, d, {Rational(1), Rational(1), Rational(1)}) ==
        epr_pure_payoffs(g, d, BlockIndex::from_number(1)));
  CHECK(epr_mixed_payoff(g, d, {Rational(0), Rational(0), Rational(0)}) ==
        epr_pure_payoffs(g, d, BlockIndex::from_number(8)));
}

TEST_CASE("epr mixed payoff matches the factorizable brute force", "[epr][property]") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    CoinMarginals m{testutil::rnd_grid(rng, 8),  testutil::rnd_grid(rng, 8),
                    testutil::rnd_grid(rng, 8),  testutil::rnd_grid(rng, 8),
                    testutil::rnd_grid(rng, 8),  testutil::rnd_grid(rng, 8)};
    MixedProfile profile{testutil::rnd_grid(rng, 8), testutil::rnd_grid(rng, 8),
                         testutil::rnd_grid(rng, 8)};
    GameParams g = testutil::random_pd(rng);
    CHECK(epr_mixed_payoff(g, from_marginals(m), profile) ==
          brute_factorizable_payoff(g, m, profile));
  }
}

TEST_CASE("the worked example makes all-cooperate a Nash equilibrium", "[epr]") {
  NEReport report = epr_is_nash(example_params(), example_distribution(),
                                {Rational(1), Rational(1), Rational(1)});
  CHECK(report.is_nash);
  CHECK(report.player[ALICE].margin == ratio(10663, 1000));  // beta * 10663/100000
  CHECK(report.player[BOB].margin == ratio(9643, 1000));
  CHECK(report.player[CHRIS].margin == ratio(43, 25));
}

TEST_CASE("all-defect stays a Nash equilibrium in the worked example", "[epr]") {
  NEReport report = epr_is_nash(example_params(), example_distribution(),
                                {Rational(0), Rational(0), Rational(0)});
  CHECK(report.is_nash);
}

TEST_CASE("factorizable corner distribution keeps the classical verdict", "[epr]") {
  JointDistribution d = from_marginals(
      {Rational(1), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
  NEReport report = epr_is_nash(pd_fixture(), d, {Rational(1), Rational(1), Rational(1)});
  CHECK(!report.is_nash);
  CHECK(report.player[ALICE].margin == -2);  // alpha - beta
}

TEST_CASE("ccc margins of the worked example", "[epr]") {
  std::array<Rational, 3> margins = ccc_margins(example_params(), example_distribution());
  CHECK(margins[0] == ratio(10663, 100000));
  CHECK(margins[1] == ratio(9643, 100000));
  CHECK(margins[2] == ratio(43, 2500));
}

TEST_CASE("ccc margins arithmetic fixture", "[epr]") {
  // Block masses: p5, p16, p24, p32, p36, p47, p54, p64 = 1. Satisfies
  // normalization and the embedded zeros but not no-signaling; margin A
  // must come out as 1 - omega/beta.
  JointDistribution d;
  for (int idx : {5, 16, 24, 32, 36, 47, 54, 64}) d.at(idx) = 1;
  REQUIRE(check_normalization(d).ok);
  REQUIRE(check_embedding_zeros(d).ok);
  REQUIRE(!check_no_signaling(d).ok);
  std::array<Rational, 3> margins = ccc_margins(example_params(), d);
  CHECK(margins[0] == ratio(99, 100));  // 1 - omega/beta
}

TEST_CASE("ccc margins of the all-first corner distribution", "[epr]") {
  JointDistribution d = from_marginals(
      {Rational(1), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
  std::array<Rational, 3> margins = ccc_margins(example_params(), d);
  CHECK(margins[0] == ratio(-1, 10));  // alpha/beta - 1
  std::array<Rational, 3> pd_margins = ccc_margins(pd_fixture(), d);
  CHECK(pd_margins[0] == ratio(-2, 9));  // (alpha - beta)/beta
}

TEST_CASE("ccc margins reject non-embedded distributions", "[epr]") {
  CHECK_THROWS_AS(ccc_margins(example_params(), testutil::uniform_distribution()),
                  InvalidInputError);
}

TEST_CASE("ddd margins of the worked example", "[epr]") {
  std::array<Rational, 3> margins = ddd_margins(example_params(), example_distribution());
  CHECK(margins[0] == ratio(19, 500));  // p36 * (omega - epsilon) = 38/100 * 1/10
  CHECK(margins[1] == ratio(27, 500));
  CHECK(margins[2] == ratio(1, 20));
}

TEST_CASE("ddd margins vanish when omega equals epsilon", "[epr]") {
  GameParams tied = pd_fixture();
  tied.epsilon = tied.omega;
  std::array<Rational, 3> margins = ddd_margins(tied, example_distribution());
  CHECK(margins == std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)});
}

TEST_CASE("ddd margins vanish where the deviation block has no mass", "[epr]") {
  CompletionInput zeros;
  zeros.values.fill(Rational(0));
  JointDistribution d = complete_distribution(zeros);  // p36 = p47 = p54 = 0
  std::array<Rational, 3> margins = ddd_margins(example_params(), d);
  CHECK(margins == std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)});
}

TEST_CASE("reduced factorizable brackets", "[epr]") {
  GameParams g = pd_fixture();
  CoinMarginals half{ratio(1, 2), ratio(1, 2), ratio(1, 2),
                     Rational(0), Rational(0), Rational(0)};
  MixedProfile ddd{Rational(0), Rational(0), Rational(0)};
  std::array<Rational, 3> at_ddd = reduced_factorizable_ne(g, half, ddd);
  CHECK(at_ddd[ALICE] == -1);  // r * delta3 = -2r

  CoinMarginals ones{Rational(1), Rational(1), Rational(1),
                     Rational(0), Rational(0), Rational(0)};
  MixedProfile ccc{Rational(1), Rational(1), Rational(1)};
  std::array<Rational, 3> at_ccc = reduced_factorizable_ne(g, ones, ccc);
  CHECK(at_ccc[ALICE] == -2);  // delta1 + 2 delta2 + delta3

  CoinMarginals zeros{Rational(0), Rational(0), Rational(0),
                      Rational(0), Rational(0), Rational(0)};
  std::array<Rational, 3> degenerate = reduced_factorizable_ne(g, zeros, ccc);
  CHECK(degenerate == std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)});

  CoinMarginals bad{ratio(1, 2), ratio(1, 2), ratio(1, 2),
                    ratio(1, 2), Rational(0), Rational(0)};
  CHECK_THROWS_AS(reduced_factorizable_ne(g, bad, ccc), InvalidInputError);
}

TEST_CASE("brackets are the exact slope of the embedded payoffs", "[epr][property]") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    GameParams g = testutil::random_pd(rng);
    CoinMarginals m = testutil::random_first_coins(rng);
    MixedProfile profile{testutil::rnd_grid(rng, 8), testutil::rnd_grid(rng, 8),
                         testutil::rnd_grid(rng, 8)};
    std::array<Rational, 3> brackets = reduced_factorizable_ne(g, m, profile);
    JointDistribution d = from_marginals(m);
    PayoffTriple at = epr_mixed_payoff(g, d, profile);
    for (int player = 0; player < 3; ++player)
      for (int endpoint = 0; endpoint <= 1; ++endpoint) {
        MixedProfile dev = profile;
        dev[player] = Rational(endpoint);
        Rational diff(at[player] - epr_mixed_payoff(g, d, dev)[player]);
        CHECK(diff == Rational(profile[player] - endpoint) * brackets[player]);
      }
  }
}

TEST_CASE("ccc margins equal the generic margins over beta", "[epr][property]") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    GameParams g = testutil::random_pd(rng);
    JointDistribution d = from_marginals(testutil::random_first_coins(rng));
    std::array<Rational, 3> margins = ccc_margins(g, d);  // internally asserted
    NEReport report = epr_is_nash(g, d, {Rational(1), Rational(1), Rational(1)});
    for (int i = 0; i < 3; ++i)
      CHECK(margins[i] == Rational(report.player[i].margin / g.beta));
  }
}
