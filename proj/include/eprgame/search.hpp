#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "eprgame/epr.hpp"
#include "eprgame/rng.hpp"
#include "eprgame/simplex.hpp"

namespace eprgame {

enum class SearchMethod { Lp, Random };

enum class SearchObjective { MaxMinCccMargin };

struct SearchConfig {
  GameParams params;
  SearchObjective objective = SearchObjective::MaxMinCccMargin;
  SearchMethod method = SearchMethod::Lp;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  Rational tolerance = ratio(1, 1000000000);  // float-mode prescreen slack
};

struct SearchCertificate {
  bool normalization = false;
  bool no_signaling = false;
  bool embedding_zeros = false;
};

struct SearchResult {
  JointDistribution distribution;
  std::array<Rational, 3> margins;  // exact (C,C,C) margins of the reported point
  Rational objective;               // min of the margins
  SearchCertificate certificate;
  SearchMethod method = SearchMethod::Lp;
  std::uint64_t candidates_evaluated = 0;
  std::uint64_t candidates_rejected = 0;
};

// Affine function of the ten independent probabilities; the symbolic value
// type fed through completion_entries and ccc_margin_forms when building the
// linear program.
struct AffineForm {
  Rational constant;
  std::array<Rational, 10> coef;

  AffineForm() : constant(0) { coef.fill(Rational(0)); }
  explicit AffineForm(int c) : constant(c) { coef.fill(Rational(0)); }

  static AffineForm variable(int k) {
    AffineForm f;
    f.coef[k] = 1;
    return f;
  }

  AffineForm& operator+=(const AffineForm& o) {
    constant += o.constant;
    for (int i = 0; i < 10; ++i) coef[i] += o.coef[i];
    return *this;
  }
  AffineForm& operator-=(const AffineForm& o) {
    constant -= o.constant;
    for (int i = 0; i < 10; ++i) coef[i] -= o.coef[i];
    return *this;
  }
};

inline AffineForm scale_value(const Rational& c, const AffineForm& f) {
  AffineForm out;
  out.constant = c * f.constant;
  for (int i = 0; i < 10; ++i) out.coef[i] = c * f.coef[i];
  return out;
}

inline Rational min_r(Rational a, Rational b) { return b < a ? b : a; }
inline Rational max_r(Rational a, Rational b) { return a < b ? b : a; }

namespace detail {

inline SearchCertificate certify(const JointDistribution& d) {
  return {check_normalization(d).ok, check_no_signaling(d).ok, check_embedding_zeros(d).ok};
}

inline std::array<Rational, 3> margins_of(const GameRatios& ratios, const JointDistribution& d) {
  return ccc_margin_forms<Rational>(ratios, [&](int i) -> Rational { return d.at(i); });
}

inline Rational min_margin(const std::array<Rational, 3>& m) {
  return min_r(m[0], min_r(m[1], m[2]));
}

}  // namespace detail

// One draw of the ten independents (in the order p1, p3, p5, p6, p13, p15,
// p18, p20, p22, p27), or nullopt when the attempt dead-ends.
using IndependentsProvider =
    std::function<std::optional<std::array<Rational, 10>>(SplitMix64&)>;

// Default provider: draws each independent uniformly inside its conditional
// feasibility window given the values drawn so far (stick-breaking for block
// sums, interval propagation for the rest). Every constraint except the p3
// window is satisfied by construction, so rejections are rare.
inline std::optional<std::array<Rational, 10>> draw_independents(SplitMix64& g) {
  auto in = [&](const Rational& lo, const Rational& hi) {
    Rational u = draw_unit(g);
    return Rational(lo + u * (hi - lo));
  };
  const Rational zero(0);
  Rational p18 = in(zero, Rational(1));
  Rational p20 = in(zero, Rational(1 - p18));
  Rational p22 = in(zero, Rational(1 - p18 - p20));
  Rational t1(p18 + p22);  // equals the completed p54
  Rational p13 = in(zero, t1);
  Rational p15 = in(zero, Rational(1 - t1));
  Rational t2(p13 + p15);  // equals the completed p47
  Rational cap = min_r(t1, t2);
  Rational p1 = in(zero, cap);
  Rational p5 = in(zero, Rational(cap - p1));
  Rational p6 = in(zero, Rational(t1 - p1 - p5));
  Rational hi3 = min_r(Rational(t2 - p1 - p5), Rational(p20 - p22 + p5 + p6));
  Rational lo3 = max_r(zero, max_r(Rational(p20 - p22 + p5 + p6 - 1),
                                   Rational(p18 + p20 + p6 + p13 + p15 - p1 - 1)));
  if (hi3 < lo3) return std::nullopt;
  Rational p3 = in(lo3, hi3);
  Rational p36(p18 + p20);
  Rational p27 = in(max_r(zero, Rational(p36 + t2 - 1)), min_r(p36, t2));
  return std::array<Rational, 10>{p1, p3, p5, p6, p13, p15, p18, p20, p22, p27};
}

// Draws a distribution from the constrained polytope (normalization,
// no-signaling, the 37 embedded zeros, nonnegativity). Attempt k uses
// substream(config.seed, k); infeasible draws are rejected.
inline JointDistribution sample_polytope(const SearchConfig& config,
                                         const IndependentsProvider& provider = draw_independents,
                                         std::uint64_t max_attempts = 10000) {
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    SplitMix64 g = substream(config.seed, attempt);
    std::optional<std::array<Rational, 10>> values = provider(g);
    if (!values) continue;
    JointDistribution d;
    try {
      d = complete_distribution(CompletionInput{*values});
    } catch (const InfeasibleError&) {
      continue;
    } catch (const RangeError&) {
      continue;
    }
    SearchCertificate cert = detail::certify(d);
    if (!cert.normalization || !cert.no_signaling || !cert.embedding_zeros)
      throw std::logic_error("completion produced a distribution failing its own constraints");
    return d;
  }
  throw SamplingError(max_attempts, "sample_polytope: no feasible draw within " +
                                        std::to_string(max_attempts) + " attempts");
}

// The reduced linear program: variables are the ten independents plus the
// split objective t = t+ - t-; constraints are nonnegativity of the
// seventeen dependent entries (the ten independents are LP variables, hence
// nonnegative already) and min-margin rows margin_i >= t.
inline LinearProgram build_margin_lp(const GameParams& params) {
  GameRatios ratios = game_ratios(params);
  std::array<AffineForm, 10> q;
  for (int k = 0; k < 10; ++k) q[k] = AffineForm::variable(k);
  std::array<AffineForm, 65> entries = completion_entries(q);
  std::array<AffineForm, 3> margins =
      ccc_margin_forms<AffineForm>(ratios, [&](int i) -> AffineForm { return entries[i]; });

  LinearProgram lp;
  lp.num_vars = 12;  // q0..q9, t+, t-
  lp.objective.assign(12, Rational(0));
  lp.objective[10] = 1;
  lp.objective[11] = -1;
  auto row_from = [](const AffineForm& f) {
    std::vector<Rational> coef(12, Rational(0));
    for (int k = 0; k < 10; ++k) coef[k] = f.coef[k];
    return coef;
  };
  for (int idx : derived_indices()) {
    // entry >= 0  <=>  coef . q >= -constant
    lp.constraints.push_back({row_from(entries[idx]), Relation::GreaterEq,
                              Rational(-entries[idx].constant)});
  }
  for (const AffineForm& m : margins) {
    // margin >= t  <=>  coef . q - t+ + t- >= -constant
    std::vector<Rational> coef = row_from(m);
    coef[10] = -1;
    coef[11] = 1;
    lp.constraints.push_back({std::move(coef), Relation::GreaterEq, Rational(-m.constant)});
  }
  return lp;
}

// Maximizes the minimum (C,C,C) margin over the constrained polytope.
// The LP method is exact and returns the optimum; the random method returns
// the best of `iterations` sampled candidates. Either way the reported
// distribution is re-verified exactly.
inline SearchResult maximize_min_ccc_margin(const SearchConfig& config) {
  if (config.iterations < 1) throw RangeError("search requires iterations >= 1");
  if (config.tolerance < 0) throw RangeError("search tolerance must be >= 0");
  GameRatios ratios = game_ratios(config.params);

  SearchResult result;
  result.method = config.method;

  if (config.method == SearchMethod::Lp) {
    LpSolution sol = solve_lp(build_margin_lp(config.params));
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error("margin LP should be feasible and bounded");
    CompletionInput input;
    for (int k = 0; k < 10; ++k) input.values[k] = sol.x[k];
    result.distribution = complete_distribution(input);
    result.margins = detail::margins_of(ratios, result.distribution);
    result.objective = detail::min_margin(result.margins);
    if (result.objective != sol.objective)
      throw std::logic_error("LP objective disagrees with recomputed margins");
    result.certificate = detail::certify(result.distribution);
    return result;
  }

  // Random sampling. Candidate i draws from its own derived seed; a cheap
  // double-precision score prescreens candidates (slack = tolerance) and
  // every surviving comparison is exact. Ties break toward the
  // lexicographically smaller entry vector so merging is deterministic.
  bool have_best = false;
  double best_estimate = 0.0;
  const double slack = config.tolerance.get_d();
  auto lexicographic_less = [](const JointDistribution& a, const JointDistribution& b) {
    for (int i = 1; i <= 64; ++i) {
      if (a.at(i) < b.at(i)) return true;
      if (b.at(i) < a.at(i)) return false;
    }
    return false;
  };
  for (std::uint64_t i = 0; i < config.iterations; ++i) {
    SearchConfig candidate_config = config;
    candidate_config.seed = substream(config.seed, i).next();
    JointDistribution d;
    try {
      d = sample_polytope(candidate_config);
    } catch (const SamplingError&) {
      ++result.candidates_rejected;
      continue;
    }
    ++result.candidates_evaluated;
    std::array<double, 3> rough =
        ccc_margin_forms<double>(ratios, [&](int idx) { return d.at(idx).get_d(); });
    double estimate = std::min(rough[0], std::min(rough[1], rough[2]));
    if (have_best && estimate < best_estimate - slack) continue;
    std::array<Rational, 3> margins = detail::margins_of(ratios, d);
    Rational objective = detail::min_margin(margins);
    if (!have_best || objective > result.objective ||
        (objective == result.objective && lexicographic_less(d, result.distribution))) {
      result.distribution = d;
      result.margins = margins;
      result.objective = objective;
      have_best = true;
      best_estimate = objective.get_d();
    }
  }
  if (!have_best)
    throw SamplingError(config.iterations, "random search found no feasible candidate");
  result.certificate = detail::certify(result.distribution);
  if (!result.certificate.normalization || !result.certificate.no_signaling ||
      !result.certificate.embedding_zeros)
    throw std::logic_error("search result failed exact re-verification");
  return result;
}

}  // namespace eprgame
