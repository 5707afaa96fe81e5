// Command-line front door: loads game and distribution files, dispatches to
// the analysis library, and prints human-readable or JSON reports.
//
// Exit status: 0 success, 1 check failure (invalid PD, violated constraint,
// infeasible completion), 2 malformed input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "eprgame/classical.hpp"
#include "eprgame/epr.hpp"
#include "eprgame/io.hpp"
#include "eprgame/search.hpp"
#include "eprgame/simulate.hpp"

namespace {

using namespace eprgame;
using nlohmann::json;

struct OutputOptions {
  bool as_json = false;
  bool decimal = false;
};

std::string num(const Rational& q, const OutputOptions& out) {
  std::string text = format_rational(q);
  if (out.decimal) text += " (" + decimal6(q) + ")";
  return text;
}

json params_json(const GameParams& g) {
  return json{{"alpha", format_rational(g.alpha)},     {"beta", format_rational(g.beta)},
              {"delta", format_rational(g.delta)},     {"epsilon", format_rational(g.epsilon)},
              {"theta", format_rational(g.theta)},     {"omega", format_rational(g.omega)}};
}

json margins_json(const std::array<Rational, 3>& m) {
  return json{{"alice", format_rational(m[0])},
              {"bob", format_rational(m[1])},
              {"chris", format_rational(m[2])}};
}

MixedProfile parse_profile(const std::vector<std::string>& args) {
  try {
    return {parse_rational(args[0]), parse_rational(args[1]), parse_rational(args[2])};
  } catch (const std::invalid_argument& e) {
    throw InvalidInputError(std::string("bad --profile value: ") + e.what());
  }
}

int run_validate_game(const std::string& game_path, const OutputOptions& out) {
  GameParams g = load_game_file(game_path);
  std::vector<PdViolation> violations = validate_pd(g);
  if (out.as_json) {
    json v = json::array();
    for (const PdViolation& p : violations)
      v.push_back({{"group", std::string(1, p.group)},
                   {"condition", p.condition},
                   {"lhs", format_rational(p.lhs)},
                   {"rhs", format_rational(p.rhs)}});
    std::cout << json{{"command", "validate-game"},
                      {"params", params_json(g)},
                      {"valid", violations.empty()},
                      {"violations", v}}
                     .dump(2)
              << "\n";
  } else {
    for (const PdViolation& p : violations)
      std::cout << "VIOLATED (group " << p.group << "): " << p.condition << "   ["
                << num(p.lhs, out) << " vs " << num(p.rhs, out) << "]\n";
    std::cout << (violations.empty() ? "valid generalized PD"
                                     : "not a valid generalized PD")
              << "\n";
  }
  return violations.empty() ? 0 : 1;
}

int run_classical_ne(const std::string& game_path, const std::vector<std::string>& profile_args,
                     const OutputOptions& out) {
  GameParams g = load_game_file(game_path);
  std::vector<PureProfile> ne = enumerate_pure_ne(g);
  json report{{"command", "classical-ne"}, {"params", params_json(g)}};
  json pure = json::array();
  if (!out.as_json) std::cout << "pure profiles:\n";
  for (const PureProfile& profile : all_pure_profiles()) {
    PayoffTriple payoff = payoff_table(g, profile);
    std::array<Rational, 3> margins;
    for (int i = 0; i < 3; ++i) {
      PureProfile dev = profile;
      dev[i] = dev[i] == Strategy::First ? Strategy::Second : Strategy::First;
      margins[i] = payoff[i] - payoff_table(g, dev)[i];
    }
    bool nash = margins[0] >= 0 && margins[1] >= 0 && margins[2] >= 0;
    if (out.as_json) {
      pure.push_back({{"profile", profile_name(profile)},
                      {"payoffs", margins_json({payoff[0], payoff[1], payoff[2]})},
                      {"margins", margins_json(margins)},
                      {"nash", nash}});
    } else {
      std::cout << "  " << profile_name(profile) << "  payoffs (" << num(payoff[0], out) << ", "
                << num(payoff[1], out) << ", " << num(payoff[2], out) << ")  margins ("
                << num(margins[0], out) << ", " << num(margins[1], out) << ", "
                << num(margins[2], out) << ")" << (nash ? "  NE" : "") << "\n";
    }
  }
  if (out.as_json) report["pure"] = pure;
  json ne_names = json::array();
  for (const PureProfile& p : ne) ne_names.push_back(profile_name(p));
  if (out.as_json)
    report["pure_ne"] = ne_names;
  else {
    std::cout << "pure NE:";
    for (const PureProfile& p : ne) std::cout << " " << profile_name(p);
    std::cout << "\n";
  }

  int status = 0;
  if (!profile_args.empty()) {
    MixedProfile profile = parse_profile(profile_args);
    NEReport ne_report = is_nash_classical(g, profile);
    status = ne_report.is_nash ? 0 : 1;
    if (out.as_json) {
      report["profile"] = {{"x", format_rational(profile.x)},
                           {"y", format_rational(profile.y)},
                           {"z", format_rational(profile.z)},
                           {"nash", ne_report.is_nash},
                           {"margins",
                            margins_json({ne_report.player[0].margin, ne_report.player[1].margin,
                                          ne_report.player[2].margin})}};
    } else {
      std::cout << "profile (" << format_rational(profile.x) << ", "
                << format_rational(profile.y) << ", " << format_rational(profile.z)
                << "): " << (ne_report.is_nash ? "Nash equilibrium" : "not a Nash equilibrium")
                << "\n";
      static const char* players[3] = {"alice", "bob", "chris"};
      for (int i = 0; i < 3; ++i)
        std::cout << "  " << players[i] << " margin " << num(ne_report.player[i].margin, out)
                  << " (binding deviation " << format_rational(ne_report.player[i].deviation)
                  << ")\n";
    }
  }
  if (out.as_json) std::cout << report.dump(2) << "\n";
  return status;
}

int run_analyze_dist(const std::string& dist_path, const std::string& game_path, bool pairwise,
                     const OutputOptions& out) {
  JointDistribution d = load_distribution_file(dist_path);
  NormalizationReport norm = check_normalization(d);
  NoSignalingReport nosig = check_no_signaling(d);
  EmbeddingReport embed = check_embedding_zeros(d);
  json report{{"command", "analyze-dist"}};
  report["normalization"] = norm.ok;
  report["no_signaling"] = nosig.ok;
  report["embedding_zeros"] = embed.ok;
  if (!out.as_json) {
    std::cout << "normalization: " << (norm.ok ? "pass" : "FAIL") << "\n";
    if (!norm.ok)
      for (int b = 0; b < 8; ++b)
        std::cout << "  block " << b + 1 << " sum " << num(norm.block_sums[b], out) << "\n";
    std::cout << "no-signaling: " << (nosig.ok ? "pass" : "FAIL") << "\n";
    for (const ChainViolation& v : nosig.violations) {
      std::cout << "  chain " << v.chain << " sums";
      for (const Rational& s : v.sums) std::cout << " " << num(s, out);
      std::cout << "\n";
    }
    std::cout << "embedding-zeros: " << (embed.ok ? "pass" : "FAIL") << "\n";
    if (!embed.ok) {
      std::cout << "  nonzero forbidden indices:";
      for (int idx : embed.nonzero_indices) std::cout << " " << idx;
      std::cout << "\n";
    }
  } else {
    json chains = json::array();
    for (const ChainViolation& v : nosig.violations) chains.push_back(v.chain);
    report["violated_chains"] = chains;
    report["nonzero_forbidden"] = embed.nonzero_indices;
  }

  if (pairwise) {
    PairwiseReport pr = check_no_signaling_pairwise(d);
    report["pairwise_no_signaling"] = pr.ok;
    if (!out.as_json) {
      std::cout << "pairwise no-signaling (strict extra check): " << (pr.ok ? "pass" : "FAIL")
                << "\n";
      for (const PairwiseViolation& v : pr.violations)
        std::cout << "  " << v.description << "  [" << num(v.lhs, out) << " vs "
                  << num(v.rhs, out) << "]\n";
    }
  }

  if (norm.ok) {
    MarginalExtraction extraction = extract_marginals(d);
    report["factorizable"] = extraction.factorizable;
    if (!out.as_json)
      std::cout << "factorizable: " << (extraction.factorizable ? "yes" : "no") << "\n";
  }

  if (!game_path.empty() && norm.ok && embed.ok) {
    GameParams g = load_game_file(game_path);
    std::array<Rational, 3> ccc = ccc_margins(g, d);
    std::array<Rational, 3> ddd = ddd_margins(g, d);
    bool ccc_nash = ccc[0] >= 0 && ccc[1] >= 0 && ccc[2] >= 0;
    bool ddd_nash = ddd[0] >= 0 && ddd[1] >= 0 && ddd[2] >= 0;
    if (out.as_json) {
      report["ccc_margins"] = margins_json(ccc);
      report["ddd_margins"] = margins_json(ddd);
      report["ccc_nash"] = ccc_nash;
      report["ddd_nash"] = ddd_nash;
    } else {
      std::cout << "(C,C,C) margins/beta: " << num(ccc[0], out) << " " << num(ccc[1], out) << " "
                << num(ccc[2], out) << (ccc_nash ? "  -> Nash" : "  -> not Nash") << "\n";
      std::cout << "(D,D,D) margins: " << num(ddd[0], out) << " " << num(ddd[1], out) << " "
                << num(ddd[2], out) << (ddd_nash ? "  -> Nash" : "  -> not Nash") << "\n";
    }
  }
  if (out.as_json) std::cout << report.dump(2) << "\n";
  return norm.ok && nosig.ok ? 0 : 1;
}

int run_complete(const std::string& input_path, const std::string& output_path,
                 const OutputOptions& out) {
  CompletionInput input = load_completion_file(input_path);
  JointDistribution d = complete_distribution(input);
  if (!output_path.empty()) {
    std::ofstream file(output_path);
    if (!file) throw InvalidInputError("cannot write '" + output_path + "'");
    write_distribution(file, d);
    if (!out.as_json) std::cout << "wrote " << output_path << "\n";
  }
  if (out.as_json)
    std::cout << json{{"command", "complete"}, {"distribution", distribution_to_json(d)}}.dump(2)
              << "\n";
  else if (output_path.empty())
    write_distribution(std::cout, d);
  return 0;
}

int run_factor_check(const std::string& dist_path, const OutputOptions& out) {
  JointDistribution d = load_distribution_file(dist_path);
  if (!check_normalization(d).ok) {
    std::cerr << "error: distribution is not normalized\n";
    return 1;
  }
  MarginalExtraction extraction = extract_marginals(d);
  const CoinMarginals& m = extraction.marginals;
  if (out.as_json) {
    std::cout << json{{"command", "factor-check"},
                      {"marginals",
                       {{"r", format_rational(m.r)},
                        {"rp", format_rational(m.rp)},
                        {"rpp", format_rational(m.rpp)},
                        {"s", format_rational(m.s)},
                        {"sp", format_rational(m.sp)},
                        {"spp", format_rational(m.spp)}}},
                      {"factorizable", extraction.factorizable},
                      {"mismatched_indices", extraction.mismatched_indices}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "r " << num(m.r, out) << "\nr' " << num(m.rp, out) << "\nr'' "
              << num(m.rpp, out) << "\ns " << num(m.s, out) << "\ns' " << num(m.sp, out)
              << "\ns'' " << num(m.spp, out) << "\n";
    std::cout << (extraction.factorizable ? "factorizable" : "non-factorizable") << "\n";
    if (!extraction.factorizable) {
      std::cout << "product form mismatches at " << extraction.mismatched_indices.size()
                << " indices (first: p" << extraction.mismatched_indices.front() << ")\n";
    }
  }
  return 0;
}

int run_search(const std::string& game_path, const std::string& method_name, std::uint64_t seed,
               std::uint64_t iterations, const std::string& tolerance_text,
               const std::string& output_path, const OutputOptions& out) {
  SearchConfig config;
  config.params = load_game_file(game_path);
  config.method = method_name == "random" ? SearchMethod::Random : SearchMethod::Lp;
  config.seed = seed;
  config.iterations = iterations;
  if (!tolerance_text.empty()) {
    try {
      config.tolerance = parse_rational(tolerance_text);
    } catch (const std::invalid_argument& e) {
      throw InvalidInputError(std::string("bad --tolerance: ") + e.what());
    }
  }
  SearchResult result = maximize_min_ccc_margin(config);
  if (!output_path.empty()) {
    std::ofstream file(output_path);
    if (!file) throw InvalidInputError("cannot write '" + output_path + "'");
    write_distribution(file, result.distribution);
  }
  if (out.as_json) {
    std::cout << json{{"command", "search"},
                      {"method", method_name},
                      {"objective", format_rational(result.objective)},
                      {"margins", margins_json(result.margins)},
                      {"certificate",
                       {{"normalization", result.certificate.normalization},
                        {"no_signaling", result.certificate.no_signaling},
                        {"embedding_zeros", result.certificate.embedding_zeros}}},
                      {"candidates_evaluated", result.candidates_evaluated},
                      {"distribution", distribution_to_json(result.distribution)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "method " << method_name << "\n";
    std::cout << "objective " << num(result.objective, out) << "\n";
    std::cout << "margin_alice " << num(result.margins[0], out) << "\n";
    std::cout << "margin_bob " << num(result.margins[1], out) << "\n";
    std::cout << "margin_chris " << num(result.margins[2], out) << "\n";
    std::cout << "certificate_normalization " << (result.certificate.normalization ? "pass" : "FAIL")
              << "\n";
    std::cout << "certificate_no_signaling " << (result.certificate.no_signaling ? "pass" : "FAIL")
              << "\n";
    std::cout << "certificate_embedding_zeros "
              << (result.certificate.embedding_zeros ? "pass" : "FAIL") << "\n";
    if (config.method == SearchMethod::Random)
      std::cout << "candidates_evaluated " << result.candidates_evaluated << "\n";
    std::cout << "distribution:\n";
    write_distribution(std::cout, result.distribution);
  }
  return 0;
}

int run_simulate(const std::string& game_path, const std::string& dist_path,
                 const std::vector<std::string>& profile_args, std::uint64_t runs,
                 std::uint64_t seed, const OutputOptions& out) {
  SimulationConfig config;
  config.distribution = load_distribution_file(dist_path);
  config.profile = profile_args.empty() ? MixedProfile{Rational(1), Rational(1), Rational(1)}
                                        : parse_profile(profile_args);
  config.runs = runs;
  config.seed = seed;
  GameParams g = load_game_file(game_path);
  SimulationResult result = simulate_runs(g, config);
  static const char* players[3] = {"alice", "bob", "chris"};
  if (out.as_json) {
    json by_player = json::object();
    for (int i = 0; i < 3; ++i)
      by_player[players[i]] = {{"mean", format_rational(result.mean[i])},
                               {"mean_decimal", result.mean_value[i]},
                               {"standard_error", result.standard_error[i]}};
    std::cout << json{{"command", "simulate"},
                      {"runs", result.runs},
                      {"seed", result.seed},
                      {"payoffs", by_player}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "runs " << result.runs << "\nseed " << result.seed << "\n";
    for (int i = 0; i < 3; ++i)
      std::cout << players[i] << " mean " << format_rational(result.mean[i]) << " ("
                << result.mean_value[i] << "), standard error " << result.standard_error[i]
                << "\n";
  }
  return 0;
}

int run_reproduce_paper(const OutputOptions& out) {
  // The built-in worked example: ratio assignments alpha/beta = 9/10,
  // theta/beta = 1/100, delta/theta = 1/5, omega/beta = 1/100,
  // epsilon/omega = 9/10, scaled so beta = 100.
  GameParams g{Rational(90), Rational(100), ratio(1, 5), ratio(9, 10), Rational(1), Rational(1)};
  CompletionInput independents{{ratio(1, 10), ratio(13, 100), ratio(16, 100), ratio(1, 10),
                                ratio(14, 100), ratio(2, 5), ratio(13, 100), ratio(1, 4),
                                ratio(37, 100), ratio(1, 5)}};
  JointDistribution d = complete_distribution(independents);
  NormalizationReport norm = check_normalization(d);
  NoSignalingReport nosig = check_no_signaling(d);
  EmbeddingReport embed = check_embedding_zeros(d);
  MarginalExtraction extraction = extract_marginals(d);
  std::array<Rational, 3> ccc = ccc_margins(g, d);
  std::array<Rational, 3> ddd = ddd_margins(g, d);
  NEReport ccc_report = epr_is_nash(g, d, {Rational(1), Rational(1), Rational(1)});
  NEReport ddd_report = epr_is_nash(g, d, {Rational(0), Rational(0), Rational(0)});
  std::vector<PdViolation> pd = validate_pd(g);

  if (out.as_json) {
    json violations = json::array();
    for (const PdViolation& p : pd) violations.push_back(p.condition);
    std::cout << json{{"command", "reproduce-paper"},
                      {"params", params_json(g)},
                      {"pd_violations", violations},
                      {"distribution", distribution_to_json(d)},
                      {"normalization", norm.ok},
                      {"no_signaling", nosig.ok},
                      {"embedding_zeros", embed.ok},
                      {"factorizable", extraction.factorizable},
                      {"ccc_margins", margins_json(ccc)},
                      {"ccc_margins_rounded",
                       {truncate3(ccc[0]), truncate3(ccc[1]), truncate3(ccc[2])}},
                      {"ccc_nash", ccc_report.is_nash},
                      {"ddd_margins", margins_json(ddd)},
                      {"ddd_nash", ddd_report.is_nash}}
                     .dump(2)
              << "\n";
    return 0;
  }

  std::cout << "game (beta = 100 scaling): alpha 90, beta 100, delta 1/5, epsilon 9/10, "
               "theta 1, omega 1\n";
  std::cout << "generalized-PD conditions: " << pd.size()
            << " violated by these ratios (reported, not corrected)\n";
  std::cout << "completed distribution:\n";
  write_distribution(std::cout, d);
  std::cout << "normalization: " << (norm.ok ? "pass" : "FAIL") << "\n";
  std::cout << "no-signaling: " << (nosig.ok ? "pass" : "FAIL") << "\n";
  std::cout << "embedding-zeros: " << (embed.ok ? "pass" : "FAIL") << "\n";
  std::cout << "factorizable: " << (extraction.factorizable ? "yes" : "no")
            << "  (extracted r " << format_rational(extraction.marginals.r) << ", r' "
            << format_rational(extraction.marginals.rp) << ", r'' "
            << format_rational(extraction.marginals.rpp) << ", s = s' = s'' = 0)\n";
  std::cout << "(C,C,C) margins/beta: " << format_rational(ccc[0]) << " "
            << format_rational(ccc[1]) << " " << format_rational(ccc[2]) << "\n";
  std::cout << "rounded: " << truncate3(ccc[0]) << " " << truncate3(ccc[1]) << " "
            << truncate3(ccc[2]) << "\n";
  std::cout << "(C,C,C) is " << (ccc_report.is_nash ? "" : "NOT ") << "a Nash equilibrium\n";
  std::cout << "(D,D,D) margins: " << format_rational(ddd[0]) << " " << format_rational(ddd[1])
            << " " << format_rational(ddd[2]) << "\n";
  std::cout << "(D,D,D) is " << (ddd_report.is_nash ? "" : "NOT ") << "a Nash equilibrium\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for three-player two-strategy symmetric games driven by "
               "classical coins, factorizable six-coin statistics, or general no-signaling "
               "joint probabilities"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json/--decimal appear after the subcommand too
  OutputOptions out;
  app.add_flag("--json", out.as_json, "emit a machine-readable JSON report");
  app.add_flag("--decimal", out.decimal, "append 6-significant-digit decimal renderings");

  std::string game_path, dist_path, input_path, output_path, method = "lp", tolerance_text;
  std::vector<std::string> profile_args;
  std::uint64_t seed = 0, iterations = 1000, runs = 10000;

  CLI::App* validate = app.add_subcommand("validate-game", "check the generalized-PD conditions");
  validate->add_option("game", game_path, "game file")->required();

  CLI::App* classical = app.add_subcommand("classical-ne", "pure NE set of three-coin play");
  classical->add_option("game", game_path, "game file")->required();
  classical->add_option("--profile", profile_args, "mixed profile x y z to test")->expected(3);

  CLI::App* analyze = app.add_subcommand("analyze-dist", "constraint checks and margins");
  analyze->add_option("dist", dist_path, "distribution file")->required();
  analyze->add_option("--game", game_path, "game file (enables margin output)");
  bool pairwise = false;
  analyze->add_flag("--pairwise", pairwise, "also run the stricter two-party marginal check");

  CLI::App* complete = app.add_subcommand("complete", "complete ten independents to 64 entries");
  complete->add_option("input", input_path, "completion-input file")->required();
  complete->add_option("-o,--output", output_path, "write the distribution file here");

  CLI::App* factor = app.add_subcommand("factor-check", "extract marginals, test factorizability");
  factor->add_option("dist", dist_path, "distribution file")->required();

  CLI::App* search = app.add_subcommand("search", "maximize the minimum (C,C,C) margin");
  search->add_option("--game", game_path, "game file")->required();
  search->add_option("--method", method, "lp or random")
      ->check(CLI::IsMember({"lp", "random"}));
  search->add_option("--seed", seed, "random-method seed");
  search->add_option("--iterations", iterations, "random-method candidate count");
  search->add_option("--tolerance", tolerance_text, "float prescreen slack (rational)");
  search->add_option("-o,--output", output_path, "write the best distribution file here");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo referee for a distribution");
  simulate->add_option("--game", game_path, "game file")->required();
  simulate->add_option("--dist", dist_path, "distribution file")->required();
  simulate->add_option("--profile", profile_args, "mixed profile x y z (default 1 1 1)")
      ->expected(3);
  simulate->add_option("--runs", runs, "number of runs");
  simulate->add_option("--seed", seed, "seed");

  CLI::App* reproduce =
      app.add_subcommand("reproduce-paper", "recompute the built-in worked example");

  int status = 0;
  try {
    app.parse(argc, argv);
    if (validate->parsed()) status = run_validate_game(game_path, out);
    if (classical->parsed()) status = run_classical_ne(game_path, profile_args, out);
    if (analyze->parsed()) status = run_analyze_dist(dist_path, game_path, pairwise, out);
    if (complete->parsed()) status = run_complete(input_path, output_path, out);
    if (factor->parsed()) status = run_factor_check(dist_path, out);
    if (search->parsed())
      status = run_search(game_path, method, seed, iterations, tolerance_text, output_path, out);
    if (simulate->parsed())
      status = run_simulate(game_path, dist_path, profile_args, runs, seed, out);
    if (reproduce->parsed()) status = run_reproduce_paper(out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const SamplingError& e) {
    std::cerr << "sampling failure: " << e.what() << "\n";
    return 1;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
