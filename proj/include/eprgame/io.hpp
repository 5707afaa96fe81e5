#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eprgame/epr.hpp"

namespace eprgame {

namespace detail {

struct Token {
  std::string text;
  int column;  // 1-based
};

// Splits on blanks; '#' starts a comment running to end of line.
inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#')
      ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

inline Rational parse_rational_token(const Token& token, int line_no) {
  try {
    return parse_rational(token.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, token.column, e.what());
  }
}

// Reads "name value" lines into a map, enforcing arity and uniqueness.
inline std::map<std::string, Rational> read_named_values(std::istream& in) {
  std::map<std::string, Rational> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, tokens.size() > 2 ? tokens[2].column : tokens[0].column,
                       "expected 'name value'");
    if (values.count(tokens[0].text))
      throw ParseError(line_no, tokens[0].column, "duplicate field '" + tokens[0].text + "'");
    values.emplace(tokens[0].text, parse_rational_token(tokens[1], line_no));
  }
  return values;
}

}  // namespace detail

// Game file: six "name value" lines (alpha, beta, delta, epsilon, theta,
// omega), rationals as "num/den" or integers, '#' comments allowed.
inline GameParams load_game(std::istream& in) {
  auto values = detail::read_named_values(in);
  static const char* names[6] = {"alpha", "beta", "delta", "epsilon", "theta", "omega"};
  for (const auto& [name, value] : values) {
    bool known = false;
    for (const char* n : names) known = known || name == n;
    if (!known) throw ParseError(0, 0, "unknown game field '" + name + "'");
  }
  GameParams g;
  Rational* fields[6] = {&g.alpha, &g.beta, &g.delta, &g.epsilon, &g.theta, &g.omega};
  for (int i = 0; i < 6; ++i) {
    auto it = values.find(names[i]);
    if (it == values.end())
      throw ParseError(0, 0, std::string("missing game field '") + names[i] + "'");
    *fields[i] = it->second;
  }
  return g;
}

// Distribution file: "index value" lines, indices 1..64, omitted indices are
// zero, duplicates rejected.
inline JointDistribution load_distribution(std::istream& in) {
  JointDistribution d;
  std::array<bool, 64> seen{};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<detail::Token> tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, tokens[0].column, "expected 'index value'");
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(tokens[0].text, &used);
      if (used != tokens[0].text.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw ParseError(line_no, tokens[0].column, "not an index: '" + tokens[0].text + "'");
    }
    if (index < 1 || index > 64)
      throw ParseError(line_no, tokens[0].column, "index out of 1..64");
    if (seen[index - 1])
      throw ParseError(line_no, tokens[0].column,
                       "duplicate index " + std::to_string(index));
    seen[index - 1] = true;
    d.at(index) = detail::parse_rational_token(tokens[1], line_no);
  }
  return d;
}

// Completion-input file: ten "name value" lines for p1, p3, p5, p6, p13,
// p15, p18, p20, p22, p27.
inline CompletionInput load_completion(std::istream& in) {
  auto values = detail::read_named_values(in);
  CompletionInput input;
  for (int k = 0; k < 10; ++k) {
    std::string name = "p" + std::to_string(independent_indices()[k]);
    auto it = values.find(name);
    if (it == values.end()) throw ParseError(0, 0, "missing independent '" + name + "'");
    input.values[k] = it->second;
    values.erase(it);
  }
  if (!values.empty())
    throw ParseError(0, 0, "unknown field '" + values.begin()->first + "'");
  return input;
}

inline void write_distribution(std::ostream& out, const JointDistribution& d) {
  for (int i = 1; i <= 64; ++i)
    if (d.at(i) != 0) out << i << ' ' << format_rational(d.at(i)) << '\n';
}

inline std::string distribution_text(const JointDistribution& d) {
  std::ostringstream out;
  write_distribution(out, d);
  return out.str();
}

inline nlohmann::json distribution_to_json(const JointDistribution& d) {
  nlohmann::json entries = nlohmann::json::object();
  for (int i = 1; i <= 64; ++i)
    if (d.at(i) != 0) entries[std::to_string(i)] = format_rational(d.at(i));
  return entries;
}

inline JointDistribution distribution_from_json(const nlohmann::json& entries) {
  JointDistribution d;
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    int index = std::stoi(it.key());
    if (index < 1 || index > 64) throw InvalidInputError("json index out of 1..64");
    d.at(index) = parse_rational(it.value().get<std::string>());
  }
  return d;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return in;
}

inline GameParams load_game_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_game(in);
}

inline JointDistribution load_distribution_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_distribution(in);
}

inline CompletionInput load_completion_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_completion(in);
}

}  // namespace eprgame
