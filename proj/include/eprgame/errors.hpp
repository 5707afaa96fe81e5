#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eprgame {

// A probability or parameter lies outside its admissible range.
struct RangeError : std::domain_error {
  using std::domain_error::domain_error;
};

// An input object fails a precondition (e.g. an unnormalized distribution
// where a normalized one is required).
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// complete_distribution: a derived joint probability left [0,1].
struct InfeasibleError : std::runtime_error {
  std::string entry;  // name of the offending entry, e.g. "p2"
  InfeasibleError(std::string entry_name, const std::string& message)
      : std::runtime_error(message), entry(std::move(entry_name)) {}
};

// Rejection sampling exhausted its attempt budget.
struct SamplingError : std::runtime_error {
  std::uint64_t attempts;
  SamplingError(std::uint64_t attempt_count, const std::string& message)
      : std::runtime_error(message), attempts(attempt_count) {}
};

// Text input could not be parsed; line and column are 1-based.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_no, int column_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ", column " +
                           std::to_string(column_no) + ": " + message),
        line(line_no),
        column(column_no) {}
};

}  // namespace eprgame
