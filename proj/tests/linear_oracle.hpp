#pragma once

// Test-only exact linear-algebra oracle: solves the normalization +
// causal-communication system for the 17 dependent entries by Gauss-Jordan
// elimination, independently of the closed forms in the library.

#include <stdexcept>
#include <vector>

#include "eprgame/epr.hpp"
#include "eprgame/joint_distribution.hpp"

namespace testutil {

using namespace eprgame;

struct UniqueSolution {
  bool unique = false;
  std::vector<Rational> x;
};

// Gauss-Jordan over rationals; returns unique=false when the rank is
// deficient, throws when the system is inconsistent.
inline UniqueSolution solve_unique(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    Rational inv(1 / a[rank][col]);
    for (Rational& v : a[rank]) v *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= factor * a[rank][c];
      b[r] -= factor * b[rank];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) throw std::runtime_error("inconsistent linear system");
  UniqueSolution out;
  out.unique = rank == cols;
  if (out.unique) {
    out.x.assign(cols, Rational(0));
    for (std::size_t col = 0; col < cols; ++col) out.x[col] = b[pivot_of_col[col]];
  }
  return out;
}

// Builds the constraint system over the 17 dependent entries with the ten
// independents substituted as constants, then solves it. Every normalization
// equation and every chain equality is included.
inline UniqueSolution oracle_completion(const CompletionInput& input) {
  std::vector<int> unknown_of_index(65, -1);
  const auto& dep = derived_indices();
  for (int k = 0; k < static_cast<int>(dep.size()); ++k) unknown_of_index[dep[k]] = k;

  std::vector<Rational> known(65, Rational(0));
  for (int k = 0; k < 10; ++k) known[independent_indices()[k]] = input.values[k];
  std::vector<bool> is_known(65, true);
  for (int idx : dep) is_known[idx] = false;

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  auto add_equation = [&](const std::vector<int>& plus, const std::vector<int>& minus,
                          const Rational& rhs) {
    std::vector<Rational> row(dep.size(), Rational(0));
    Rational constant = rhs;
    for (int idx : plus) {
      if (is_known[idx])
        constant -= known[idx];
      else
        row[unknown_of_index[idx]] += 1;
    }
    for (int idx : minus) {
      if (is_known[idx])
        constant += known[idx];
      else
        row[unknown_of_index[idx]] -= 1;
    }
    a.push_back(std::move(row));
    b.push_back(constant);
  };

  for (int block = 0; block < 8; ++block) {
    std::vector<int> indices;
    for (int pos = 1; pos <= 8; ++pos) indices.push_back(8 * block + pos);
    add_equation(indices, {}, Rational(1));
  }
  for (const MarginalChain& chain : no_signaling_chains())
    for (int g = 1; g < 4; ++g) {
      std::vector<int> plus(chain.groups[g].begin(), chain.groups[g].end());
      std::vector<int> minus(chain.groups[0].begin(), chain.groups[0].end());
      add_equation(plus, minus, Rational(0));
    }
  return solve_unique(std::move(a), std::move(b));
}

}  // namespace testutil
