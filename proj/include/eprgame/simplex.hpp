#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eprgame/errors.hpp"
#include "eprgame/rational.hpp"

namespace eprgame {

enum class Relation { LessEq, Equal, GreaterEq };

struct Constraint {
  std::vector<Rational> coef;
  Relation rel;
  Rational rhs;
};

// maximize objective . x  subject to the constraints and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status;
  Rational objective;
  std::vector<Rational> x;
};

// Dense two-phase primal simplex over exact rationals, Bland's rule
// throughout (entering: lowest eligible column; leaving: lowest basic
// variable among minimal ratios), so cycling cannot occur. Problem sizes in
// this project stay below ~50 x 50; no effort is spent on sparsity.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp) : n_(lp.num_vars), num_cols_(lp.num_vars) {
    if (static_cast<int>(lp.objective.size()) != n_)
      throw InvalidInputError("objective arity mismatch");
    std::size_t m = lp.constraints.size();
    std::vector<Relation> rel(m);
    std::map<std::size_t, int> slack_of_row;
    rows_.assign(m, {});
    rhs_.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = lp.constraints[i];
      if (static_cast<int>(c.coef.size()) != n_)
        throw InvalidInputError("constraint arity mismatch");
      rows_[i].assign(c.coef.begin(), c.coef.end());
      rhs_[i] = c.rhs;
      rel[i] = c.rel;
      if (rhs_[i] < 0) {  // normalize to nonnegative right-hand sides
        for (Rational& v : rows_[i]) v = -v;
        rhs_[i] = -rhs_[i];
        rel[i] = rel[i] == Relation::LessEq   ? Relation::GreaterEq
                 : rel[i] == Relation::GreaterEq ? Relation::LessEq
                                                 : Relation::Equal;
      }
    }
    // slack / surplus columns
    for (std::size_t i = 0; i < m; ++i) {
      if (rel[i] == Relation::Equal) continue;
      int col = add_column();
      rows_[i][col] = rel[i] == Relation::LessEq ? 1 : -1;
      if (rel[i] == Relation::LessEq) slack_of_row[i] = col;
    }
    first_artificial_ = num_cols_;
    basis_.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      auto it = slack_of_row.find(i);
      if (it != slack_of_row.end()) {
        basis_[i] = it->second;
      } else {
        int col = add_column();
        rows_[i][col] = 1;
        basis_[i] = col;
      }
    }
    objective_ = lp.objective;
    objective_.resize(num_cols_, Rational(0));
  }

  LpSolution solve() {
    if (first_artificial_ < num_cols_) {
      std::vector<Rational> phase1(num_cols_, Rational(0));
      for (int j = first_artificial_; j < num_cols_; ++j) phase1[j] = -1;
      Rational value = run_phase(phase1, num_cols_);
      if (value < 0) return {LpStatus::Infeasible, Rational(0), {}};
      evict_artificials();
    }
    Rational value = run_phase(objective_, first_artificial_);
    if (unbounded_) return {LpStatus::Unbounded, Rational(0), {}};
    LpSolution sol{LpStatus::Optimal, value, std::vector<Rational>(n_, Rational(0))};
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) sol.x[basis_[i]] = rhs_[i];
    return sol;
  }

 private:
  int add_column() {
    for (auto& row : rows_) row.push_back(Rational(0));
    return num_cols_++;
  }

  // Canonicalizes the reduced-cost row for `cost`, then pivots until no
  // eligible entering column below `col_limit` remains. Returns the
  // objective value; sets unbounded_ if a ray is found.
  Rational run_phase(const std::vector<Rational>& cost, int col_limit) {
    unbounded_ = false;
    std::vector<Rational> reduced(cost.begin(), cost.end());
    reduced.resize(num_cols_, Rational(0));
    Rational value(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      value += cb * rhs_[i];
      for (int j = 0; j < num_cols_; ++j) reduced[j] -= cb * rows_[i][j];
    }
    while (true) {
      int entering = -1;
      for (int j = 0; j < col_limit; ++j)
        if (reduced[j] > 0) {
          entering = j;
          break;
        }
      if (entering < 0) return value;
      int leaving = -1;
      Rational best_ratio(0);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio(rhs_[i] / rows_[i][entering]);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        unbounded_ = true;
        return value;
      }
      pivot(leaving, entering, reduced, value);
    }
  }

  void pivot(int row, int col, std::vector<Rational>& reduced, Rational& value) {
    Rational inv(1 / rows_[row][col]);
    for (Rational& v : rows_[row]) v *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == row || rows_[i][col] == 0) continue;
      Rational factor = rows_[i][col];
      for (int j = 0; j < num_cols_; ++j) rows_[i][j] -= factor * rows_[row][j];
      rhs_[i] -= factor * rhs_[row];
    }
    if (reduced[col] != 0) {
      Rational factor = reduced[col];
      for (int j = 0; j < num_cols_; ++j) reduced[j] -= factor * rows_[row][j];
      value += factor * rhs_[row];
      reduced[col] = 0;
    }
    basis_[row] = col;
  }

  // After phase 1, pivot any artificial still in the basis out on a real
  // column (its value is zero, so feasibility is preserved); rows with no
  // real coefficients are redundant and dropped.
  void evict_artificials() {
    std::vector<Rational> dummy(num_cols_, Rational(0));
    Rational dummy_value(0);
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < first_artificial_; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(static_cast<int>(i), col, dummy, dummy_value);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  int n_;
  int num_cols_ = 0;
  int first_artificial_ = 0;
  bool unbounded_ = false;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<Rational> objective_;
};

inline LpSolution solve_lp(const LinearProgram& lp) { return SimplexSolver(lp).solve(); }

}  // namespace eprgame
