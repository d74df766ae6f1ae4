#include "moldsched/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moldsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarState : unsigned char { Basic, AtLower, AtUpper };

// Dense LU with partial pivoting; solves B x = rhs in place.
bool lu_solve(std::vector<double>& matrix, int n, std::vector<double>& rhs) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  auto at = [&matrix, n](int r, int c) -> double& {
    return matrix[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(c)];
  };

  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    double best = std::fabs(at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::fabs(at(r, col));
      if (mag > best) {
        best = mag;
        pivot_row = r;
      }
    }
    if (best < 1e-12) return false;
    if (pivot_row != col) {
      for (int c = 0; c < n; ++c) std::swap(at(col, c), at(pivot_row, c));
      std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(pivot_row)]);
    }
    const double inv = 1.0 / at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = at(r, col) * inv;
      if (f == 0.0) continue;
      at(r, col) = 0.0;
      for (int c = col + 1; c < n; ++c) at(r, c) -= f * at(col, c);
      rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double acc = rhs[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < n; ++c) acc -= at(r, c) * rhs[static_cast<std::size_t>(c)];
    rhs[static_cast<std::size_t>(r)] = acc / at(r, r);
  }
  return true;
}

}  // namespace

SimplexResult solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  const int num_rows = static_cast<int>(lp.rows.size());
  const int num_structural = lp.num_vars;
  SimplexResult result;

  if (num_structural == 0) {
    result.status = SolveStatus::Optimal;
    return result;
  }

  // Column layout: structural | one slack per row | artificials (if needed).
  // GreaterEqual rows are stored negated so every slack has coefficient +1
  // and the initial basis matrix is the identity.
  const int slack_base = num_structural;

  struct Column {
    std::vector<std::pair<int, double>> entries;  // (row, coefficient)
    double upper = kInf;
    double cost = 0.0;  // scaled phase-2 cost
  };
  std::vector<Column> cols(static_cast<std::size_t>(slack_base + num_rows));

  double cost_scale = 0.0;
  for (double c : lp.objective) cost_scale = std::max(cost_scale, std::fabs(c));
  if (cost_scale == 0.0) cost_scale = 1.0;

  for (int j = 0; j < num_structural; ++j) {
    cols[static_cast<std::size_t>(j)].upper = lp.upper[static_cast<std::size_t>(j)];
    cols[static_cast<std::size_t>(j)].cost = lp.objective[static_cast<std::size_t>(j)] / cost_scale;
  }
  std::vector<double> rhs(static_cast<std::size_t>(num_rows));
  for (int i = 0; i < num_rows; ++i) {
    const auto& row = lp.rows[static_cast<std::size_t>(i)];
    const double sign = (row.sense == RowSense::GreaterEqual) ? -1.0 : 1.0;
    rhs[static_cast<std::size_t>(i)] = sign * row.rhs;
    for (const auto& [var, coef] : row.terms) {
      if (var < 0 || var >= num_structural)
        throw std::invalid_argument("solve_lp: variable index out of range");
      cols[static_cast<std::size_t>(var)].entries.push_back({i, sign * coef});
    }
    auto& slack = cols[static_cast<std::size_t>(slack_base + i)];
    slack.entries.push_back({i, 1.0});
    slack.upper = (row.sense == RowSense::Equal) ? 0.0 : kInf;
  }

  // Nonbasic states and values; slacks start basic.
  std::vector<VarState> state(cols.size(), VarState::AtLower);
  auto nonbasic_value = [&cols, &state](int j) {
    return state[static_cast<std::size_t>(j)] == VarState::AtUpper
               ? cols[static_cast<std::size_t>(j)].upper
               : 0.0;
  };
  for (int j : options.start_at_upper) {
    if (j < 0 || j >= num_structural || !(cols[static_cast<std::size_t>(j)].upper < kInf))
      throw std::invalid_argument("solve_lp: bad start_at_upper hint");
    state[static_cast<std::size_t>(j)] = VarState::AtUpper;
  }

  std::vector<int> basis(static_cast<std::size_t>(num_rows));
  std::vector<double> beta(static_cast<std::size_t>(num_rows));
  for (int i = 0; i < num_rows; ++i) {
    basis[static_cast<std::size_t>(i)] = slack_base + i;
    state[static_cast<std::size_t>(slack_base + i)] = VarState::Basic;
    beta[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < num_structural; ++j) {
    const double value = nonbasic_value(j);
    if (value == 0.0) continue;
    for (const auto& [row, coef] : cols[static_cast<std::size_t>(j)].entries)
      beta[static_cast<std::size_t>(row)] -= coef * value;
  }

  // Rows whose slack start violates its bounds get an artificial column.
  std::vector<int> artificial_rows;
  for (int i = 0; i < num_rows; ++i) {
    const auto& slack = cols[static_cast<std::size_t>(slack_base + i)];
    const double value = beta[static_cast<std::size_t>(i)];
    if (value < -options.tol || value > slack.upper + options.tol)
      artificial_rows.push_back(i);
  }
  const bool need_phase1 = !artificial_rows.empty();
  const int art_base = slack_base + num_rows;
  for (int i : artificial_rows) {
    Column art;
    const double value = beta[static_cast<std::size_t>(i)];
    art.entries.push_back({i, value < 0.0 ? -1.0 : 1.0});
    art.upper = kInf;
    cols.push_back(std::move(art));
  }

  const int num_cols = static_cast<int>(cols.size());
  const std::size_t stride = static_cast<std::size_t>(num_cols);
  std::vector<double> tableau(static_cast<std::size_t>(num_rows) * stride, 0.0);
  auto tab = [&tableau, stride](int r) { return tableau.data() + static_cast<std::size_t>(r) * stride; };
  for (int j = 0; j < num_cols; ++j)
    for (const auto& [row, coef] : cols[static_cast<std::size_t>(j)].entries)
      tab(row)[j] = coef;

  // Swap the artificials into the basis (their columns are +-unit vectors,
  // so the "pivot" is a row sign flip at most).
  state.resize(cols.size(), VarState::AtLower);
  for (std::size_t a = 0; a < artificial_rows.size(); ++a) {
    const int i = artificial_rows[a];
    const int art_col = art_base + static_cast<int>(a);
    const double sign = cols[static_cast<std::size_t>(art_col)].entries.front().second;
    if (sign < 0.0)
      for (int c = 0; c < num_cols; ++c) tab(i)[c] = -tab(i)[c];
    state[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] = VarState::AtLower;
    basis[static_cast<std::size_t>(i)] = art_col;
    state[static_cast<std::size_t>(art_col)] = VarState::Basic;
    beta[static_cast<std::size_t>(i)] = std::fabs(beta[static_cast<std::size_t>(i)]);
  }

  const int max_iterations =
      options.max_iterations > 0 ? options.max_iterations : 50 * (num_cols + num_rows);

  std::vector<double> reduced(static_cast<std::size_t>(num_cols), 0.0);
  auto rebuild_reduced_costs = [&](bool phase1) {
    for (int j = 0; j < num_cols; ++j) {
      double cost = 0.0;
      if (phase1)
        cost = (j >= art_base) ? 1.0 : 0.0;
      else
        cost = cols[static_cast<std::size_t>(j)].cost;
      reduced[static_cast<std::size_t>(j)] = cost;
    }
    for (int i = 0; i < num_rows; ++i) {
      const int b = basis[static_cast<std::size_t>(i)];
      double cb = 0.0;
      if (phase1)
        cb = (b >= art_base) ? 1.0 : 0.0;
      else
        cb = cols[static_cast<std::size_t>(b)].cost;
      if (cb == 0.0) continue;
      const double* row = tab(i);
      for (int j = 0; j < num_cols; ++j) reduced[static_cast<std::size_t>(j)] -= cb * row[j];
    }
  };

  auto fixed = [&cols](int j) { return cols[static_cast<std::size_t>(j)].upper <= 0.0; };

  // One phase of bounded-variable simplex; returns false on iteration limit.
  auto run_phase = [&](bool phase1) -> SolveStatus {
    int degenerate_streak = 0;
    bool bland = false;
    for (;;) {
      if (result.iterations >= max_iterations) return SolveStatus::IterationLimit;

      // Entering column.
      int entering = -1;
      double best_violation = options.tol;
      for (int j = 0; j < num_cols; ++j) {
        const auto st = state[static_cast<std::size_t>(j)];
        if (st == VarState::Basic) continue;
        if (fixed(j)) continue;
        if (!phase1 && j >= art_base) continue;  // artificials stay out
        const double d = reduced[static_cast<std::size_t>(j)];
        const double violation = (st == VarState::AtLower) ? -d : d;
        if (violation > best_violation) {
          entering = j;
          if (bland) break;  // smallest index wins
          best_violation = violation;
        }
      }
      if (entering < 0) return SolveStatus::Optimal;

      const double direction =
          (state[static_cast<std::size_t>(entering)] == VarState::AtLower) ? 1.0 : -1.0;

      // Ratio test over basic bounds plus the entering bound span.
      double step = cols[static_cast<std::size_t>(entering)].upper;  // lower bounds are 0
      int leave_row = -1;
      double leave_alpha = 0.0;
      for (int i = 0; i < num_rows; ++i) {
        const double alpha = direction * tab(i)[entering];
        if (std::fabs(alpha) <= options.pivot_tol) continue;
        const int b = basis[static_cast<std::size_t>(i)];
        double limit;
        if (alpha > 0.0) {
          limit = beta[static_cast<std::size_t>(i)] / alpha;  // drops to its lower bound 0
        } else {
          const double ub = cols[static_cast<std::size_t>(b)].upper;
          if (!(ub < kInf)) continue;
          limit = (ub - beta[static_cast<std::size_t>(i)]) / (-alpha);
        }
        if (limit < -1e-12) limit = 0.0;
        const bool better =
            limit < step - 1e-12 ||
            (limit < step + 1e-12 && leave_row >= 0 &&
             (bland ? b < basis[static_cast<std::size_t>(leave_row)]
                    : std::fabs(alpha) > std::fabs(leave_alpha)));
        if (better) {
          step = std::max(limit, 0.0);
          leave_row = i;
          leave_alpha = alpha;
        }
      }

      if (leave_row < 0 && !(step < kInf)) return SolveStatus::Unbounded;

      ++result.iterations;
      if (step <= 1e-10) {
        if (++degenerate_streak > 40) bland = true;
      } else {
        degenerate_streak = 0;
      }

      const double delta = direction * step;
      if (leave_row < 0) {
        // Bound flip: the entering variable crosses to its other bound.
        for (int i = 0; i < num_rows; ++i)
          beta[static_cast<std::size_t>(i)] -= tab(i)[entering] * delta;
        state[static_cast<std::size_t>(entering)] =
            (state[static_cast<std::size_t>(entering)] == VarState::AtLower) ? VarState::AtUpper
                                                                             : VarState::AtLower;
        continue;
      }

      const double entering_value = nonbasic_value(entering) + delta;
      for (int i = 0; i < num_rows; ++i) {
        if (i == leave_row) continue;
        beta[static_cast<std::size_t>(i)] -= tab(i)[entering] * delta;
      }

      const int leaving = basis[static_cast<std::size_t>(leave_row)];
      state[static_cast<std::size_t>(leaving)] =
          (leave_alpha > 0.0) ? VarState::AtLower : VarState::AtUpper;

      // Pivot the tableau and the reduced-cost row.
      double* pivot_row = tab(leave_row);
      const double inv = 1.0 / pivot_row[entering];
      for (int c = 0; c < num_cols; ++c) pivot_row[c] *= inv;
      pivot_row[entering] = 1.0;
      for (int i = 0; i < num_rows; ++i) {
        if (i == leave_row) continue;
        double* row = tab(i);
        const double f = row[entering];
        if (f == 0.0) continue;
        for (int c = 0; c < num_cols; ++c) row[c] -= f * pivot_row[c];
        row[entering] = 0.0;
      }
      {
        const double f = reduced[static_cast<std::size_t>(entering)];
        if (f != 0.0) {
          for (int c = 0; c < num_cols; ++c)
            reduced[static_cast<std::size_t>(c)] -= f * pivot_row[c];
          reduced[static_cast<std::size_t>(entering)] = 0.0;
        }
      }

      basis[static_cast<std::size_t>(leave_row)] = entering;
      state[static_cast<std::size_t>(entering)] = VarState::Basic;
      beta[static_cast<std::size_t>(leave_row)] = entering_value;
    }
  };

  if (need_phase1) {
    rebuild_reduced_costs(true);
    const auto status = run_phase(true);
    if (status != SolveStatus::Optimal) {
      result.status = status == SolveStatus::Unbounded ? SolveStatus::Infeasible : status;
      return result;
    }
    double infeasibility = 0.0;
    for (int i = 0; i < num_rows; ++i)
      if (basis[static_cast<std::size_t>(i)] >= art_base)
        infeasibility += beta[static_cast<std::size_t>(i)];
    if (infeasibility > 1e-7) {
      result.status = SolveStatus::Infeasible;
      return result;
    }
    // Artificials are pinned at zero from here on.
    for (int j = art_base; j < num_cols; ++j) cols[static_cast<std::size_t>(j)].upper = 0.0;
  }

  rebuild_reduced_costs(false);
  const auto status = run_phase(false);
  result.status = status;
  if (status != SolveStatus::Optimal && status != SolveStatus::IterationLimit) return result;

  // Recompute basic values from a fresh factorization of the final basis to
  // shed tableau drift.
  {
    std::vector<double> bmat(static_cast<std::size_t>(num_rows) * static_cast<std::size_t>(num_rows), 0.0);
    std::vector<double> fresh(static_cast<std::size_t>(num_rows));
    for (int i = 0; i < num_rows; ++i) fresh[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)];
    for (int j = 0; j < num_cols; ++j) {
      if (state[static_cast<std::size_t>(j)] != VarState::AtUpper) continue;
      const double value = cols[static_cast<std::size_t>(j)].upper;
      if (value == 0.0) continue;
      for (const auto& [row, coef] : cols[static_cast<std::size_t>(j)].entries)
        fresh[static_cast<std::size_t>(row)] -= coef * value;
    }
    for (int i = 0; i < num_rows; ++i) {
      const int b = basis[static_cast<std::size_t>(i)];
      for (const auto& [row, coef] : cols[static_cast<std::size_t>(b)].entries)
        bmat[static_cast<std::size_t>(row) * static_cast<std::size_t>(num_rows) +
             static_cast<std::size_t>(i)] = coef;
    }
    if (lu_solve(bmat, num_rows, fresh))
      for (int i = 0; i < num_rows; ++i) beta[static_cast<std::size_t>(i)] = fresh[static_cast<std::size_t>(i)];
  }

  result.x.assign(static_cast<std::size_t>(num_structural), 0.0);
  for (int j = 0; j < num_structural; ++j)
    if (state[static_cast<std::size_t>(j)] == VarState::AtUpper)
      result.x[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)].upper;
  for (int i = 0; i < num_rows; ++i) {
    const int b = basis[static_cast<std::size_t>(i)];
    if (b < num_structural) {
      double value = beta[static_cast<std::size_t>(i)];
      value = std::max(value, 0.0);
      const double ub = cols[static_cast<std::size_t>(b)].upper;
      if (ub < kInf) value = std::min(value, ub);
      result.x[static_cast<std::size_t>(b)] = value;
    }
  }

  result.objective = 0.0;
  for (int j = 0; j < num_structural; ++j)
    result.objective += lp.objective[static_cast<std::size_t>(j)] * result.x[static_cast<std::size_t>(j)];
  return result;
}

}  // namespace moldsched
