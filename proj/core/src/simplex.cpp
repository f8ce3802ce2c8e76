#include "nlbox/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlbox::lp {

namespace {

// Dense tableau: `m` constraint rows plus one reduced-cost row (index m).
// The last column holds the right-hand side; the reduced-cost row's last
// entry holds minus the current objective.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t width)
      : m_(m), width_(width), cells_((m + 1) * width, 0.0), basis_(m, 0) {}

  double& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
  double& rhs(std::size_t r) { return at(r, width_ - 1); }
  double& cost(std::size_t c) { return at(m_, c); }

  std::size_t rows() const { return m_; }
  std::size_t rhs_col() const { return width_ - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    const double piv = at(row, col);
    for (std::size_t c = 0; c < width_; ++c) at(row, c) /= piv;
    at(row, col) = 1.0;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const double f = at(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width_; ++c) at(r, c) -= f * at(row, c);
      at(r, col) = 0.0;
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    const auto first = cells_.begin() + static_cast<std::ptrdiff_t>(row * width_);
    cells_.erase(first, first + static_cast<std::ptrdiff_t>(width_));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --m_;
  }

 private:
  std::size_t m_;
  std::size_t width_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

enum class Outcome { optimal, unbounded, iteration_limit };

// Bland's rule: lowest-index improving column enters; among tied minimum
// ratios the row whose basic variable has the lowest index leaves.
Outcome iterate(Tableau& t, std::size_t usable_cols, const Options& opt,
                std::size_t& iterations) {
  while (iterations < opt.max_iterations) {
    std::size_t enter = usable_cols;
    for (std::size_t c = 0; c < usable_cols; ++c) {
      if (t.cost(c) < -opt.tol) {
        enter = c;
        break;
      }
    }
    if (enter == usable_cols) return Outcome::optimal;

    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a > opt.tol) best_ratio = std::min(best_ratio, t.rhs(r) / a);
    }
    if (!std::isfinite(best_ratio)) return Outcome::unbounded;
    std::size_t leave = t.rows();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= opt.tol || t.rhs(r) / a > best_ratio + opt.tol) continue;
      if (leave == t.rows() || t.basis()[r] < t.basis()[leave]) leave = r;
    }
    t.pivot(leave, enter);
    ++iterations;
  }
  return Outcome::iteration_limit;
}

}  // namespace

Solution solve(const Problem& problem, const Options& options) {
  const std::size_t m = problem.a.rows;
  const std::size_t n = problem.a.cols;
  Solution sol;
  sol.x.assign(n, 0.0);

  // Columns: n structural, m artificial, 1 rhs.
  Tableau t(m, n + m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = problem.b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = sign * problem.a(r, c);
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign * problem.b[r];
    t.basis()[r] = n + r;
  }

  // Phase one: minimize the sum of artificials.
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += t.at(r, c);
    t.cost(c) = -s;
  }
  {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += t.rhs(r);
    t.cost(t.rhs_col()) = -s;
  }
  Outcome out = iterate(t, n + m, options, sol.iterations);
  if (out == Outcome::iteration_limit) {
    sol.status = Status::iteration_limit;
    return sol;
  }
  sol.infeasibility = -t.cost(t.rhs_col());
  if (sol.infeasibility > options.tol) {
    sol.status = Status::infeasible;
    return sol;
  }

  // Pivot remaining artificials out of the basis; rows with no structural
  // pivot are linearly dependent and dropped.
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basis()[r] < n) {
      ++r;
      continue;
    }
    std::size_t col = n;
    double best = options.tol;
    for (std::size_t c = 0; c < n; ++c) {
      if (std::abs(t.at(r, c)) > best) {
        best = std::abs(t.at(r, c));
        col = c;
      }
    }
    if (col == n) {
      t.drop_row(r);
    } else {
      t.pivot(r, col);
      ++r;
    }
  }

  // Phase two on the original objective.
  for (std::size_t c = 0; c < n + m + 1; ++c) t.cost(c) = 0.0;
  for (std::size_t c = 0; c < n; ++c) t.cost(c) = problem.c[c];
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const double cb = problem.c[t.basis()[r]];
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c < n + m + 1; ++c) t.cost(c) -= cb * t.at(r, c);
  }
  out = iterate(t, n, options, sol.iterations);
  if (out == Outcome::iteration_limit) {
    sol.status = Status::iteration_limit;
    return sol;
  }
  if (out == Outcome::unbounded) {
    sol.status = Status::unbounded;
    return sol;
  }

  for (std::size_t r = 0; r < t.rows(); ++r)
    sol.x[t.basis()[r]] = std::max(0.0, t.rhs(r));
  sol.objective = 0.0;
  for (std::size_t c = 0; c < n; ++c) sol.objective += problem.c[c] * sol.x[c];
  sol.status = Status::optimal;
  return sol;
}

}  // namespace nlbox::lp
