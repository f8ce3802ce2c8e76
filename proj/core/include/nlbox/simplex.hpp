#pragma once

#include <cstddef>
#include <vector>

#include "nlbox/tolerances.hpp"

namespace nlbox::lp {

/// Dense row-major matrix used for the constraint block.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

/// minimize c.x subject to A x = b, x >= 0.
struct Problem {
  Matrix a;
  std::vector<double> b;
  std::vector<double> c;
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };

struct Solution {
  Status status = Status::iteration_limit;
  std::vector<double> x;
  double objective = 0.0;
  // Phase-one residual (sum of artificials) at the end of phase one.
  double infeasibility = 0.0;
  std::size_t iterations = 0;
};

struct Options {
  double tol = kLpTol;
  std::size_t max_iterations = 100000;
};

/// Two-phase dense tableau simplex with Bland's anticycling rule.
/// Redundant equality rows are detected after phase one and dropped.
Solution solve(const Problem& problem, const Options& options = {});

}  // namespace nlbox::lp
