#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "surfel/errors.hpp"

namespace surfel {

template <int N>
struct LinearSystem {
  Eigen::Matrix<double, N, N> M;
  Eigen::Matrix<double, N, 1> b;
};

template <int N>
struct LinearSolution {
  Eigen::Matrix<double, N, 1> x;
  double cond = 0.0;
  double residual = 0.0;  // worst per-equation relative residual
};

template <int N>
double condition_number(const Eigen::Matrix<double, N, N>& M) {
  Eigen::JacobiSVD<Eigen::Matrix<double, N, N>> svd(M);
  const auto& sv = svd.singularValues();
  const double smin = sv(N - 1);
  if (smin == 0.0) return INFINITY;
  return sv(0) / smin;
}

// |sum_j a_ij x_j - b_i| / (sum_j |a_ij x_j| + |b_i|), worst over rows.
template <int N>
double relative_residual(const LinearSystem<N>& sys, const Eigen::Matrix<double, N, 1>& x) {
  double worst = 0.0;
  for (int i = 0; i < N; ++i) {
    double acc = -sys.b(i), mag = std::abs(sys.b(i));
    for (int j = 0; j < N; ++j) {
      acc += sys.M(i, j) * x(j);
      mag += std::abs(sys.M(i, j) * x(j));
    }
    if (mag > 0.0) worst = std::max(worst, std::abs(acc) / mag);
  }
  return worst;
}

template <int N>
LinearSolution<N> solve_checked(const LinearSystem<N>& sys, const std::string& name,
                                double max_cond = 1e14) {
  LinearSolution<N> out;
  out.cond = condition_number<N>(sys.M);
  if (!(out.cond <= max_cond))
    throw DegenerateSystem(name + ": matrix is numerically singular (condition number " +
                           std::to_string(out.cond) + ")");
  out.x = sys.M.partialPivLu().solve(sys.b);
  out.residual = relative_residual<N>(sys, out.x);
  return out;
}

}  // namespace surfel
