#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cosc/errors.hpp"

namespace cosc {

struct Grid {
  Eigen::ArrayXd x;

  static Grid uniform(double lo, double hi, int points);

  Eigen::Index size() const { return x.size(); }
  double step() const { return x.size() > 1 ? x(1) - x(0) : 0.0; }
};

/// Trapezoid rule on a (possibly non-uniform) grid.
template <typename Derived>
typename Derived::Scalar trapezoid(const Grid& grid,
                                   const Eigen::ArrayBase<Derived>& f) {
  using Scalar = typename Derived::Scalar;
  Scalar acc(0);
  for (Eigen::Index i = 1; i < grid.size(); ++i) {
    acc += 0.5 * (grid.x(i) - grid.x(i - 1)) * (f(i) + f(i - 1));
  }
  return acc;
}

struct FiniteDifference {
  double h = 1e-3;
  bool richardson = true;
};

namespace detail {

template <typename F>
auto five_point(F& f, double x, int order, double h) {
  const auto fp2 = f(x + 2.0 * h);
  const auto fp1 = f(x + h);
  const auto fm1 = f(x - h);
  const auto fm2 = f(x - 2.0 * h);
  if (order == 1) return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  const auto f0 = f(x);
  return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
}

}  // namespace detail

/// First or second derivative by 5-point central differences, optionally
/// improved by one Richardson level (steps h and h/2, O(h^4) error removed).
template <typename F>
auto fd_derivative(F&& f, double x, int order, const FiniteDifference& fd = {}) {
  if (order != 1 && order != 2) {
    throw Error(ErrorKind::InvalidArgument, "fd_derivative supports orders 1 and 2");
  }
  const auto coarse = detail::five_point(f, x, order, fd.h);
  if (!fd.richardson) return coarse;
  const auto fine = detail::five_point(f, x, order, 0.5 * fd.h);
  return (16.0 * fine - coarse) / 15.0;
}

/// max |r_i - mean| / |mean| over the ratios r_i; the figure used for
/// "constant up to a global factor" checks.
double relative_spread(const std::vector<std::complex<double>>& ratios);

}  // namespace cosc
