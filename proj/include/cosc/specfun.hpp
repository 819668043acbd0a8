#pragma once

#include <complex>

#include "cosc/errors.hpp"

namespace cosc {

using cplx = std::complex<double>;

/// Stopping policy for power-series evaluation.
///
/// Summation stops once `consecutive_small` successive terms fall below
/// `rel_tol * |partial sum|` *and* a geometric bound on the remaining tail is
/// available (term ratio provably below 1/2 from that index on).
struct SeriesControl {
  int max_terms = 2000;
  double rel_tol = 1e-14;
  int consecutive_small = 3;

  void validate() const;
};

enum class Accumulator { Double, LongDouble, Quad };

/// Value of a summed series together with the error bookkeeping that
/// describes where it can be trusted.
struct SeriesResult {
  cplx value;
  int terms = 0;
  double truncation_error = 0.0;  // absolute bound on the neglected tail
  double rounding_error = 0.0;    // absolute estimate of accumulated rounding
  Accumulator accumulator = Accumulator::Double;

  double error_estimate() const { return truncation_error + rounding_error; }
  double relative_error() const {
    const double mag = std::abs(value);
    return mag > 0.0 ? error_estimate() / mag : error_estimate();
  }
};

bool is_nonpositive_integer(const cplx& z);

/// Kummer's function 1F1(a; b; z) by forward term recurrence.
///
/// The partial sums are accumulated in double precision first; when the
/// rounding estimate (eps * sum |t_m| weighted by recurrence depth) exceeds
/// 100 * rel_tol relative to the result, the sum is redone in long double
/// and, if that is still not enough, in quad precision (__float128 where
/// available). Throws PoleAtB or NotConverged.
SeriesResult hyp1f1_series(const cplx& a, const cplx& b, const cplx& z,
                           const SeriesControl& ctl = {});

inline cplx hyp1f1(const cplx& a, const cplx& b, const cplx& z,
                   const SeriesControl& ctl = {}) {
  return hyp1f1_series(a, b, z, ctl).value;
}

/// m-th z-derivative, [(a)_m / (b)_m] 1F1(a+m; b+m; z).
cplx hyp1f1_deriv(const cplx& a, const cplx& b, const cplx& z, int m,
                  const SeriesControl& ctl = {});

/// Physicists' Hermite polynomial H_n by the three-term recurrence. Works for
/// any field-like scalar (double, std::complex, integer types for exact
/// coefficient checks).
template <typename Scalar>
Scalar hermite(int n, const Scalar& z) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "hermite: negative order");
  Scalar prev = Scalar(1);
  if (n == 0) return prev;
  Scalar cur = Scalar(2) * z;
  for (int k = 1; k < n; ++k) {
    Scalar next = Scalar(2) * z * cur - Scalar(2 * k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// erf(z) = (2z/sqrt(pi)) 1F1(1/2; 3/2; -z^2). Internally the Kummer image
/// e^{-z^2} 1F1(1; 3/2; z^2) is used whenever Re(z^2) > 0.
cplx erf_c(const cplx& z, const SeriesControl& ctl = {});

/// Principal-ish log Gamma (Lanczos, reflection for Re z < 1/2). Only
/// differences of this function are meaningful across branch cuts.
cplx log_gamma(const cplx& z);

/// Gamma(num) / Gamma(den). Returns 0 when den sits on a pole; throws
/// InvalidArgument when num does.
cplx gamma_ratio(const cplx& num, const cplx& den);

}  // namespace cosc
