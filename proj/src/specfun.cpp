#include "cosc/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace cosc {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using QuadReal = __float128;
constexpr double kQuadEps = 1.925929944387236e-34;  // 2^-112
#else
using QuadReal = long double;
constexpr double kQuadEps = std::numeric_limits<long double>::epsilon();
#endif

// Minimal complex arithmetic over a real type R. std::complex is only
// specified for float/double/long double.
template <typename R>
struct Cx {
  R re;
  R im;
};

template <typename R>
Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <typename R>
Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) {
  const R n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

template <typename R>
double magnitude(const Cx<R>& a) {
  return std::hypot(static_cast<double>(a.re), static_cast<double>(a.im));
}

template <typename R>
Cx<R> lift(const cplx& z) {
  return {static_cast<R>(z.real()), static_cast<R>(z.imag())};
}

struct KernelOut {
  cplx value;
  int terms;
  double truncation;
  double weighted_abs_sum;
};

// terminate_after >= 0 means a is the non-positive integer -terminate_after,
// so the sum is an exact polynomial of that degree.
template <typename R>
KernelOut kummer_kernel(const cplx& a, const cplx& b, const cplx& z,
                        const SeriesControl& ctl, int terminate_after) {
  const Cx<R> za = lift<R>(a);
  const Cx<R> zb = lift<R>(b);
  const Cx<R> zz = lift<R>(z);
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  const double abs_z = std::abs(z);

  Cx<R> term{R(1), R(0)};
  Cx<R> sum{R(1), R(0)};
  double weighted = 1.0;
  int small_run = 0;
  double truncation = 0.0;
  int m = 0;
  for (;; ++m) {
    if (terminate_after >= 0 && m == terminate_after) break;
    if (m + 1 > ctl.max_terms) {
      throw Error(ErrorKind::NotConverged,
                  "1F1 series exhausted " + std::to_string(ctl.max_terms) +
                      " terms at |z| = " + std::to_string(abs_z));
    }
    const Cx<R> num = Cx<R>{za.re + R(m), za.im} * zz;
    const Cx<R> den = Cx<R>{(zb.re + R(m)) * R(m + 1), zb.im * R(m + 1)};
    term = term * (num / den);
    sum.re += term.re;
    sum.im += term.im;

    const double tm = magnitude(term);
    weighted += static_cast<double>(m + 2) * tm;
    small_run = (tm <= ctl.rel_tol * magnitude(sum)) ? small_run + 1 : 0;
    if (small_run >= ctl.consecutive_small) {
      // Ratio bound for every later term n >= m+1:
      // |a+n||z| / (|b+n|(n+1)) <= |z|(n+|a|) / ((n-|b|)(n+1)).
      const double n = m + 1.0;
      if (n > abs_b) {
        const double rho = abs_z * (n + abs_a) / ((n - abs_b) * (n + 1.0));
        if (rho <= 0.5) {
          truncation = tm * rho / (1.0 - rho);
          ++m;
          break;
        }
      }
    }
  }
  return {cplx(static_cast<double>(sum.re), static_cast<double>(sum.im)),
          m + 1, truncation, weighted};
}

int termination_degree(const cplx& a) {
  if (!is_nonpositive_integer(a)) return -1;
  return static_cast<int>(-a.real());
}

}  // namespace

void SeriesControl::validate() const {
  if (max_terms < 1 || !(rel_tol > 0.0 && rel_tol < 1.0) ||
      consecutive_small < 2) {
    throw Error(ErrorKind::InvalidArgument, "invalid SeriesControl");
  }
}

bool is_nonpositive_integer(const cplx& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

SeriesResult hyp1f1_series(const cplx& a, const cplx& b, const cplx& z,
                           const SeriesControl& ctl) {
  ctl.validate();
  const int degree = termination_degree(a);
  if (is_nonpositive_integer(b)) {
    const int pole = static_cast<int>(-b.real());
    if (degree < 0 || degree > pole) {
      throw Error(ErrorKind::PoleAtB,
                  "1F1 with b a non-positive integer and non-terminating series");
    }
  }
  if (z == cplx(0.0) || degree == 0) {
    return {cplx(1.0), 1, 0.0, 0.0, Accumulator::Double};
  }

  constexpr double kDoubleEps = std::numeric_limits<double>::epsilon();
  KernelOut out = kummer_kernel<double>(a, b, z, ctl, degree);
  double rounding = kDoubleEps * out.weighted_abs_sum;
  if (rounding <= 100.0 * ctl.rel_tol * std::abs(out.value)) {
    return {out.value, out.terms, out.truncation, rounding, Accumulator::Double};
  }
  // x87 extended precision is cheap; the software quad type only when the
  // cancellation is too deep for it.
  constexpr double kLongEps = std::numeric_limits<long double>::epsilon();
  out = kummer_kernel<long double>(a, b, z, ctl, degree);
  rounding = kLongEps * out.weighted_abs_sum + kDoubleEps * std::abs(out.value);
  if (kLongEps * out.weighted_abs_sum <= 100.0 * ctl.rel_tol * std::abs(out.value)) {
    return {out.value, out.terms, out.truncation, rounding, Accumulator::LongDouble};
  }
  out = kummer_kernel<QuadReal>(a, b, z, ctl, degree);
  rounding = kQuadEps * out.weighted_abs_sum +
             kDoubleEps * std::abs(out.value);  // final rounding to double
  return {out.value, out.terms, out.truncation, rounding, Accumulator::Quad};
}

cplx hyp1f1_deriv(const cplx& a, const cplx& b, const cplx& z, int m,
                  const SeriesControl& ctl) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "hyp1f1_deriv: m < 0");
  cplx factor(1.0);
  for (int i = 0; i < m; ++i) {
    factor *= (a + double(i)) / (b + double(i));
  }
  if (factor == cplx(0.0)) return cplx(0.0);
  return factor * hyp1f1(a + double(m), b + double(m), z, ctl);
}

cplx erf_c(const cplx& z, const SeriesControl& ctl) {
  if (z == cplx(0.0)) return cplx(0.0);
  const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);
  const cplx zsq = z * z;
  if (zsq.real() > 0.0) {
    return two_over_sqrt_pi * z * std::exp(-zsq) *
           hyp1f1(cplx(1.0), cplx(1.5), zsq, ctl);
  }
  return two_over_sqrt_pi * z * hyp1f1(cplx(0.5), cplx(1.5), -zsq, ctl);
}

cplx log_gamma(const cplx& z) {
  static constexpr double kG = 7.0;
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,     676.5203681218851,   -1259.1392167224028,
      771.32342877765313,      -176.61502916214059, 12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,
      1.5056327351493116e-7};
  const double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  const cplx w = z - 1.0;
  cplx series(kCoef[0]);
  for (std::size_t k = 1; k < kCoef.size(); ++k) {
    series += kCoef[k] / (w + double(k));
  }
  const cplx t = w + kG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (w + 0.5) * std::log(t) - t +
         std::log(series);
}

cplx gamma_ratio(const cplx& num, const cplx& den) {
  if (is_nonpositive_integer(num)) {
    throw Error(ErrorKind::InvalidArgument, "gamma_ratio: numerator at a pole");
  }
  if (is_nonpositive_integer(den)) return cplx(0.0);
  if (num.imag() == 0.0 && den.imag() == 0.0 && std::abs(num.real()) < 150.0 &&
      std::abs(den.real()) < 150.0) {
    return cplx(std::tgamma(num.real()) / std::tgamma(den.real()), 0.0);
  }
  return std::exp(log_gamma(num) - log_gamma(den));
}

}  // namespace cosc
