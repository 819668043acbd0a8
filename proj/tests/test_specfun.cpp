#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cosc/specfun.hpp"

using cosc::cplx;
using cosc::Error;
using cosc::ErrorKind;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(const cplx& a, const cplx& b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// Plain long-double term recurrence, no stopping heuristics.
std::complex<long double> naive_1f1(cplx a, cplx b, cplx z, int terms = 400) {
  using C = std::complex<long double>;
  C sum = 1, t = 1;
  for (int m = 0; m < terms; ++m) {
    t *= (C(a) + (long double)m) / (C(b) + (long double)m) * C(z) / (long double)(m + 1);
    sum += t;
  }
  return sum;
}

// Taylor series of erf, summed in long double.
cplx taylor_erf(cplx z) {
  using C = std::complex<long double>;
  const C zz = z;
  C term = zz, sum = zz;
  for (int n = 1; n < 200; ++n) {
    term *= -zz * zz / (long double)n;
    sum += term / (long double)(2 * n + 1);
  }
  return cplx(sum * (long double)(2.0 / std::sqrt(kPi)));
}

// Integer polynomial in ascending powers, enough for the Hermite recurrence.
struct IntPoly {
  std::vector<long long> c;

  IntPoly() = default;
  explicit IntPoly(long long v) : c{v} {}
  static IntPoly x() { IntPoly p; p.c = {0, 1}; return p; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
};

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("1F1 matches a plain long-double series") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const cplx a(u(rng), u(rng));
    const cplx b(std::abs(u(rng)) + 0.5, u(rng));
    const cplx z(u(rng), u(rng));
    CHECK(rel(cosc::hyp1f1(a, b, z), cplx(naive_1f1(a, b, z))) < 1e-12);
  }
}

TEST_CASE("1F1 elementary reductions") {
  for (const cplx z : {cplx(0.3, -1.2), cplx(-4.0, 2.0), cplx(7.5, 0.1)}) {
    CHECK(rel(cosc::hyp1f1(2.5, 2.5, z), std::exp(z)) < 1e-13);
    CHECK(rel(cosc::hyp1f1(1.0, 2.0, z), (std::exp(z) - 1.0) / z) < 1e-13);
  }
  CHECK(cosc::hyp1f1({0.3, 0.2}, {1.1, -0.4}, 0.0) == cplx(1.0));
  // Terminating series: M(-2, b, z) = 1 - 2z/b + z^2 / (b (b+1)).
  const cplx b(0.7, 0.3), z(1.9, -0.6);
  CHECK(rel(cosc::hyp1f1(-2.0, b, z), 1.0 - 2.0 * z / b + z * z / (b * (b + 1.0))) < 1e-14);
}

TEST_CASE("Kummer transformation holds in the cancellation regime") {
  // M(a, b, -30) is tiny compared with its terms; the cascade must notice.
  const cplx a(0.4, 0.3), b(1.5, -0.2);
  const cosc::SeriesResult r = cosc::hyp1f1_series(a, b, -30.0);
  CHECK(r.accumulator != cosc::Accumulator::Double);
  CHECK(rel(r.value, std::exp(cplx(-30.0)) * cosc::hyp1f1(b - a, b, 30.0)) < 1e-10);
  CHECK(r.relative_error() < 1e-10);
}

TEST_CASE("1F1 error paths") {
  CHECK_THROWS_AS(cosc::hyp1f1(0.5, -2.0, 1.0), Error);
  try {
    cosc::hyp1f1(0.5, -2.0, 1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtB);
  }
  // The numerator terminates before the pole: well defined.
  CHECK(rel(cosc::hyp1f1(-1.0, -2.0, 3.0), 1.0 + 1.5) < 1e-15);

  cosc::SeriesControl tight;
  tight.max_terms = 5;
  try {
    cosc::hyp1f1(0.5, 1.5, 20.0, tight);
    FAIL("expected NotConverged");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConverged);
  }

  cosc::SeriesControl bad;
  bad.rel_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("derivative identity d/dz M = (a/b) M(a+1, b+1)") {
  const cplx a(0.8, -0.3), b(1.7, 0.4), z(1.1, 0.9);
  const double h = 1e-4;
  const cplx fd = (cosc::hyp1f1(a, b, z + h) - cosc::hyp1f1(a, b, z - h)) / (2.0 * h);
  CHECK(rel(cosc::hyp1f1_deriv(a, b, z, 1), fd) < 1e-7);
  CHECK(rel(cosc::hyp1f1_deriv(a, b, z, 1), a / b * cosc::hyp1f1(a + 1.0, b + 1.0, z)) < 1e-15);
}

TEST_CASE("erf on and off the real axis") {
  for (double x = -5.0; x <= 5.0; x += 0.125) {
    const cplx e = cosc::erf_c(x);
    CHECK(std::abs(e.imag()) < 1e-12);
    CHECK(std::abs(e.real() - std::erf(x)) < 1e-14);
  }
  for (const cplx z : {cplx(0.5, 0.5), cplx(-1.2, 2.0), cplx(2.5, -1.0), cplx(0.0, 1.7)}) {
    CHECK(rel(cosc::erf_c(z), taylor_erf(z)) < 1e-12);
    CHECK(rel(cosc::erf_c(std::conj(z)), std::conj(cosc::erf_c(z))) < 1e-15);
  }
  CHECK(std::abs(cosc::erf_c(cplx(0.0, 1.3)).real()) == 0.0);
}

TEST_CASE("log Gamma and Gamma ratios") {
  for (double x : {0.3, 1.0, 2.5, 7.25, 40.0}) {
    CHECK(std::abs(cosc::log_gamma(x).real() - std::lgamma(x)) < 1e-12 * std::max(1.0, std::lgamma(x)));
  }
  // Reflection formula Gamma(z) Gamma(1 - z) = pi / sin(pi z).
  for (const cplx z : {cplx(0.3, 0.4), cplx(-1.7, 0.2), cplx(2.2, -1.1)}) {
    const cplx lhs = std::exp(cosc::log_gamma(z) + cosc::log_gamma(1.0 - z));
    CHECK(rel(lhs, kPi / std::sin(kPi * z)) < 1e-12);
  }
  CHECK(std::abs(cosc::gamma_ratio(3.5, 1.25) - std::tgamma(3.5) / std::tgamma(1.25)) < 1e-14);
  CHECK(std::abs(cosc::gamma_ratio(-0.5, -1.5) - std::tgamma(-0.5) / std::tgamma(-1.5)) < 1e-14);
  CHECK(cosc::gamma_ratio(1.5, -2.0) == cplx(0.0));
  CHECK_THROWS_AS(cosc::gamma_ratio(-3.0, 0.5), Error);
}

TEST_CASE("Hermite recurrence reproduces the explicit monomial expansion exactly") {
  for (int n = 0; n <= 10; ++n) {
    const IntPoly h = cosc::hermite<IntPoly>(n, IntPoly::x());
    std::vector<long long> expected(n + 1, 0);
    for (int m = 0; 2 * m <= n; ++m) {
      expected[n - 2 * m] = (m % 2 ? -1 : 1) * factorial(n) / (factorial(m) * factorial(n - 2 * m)) *
                            (1LL << (n - 2 * m));
    }
    std::vector<long long> got = h.c;
    got.resize(n + 1, 0);
    CHECK(got == expected);
  }
  CHECK(cosc::hermite<cplx>(3, cplx(0.0, 1.0)) == cplx(0.0, -20.0));
  CHECK_THROWS_AS(cosc::hermite(-1, 1.0), Error);
}
