#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cosc/numerics.hpp"
#include "cosc/oscillator.hpp"

using namespace cosc;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(const cplx& a, const cplx& b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("phase domain") {
  CHECK_NOTHROW(Frequency::from_phase(0.0));
  CHECK_NOTHROW(Frequency::from_phase(1.5));
  try {
    Frequency::from_phase(kPi / 2.0);
    FAIL("expected RepulsiveOscillator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RepulsiveOscillator);
  }
  CHECK_THROWS_AS(Frequency::from_phase(-0.1), Error);
  const Frequency f = Frequency::from_phase(kPi / 6.0);
  CHECK(std::abs(f.sqrt_omega * f.sqrt_omega - f.omega) < 1e-15);
}

TEST_CASE("eigenvalues lie on the ray and conjugate under theta -> -theta") {
  const Frequency f = Frequency::from_phase(0.7);
  const Frequency g = Frequency::unchecked(-0.7);
  for (int n = 0; n < 20; ++n) {
    CHECK(std::arg(eigenvalue(n, f)) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(std::abs(eigenvalue(n, g) - std::conj(eigenvalue(n, f))) < 1e-14);
  }
  CHECK(eigenvalue(3, f) == 3.5 * f.omega);
}

TEST_CASE("eigenfunctions solve the oscillator equation") {
  const Frequency f = Frequency::from_phase(kPi / 6.0);
  for (int n = 0; n <= 6; ++n) {
    for (double x : {-2.3, -0.4, 0.9, 3.1}) {
      auto u = [&](double t) { return eigenfunction_jet(n, f, t).u; };
      const cplx d2 = fd_derivative(u, x, 2);
      const cplx lhs = -0.5 * d2 + 0.5 * f.omega * f.omega * x * x * u(x);
      CHECK(std::abs(lhs - eigenvalue(n, f) * u(x)) < 1e-7 * std::max(1.0, std::abs(d2)));
      const cplx d1 = fd_derivative(u, x, 1);
      CHECK(std::abs(eigenfunction_jet(n, f, x).du - d1) < 1e-8 * std::max(1.0, std::abs(d1)));
    }
  }
}

TEST_CASE("general seed at the ground energy reduces to the Gaussian") {
  const Frequency f = Frequency::from_phase(0.0);
  const SeedSpec s = SeedSpec::general(0.5, 0.4);
  CHECK(seed_lambda(s, f) == cplx(0.0));
  for (double x : {-3.0, 0.2, 2.5}) {
    CHECK(rel(seed_jet(s, f, x).u, std::exp(-0.5 * x * x)) < 1e-14);
  }
}

TEST_CASE("seed value, slope and lambda at the origin") {
  const Frequency f = Frequency::from_phase(0.0);
  const double eps = 0.2, nu = 0.3;
  const SeedSpec s = SeedSpec::general(eps, nu);
  const double a1 = 0.25 - eps / 2.0;
  const double lambda = 2.0 * nu * std::tgamma(a1 + 0.5) / std::tgamma(a1);
  CHECK(std::abs(seed_lambda(s, f) - lambda) < 1e-14);
  const JetValue j0 = seed_jet(s, f, 0.0);
  CHECK(std::abs(j0.u - 1.0) < 1e-15);
  CHECK(std::abs(j0.du - lambda) < 1e-14);
}

TEST_CASE("AMS seed against its erf form at theta = 0") {
  const Frequency f = Frequency::from_phase(0.0);
  const double nu = 0.45;
  const SeedSpec s = SeedSpec::ams(nu, f);
  CHECK(s.epsilon == cplx(-0.5));
  for (double x : {-4.0, -1.1, 0.0, 0.7, 3.3}) {
    const double u = std::exp(0.5 * x * x) * (1.0 + nu * std::erf(x));
    const double du = x * u + 2.0 * nu / std::sqrt(kPi) * std::exp(-0.5 * x * x);
    CHECK(rel(seed_jet(s, f, x).u, u) < 1e-14);
    CHECK(std::abs(seed_jet(s, f, x).du - du) < 1e-13 * std::max(1.0, std::abs(du)));
  }
}

TEST_CASE("bound seeds are eigenfunctions up to a constant") {
  const Frequency f = Frequency::from_phase(kPi / 6.0);
  for (int j = 0; j <= 3; ++j) {
    std::vector<cplx> even, odd;
    for (double x = 0.05; x < 4.0; x += 0.37) {
      even.push_back(seed_jet(SeedSpec::bound_even(j, f), f, x).u / eigenfunction_jet(2 * j, f, x).u);
      odd.push_back(seed_jet(SeedSpec::bound_odd(j, f), f, x).u /
                    eigenfunction_jet(2 * j + 1, f, x).u);
    }
    CHECK(relative_spread(even) < 1e-12);
    CHECK(relative_spread(odd) < 1e-12);
    CHECK(seed_jet(SeedSpec::bound_odd(j, f), f, 0.0).u == cplx(0.0));
    CHECK(SeedSpec::bound_even(j, f).bound_index() == 2 * j);
    CHECK(SeedSpec::bound_odd(j, f).bound_index() == 2 * j + 1);
  }
}

TEST_CASE("lambda pole on odd levels") {
  const Frequency f = Frequency::from_phase(kPi / 6.0);
  try {
    seed_lambda(SeedSpec::general(1.5 * f.omega, 0.3), f);
    FAIL("expected LambdaPole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LambdaPole);
  }
  CHECK(seed_lambda(SeedSpec::general(2.5 * f.omega, 0.3), f) == cplx(0.0));
  CHECK_THROWS_AS(SeedSpec::general(1.0, 1.0).validate(), Error);
}

TEST_CASE("both Gaussian branches agree") {
  const Frequency f = Frequency::from_phase(1.1);
  const SeedSpec s = SeedSpec::general({-1.2, 2.1}, {0.3, -0.6});
  for (double x = -5.0; x <= 5.0; x += 0.5) {
    const JetValue a = seed_jet(s, f, x, SeedBranch::DecayingGaussian);
    const JetValue b = seed_jet(s, f, x, SeedBranch::GrowingGaussian);
    CHECK(rel(a.u, b.u) < 1e-10);
    CHECK(rel(a.du, b.du) < 1e-10);
  }
}

TEST_CASE("derivative tower against finite differences and the seed formula") {
  const Frequency f = Frequency::from_phase(kPi / 6.0);
  const SeedSpec s = SeedSpec::general({2.0, 1.0}, {0.8, 0.5});
  const DerivativeTower t(s.epsilon, f.omega);
  CHECK(t.max_order() == DerivativeTower::kDefaultOrder);
  CHECK(t.p(0).size() == 1);
  CHECK(t.q(1)(0) == cplx(1.0));
  for (double x : {-1.7, 0.3, 2.2}) {
    const JetValue jet = seed_jet(s, f, x);
    CHECK(rel(t.eval(jet, 2), seed_second_derivative(s, f, x)) < 1e-12);
    for (int m = 3; m <= 6; ++m) {
      auto lower = [&](double y) { return t.eval(seed_jet(s, f, y), m - 1); };
      CHECK(rel(t.eval(jet, m), fd_derivative(lower, x, 1)) < 1e-7);
    }
  }
}

TEST_CASE("ladder operators on eigenfunctions") {
  const Frequency f = Frequency::from_phase(0.9);
  const cplx c = std::sqrt(f.omega / 2.0);
  for (int n = 0; n <= 5; ++n) {
    const DerivativeTower t(eigenvalue(n, f), f.omega);
    for (double x : {-1.3, 0.6, 2.4}) {
      const JetValue phi = eigenfunction_jet(n, f, x);
      const JetValue up = ladder_jet(Ladder::Raise, phi, t);
      CHECK(rel(up.u, c * eigenfunction_jet(n + 1, f, x).u) < 1e-13);
      CHECK(rel(up.du, c * eigenfunction_jet(n + 1, f, x).du) < 1e-12);
      if (n > 0) {
        const JetValue dn = ladder_jet(Ladder::Lower, phi, t);
        CHECK(rel(dn.u, c * (2.0 * n) * eigenfunction_jet(n - 1, f, x).u) < 1e-13);
      }
    }
  }
}
