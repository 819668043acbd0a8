#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cosc/painleve.hpp"

using namespace cosc;

namespace {

constexpr double kPi = std::numbers::pi;

Frequency pi6() { return Frequency::from_phase(kPi / 6.0); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

// Independent evaluation of the PIV right-hand side minus g''.
cplx piv_defect(cplx y, cplx g, cplx dg, cplx d2g, cplx a, cplx b) {
  return d2g - (dg * dg / (2.0 * g) + 1.5 * g * g * g + 4.0 * y * g * g +
                2.0 * (y * y - a) * g + b / g);
}

}  // namespace

TEST_CASE("PIV parameters") {
  const PivParams p = piv_params({0.5, -0.5, 0.5}, 3);
  CHECK(p.a == cplx(-2.0));
  CHECK(p.b == cplx(-2.0));
  const cplx e{0.3, -1.1};
  const PivParams q = piv_params({e, e, e}, 2);
  CHECK(std::abs(q.a + 1.0) < 1e-15);
  CHECK(q.b == cplx(0.0));
  const PivParams r1 = piv_params({1.0, cplx(2.0, 1.0), cplx(-0.5, 0.2)}, 1);
  const PivParams r2 = piv_params({1.0, cplx(-0.5, 0.2), cplx(2.0, 1.0)}, 1);
  CHECK(r1.a == r2.a);
  CHECK(r1.b == r2.b);
  CHECK_THROWS_AS(piv_params({0.0, 0.0, 0.0}, 4), Error);
}

TEST_CASE("rational solution g = -1/y") {
  const Frequency f = pi6();
  const Chain chain(SeedSpec::ams(0.0, f), f, 1);
  const PivCandidate c = g_first_order(chain, 1);
  CHECK(std::abs(c.a + 2.0) < 1e-15);
  CHECK(std::abs(c.b + 2.0) < 1e-15);
  for (double x : {-6.0, -0.3, 0.7, 5.5}) {
    const GJet gj = c.g(x);
    const cplx y = f.sqrt_omega * x;
    CHECK(std::abs(gj.g + 1.0 / y) < 1e-12);
    CHECK(std::abs(gj.dg - 1.0 / (y * y)) < 1e-10);
    CHECK(std::abs(gj.d2g + 2.0 / (y * y * y)) < 1e-9);
  }
  const ResidualReport r = piv_residual(c, default_grid(Domain::FullLine), DerivativeScheme::Analytic);
  CHECK(r.max_residual < 1e-12);
  CHECK(r.singular == std::vector<double>{0.0});

  CHECK(kind_of([&] { g_first_order(chain, 2); }) == ErrorKind::DegenerateSolution);
  CHECK(kind_of([&] { g_first_order(chain, 3); }) == ErrorKind::DegenerateTriple);
  CHECK(kind_of([&] { g_first_order(Chain(SeedSpec::ams(0.0, f), f, 2), 1); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("first-order candidates on the figure parameters") {
  const Frequency f = pi6();
  const Grid g = Grid::uniform(-8.0, 8.0, 321);
  for (const cplx eps : {cplx(0.01, 1.0), cplx(1.0, 1.0), cplx(2.0, 1.0)}) {
    const Chain chain(SeedSpec::general(eps, {0.8, 0.5}), f, 1);
    for (int j = 1; j <= 3; ++j) {
      const PivCandidate c = g_first_order(chain, j);
      CHECK(piv_residual(c, g, DerivativeScheme::Analytic).max_residual < 1e-6);
      CHECK(piv_residual(c, g, DerivativeScheme::FiniteDifference).max_residual < 1e-4);
      CHECK(std::abs(reconstruct_extremal(c, 0.9)) < 1e-10);
      const GJet gj = c.g(1.3);
      const double scale = std::abs(gj.d2g) + std::abs(gj.g * gj.g * gj.g) + std::abs(c.b / gj.g);
      CHECK(std::abs(piv_defect(gj.y, gj.g, gj.dg, gj.d2g, c.a, c.b)) < 1e-10 * scale);
    }
    const PivCandidate c2 = g_first_order(chain, 2);
    CHECK(piv_residual(with_shifted_b(c2, 1.0), g, DerivativeScheme::Analytic).max_residual > 1e-2);
    CHECK(piv_residual(with_scaled_g(c2, 1.01), g, DerivativeScheme::Analytic).max_residual > 1e-2);
  }
}

TEST_CASE("exclusion around zeros of g and empty grids") {
  const Frequency f = pi6();
  const Chain chain(SeedSpec::general({2.0, 1.0}, {0.8, 0.5}), f, 1);
  const PivCandidate c = g_first_order(chain, 2);
  const Grid g = Grid::uniform(-8.0, 8.0, 161);
  PivTolerances loose;
  loose.delta_g = 0.5;
  const ResidualReport r = piv_residual(c, g, DerivativeScheme::Analytic, loose);
  CHECK_FALSE(r.excluded.empty());
  CHECK(r.excluded.size() + r.x.size() + r.singular.size() == static_cast<std::size_t>(g.size()));
  for (double x : r.excluded) CHECK(std::abs(c.g(x).g) < 0.5);
  CHECK(r.zero_count >= 1);
  PivTolerances all;
  all.delta_g = 1e6;
  CHECK(kind_of([&] { piv_residual(c, g, DerivativeScheme::Analytic, all); }) ==
        ErrorKind::EmptyGrid);
}

TEST_CASE("second-order candidate picks the created-state role") {
  const Frequency f = pi6();
  const Grid g = Grid::uniform(-8.0, 8.0, 161);
  const Chain chain(SeedSpec::general({1.0, 1.0}, {0.8, 0.5}), f, 2);
  const PivCandidate c = g_higher_order(chain, g);
  CHECK(c.role == 2);
  CHECK(c.higher_order);
  CHECK(piv_residual(c, g, DerivativeScheme::Analytic).max_residual < 1e-6);
  // The Wronskian ratio W(u_1)/W(u_1, u_2) is the created state at eps_2.
  for (double x : {-2.2, 0.5, 3.1}) {
    const StateJet s = created_state_jet(chain, 2, x);
    const cplx y = f.sqrt_omega * x;
    CHECK(std::abs(c.g(x).g - (-y - s.d1 / s.value / f.sqrt_omega)) < 1e-12);
    CHECK(std::abs(reconstruct_extremal(c, x)) < 1e-12);
  }
  PivTolerances strict;
  strict.analytic = 1e-30;
  CHECK(kind_of([&] { g_higher_order(chain, g, strict); }) == ErrorKind::NoValidAssignment);
  CHECK(kind_of([&] { g_higher_order(Chain(SeedSpec::ams(0.3, f), f, 1), g); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("harmonic limit gives real PIV solutions") {
  const Frequency f = Frequency::from_phase(0.0);
  const Grid g = Grid::uniform(-8.0, 8.0, 161);
  const Chain one(SeedSpec::general(0.2, 0.3), f, 1);
  const Chain two(SeedSpec::general(0.2, 0.3), f, 2);
  const PivCandidate c1 = g_first_order(one, 2);
  const PivCandidate c2 = g_higher_order(two, g);
  for (double x = -8.0; x <= 8.0; x += 0.25) {
    CHECK(std::abs(c1.g(x).g.imag()) < 1e-10);
    CHECK(std::abs(c2.g(x).g.imag()) < 1e-10);
  }
  CHECK(asymptotic_decay(c2, 10.0) < asymptotic_decay(c2, 5.0));
}
