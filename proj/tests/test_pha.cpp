#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cosc/pha.hpp"

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

}  // namespace

TEST_CASE("hamiltonian residual separates eigenstates from impostors") {
  const Frequency f = pi6();
  const Chain chain(SeedSpec::ams({0.6, 0.3}, f), f, 1);
  const Grid g = Grid::uniform(-5.0, 5.0, 41);
  auto psi = [&](double x) { return transformed_state(chain, 2, x); };
  CHECK(hamiltonian_residual(chain, psi, eigenvalue(2, f), g) < 1e-7);
  CHECK(hamiltonian_residual(chain, psi, eigenvalue(2, f) + 0.01, g) > 5e-3);
  CHECK(hamiltonian_residual(chain, psi, eigenvalue(2, f), g, true) ==
        doctest::Approx(hamiltonian_residual(chain, psi, eigenvalue(2, f), g)).epsilon(1e-6));
  // The created state sits at eps_1.
  auto created = [&](double x) { return created_state(chain, 1, x); };
  CHECK(hamiltonian_residual(chain, created, chain.epsilons()[0], g) < 1e-7);
}

TEST_CASE("natural ladder edges") {
  const Frequency f = pi6();
  const Chain even(SeedSpec::bound_even(1, f), f, 1);
  CHECK(kind_of([&] { apply_natural_ladder(even, Ladder::Raise, 2, 0.3); }) ==
        ErrorKind::DeletedLevel);
  CHECK(kind_of([&] { apply_natural_ladder(even, Ladder::Raise, 1, 0.3); }) ==
        ErrorKind::LadderEdge);
  CHECK(kind_of([&] { apply_natural_ladder(even, Ladder::Lower, 3, 0.3); }) ==
        ErrorKind::LadderEdge);
  CHECK(kind_of([&] { apply_natural_ladder(even, Ladder::Lower, 0, 0.3); }) ==
        ErrorKind::LadderEdge);
  const Chain odd(SeedSpec::bound_odd(1, f), f, 1);
  CHECK(kind_of([&] { apply_natural_ladder(odd, Ladder::Raise, 1, 0.3); }) ==
        ErrorKind::LadderEdge);
  CHECK(kind_of([&] { apply_natural_ladder(odd, Ladder::Raise, 2, 0.3); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("raised states are proportional to the next level") {
  const Frequency f = pi6();
  const Chain chain(SeedSpec::ams({0.9, 0.4}, f), f, 2);
  for (int n = 0; n <= 3; ++n) {
    std::vector<cplx> up, down;
    for (double x = -4.05; x < 4.0; x += 0.3) {
      up.push_back(apply_natural_ladder(chain, Ladder::Raise, n, x) /
                   transformed_state(chain, n + 1, x));
      if (n > 0) {
        down.push_back(apply_natural_ladder(chain, Ladder::Lower, n, x) /
                       transformed_state(chain, n - 1, x));
      }
    }
    CHECK(relative_spread(up) < 1e-8);
    if (n > 0) CHECK(relative_spread(down) < 1e-8);
  }
  const Grid g = Grid::uniform(-5.0, 5.0, 41);
  CHECK(commutation_residual(chain, Ladder::Raise, 1, g) < 1e-5);
  CHECK(commutation_residual(chain, Ladder::Lower, 2, g) < 1e-5);
}

TEST_CASE("extremal triple energies and degeneracy") {
  const Frequency f = pi6();
  const cplx eps{2.0, 1.0};
  const Chain one(SeedSpec::general(eps, {0.8, 0.5}), f, 1);
  const ExtremalTriple t1(one);
  CHECK(t1.energies()[0] == cplx(0.5));
  CHECK(std::abs(t1.energies()[1] - eps / f.omega) < 1e-15);
  CHECK(std::abs(t1.energies()[2] - (eps / f.omega + 1.0)) < 1e-15);
  for (int r = 1; r <= 3; ++r) CHECK_FALSE(t1.is_degenerate(r));

  const Chain two(SeedSpec::general(eps, {0.8, 0.5}), f, 2);
  CHECK(std::abs(number_operator_roots(two)[1] - (eps / f.omega - 1.0)) < 1e-15);

  // For nu = 0 the AMS seed is e^{omega x^2/2}, annihilated by a^+.
  const ExtremalTriple rational(Chain(SeedSpec::ams(0.0, f), f, 1));
  CHECK(rational.is_degenerate(3));
  CHECK_FALSE(rational.is_degenerate(1));
  CHECK(kind_of([&] { rational.state(3, 0.4); }) == ErrorKind::DegenerateTriple);
  CHECK(std::abs(rational.energies()[2] - 0.5) < 1e-15);
}

TEST_CASE("extremal states are eigenstates at omega times their energies") {
  const Frequency f = pi6();
  const Grid g = Grid::uniform(-4.0, 4.0, 33);
  for (int k = 1; k <= 2; ++k) {
    const Chain chain(SeedSpec::general({1.0, 1.0}, {0.8, 0.5}), f, k);
    const ExtremalTriple t(chain);
    for (int role = 1; role <= 3; ++role) {
      auto psi = [&](double x) { return t.state(role, x).value; };
      // Finite-difference floor; a wrong energy gives residuals near 1e-3.
      CHECK(hamiltonian_residual(chain, psi, t.energies()[role - 1] * f.omega, g) < 2e-5);
      CHECK(hamiltonian_residual(chain, psi, t.energies()[role - 1] * f.omega + 0.01, g) > 1e-3);
    }
  }
}
