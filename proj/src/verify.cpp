#include "cosc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cosc/closed_forms.hpp"
#include "cosc/painleve.hpp"

namespace cosc {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  Outcome(double m, std::string d, std::optional<bool> p = std::nullopt)
      : measured(m), detail(std::move(d)), passed(p) {}

  double measured;
  std::string detail;
  std::optional<bool> passed;  // overrides the threshold comparison
};

class Suite {
 public:
  void run(const std::string& module, const std::string& name, double threshold,
           bool negative, const std::function<Outcome()>& body) {
    CheckResult r;
    r.module = module;
    r.name = name;
    r.threshold = threshold;
    r.negative_control = negative;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.measured = o.measured;
      r.detail = std::move(o.detail);
      if (o.passed) {
        r.passed = *o.passed;
      } else if (std::isnan(o.measured)) {
        r.passed = false;
      } else {
        r.passed = negative ? o.measured > threshold : o.measured < threshold;
      }
    } catch (const std::exception& e) {
      r.measured = std::numeric_limits<double>::quiet_NaN();
      r.detail = e.what();
      r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  cplx disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(-kPi, kPi));
  }

 private:
  std::mt19937_64 rng_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double rel(const cplx& a, const cplx& b, double floor = 0.0) {
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

Frequency pi6() { return Frequency::from_phase(kPi / 6.0); }

std::vector<SeedSpec> seed_catalogue(const Frequency& f) {
  std::vector<SeedSpec> out{SeedSpec::general({2.0, 1.0}, {0.8, 0.5}),
                            SeedSpec::general({-1.3, 0.4}, {-0.2, 0.6}),
                            SeedSpec::ams({0.6, 0.3}, f), SeedSpec::ams(0.0, f)};
  for (int j = 0; j <= 3; ++j) {
    out.push_back(SeedSpec::bound_even(j, f));
    out.push_back(SeedSpec::bound_odd(j, f));
  }
  return out;
}

// |-u''/2 + (omega^2 x^2/2 - eps) u| / max(1, |u|), with u'' obtained either
// from the tower or by direct differentiation of the seed formula.
double schrodinger_residual(const SeedSpec& s, const Frequency& f, double x, bool tower) {
  const JetValue jet = seed_jet(s, f, x);
  const cplx d2 = tower ? DerivativeTower(s.epsilon, f.omega).eval(jet, 2)
                        : seed_second_derivative(s, f, x);
  const cplx r = -0.5 * d2 + (0.5 * f.omega * f.omega * x * x - s.epsilon) * jet.u;
  return std::abs(r) / std::max(1.0, std::abs(jet.u));
}

void specfun_checks(Suite& suite, std::uint64_t seed) {
  suite.run("specfun", "kummer_transformation", 1e-8, false, [seed] {
    Sampler rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const cplx a = rng.disk(4.0);
      cplx b;
      do {
        b = a + rng.disk(4.0);
      } while (std::abs(b - std::round(b.real())) < 0.1 && b.real() < 0.5);
      const cplx z = rng.disk(6.0);
      worst = std::max(worst, rel(hyp1f1(a, b, z), std::exp(z) * hyp1f1(b - a, b, -z)));
    }
    return Outcome{worst, "200 samples"};
  });

  suite.run("specfun", "derivative_identity", 1e-6, false, [seed] {
    Sampler rng(seed + 1);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const cplx a = rng.disk(3.0);
      const cplx b = cplx(rng.uniform(0.5, 4.0), rng.uniform(-1.0, 1.0));
      const cplx z = rng.disk(4.0);
      const cplx fd = fd_derivative([&](double t) { return hyp1f1(a, b, z + t); }, 0.0, 1);
      worst = std::max(worst, rel(hyp1f1_deriv(a, b, z, 1), fd));
    }
    return Outcome{worst, "50 points"};
  });

  suite.run("specfun", "hermite_monomials", 0.5, false, [] {
    // H_n(x) = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!), compared at
    // integer points where every value is an exactly representable integer.
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      for (int x = -3; x <= 3; ++x) {
        long long explicit_sum = 0;
        for (int m = 0; 2 * m <= n; ++m) {
          long long c = 1;
          for (int t = n - 2 * m + 1; t <= n; ++t) c *= t;  // n!/(n-2m)!
          long long mf = 1;
          for (int t = 2; t <= m; ++t) mf *= t;
          long long p = 1;
          for (int t = 0; t < n - 2 * m; ++t) p *= 2 * x;
          explicit_sum += (m % 2 ? -1 : 1) * c / mf * p;
        }
        worst = std::max(worst, std::abs(static_cast<double>(
                                    hermite<long long>(n, x) - explicit_sum)));
      }
    }
    return Outcome{worst, "n <= 10, integer arithmetic"};
  });

  suite.run("specfun", "erf_real_axis", 1e-12, false, [] {
    double worst = 0.0;
    for (double x = -6.0; x <= 6.0; x += 0.05) {
      const cplx e = erf_c(x);
      worst = std::max(worst, std::abs(e.imag()));
      worst = std::max(worst, std::abs(e.real() - std::erf(x)));
    }
    return Outcome{worst, "|Im erf| and |erf - std::erf| on [-6, 6]"};
  });
}

void oscillator_checks(Suite& suite, std::uint64_t seed) {
  suite.run("oscillator", "dual_branch", 1e-8, false, [seed] {
    Sampler rng(seed + 2);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Frequency f = Frequency::from_phase(rng.uniform(0.0, 1.4));
      const SeedSpec s = SeedSpec::general(rng.disk(3.0), rng.disk(0.999));
      const double x = rng.uniform(-5.0, 5.0);
      const JetValue d = seed_jet(s, f, x, SeedBranch::DecayingGaussian);
      const JetValue g = seed_jet(s, f, x, SeedBranch::GrowingGaussian);
      worst = std::max({worst, rel(d.u, g.u), rel(d.du, g.du)});
    }
    return Outcome{worst, "100 random samples"};
  });

  suite.run("oscillator", "schrodinger_residual", 1e-8, false, [] {
    const Frequency f = pi6();
    const Grid grid = default_grid(Domain::FullLine);
    double worst = 0.0;
    for (const SeedSpec& s : seed_catalogue(f)) {
      for (Eigen::Index i = 0; i < grid.size(); i += 4) {
        worst = std::max({worst, schrodinger_residual(s, f, grid.x(i), false),
                          schrodinger_residual(s, f, grid.x(i), true)});
      }
    }
    return Outcome{worst, "direct and tower u''"};
  });

  suite.run("oscillator", "anticommutator", 1e-8, false, [] {
    const Frequency f = pi6();
    const double r2 = std::sqrt(2.0);
    double worst = 0.0;
    for (const SeedSpec& s : seed_catalogue(f)) {
      const DerivativeTower tower(s.epsilon, f.omega);
      for (double x = -6.0; x <= 6.0; x += 0.25) {
        const JetValue u = seed_jet(s, f, x);
        const JetValue up = ladder_jet(Ladder::Raise, u, tower);
        const JetValue dn = ladder_jet(Ladder::Lower, u, tower);
        const cplx lr = (up.du + f.omega * x * up.u) / r2;
        const cplx rl = (-dn.du + f.omega * x * dn.u) / r2;
        const cplx d2 = seed_second_derivative(s, f, x);
        const cplx rhs = -d2 + f.omega * f.omega * x * x * u.u;
        const double scale = std::max(1.0, std::abs(u.u) * (1.0 + x * x));
        worst = std::max(worst, std::abs(lr + rl - rhs) / scale);
        worst = std::max(worst, std::abs(lr - rl - f.omega * u.u) / scale);
      }
    }
    return Outcome{worst, "anticommutator and [a-, a+] = omega"};
  });

  suite.run("oscillator", "spectrum_ray", 1e-15, false, [] {
    double worst = 0.0;
    for (double theta : {0.0, 0.3, kPi / 6.0, 1.2, 1.5}) {
      const Frequency f = Frequency::from_phase(theta);
      for (int n = 0; n < 50; ++n) {
        worst = std::max(worst, std::abs(std::arg(eigenvalue(n, f)) - std::arg(f.omega)));
      }
    }
    return Outcome{worst, "|arg E_n - arg omega|"};
  });

  suite.run("oscillator", "bound_seed_zeros", 0.0, false, [] {
    const Frequency f = pi6();
    double odd_at_zero = 0.0;
    double even_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= 3; ++j) {
      odd_at_zero = std::max(odd_at_zero, std::abs(seed_jet(SeedSpec::bound_odd(j, f), f, 0.0).u));
      for (double x = -8.0; x <= 8.0; x += 0.01) {
        even_min = std::min(even_min, std::abs(seed_jet(SeedSpec::bound_even(j, f), f, x).u));
      }
    }
    return Outcome{odd_at_zero, "min |u_even| = " + fmt(even_min),
                   odd_at_zero == 0.0 && even_min > 0.0};
  });
}

void susy_checks(Suite& suite, std::uint64_t seed) {
  suite.run("susy", "closed_forms", 1e-8, false, [] {
    const Frequency f = pi6();
    double worst = 0.0;
    int singular = 0;
    auto compare = [&](const Chain& chain, const Grid& grid,
                       const std::function<cplx(double)>& exact) {
      for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        try {
          const cplx v = partner_potential(chain, x);
          const cplx e = exact(x);
          worst = std::max(worst, std::abs(v - e) / std::max(1.0, std::abs(e)));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularPoint) throw;
          ++singular;
        }
      }
    };
    const Grid full = default_grid(Domain::FullLine);
    const Grid half = default_grid(Domain::HalfLine);
    for (int j = 1; j <= 3; ++j) {
      compare(Chain(SeedSpec::bound_even(j, f), f, 1), full,
              [&](double x) { return closed_form::potential_bound_even(j, f, x); });
      compare(Chain(SeedSpec::bound_odd(j, f), f, 1), half,
              [&](double x) { return closed_form::potential_bound_odd(j, f, x); });
    }
    const cplx nu{0.6, 0.3};
    compare(Chain(SeedSpec::ams(nu, f), f, 1), full,
            [&](double x) { return closed_form::potential_ams(nu, f, x); });
    for (const SeedSpec& s : {SeedSpec::ams({0.9, 0.4}, f),
                              SeedSpec::general({2.0, 1.0}, {0.8, 0.5})}) {
      compare(Chain(s, f, 2), full, [&](double x) {
        return closed_form::potential_second_order(seed_jet(s, f, x), s.epsilon, f);
      });
    }
    return Outcome{worst, std::to_string(singular) + " singular points skipped"};
  });

  suite.run("susy", "intertwining", 1e-6, false, [] {
    const Frequency f = pi6();
    const Grid grid = Grid::uniform(-6.0, 6.0, 97);
    double worst = 0.0;
    for (int k = 1; k <= 2; ++k) {
      for (const SeedSpec& s : {SeedSpec::ams({0.6, 0.3}, f),
                                SeedSpec::general({2.0, 1.0}, {0.8, 0.5})}) {
        const Chain chain(s, f, k);
        for (int n = 0; n <= 5; ++n) {
          worst = std::max(worst, hamiltonian_residual(
                                      chain, [&](double x) { return transformed_state(chain, n, x); },
                                      eigenvalue(n, f), grid));
        }
      }
    }
    return Outcome{worst, "n = 0..5, k = 1, 2"};
  });

  suite.run("susy", "factorization", 1e-8, false, [seed] {
    const Frequency f = pi6();
    Sampler rng(seed + 3);
    double worst = 0.0;
    for (const SeedSpec& s : {SeedSpec::ams({0.6, 0.3}, f),
                              SeedSpec::general({2.0, 1.0}, {0.8, 0.5})}) {
      const DerivativeTower tower(s.epsilon, f.omega);
      for (int i = 0; i < 20; ++i) {
        const SeedSpec v = SeedSpec::general(rng.disk(3.0), rng.disk(0.99));
        const DerivativeTower vt(v.epsilon, f.omega);
        for (int p = 0; p < 5; ++p) {
          const double x = rng.uniform(-5.0, 5.0);
          const FirstOrderIntertwiner A(seed_jet(s, f, x), tower);
          const JetValue vj = seed_jet(v, f, x);
          const cplx d2 = seed_second_derivative(v, f, x);
          const auto up = A.raise(vj.u, vj.du, vt.eval(vj, 2));
          const cplx lhs = A.lower(up[0], up[1]);
          const cplx pot = (0.5 * f.omega * f.omega * x * x - s.epsilon) * vj.u;
          const cplx rhs = -0.5 * d2 + pot;
          const double scale = 0.5 * std::abs(d2) + std::abs(pot);
          worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
      }
    }
    return Outcome{worst, "A-A+ v = (H0 - eps) v on random solutions"};
  });

  suite.run("susy", "spectrum_bookkeeping", 0.5, false, [] {
    const Frequency f = pi6();
    std::string issues;
    auto count = [](const std::vector<SpectrumEntry>& sp, LevelStatus st) {
      return std::count_if(sp.begin(), sp.end(),
                           [st](const SpectrumEntry& e) { return e.status == st; });
    };
    auto find = [](const std::vector<SpectrumEntry>& sp, LevelStatus st) {
      return *std::find_if(sp.begin(), sp.end(),
                           [st](const SpectrumEntry& e) { return e.status == st; });
    };
    const Chain even(SeedSpec::bound_even(1, f), f, 1);
    const auto se = spectrum(even);
    if (count(se, LevelStatus::Deleted) != 1 || find(se, LevelStatus::Deleted).index != 2 ||
        count(se, LevelStatus::Created) != 0) {
      issues += " bound-even;";
    }
    const Chain odd(SeedSpec::bound_odd(1, f), f, 1);
    const auto so = spectrum(odd);
    if (count(so, LevelStatus::Deleted) != 1 ||
        std::abs(find(so, LevelStatus::Deleted).energy - 3.5 * f.omega) > 1e-14 ||
        count(so, LevelStatus::Created) != 0) {
      issues += " bound-odd;";
    }
    const Chain ams(SeedSpec::ams({0.6, 0.3}, f), f, 1);
    const auto sa = spectrum(ams);
    if (count(sa, LevelStatus::Created) != 1 ||
        std::abs(find(sa, LevelStatus::Created).energy + 0.5 * f.omega) > 1e-14 ||
        count(sa, LevelStatus::Deleted) != 0) {
      issues += " ams;";
    }
    const Grid grid = default_grid(Domain::FullLine);
    Eigen::ArrayXcd values(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) values(i) = created_state(even, 1, grid.x(i));
    try {
      normalize_on_grid(values, grid);
      issues += " 1/u normalizable;";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonNormalizable) throw;
    }
    const double n = static_cast<double>(std::count(issues.begin(), issues.end(), ';'));
    return Outcome{n, issues.empty() ? "deleted/created levels as expected" : issues};
  });
}

void pha_checks(Suite& suite) {
  const Frequency f = pi6();
  const std::vector<std::pair<Chain, std::vector<int>>> cases{
      {Chain(SeedSpec::bound_even(1, f), f, 1), {0, 3, 4}},
      {Chain(SeedSpec::ams({0.9, 0.4}, f), f, 2), {0, 1, 2, 3}}};

  suite.run("pha", "ladder_proportionality", 1e-6, false, [cases] {
    const Grid grid = Grid::uniform(-5.0, 5.0, 200);
    double worst = 0.0;
    for (const auto& [chain, levels] : cases) {
      for (int n : levels) {
        std::vector<cplx> ratios;
        for (Eigen::Index i = 0; i < grid.size(); ++i) {
          const double x = grid.x(i);
          ratios.push_back(apply_natural_ladder(chain, Ladder::Raise, n, x) /
                           transformed_state(chain, n + 1, x));
        }
        worst = std::max(worst, relative_spread(ratios));
      }
    }
    return Outcome{worst, "L+ psi_n / psi_{n+1}"};
  });

  suite.run("pha", "commutation", 1e-5, false, [cases] {
    const Grid grid = Grid::uniform(-5.0, 5.0, 81);
    double worst = 0.0;
    for (const auto& [chain, levels] : cases) {
      for (int n : levels) {
        worst = std::max(worst, commutation_residual(chain, Ladder::Raise, n, grid));
        if (n > 0 && !chain.is_deleted(n - 1)) {
          worst = std::max(worst, commutation_residual(chain, Ladder::Lower, n, grid));
        }
      }
    }
    return Outcome{worst, "[H, L+-] = +-omega L+-"};
  });

  suite.run("pha", "rescaled_consistency", 1e-12, false, [cases] {
    const Grid grid = Grid::uniform(-5.0, 5.0, 41);
    double worst = 0.0;
    for (const auto& [chain, levels] : cases) {
      const double a = commutation_residual(chain, Ladder::Raise, levels.front(), grid, false);
      const double b = commutation_residual(chain, Ladder::Raise, levels.front(), grid, true);
      worst = std::max(worst, std::abs(a - b));
    }
    return Outcome{worst, "|omega| = 1, so both scalings give the same residual"};
  });
}

struct FigureSet {
  std::vector<PivCandidate> first;
  std::vector<PivCandidate> second;
};

FigureSet figure_candidates(const Grid& grid, bool with_second) {
  const Frequency f = pi6();
  FigureSet out;
  for (const cplx eps : {cplx(0.01, 1.0), cplx(1.0, 1.0), cplx(2.0, 1.0)}) {
    const SeedSpec s = SeedSpec::general(eps, {0.8, 0.5});
    out.first.push_back(g_first_order(Chain(s, f, 1), 2));
    if (with_second) out.second.push_back(g_higher_order(Chain(s, f, 2), grid));
  }
  return out;
}

void painleve_checks(Suite& suite, bool all) {
  const Frequency f = pi6();
  const Grid grid = default_grid(Domain::FullLine);
  const PivTolerances tol;

  suite.run("painleve", "param_symmetry", 1e-15, false, [] {
    const std::array<cplx, 3> e{cplx(0.5, 0.1), cplx(-1.2, 0.7), cplx(2.0, -0.3)};
    double worst = 0.0;
    for (int role = 1; role <= 3; ++role) {
      std::array<cplx, 3> swapped = e;
      const int r = role - 1;
      std::swap(swapped[(r + 1) % 3], swapped[(r + 2) % 3]);
      const PivParams p = piv_params(e, role);
      const PivParams q = piv_params(swapped, role);
      worst = std::max({worst, std::abs(p.a - q.a), std::abs(p.b - q.b)});
    }
    const PivParams r = piv_params({0.5, -0.5, 0.5}, 3);
    worst = std::max({worst, std::abs(r.a + 2.0), std::abs(r.b + 2.0)});
    return Outcome{worst, "swap of the two non-E3 energies"};
  });

  const Chain rational_chain(SeedSpec::ams(0.0, f), f, 1);
  const PivCandidate rational = g_first_order(rational_chain, 1);

  suite.run("painleve", "rational_solution", 1e-10, false, [&] {
    double worst = 0.0;
    int poles = 0;
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      try {
        const GJet gj = rational.g(grid.x(i));
        worst = std::max(worst, std::abs(gj.g + 1.0 / gj.y));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroCrossing) throw;
        ++poles;
      }
    }
    const double ab = std::abs(rational.a + 2.0) + std::abs(rational.b + 2.0);
    return Outcome{worst,
                   "|a + 2| + |b + 2| = " + fmt(ab) + ", " + std::to_string(poles) +
                       " pole(s) skipped",
                   worst < 1e-10 && ab < 1e-14};
  });

  suite.run("painleve", "rational_residual", 1e-12, false, [&] {
    return Outcome{piv_residual(rational, grid, DerivativeScheme::Analytic).max_residual,
                   "g = -1/y, (a, b) = (-2, -2)"};
  });

  const FigureSet figs = figure_candidates(grid, true);
  std::vector<std::pair<std::string, const std::vector<PivCandidate>*>> sets{
      {"first_order", &figs.first}, {"second_order", &figs.second}};
  for (const auto& [label, set] : sets) {
    double analytic = 0.0;
    double fd = 0.0;
    double agreement = 0.0;
    std::string detail;
    for (const PivCandidate& c : *set) {
      const ResidualReport ra = piv_residual(c, grid, DerivativeScheme::Analytic, tol);
      const ResidualReport rf = piv_residual(c, grid, DerivativeScheme::FiniteDifference, tol);
      analytic = std::max(analytic, ra.max_residual);
      fd = std::max(fd, rf.max_residual);
      // The FD scheme cannot resolve residuals below its own floor of
      // tol.finite_difference / 100, so agreement is judged above that floor.
      const double floor = tol.finite_difference / 100.0;
      agreement = std::max(agreement, std::max(ra.max_residual, rf.max_residual) /
                                          std::max({ra.max_residual, floor}));
      detail += "role " + std::to_string(c.role) + ", " + std::to_string(ra.excluded.size()) +
                " excluded, " + std::to_string(ra.singular.size()) + " singular; ";
    }
    suite.run("painleve", label + "_analytic", tol.analytic, false,
              [=] { return Outcome{analytic, detail}; });
    suite.run("painleve", label + "_finite_difference", tol.finite_difference, false,
              [=] { return Outcome{fd, detail}; });
    suite.run("painleve", label + "_scheme_agreement", 100.0, false,
              [=] { return Outcome{agreement, "max/min of the two maxima above the FD floor"}; });
  }

  suite.run("painleve", "reconstruction", 1e-10, false, [&] {
    double worst = 0.0;
    for (const auto* set : {&figs.first, &figs.second}) {
      for (const PivCandidate& c : *set) {
        for (double x : {-3.1, -0.7, 0.4, 1.3, 2.9}) {
          worst = std::max(worst, std::abs(reconstruct_extremal(c, x)));
        }
      }
    }
    return Outcome{worst, "[ln psi_E3]' + y + g"};
  });

  const PivCandidate& fig12 = figs.first.back();
  suite.run("painleve", "asymptotic_decay", 0.2, false, [&] {
    return Outcome{asymptotic_decay(fig12, 10.0), "max |g(+-10)|, eps = 2+i"};
  });
  suite.run("painleve", "asymptotic_monotone", 0.0, false, [&] {
    const double d6 = asymptotic_decay(fig12, 6.0);
    const double d8 = asymptotic_decay(fig12, 8.0);
    const double d10 = asymptotic_decay(fig12, 10.0);
    return Outcome{std::max(d8 - d6, d10 - d8),
                   fmt(d6) + ", " + fmt(d8) + ", " + fmt(d10) + " at X = 6, 8, 10",
                   d8 <= d6 && d10 <= d8};
  });

  std::vector<const PivCandidate*> controls{&rational};
  for (const auto& c : figs.first) controls.push_back(&c);
  for (const auto& c : figs.second) controls.push_back(&c);
  suite.run("painleve", "negative_control_b_shift", 1e-2, true, [&] {
    double weakest = std::numeric_limits<double>::infinity();
    for (const PivCandidate* c : controls) {
      weakest = std::min(weakest, piv_residual(with_shifted_b(*c, 1.0), grid,
                                               DerivativeScheme::Analytic, tol)
                                      .max_residual);
    }
    return Outcome{weakest, "smallest max residual with b + 1"};
  });
  suite.run("painleve", "negative_control_g_scale", 1e-2, true, [&] {
    double weakest = std::numeric_limits<double>::infinity();
    for (const PivCandidate* c : controls) {
      weakest = std::min(weakest, piv_residual(with_scaled_g(*c, 1.01), grid,
                                               DerivativeScheme::Analytic, tol)
                                      .max_residual);
    }
    return Outcome{weakest, "smallest max residual with 1.01 g"};
  });

  if (!all) return;

  suite.run("painleve", "harmonic_limit", 1e-10, false, [] {
    const Frequency f0 = Frequency::from_phase(0.0);
    const Grid g = Grid::uniform(-8.0, 8.0, 321);
    double worst = 0.0;
    for (const SeedSpec& s : {SeedSpec::general(0.2, 0.3), SeedSpec::general(-0.7, -0.5),
                              SeedSpec::ams(0.4, f0)}) {
      for (int k = 1; k <= 2; ++k) {
        const Chain chain(s, f0, k);
        const PivCandidate c =
            k == 1 ? g_first_order(chain, 2) : g_higher_order(chain, g);
        for (Eigen::Index i = 0; i < g.size(); ++i) {
          const double x = g.x(i);
          worst = std::max(worst, std::abs(partner_potential(chain, x).imag()));
          for (int n = 0; n <= 3; ++n) {
            worst = std::max(worst, std::abs(transformed_state(chain, n, x).imag()));
          }
          const GJet gj = c.g(x);
          worst = std::max({worst, std::abs(gj.g.imag()), std::abs(gj.dg.imag()),
                            std::abs(gj.d2g.imag())});
        }
      }
    }
    return Outcome{worst, "max imaginary part, theta = 0"};
  });
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  Suite suite;
  // Setup shared between checks runs outside Suite::run; a throw there is
  // recorded as a failed setup entry so the remaining modules still run.
  const std::vector<std::pair<std::string, std::function<void()>>> modules{
      {"specfun", [&] { specfun_checks(suite, options.seed); }},
      {"oscillator", [&] { oscillator_checks(suite, options.seed); }},
      {"susy", [&] { susy_checks(suite, options.seed); }},
      {"pha", [&] { pha_checks(suite); }},
      {"painleve", [&] { painleve_checks(suite, options.all); }}};
  for (const auto& [name, body] : modules) {
    try {
      body();
    } catch (const std::exception& e) {
      suite.run(name, "setup", 0.0, false, [&]() -> Outcome { throw std::runtime_error(e.what()); });
    }
  }
  return std::move(suite.results);
}

}  // namespace cosc
