#include "cosc/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace cosc {

namespace {

bool is_pointwise_failure(const Error& e) {
  return e.kind() == ErrorKind::SingularPoint || e.kind() == ErrorKind::ZeroCrossing;
}

// Derivatives of ln W from a Wronskian jet.
std::array<cplx, 3> log_wronskian(const WronskianJet& w) {
  const cplx r1 = w.dW / w.W;
  const cplx r2 = w.d2W / w.W;
  const cplx r3 = w.d3W / w.W;
  return {r1, r2 - r1 * r1, r3 - 3.0 * r1 * r2 + 2.0 * r1 * r1 * r1};
}

ResidualReport evaluate_report(const std::vector<std::pair<double, GJet>>& jets,
                               const std::vector<double>& singular, const cplx& a,
                               const cplx& b, DerivativeScheme scheme,
                               const PivTolerances& tol,
                               const std::vector<double>& grid_order) {
  ResidualReport rep;
  rep.scheme = scheme;
  rep.singular = singular;
  for (const auto& [x, gj] : jets) {
    if (std::abs(gj.g) < tol.delta_g) {
      rep.excluded.push_back(x);
      continue;
    }
    const double r = piv_point_residual(gj, a, b);
    rep.x.push_back(x);
    rep.residual.push_back(r);
    rep.max_residual = std::max(rep.max_residual, std::isfinite(r) ? r : INFINITY);
  }
  if (rep.x.empty()) {
    throw Error(ErrorKind::EmptyGrid, "every grid point is excluded or singular");
  }
  // Runs of consecutive excluded grid points.
  bool in_run = false;
  std::size_t e = 0;
  for (double x : grid_order) {
    const bool hit = e < rep.excluded.size() && rep.excluded[e] == x;
    if (hit) ++e;
    if (hit && !in_run) ++rep.zero_count;
    in_run = hit;
  }
  return rep;
}

std::vector<std::pair<double, GJet>> sample_g(const PivCandidate& c, const Grid& grid,
                                              DerivativeScheme scheme,
                                              const PivTolerances& tol,
                                              std::vector<double>& singular) {
  std::vector<std::pair<double, GJet>> out;
  const cplx sw = c.chain.freq().sqrt_omega;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double x = grid.x(i);
    try {
      GJet gj = c.g(x);
      if (scheme == DerivativeScheme::FiniteDifference) {
        if (!c.chain.in_domain(x - 2.0 * tol.fd.h)) {
          singular.push_back(x);
          continue;
        }
        auto gfun = [&c](double t) { return c.g(t).g; };
        gj.dg = fd_derivative(gfun, x, 1, tol.fd) / sw;
        gj.d2g = fd_derivative(gfun, x, 2, tol.fd) / (sw * sw);
      }
      out.emplace_back(x, gj);
    } catch (const Error& e) {
      if (!is_pointwise_failure(e)) throw;
      singular.push_back(x);
    }
  }
  return out;
}

std::vector<double> grid_vector(const Grid& grid) {
  return std::vector<double>(grid.x.data(), grid.x.data() + grid.size());
}

}  // namespace

LogJet log_jet(const StateJet& s) {
  if (s.vanishing || s.value == cplx(0.0)) {
    throw Error(ErrorKind::ZeroCrossing,
                "defining state vanishes at x = " + std::to_string(s.x));
  }
  const cplx r1 = s.d1 / s.value;
  const cplx r2 = s.d2 / s.value;
  const cplx r3 = s.d3 / s.value;
  return {s.x, r1, r2 - r1 * r1, r3 - 3.0 * r1 * r2 + 2.0 * r1 * r1 * r1};
}

PivParams piv_params(const std::array<cplx, 3>& e, int role) {
  if (role < 1 || role > 3) throw Error(ErrorKind::InvalidArgument, "role must be 1, 2 or 3");
  const int r = role - 1;
  const cplx e3 = e[r];
  const cplx e1 = e[(r + 1) % 3];
  const cplx e2 = e[(r + 2) % 3];
  return {e1 + e2 - 2.0 * e3 - 1.0, -2.0 * (e1 - e2) * (e1 - e2)};
}

double piv_point_residual(const GJet& gj, const cplx& a, const cplx& b) {
  const cplx& g = gj.g;
  const cplx& y = gj.y;
  const std::array<cplx, 6> t{gj.d2g,
                              gj.dg * gj.dg / (2.0 * g),
                              1.5 * g * g * g,
                              4.0 * y * g * g,
                              2.0 * (y * y - a) * g,
                              b / g};
  double scale = 1.0;
  for (const cplx& v : t) scale = std::max(scale, std::abs(v));
  return std::abs(t[0] - (t[1] + t[2] + t[3] + t[4] + t[5])) / scale;
}

GJet PivCandidate::g(double x) const {
  const Frequency& f = chain.freq();
  const LogJet lj = source(x);
  GJet out;
  out.x = x;
  out.y = f.sqrt_omega * x;
  out.g = g_scale * (-out.y - lj.l1 / f.sqrt_omega);
  out.dg = g_scale * (-1.0 - lj.l2 / f.omega);
  out.d2g = g_scale * (-lj.l3 / (f.omega * f.sqrt_omega));
  return out;
}

PivCandidate g_first_order(const Chain& chain, int j) {
  if (chain.order() != 1) {
    throw Error(ErrorKind::InvalidArgument, "first-order candidates need k = 1");
  }
  const auto triple = std::make_shared<ExtremalTriple>(chain);
  if (triple->is_degenerate(j)) {
    throw Error(ErrorKind::DegenerateTriple,
                "extremal state " + std::to_string(j) + " vanishes identically");
  }
  PivCandidate c{chain, j, triple->energies(), {}, {}, {}, {}, 1.0, false};
  const PivParams p = piv_params(c.energies, j);
  c.a = p.a;
  c.b = p.b;
  c.source = [triple, j](double x) { return log_jet(triple->state(j, x)); };
  c.extremal = c.source;

  // g == 0 identically makes the b/g term meaningless.
  bool all_zero = true;
  for (double x : {0.43, 1.1, 1.9, 2.7}) {
    try {
      const GJet gj = c.g(x);
      const double scale = std::abs(gj.y) + std::abs(gj.g + gj.y);
      if (std::abs(gj.g) > 1e-12 * std::max(1.0, scale)) {
        all_zero = false;
        break;
      }
    } catch (const Error& e) {
      if (!is_pointwise_failure(e)) throw;
    }
  }
  if (all_zero) {
    throw Error(ErrorKind::DegenerateSolution,
                "g vanishes identically for extremal state " + std::to_string(j));
  }
  return c;
}

PivCandidate g_higher_order(const Chain& chain, const Grid& grid,
                            const PivTolerances& tol) {
  const int k = chain.order();
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "higher-order candidates need k >= 2");
  const Chain lower = chain.prefix(k - 1);
  PivCandidate c{chain, 2, number_operator_roots(chain), {}, {}, {}, {}, 1.0, true};
  c.source = [chain, lower](double x) {
    const auto num = log_wronskian(wronskian_jet(lower, x));
    const auto den = log_wronskian(wronskian_jet(chain, x));
    return LogJet{x, num[0] - den[0], num[1] - den[1], num[2] - den[2]};
  };
  c.extremal = [chain, k](double x) { return log_jet(created_state_jet(chain, k, x)); };

  std::vector<double> singular;
  const auto jets = sample_g(c, grid, DerivativeScheme::Analytic, tol, singular);
  const auto order = grid_vector(grid);
  double best = std::numeric_limits<double>::infinity();
  std::string summary;
  for (int role = 1; role <= 3; ++role) {
    const PivParams p = piv_params(c.energies, role);
    const double r = evaluate_report(jets, singular, p.a, p.b, DerivativeScheme::Analytic,
                                     tol, order)
                         .max_residual;
    summary += " role " + std::to_string(role) + ": " + std::to_string(r) + ";";
    if (r < best) {
      best = r;
      c.role = role;
      c.a = p.a;
      c.b = p.b;
    }
  }
  if (!(best <= tol.analytic)) {
    throw Error(ErrorKind::NoValidAssignment,
                "no role assignment passes the residual tolerance:" + summary);
  }
  return c;
}

ResidualReport piv_residual(const PivCandidate& candidate, const Grid& grid,
                            DerivativeScheme scheme, const PivTolerances& tol) {
  std::vector<double> singular;
  const auto jets = sample_g(candidate, grid, scheme, tol, singular);
  return evaluate_report(jets, singular, candidate.a, candidate.b, scheme, tol,
                         grid_vector(grid));
}

cplx reconstruct_extremal(const PivCandidate& candidate, double x) {
  const Frequency& f = candidate.chain.freq();
  const LogJet lj = candidate.extremal(x);
  const GJet gj = candidate.g(x);
  return lj.l1 / f.sqrt_omega + gj.y + gj.g;
}

double asymptotic_decay(const PivCandidate& candidate, double X) {
  const double right = std::abs(candidate.g(std::abs(X)).g);
  if (candidate.chain.domain() == Domain::HalfLine) return right;
  return std::max(right, std::abs(candidate.g(-std::abs(X)).g));
}

PivCandidate with_shifted_b(PivCandidate candidate, const cplx& shift) {
  candidate.b += shift;
  return candidate;
}

PivCandidate with_scaled_g(PivCandidate candidate, const cplx& factor) {
  candidate.g_scale *= factor;
  return candidate;
}

}  // namespace cosc
