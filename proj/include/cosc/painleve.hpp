#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cosc/pha.hpp"

namespace cosc {

/// Derivatives of ln(psi) with respect to x.
struct LogJet {
  double x = 0.0;
  cplx l1;
  cplx l2;
  cplx l3;
};

/// Throws ZeroCrossing when the state vanishes at the point.
LogJet log_jet(const StateJet& state);

/// g and its derivatives with respect to y = sqrt(omega) x.
struct GJet {
  double x = 0.0;
  cplx y;
  cplx g;
  cplx dg;
  cplx d2g;
};

struct PivParams {
  cplx a;
  cplx b;
};

/// a = E1 + E2 - 2 E3 - 1, b = -2 (E1 - E2)^2, where E3 = energies[role - 1]
/// and E1, E2 are the other two in cyclic order.
PivParams piv_params(const std::array<cplx, 3>& energies, int role);

/// g'' - [g'^2/(2g) + 3/2 g^3 + 4 y g^2 + 2 (y^2 - a) g + b/g], divided by
/// max(1, largest magnitude among those six terms).
double piv_point_residual(const GJet& gj, const cplx& a, const cplx& b);

/// A Painleve IV candidate g(y) = -y - (1/sqrt omega) [ln psi]'(x).
struct PivCandidate {
  Chain chain;
  int role = 1;
  std::array<cplx, 3> energies{};
  cplx a;
  cplx b;
  /// log-derivatives of the state defining g
  std::function<LogJet(double)> source;
  /// log-derivatives of the extremal state playing the E3 role, used by the
  /// quadrature-free reconstruction check
  std::function<LogJet(double)> extremal;
  cplx g_scale{1.0, 0.0};
  bool higher_order = false;

  GJet g(double x) const;
};

enum class DerivativeScheme { Analytic, FiniteDifference };

struct PivTolerances {
  double delta_g = 1e-3;
  double analytic = 1e-6;
  double finite_difference = 1e-4;
  FiniteDifference fd{1e-3, true};
};

struct ResidualReport {
  std::vector<double> x;         // points that entered the statistics
  std::vector<double> residual;  // aligned with x
  std::vector<double> excluded;  // |g| < delta_g
  std::vector<double> singular;  // poles of g or zeros of the defining state
  double max_residual = 0.0;
  DerivativeScheme scheme = DerivativeScheme::Analytic;
  /// Number of separate runs of excluded points; a proxy for the zeros of g
  /// on the grid. Reported only.
  int zero_count = 0;
};

/// First-order candidate built from extremal state j (1..3) of a k = 1
/// chain. DegenerateTriple if that state vanishes identically,
/// DegenerateSolution if g vanishes identically.
PivCandidate g_first_order(const Chain& chain, int j);

/// Higher-order candidate from the Wronskian ratio W(u_1..u_{k-1})/W(u_1..u_k).
/// The E3 role is the one with the smallest analytic residual on `grid`;
/// NoValidAssignment when even that one exceeds tol.analytic.
PivCandidate g_higher_order(const Chain& chain, const Grid& grid,
                            const PivTolerances& tol = {});

/// EmptyGrid if every point is excluded or singular.
ResidualReport piv_residual(const PivCandidate& candidate, const Grid& grid,
                            DerivativeScheme scheme, const PivTolerances& tol = {});

/// [ln psi_E3]'(y) + y + g(y); vanishes for a consistent candidate.
cplx reconstruct_extremal(const PivCandidate& candidate, double x);

/// max(|g(X)|, |g(-X)|), or |g(X)| on the half line.
double asymptotic_decay(const PivCandidate& candidate, double X);

PivCandidate with_shifted_b(PivCandidate candidate, const cplx& shift);
PivCandidate with_scaled_g(PivCandidate candidate, const cplx& factor);

}  // namespace cosc
