#include "cosc/pha.hpp"

#include <cmath>
#include <string>

namespace cosc {

namespace {

bool is_retained(const Chain& chain, int n) {
  if (n < 0 || chain.is_deleted(n)) return false;
  return chain.domain() == Domain::FullLine || n % 2 == 1;
}

std::vector<double> probe_points(const Chain& chain) {
  std::vector<double> pts{0.37, 0.81, 1.23, 2.1};
  if (chain.domain() == Domain::FullLine) {
    pts.push_back(-0.59);
    pts.push_back(-1.7);
  }
  return pts;
}

}  // namespace

double hamiltonian_residual(const Chain& chain, const std::function<cplx(double)>& psi,
                            const cplx& energy, const Grid& grid, bool rescaled,
                            const FiniteDifference& fd) {
  const cplx scale = rescaled ? 1.0 / chain.freq().omega : cplx(1.0);
  double worst = 0.0;
  double peak = 0.0;
  int evaluated = 0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double x = grid.x(i);
    if (!chain.in_domain(x - 2.0 * fd.h)) continue;
    try {
      const cplx v = psi(x);
      const cplx d2 = fd_derivative(psi, x, 2, fd);
      const cplx hv = scale * (-0.5 * d2 + partner_potential(chain, x) * v);
      worst = std::max(worst, std::abs(hv - scale * energy * v));
      peak = std::max(peak, std::abs(v));
      ++evaluated;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularPoint) throw;
    }
  }
  if (evaluated == 0 || !(peak > 0.0)) {
    throw Error(ErrorKind::EmptyGrid, "no regular grid point for the residual");
  }
  return worst / peak;
}

cplx apply_natural_ladder(const Chain& chain, Ladder direction, int n, double x) {
  if (chain.is_deleted(n)) {
    throw Error(ErrorKind::DeletedLevel, "level " + std::to_string(n) + " is deleted");
  }
  if (!is_retained(chain, n)) {
    throw Error(ErrorKind::InvalidArgument,
                "level " + std::to_string(n) + " is not part of the spectrum");
  }
  const int target = direction == Ladder::Raise ? n + 1 : n - 1;
  if (!is_retained(chain, target)) {
    throw Error(ErrorKind::LadderEdge,
                "level " + std::to_string(target) + " is not a retained level");
  }
  const Frequency& freq = chain.freq();
  const cplx en = eigenvalue(n, freq);
  cplx factor = 1.0;
  for (const cplx& eps : chain.epsilons()) factor *= en - eps;

  const DerivativeTower tower_n(en, freq.omega);
  const JetValue moved = ladder_jet(direction, eigenfunction_jet(n, freq, x), tower_n);
  const DerivativeTower tower_target(eigenvalue(target, freq), freq.omega);
  return factor * apply_intertwiner(chain, moved, tower_target, x).value;
}

double commutation_residual(const Chain& chain, Ladder direction, int n,
                            const Grid& grid, bool rescaled) {
  const cplx shift = direction == Ladder::Raise ? chain.freq().omega : -chain.freq().omega;
  const cplx en = eigenvalue(n, chain.freq());
  const double ladder = hamiltonian_residual(
      chain, [&](double x) { return apply_natural_ladder(chain, direction, n, x); },
      en + shift, grid, rescaled);
  const double state = hamiltonian_residual(
      chain, [&](double x) { return transformed_state(chain, n, x); }, en, grid, rescaled);
  return std::max(ladder, state);
}

ExtremalTriple::ExtremalTriple(const Chain& chain)
    : chain_(chain), energies_(number_operator_roots(chain)) {
  const auto probes = probe_points(chain_);
  for (int role = 1; role <= 3; ++role) {
    bool all_vanish = true;
    int tried = 0;
    for (double x : probes) {
      try {
        const StateJet s = evaluate(role, x);
        ++tried;
        if (!s.vanishing) {
          all_vanish = false;
          break;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularPoint) throw;
      }
    }
    degenerate_[role - 1] = tried > 0 && all_vanish;
  }
}

bool ExtremalTriple::is_degenerate(int role) const {
  if (role < 1 || role > 3) throw Error(ErrorKind::InvalidArgument, "role must be 1, 2 or 3");
  return degenerate_[role - 1];
}

StateJet ExtremalTriple::state(int role, double x) const {
  if (is_degenerate(role)) {
    throw Error(ErrorKind::DegenerateTriple,
                "extremal state " + std::to_string(role) + " vanishes identically");
  }
  return evaluate(role, x);
}

StateJet ExtremalTriple::evaluate(int role, double x) const {
  const Frequency& freq = chain_.freq();
  switch (role) {
    case 1: {
      const DerivativeTower tower(eigenvalue(0, freq), freq.omega);
      return apply_intertwiner(chain_, eigenfunction_jet(0, freq, x), tower, x);
    }
    case 2: return created_state_jet(chain_, chain_.order(), x);
    case 3: {
      const JetValue u1 = chain_seed_jets(chain_, x).front();
      const JetValue raised = ladder_jet(Ladder::Raise, u1, chain_.tower(1));
      const DerivativeTower tower(chain_.epsilons().front() + freq.omega, freq.omega);
      StateJet s = apply_intertwiner(chain_, raised, tower, x);
      // a^+ u_1 itself may cancel to rounding level (u_1 = e^{omega x^2/2}).
      const double scale = std::abs(u1.du) + std::abs(x * u1.u);
      const double dscale = std::abs(chain_.tower(1).eval(u1, 2)) + std::abs(u1.u) +
                            std::abs(x * u1.du);
      if (std::abs(raised.u) <= chain_.delta_w() * scale &&
          std::abs(raised.du) <= chain_.delta_w() * dscale) {
        s.vanishing = true;
      }
      return s;
    }
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "role must be 1, 2 or 3");
}

std::array<cplx, 3> number_operator_roots(const Chain& chain) {
  const cplx e1 = chain.epsilons().front() / chain.freq().omega;
  return {cplx(0.5), e1 - double(chain.order() - 1), e1 + 1.0};
}

}  // namespace cosc
