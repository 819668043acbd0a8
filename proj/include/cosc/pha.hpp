#pragma once

#include <array>
#include <functional>

#include "cosc/susy.hpp"

namespace cosc {

/// max over the grid of |-psi''/2 + V_k psi - E psi| / max |psi|, with psi''
/// from central differences. Points where the transformation is singular
/// are skipped; EmptyGrid if nothing is left. With `rescaled` the
/// Hamiltonian and the energy are both divided by omega.
double hamiltonian_residual(const Chain& chain, const std::function<cplx(double)>& psi,
                            const cplx& energy, const Grid& grid,
                            bool rescaled = false,
                            const FiniteDifference& fd = {1e-3, true});

/// L^{+-} psi_n = B_k^+ a^{+-} B_k^- psi_n, realised as
/// prod_j (E_n - eps_j) B_k^+ a^{+-} phi_n.
/// LadderEdge when n +- 1 is not a retained level (including Lower on 0).
cplx apply_natural_ladder(const Chain& chain, Ladder direction, int n, double x);

/// Certifies [H_k, L^{+-}] = +-omega L^{+-} on psi_n: the larger of the
/// eigen-residuals of L^{+-} psi_n at E_n +- omega and of psi_n at E_n (the
/// latter justifies L^{+-} H_k psi_n = E_n L^{+-} psi_n).
double commutation_residual(const Chain& chain, Ladder direction, int n,
                            const Grid& grid, bool rescaled = false);

/// Extremal states and their energies in units of omega:
///   1: B_k^+ e^{-omega x^2/2}        energy 1/2
///   2: W(u_1..u_{k-1}) / W(u_1..u_k) energy eps_1/omega - (k-1)
///   3: B_k^+ a^+ u_1                 energy eps_1/omega + 1
/// Entries that vanish identically are flagged at construction; asking for
/// such a state throws DegenerateTriple, the energies stay available.
class ExtremalTriple {
 public:
  explicit ExtremalTriple(const Chain& chain);

  const Chain& chain() const { return chain_; }
  const std::array<cplx, 3>& energies() const { return energies_; }
  bool is_degenerate(int role) const;
  StateJet state(int role, double x) const;

 private:
  StateJet evaluate(int role, double x) const;

  Chain chain_;
  std::array<cplx, 3> energies_;
  std::array<bool, 3> degenerate_{};
};

inline ExtremalTriple extremal_triple(const Chain& chain) { return ExtremalTriple(chain); }

/// Roots of the number operator of the reduced second-order algebra, i.e.
/// the extremal energies. Does not evaluate any state.
std::array<cplx, 3> number_operator_roots(const Chain& chain);

}  // namespace cosc
