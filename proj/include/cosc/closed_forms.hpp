#pragma once

#include "cosc/oscillator.hpp"

/// Explicit partner potentials and states for the special seeds, written out
/// in Hermite/erf form. They are independent of the Wronskian engine and
/// serve as its regression targets.
namespace cosc::closed_form {

/// First-order partner for u_1 = H_{2j}(sqrt(omega) x) e^{-omega x^2/2}.
cplx potential_bound_even(int j, const Frequency& freq, double x);

/// First-order partner for u_1 = H_{2j+1}(sqrt(omega) x) e^{-omega x^2/2};
/// singular at x = 0.
cplx potential_bound_odd(int j, const Frequency& freq, double x);

/// First-order partner for u_1 = e^{omega x^2/2}[1 + (nu/sqrt omega) erf].
cplx potential_ams(const cplx& nu, const Frequency& freq, double x);

/// (omega^2 x^2 + omega - 2 eps_1) u_1^2 - u_1'^2, proportional to
/// W(u_1, a^- u_1).
cplx second_order_wronskian(const JetValue& u1, const cplx& epsilon1,
                            const Frequency& freq);

/// Second-order partner of the connected pair (u_1, a^- u_1).
cplx potential_second_order(const JetValue& u1, const cplx& epsilon1,
                            const Frequency& freq);

/// [4j H_{2j-1}/H_{2j} H_n - 2n H_{n-1}] e^{-omega x^2/2}, n != 2j.
cplx state_bound_even(int j, int n, const Frequency& freq, double x);

/// [(4j+2) H_{2j}/H_{2j+1} H_{2m+1} - (4m+2) H_{2m}] e^{-omega x^2/2}, the
/// odd-sector states on the half line, m != j.
cplx state_bound_odd(int j, int m, const Frequency& freq, double x);

}  // namespace cosc::closed_form
