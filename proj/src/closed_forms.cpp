#include "cosc/closed_forms.hpp"

#include <cmath>
#include <numbers>

namespace cosc::closed_form {

namespace {

cplx h(int n, const Frequency& freq, double x) {
  return n < 0 ? cplx(0.0) : hermite(n, freq.sqrt_omega * x);
}

}  // namespace

cplx potential_bound_even(int j, const Frequency& freq, double x) {
  const cplx w = freq.omega;
  const cplx base = 0.5 * w * w * x * x + w;
  if (j == 0) return base;
  const cplx h0 = h(2 * j, freq, x);
  const cplx r1 = h(2 * j - 1, freq, x) / h0;
  const cplx r2 = h(2 * j - 2, freq, x) / h0;
  return base - 8.0 * j * w * ((2.0 * j - 1.0) * r2 - 2.0 * j * r1 * r1);
}

cplx potential_bound_odd(int j, const Frequency& freq, double x) {
  const cplx w = freq.omega;
  const cplx h0 = h(2 * j + 1, freq, x);
  const cplx r1 = h(2 * j, freq, x) / h0;
  const cplx r2 = j > 0 ? h(2 * j - 1, freq, x) / h0 : cplx(0.0);
  return 0.5 * w * w * x * x + w -
         4.0 * (2.0 * j + 1.0) * w * (2.0 * j * r2 - (2.0 * j + 1.0) * r1 * r1);
}

cplx potential_ams(const cplx& nu, const Frequency& freq, double x) {
  const cplx w = freq.omega;
  const cplx f = 2.0 * nu / std::sqrt(std::numbers::pi) * std::exp(-w * x * x);
  const cplx d = 1.0 + nu / freq.sqrt_omega * erf_c(freq.sqrt_omega * x);
  // d/dx [f / d] with f' = -2 omega x f and d' = f.
  const cplx derivative = f * (-2.0 * w * x * d - f) / (d * d);
  return 0.5 * w * w * x * x - w - derivative;
}

cplx second_order_wronskian(const JetValue& u1, const cplx& epsilon1,
                            const Frequency& freq) {
  const cplx w = freq.omega;
  const double x = u1.x;
  return (w * w * x * x + w - 2.0 * epsilon1) * u1.u * u1.u - u1.du * u1.du;
}

cplx potential_second_order(const JetValue& u1, const cplx& epsilon1,
                            const Frequency& freq) {
  const cplx w = freq.omega;
  const double x = u1.x;
  const cplx u = u1.u;
  const cplx du = u1.du;
  const cplx f = second_order_wronskian(u1, epsilon1, freq);
  const cplx df = 2.0 * w * w * x * u * u + 2.0 * w * u * du;
  const cplx d2f = 2.0 * w * w * u * u + 4.0 * w * w * x * u * du + 2.0 * w * du * du +
                   2.0 * w * (w * w * x * x - 2.0 * epsilon1) * u * u;
  return 0.5 * w * w * x * x - d2f / f + (df / f) * (df / f);
}

cplx state_bound_even(int j, int n, const Frequency& freq, double x) {
  const cplx gauss = std::exp(-0.5 * freq.omega * x * x);
  const cplx ratio = j > 0 ? h(2 * j - 1, freq, x) / h(2 * j, freq, x) : cplx(0.0);
  return (4.0 * j * ratio * h(n, freq, x) - 2.0 * n * h(n - 1, freq, x)) * gauss;
}

cplx state_bound_odd(int j, int m, const Frequency& freq, double x) {
  const cplx gauss = std::exp(-0.5 * freq.omega * x * x);
  const cplx ratio = h(2 * j, freq, x) / h(2 * j + 1, freq, x);
  return ((4.0 * j + 2.0) * ratio * h(2 * m + 1, freq, x) -
          (4.0 * m + 2.0) * h(2 * m, freq, x)) *
         gauss;
}

}  // namespace cosc::closed_form
