#include "cosc/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cosc {

namespace {

constexpr double kSnapTol = 1e-12;

Eigen::VectorXcd poly_derivative(const Eigen::VectorXcd& p) {
  if (p.size() <= 1) return Eigen::VectorXcd::Zero(1);
  Eigen::VectorXcd d(p.size() - 1);
  for (Eigen::Index i = 1; i < p.size(); ++i) d(i - 1) = p(i) * double(i);
  return d;
}

Eigen::VectorXcd poly_add(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(std::max(a.size(), b.size()));
  out.head(a.size()) += a;
  out.head(b.size()) += b;
  return out;
}

// p(x) * (c2 x^2 + c0)
Eigen::VectorXcd poly_mul_quadratic(const Eigen::VectorXcd& p, const cplx& c2,
                                    const cplx& c0) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(p.size() + 2);
  out.head(p.size()) += c0 * p;
  out.segment(2, p.size()) += c2 * p;
  return out;
}

// Snaps a value within kSnapTol of an integer onto it, so that terminating
// series and Gamma poles are recognised despite rounding in eps / (2 omega).
cplx snap_integer(const cplx& a) {
  const double r = std::round(a.real());
  if (std::abs(a - cplx(r, 0.0)) < kSnapTol) return cplx(r, 0.0);
  return a;
}

struct KummerParams {
  cplx a_even;  // first parameter of the b = 1/2 series
  cplx a_odd;   // first parameter of the b = 3/2 series
};

KummerParams general_params(const SeedSpec& spec, const Frequency& freq) {
  const cplx a1 = snap_integer(0.25 - spec.epsilon / (2.0 * freq.omega));
  const cplx a2 = snap_integer(a1 + 0.5);
  return {a1, a2};
}

struct GeneralPieces {
  cplx gauss;  // Gaussian prefactor
  cplx s, ds, d2s;
  double sign;
};

// Sign s = +1 is the decaying-Gaussian form, s = -1 its Kummer image.
GeneralPieces general_pieces(const SeedSpec& spec, const Frequency& freq, double x,
                             double s, bool need_second, const SeriesControl& ctl) {
  const KummerParams kp = general_params(spec, freq);
  const cplx lambda = seed_lambda(spec, freq);
  const cplx w = freq.omega;
  const cplx a = s > 0 ? kp.a_even : 0.5 - kp.a_even;
  const cplx b = s > 0 ? kp.a_odd : 1.5 - kp.a_odd;
  const cplx z = s * w * x * x;

  const cplx m1 = hyp1f1(a, 0.5, z, ctl);
  const cplx m1d = hyp1f1_deriv(a, 0.5, z, 1, ctl);
  cplx m1dd = 0.0, m2 = 0.0, m2d = 0.0, m2dd = 0.0;
  if (need_second) m1dd = hyp1f1_deriv(a, 0.5, z, 2, ctl);
  if (lambda != cplx(0.0)) {
    m2 = hyp1f1(b, 1.5, z, ctl);
    m2d = hyp1f1_deriv(b, 1.5, z, 1, ctl);
    if (need_second) m2dd = hyp1f1_deriv(b, 1.5, z, 2, ctl);
  }

  GeneralPieces out;
  out.sign = s;
  out.gauss = std::exp(-0.5 * z);
  out.s = m1 + lambda * x * m2;
  out.ds = 2.0 * s * w * x * m1d + lambda * m2 + 2.0 * s * lambda * w * x * x * m2d;
  out.d2s = 2.0 * s * w * m1d + 4.0 * w * w * x * x * m1dd +
            6.0 * s * lambda * w * x * m2d + 4.0 * lambda * w * w * x * x * x * m2dd;
  return out;
}

double branch_sign(SeedBranch branch) {
  return branch == SeedBranch::GrowingGaussian ? -1.0 : 1.0;
}

}  // namespace

Frequency Frequency::from_phase(double theta) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (!std::isfinite(theta)) {
    throw Error(ErrorKind::InvalidArgument, "theta must be finite");
  }
  if (std::abs(theta - half_pi) < 1e-12) {
    throw Error(ErrorKind::RepulsiveOscillator,
                "theta = pi/2 has no square-integrable eigenfunctions");
  }
  if (theta < 0.0 || theta >= half_pi) {
    throw Error(ErrorKind::InvalidArgument,
                "theta must lie in [0, pi/2), got " + std::to_string(theta));
  }
  return unchecked(theta);
}

Frequency Frequency::unchecked(double theta) {
  Frequency f;
  f.theta = theta;
  f.omega = std::polar(1.0, theta);
  f.sqrt_omega = std::polar(1.0, 0.5 * theta);
  return f;
}

SeedSpec SeedSpec::general(const cplx& epsilon, const cplx& nu) {
  SeedSpec s{SeedKind::General, epsilon, nu, 0};
  s.validate();
  return s;
}

SeedSpec SeedSpec::bound_even(int j, const Frequency& freq) {
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "bound seed index j < 0");
  return {SeedKind::BoundEven, eigenvalue(2 * j, freq), 0.0, j};
}

SeedSpec SeedSpec::bound_odd(int j, const Frequency& freq) {
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "bound seed index j < 0");
  return {SeedKind::BoundOdd, eigenvalue(2 * j + 1, freq), 0.0, j};
}

SeedSpec SeedSpec::ams(const cplx& nu, const Frequency& freq) {
  SeedSpec s{SeedKind::AMS, -0.5 * freq.omega, nu, 0};
  s.validate();
  return s;
}

int SeedSpec::bound_index() const {
  switch (kind) {
    case SeedKind::BoundEven: return 2 * j;
    case SeedKind::BoundOdd: return 2 * j + 1;
    default: return -1;
  }
}

void SeedSpec::validate() const {
  if (!std::isfinite(epsilon.real()) || !std::isfinite(epsilon.imag()) ||
      !std::isfinite(nu.real()) || !std::isfinite(nu.imag())) {
    throw Error(ErrorKind::InvalidArgument, "seed parameters must be finite");
  }
  if (!(std::abs(nu) < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "|nu| must be below 1");
  }
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "bound seed index j < 0");
}

DerivativeTower::DerivativeTower(const cplx& epsilon, const cplx& omega,
                                 int max_order)
    : epsilon_(epsilon), omega_(omega) {
  if (max_order < 2) {
    throw Error(ErrorKind::InvalidArgument, "tower order must be at least 2");
  }
  p_.reserve(max_order + 1);
  q_.reserve(max_order + 1);
  p_.push_back(Eigen::VectorXcd::Ones(1));
  q_.push_back(Eigen::VectorXcd::Zero(1));
  const cplx c2 = omega * omega;
  const cplx c0 = -2.0 * epsilon;
  for (int m = 0; m < max_order; ++m) {
    p_.push_back(poly_add(poly_derivative(p_[m]), poly_mul_quadratic(q_[m], c2, c0)));
    q_.push_back(poly_add(p_[m], poly_derivative(q_[m])));
  }
}

const Eigen::VectorXcd& DerivativeTower::p(int m) const {
  if (m < 0 || m > max_order()) {
    throw Error(ErrorKind::InvalidArgument, "tower order out of range");
  }
  return p_[m];
}

const Eigen::VectorXcd& DerivativeTower::q(int m) const {
  if (m < 0 || m > max_order()) {
    throw Error(ErrorKind::InvalidArgument, "tower order out of range");
  }
  return q_[m];
}

cplx DerivativeTower::eval(const JetValue& jet, int m) const {
  if (m == 0) return jet.u;
  if (m == 1) return jet.du;
  return polyval(p(m), jet.x) * jet.u + polyval(q(m), jet.x) * jet.du;
}

cplx polyval(const Eigen::VectorXcd& coeffs, double x) {
  cplx acc = 0.0;
  for (Eigen::Index i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs(i);
  return acc;
}

cplx eigenvalue(int n, const Frequency& freq) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "level index n < 0");
  return (n + 0.5) * freq.omega;
}

JetValue eigenfunction_jet(int n, const Frequency& freq, double x) {
  const cplx y = freq.sqrt_omega * x;
  const cplx gauss = std::exp(-0.5 * freq.omega * x * x);
  const cplx h = hermite(n, y);
  const cplx hd = n > 0 ? 2.0 * double(n) * hermite(n - 1, y) : cplx(0.0);
  return {x, h * gauss, (freq.sqrt_omega * hd - freq.omega * x * h) * gauss};
}

cplx seed_lambda(const SeedSpec& spec, const Frequency& freq) {
  switch (spec.kind) {
    case SeedKind::BoundEven:
    case SeedKind::BoundOdd: return 0.0;
    case SeedKind::AMS: return 2.0 * spec.nu / std::sqrt(std::numbers::pi);
    case SeedKind::General: break;
  }
  const KummerParams kp = general_params(spec, freq);
  if (is_nonpositive_integer(kp.a_odd)) {
    if (spec.nu != cplx(0.0)) {
      throw Error(ErrorKind::LambdaPole,
                  "Gamma(3/4 - eps/2omega) has a pole; perturb epsilon or set nu = 0");
    }
    return 0.0;
  }
  if (spec.nu == cplx(0.0)) return 0.0;
  return 2.0 * spec.nu * gamma_ratio(kp.a_odd, kp.a_even);
}

JetValue seed_jet(const SeedSpec& spec, const Frequency& freq, double x,
                  SeedBranch branch, const SeriesControl& ctl) {
  switch (spec.kind) {
    case SeedKind::BoundEven:
    case SeedKind::BoundOdd: return eigenfunction_jet(spec.bound_index(), freq, x);
    case SeedKind::AMS: {
      const cplx w = freq.omega;
      const cplx grow = std::exp(0.5 * w * x * x);
      const cplx u = grow * (1.0 + spec.nu / freq.sqrt_omega *
                                       erf_c(freq.sqrt_omega * x, ctl));
      const cplx du = w * x * u + 2.0 * spec.nu / std::sqrt(std::numbers::pi) *
                                      std::exp(-0.5 * w * x * x);
      return {x, u, du};
    }
    case SeedKind::General: break;
  }
  const GeneralPieces g =
      general_pieces(spec, freq, x, branch_sign(branch), false, ctl);
  const cplx u = g.gauss * g.s;
  const cplx du = -g.sign * freq.omega * x * u + g.gauss * g.ds;
  return {x, u, du};
}

cplx seed_second_derivative(const SeedSpec& spec, const Frequency& freq, double x,
                            SeedBranch branch, const SeriesControl& ctl) {
  const cplx w = freq.omega;
  switch (spec.kind) {
    case SeedKind::BoundEven:
    case SeedKind::BoundOdd: {
      const int n = spec.bound_index();
      const cplx y = freq.sqrt_omega * x;
      const cplx gauss = std::exp(-0.5 * w * x * x);
      const cplx h = hermite(n, y);
      const cplx hd = n > 0 ? 2.0 * double(n) * hermite(n - 1, y) : cplx(0.0);
      const cplx hdd =
          n > 1 ? 4.0 * double(n) * double(n - 1) * hermite(n - 2, y) : cplx(0.0);
      return (w * hdd - 2.0 * w * x * freq.sqrt_omega * hd + (w * w * x * x - w) * h) *
             gauss;
    }
    case SeedKind::AMS: {
      const cplx grow = std::exp(0.5 * w * x * x);
      const cplx d = 1.0 + spec.nu / freq.sqrt_omega * erf_c(freq.sqrt_omega * x, ctl);
      const cplx dd =
          2.0 * spec.nu / std::sqrt(std::numbers::pi) * std::exp(-w * x * x);
      const cplx ddd = -2.0 * w * x * dd;
      return grow * ((w * w * x * x + w) * d + 2.0 * w * x * dd + ddd);
    }
    case SeedKind::General: break;
  }
  const GeneralPieces g = general_pieces(spec, freq, x, branch_sign(branch), true, ctl);
  const double s = g.sign;
  return g.gauss * ((w * w * x * x - s * w) * g.s - 2.0 * s * w * x * g.ds + g.d2s);
}

JetValue ladder_jet(Ladder direction, const JetValue& jet,
                    const DerivativeTower& tower) {
  const double sgn = direction == Ladder::Raise ? -1.0 : 1.0;
  const cplx w = tower.omega();
  const cplx d2 = tower.eval(jet, 2);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  return {jet.x, inv_sqrt2 * (sgn * jet.du + w * jet.x * jet.u),
          inv_sqrt2 * (sgn * d2 + w * jet.u + w * jet.x * jet.du)};
}

}  // namespace cosc
