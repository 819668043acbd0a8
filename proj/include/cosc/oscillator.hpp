#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cosc/specfun.hpp"

namespace cosc {

/// omega = e^{i theta}. The working phase domain is [0, pi/2); the repulsive
/// case theta = pi/2 is refused.
struct Frequency {
  double theta = 0.0;
  cplx omega{1.0, 0.0};
  cplx sqrt_omega{1.0, 0.0};

  static Frequency from_phase(double theta);
  /// Skips the domain guard. Only meant for symmetry checks such as
  /// E_n(-theta) = conj(E_n(theta)).
  static Frequency unchecked(double theta);
};

enum class SeedKind { General, BoundEven, BoundOdd, AMS };

struct SeedSpec {
  SeedKind kind = SeedKind::General;
  cplx epsilon;
  cplx nu;
  int j = 0;  // bound-state family index, ignored otherwise

  static SeedSpec general(const cplx& epsilon, const cplx& nu);
  static SeedSpec bound_even(int j, const Frequency& freq);
  static SeedSpec bound_odd(int j, const Frequency& freq);
  static SeedSpec ams(const cplx& nu, const Frequency& freq);

  /// H_0 level index of a bound seed (2j or 2j+1), -1 for the other kinds.
  int bound_index() const;
  void validate() const;
};

struct JetValue {
  double x = 0.0;
  cplx u;
  cplx du;
};

/// Polynomial pairs (p_m, q_m) with u^{(m)} = p_m(x) u + q_m(x) u' for every
/// solution of u'' = (omega^2 x^2 - 2 epsilon) u. Coefficients are stored in
/// ascending powers of x and precomputed up to max_order at construction, so
/// a tower is immutable afterwards.
class DerivativeTower {
 public:
  static constexpr int kDefaultOrder = 12;

  DerivativeTower(const cplx& epsilon, const cplx& omega,
                  int max_order = kDefaultOrder);

  const cplx& epsilon() const { return epsilon_; }
  const cplx& omega() const { return omega_; }
  int max_order() const { return static_cast<int>(p_.size()) - 1; }

  const Eigen::VectorXcd& p(int m) const;
  const Eigen::VectorXcd& q(int m) const;

  cplx eval(const JetValue& jet, int m) const;

 private:
  cplx epsilon_;
  cplx omega_;
  std::vector<Eigen::VectorXcd> p_;
  std::vector<Eigen::VectorXcd> q_;
};

/// Horner evaluation of an ascending-coefficient polynomial.
cplx polyval(const Eigen::VectorXcd& coeffs, double x);

inline cplx tower_eval(const DerivativeTower& tower, const JetValue& jet, int m) {
  return tower.eval(jet, m);
}

/// (n + 1/2) omega.
cplx eigenvalue(int n, const Frequency& freq);

/// H_n(sqrt(omega) x) e^{-omega x^2 / 2}, unnormalized.
JetValue eigenfunction_jet(int n, const Frequency& freq, double x);

enum class SeedBranch {
  Preferred,         // decaying Gaussian prefactor
  DecayingGaussian,  // e^{-omega x^2/2} [M(a,1/2,omega x^2) + lambda x M(a+1/2,3/2,omega x^2)]
  GrowingGaussian,   // the Kummer-transformed form with e^{+omega x^2/2}
};

/// lambda = 2 nu Gamma(3/4 - eps/2omega) / Gamma(1/4 - eps/2omega) for a
/// General seed. Zero on even bound levels; LambdaPole on odd ones when
/// nu != 0.
cplx seed_lambda(const SeedSpec& spec, const Frequency& freq);

JetValue seed_jet(const SeedSpec& spec, const Frequency& freq, double x,
                  SeedBranch branch = SeedBranch::Preferred,
                  const SeriesControl& ctl = {});

/// u'' obtained by differentiating the special-function representation
/// directly (no use of the Schrodinger equation).
cplx seed_second_derivative(const SeedSpec& spec, const Frequency& freq, double x,
                            SeedBranch branch = SeedBranch::Preferred,
                            const SeriesControl& ctl = {});

enum class Ladder { Raise, Lower };

/// Jet of a^{+-} u = (-+u' + omega x u)/sqrt(2); the output derivative uses
/// u'' from the tower.
JetValue ladder_jet(Ladder direction, const JetValue& jet,
                    const DerivativeTower& tower);

enum class LevelStatus { Retained, Deleted, Created };

/// Created levels carry negative indices: -j for epsilon_j of a chain.
struct SpectrumEntry {
  int index = 0;
  cplx energy;
  LevelStatus status = LevelStatus::Retained;
};

}  // namespace cosc
