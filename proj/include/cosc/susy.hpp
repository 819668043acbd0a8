#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "cosc/numerics.hpp"
#include "cosc/oscillator.hpp"

namespace cosc {

enum class Domain { FullLine, HalfLine };

/// Connected family u_{j+1} = a^- u_j, eps_j = eps_1 - (j-1) omega, j = 1..k.
/// Immutable after construction.
class Chain {
 public:
  static constexpr int kMaxOrder = 5;
  static constexpr double kDefaultDeltaW = 1e-12;

  Chain(const SeedSpec& base, const Frequency& freq, int k,
        const SeriesControl& ctl = {}, double delta_w = kDefaultDeltaW);

  const SeedSpec& base() const { return base_; }
  const Frequency& freq() const { return freq_; }
  int order() const { return k_; }
  const std::vector<cplx>& epsilons() const { return epsilons_; }
  Domain domain() const { return domain_; }
  const SeriesControl& series_control() const { return ctl_; }
  double delta_w() const { return delta_w_; }

  /// Tower at eps_j, j = 1..k.
  const DerivativeTower& tower(int j) const;

  /// H_0 levels annihilated by the transformation (the chain members of a
  /// bound-state seed), empty for General and AMS seeds.
  std::vector<int> deleted_levels() const;
  bool is_deleted(int n) const;

  bool in_domain(double x) const;

  /// The chain built from the first m seeds, 1 <= m <= k.
  Chain prefix(int m) const;

 private:
  SeedSpec base_;
  Frequency freq_;
  int k_;
  SeriesControl ctl_;
  double delta_w_;
  Domain domain_;
  std::vector<cplx> epsilons_;
  std::vector<DerivativeTower> towers_;
};

struct WronskianJet {
  double x = 0.0;
  cplx W;
  cplx dW;
  cplx d2W;
  cplx d3W;
};

/// Value and first three x-derivatives of a transformed or created state.
struct StateJet {
  double x = 0.0;
  cplx value;
  cplx d1;
  cplx d2;
  cplx d3;
  /// Set when the numerator Wronskian passed the relative zero test, i.e.
  /// the state vanishes (to working precision) at x.
  bool vanishing = false;
};

/// Derivative table with rows = orders 0..rows-1 and one column per jet.
Eigen::MatrixXcd derivative_table(const std::vector<JetValue>& jets,
                                  const std::vector<const DerivativeTower*>& towers,
                                  int rows);

/// W and its first three derivatives for the functions stored as columns of
/// a derivative table (at least cols + 3 rows). Each derivative of
/// det(rows r_1 < ... < r_n) is the sum of the determinants with one r_i
/// raised by one, dropping the terms where two rows coincide. The empty
/// Wronskian is 1.
template <typename Derived>
std::array<typename Derived::Scalar, 4> wronskian_derivatives(
    const Eigen::MatrixBase<Derived>& table) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = static_cast<int>(table.cols());
  std::array<Scalar, 4> out{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  if (n == 0) return out;
  if (table.rows() < n + 3) {
    throw Error(ErrorKind::InvalidArgument, "derivative table too short");
  }
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::map<std::vector<int>, double> terms{{base, 1.0}};
  Matrix m(n, n);
  for (int order = 0; order < 4; ++order) {
    Scalar acc(0);
    for (const auto& [rows, coeff] : terms) {
      for (int i = 0; i < n; ++i) m.row(i) = table.row(rows[i]);
      acc += coeff * m.partialPivLu().determinant();
    }
    out[order] = acc;
    std::map<std::vector<int>, double> next;
    for (const auto& [rows, coeff] : terms) {
      for (int i = 0; i < n; ++i) {
        if (i + 1 < n && rows[i] + 1 == rows[i + 1]) continue;
        std::vector<int> raised = rows;
        ++raised[i];
        next[raised] += coeff;
      }
    }
    terms = std::move(next);
  }
  return out;
}

/// Hadamard bound for the Wronskian: product of the Euclidean norms of the
/// columns restricted to rows 0..cols (one row past the square block). A
/// Wronskian is judged to vanish when it is below delta_W times this scale.
double wronskian_scale(const Eigen::MatrixXcd& table);

std::vector<JetValue> chain_seed_jets(const Chain& chain, double x);

/// Throws SingularPoint when |W| <= delta_W * wronskian_scale.
WronskianJet wronskian_jet(const Chain& chain, double x);

/// omega^2 x^2 / 2 - (W'' W - W'^2) / W^2.
cplx partner_potential(const Chain& chain, double x);

/// Jet of N/D from the value and first three derivatives of N and D.
StateJet quotient_jet(double x, const std::array<cplx, 4>& num,
                      const std::array<cplx, 4>& den);

/// B_k^+ f = (-1/sqrt 2)^k W(u_1, ..., u_k, f) / W(u_1, ..., u_k) for a
/// Schrodinger solution f whose tower is given; equal to the iterated
/// product of first-order intertwiners.
StateJet apply_intertwiner(const Chain& chain, const JetValue& f,
                           const DerivativeTower& f_tower, double x);

/// B_k^+ phi_n. Throws DeletedLevel when phi_n is annihilated.
StateJet transformed_state_jet(const Chain& chain, int n, double x);
cplx transformed_state(const Chain& chain, int n, double x);

/// W(u_1..u_k without u_j) / W(u_1..u_k), j = 1..k; 1/u_1 for k = 1.
StateJet created_state_jet(const Chain& chain, int j, double x);
cplx created_state(const Chain& chain, int j, double x);

/// A^+ = (-d/dx + beta)/sqrt 2 and A^- = (d/dx + beta)/sqrt 2 with
/// beta = u'/u, frozen at a single point.
class FirstOrderIntertwiner {
 public:
  FirstOrderIntertwiner(const JetValue& seed, const DerivativeTower& tower);

  const cplx& beta() const { return beta_; }
  const cplx& dbeta() const { return dbeta_; }

  /// A^+ f and its derivative from (f, f', f'').
  std::array<cplx, 2> raise(const cplx& f, const cplx& df, const cplx& d2f) const;
  cplx lower(const cplx& g, const cplx& dg) const;

 private:
  cplx beta_;
  cplx dbeta_;
};

/// Retained/deleted H_0 levels plus the created levels eps_j whose state
/// decays at both ends of [-decay_radius, decay_radius] (or at 0+ and
/// decay_radius on the half line). Decay means |psi| < 1e-3 max |psi|.
std::vector<SpectrumEntry> spectrum(const Chain& chain, double decay_radius = 8.0,
                                    int levels = 10);

/// |psi|^2 / int |psi|^2. Throws NonNormalizable when the outer 5% of the
/// grid on either side (only the outer end on the half line) carries more
/// than 1% of the integral.
Eigen::ArrayXd normalize_on_grid(const Eigen::ArrayXcd& values, const Grid& grid,
                                 Domain domain = Domain::FullLine);

/// [-8, 8] with 1601 points, or [1e-3, 8] with 1200 points on the half line.
Grid default_grid(Domain domain);

}  // namespace cosc
