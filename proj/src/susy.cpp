#include "cosc/susy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cosc {

namespace {

constexpr double kHalfLineStart = 1e-3;

struct ChainTable {
  Eigen::MatrixXcd table;
  std::vector<JetValue> jets;
};

ChainTable chain_table(const Chain& chain, double x, int extra_columns) {
  ChainTable out;
  out.jets = chain_seed_jets(chain, x);
  const int k = chain.order();
  std::vector<const DerivativeTower*> towers;
  for (int j = 1; j <= k; ++j) towers.push_back(&chain.tower(j));
  out.table = derivative_table(out.jets, towers, k + extra_columns + 3);
  return out;
}

bool relatively_zero(const cplx& value, const Eigen::MatrixXcd& table, double delta) {
  return std::abs(value) <= delta * wronskian_scale(table);
}

void require_nonsingular(const cplx& w, const Eigen::MatrixXcd& table,
                         const Chain& chain, double x) {
  if (table.cols() > 0 && relatively_zero(w, table, chain.delta_w())) {
    throw Error(ErrorKind::SingularPoint,
                "Wronskian vanishes at x = " + std::to_string(x));
  }
}

double intertwiner_prefactor(int k) {
  return std::pow(-1.0 / std::numbers::sqrt2, k);
}

}  // namespace

Chain::Chain(const SeedSpec& base, const Frequency& freq, int k,
             const SeriesControl& ctl, double delta_w)
    : base_(base), freq_(freq), k_(k), ctl_(ctl), delta_w_(delta_w) {
  base_.validate();
  ctl_.validate();
  if (k < 1 || k > kMaxOrder) {
    throw Error(ErrorKind::InvalidArgument,
                "chain order must be in 1.." + std::to_string(kMaxOrder));
  }
  if (!(delta_w > 0.0 && delta_w < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "delta_W must lie in (0, 1)");
  }
  const int bound = base.bound_index();
  if (bound >= 0 && bound - (k - 1) < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "a^- annihilates the chain: bound index " + std::to_string(bound) +
                    " is too low for order " + std::to_string(k));
  }
  if (base.kind == SeedKind::General) seed_lambda(base, freq);  // LambdaPole early
  domain_ = base.kind == SeedKind::BoundOdd ? Domain::HalfLine : Domain::FullLine;
  for (int j = 1; j <= k; ++j) {
    epsilons_.push_back(base.epsilon - double(j - 1) * freq.omega);
    towers_.emplace_back(epsilons_.back(), freq.omega);
  }
}

const DerivativeTower& Chain::tower(int j) const {
  if (j < 1 || j > k_) throw Error(ErrorKind::InvalidArgument, "chain index out of range");
  return towers_[j - 1];
}

std::vector<int> Chain::deleted_levels() const {
  std::vector<int> out;
  const int bound = base_.bound_index();
  if (bound < 0) return out;
  for (int j = 0; j < k_; ++j) out.push_back(bound - j);
  return out;
}

bool Chain::is_deleted(int n) const {
  const auto d = deleted_levels();
  return std::find(d.begin(), d.end(), n) != d.end();
}

bool Chain::in_domain(double x) const {
  return std::isfinite(x) && (domain_ == Domain::FullLine || x > 0.0);
}

Chain Chain::prefix(int m) const {
  if (m < 1 || m > k_) throw Error(ErrorKind::InvalidArgument, "prefix order out of range");
  return Chain(base_, freq_, m, ctl_, delta_w_);
}

Eigen::MatrixXcd derivative_table(const std::vector<JetValue>& jets,
                                  const std::vector<const DerivativeTower*>& towers,
                                  int rows) {
  if (jets.size() != towers.size()) {
    throw Error(ErrorKind::InvalidArgument, "one tower per jet is required");
  }
  Eigen::MatrixXcd table(rows, static_cast<Eigen::Index>(jets.size()));
  for (std::size_t c = 0; c < jets.size(); ++c) {
    for (int r = 0; r < rows; ++r) table(r, c) = towers[c]->eval(jets[c], r);
  }
  return table;
}

double wronskian_scale(const Eigen::MatrixXcd& table) {
  // One derivative beyond the square block, so that for k = 1 the scale is
  // |(u, u')| rather than |u| itself.
  const Eigen::Index n = table.cols();
  const Eigen::Index rows = std::min(n + 1, table.rows());
  double scale = 1.0;
  for (Eigen::Index c = 0; c < n; ++c) scale *= table.col(c).head(rows).norm();
  return scale;
}

std::vector<JetValue> chain_seed_jets(const Chain& chain, double x) {
  if (!chain.in_domain(x)) {
    throw Error(ErrorKind::InvalidArgument,
                "x = " + std::to_string(x) + " lies outside the chain domain");
  }
  std::vector<JetValue> jets;
  jets.reserve(chain.order());
  jets.push_back(seed_jet(chain.base(), chain.freq(), x, SeedBranch::Preferred,
                          chain.series_control()));
  for (int j = 1; j < chain.order(); ++j) {
    jets.push_back(ladder_jet(Ladder::Lower, jets.back(), chain.tower(j)));
  }
  return jets;
}

WronskianJet wronskian_jet(const Chain& chain, double x) {
  const ChainTable ct = chain_table(chain, x, 0);
  const auto w = wronskian_derivatives(ct.table);
  require_nonsingular(w[0], ct.table, chain, x);
  return {x, w[0], w[1], w[2], w[3]};
}

cplx partner_potential(const Chain& chain, double x) {
  const WronskianJet wj = wronskian_jet(chain, x);
  const cplx w = chain.freq().omega;
  return 0.5 * w * w * x * x - (wj.d2W * wj.W - wj.dW * wj.dW) / (wj.W * wj.W);
}

StateJet quotient_jet(double x, const std::array<cplx, 4>& num,
                      const std::array<cplx, 4>& den) {
  const cplx d = den[1] / den[0];
  const cplx d2 = den[2] / den[0];
  const cplx d3 = den[3] / den[0];
  StateJet out;
  out.x = x;
  out.value = num[0] / den[0];
  out.d1 = (num[1] - num[0] * d) / den[0];
  out.d2 = (num[2] - 2.0 * num[1] * d - num[0] * (d2 - 2.0 * d * d)) / den[0];
  out.d3 = (num[3] - 3.0 * d * num[2] + 3.0 * (2.0 * d * d - d2) * num[1] +
            (-d3 + 6.0 * d * d2 - 6.0 * d * d * d) * num[0]) /
           den[0];
  return out;
}

StateJet apply_intertwiner(const Chain& chain, const JetValue& f,
                           const DerivativeTower& f_tower, double x) {
  const int k = chain.order();
  ChainTable ct = chain_table(chain, x, 1);
  Eigen::MatrixXcd full(ct.table.rows(), k + 1);
  full.leftCols(k) = ct.table;
  for (Eigen::Index r = 0; r < full.rows(); ++r) full(r, k) = f_tower.eval(f, int(r));

  const auto den = wronskian_derivatives(ct.table.topRows(k + 3));
  require_nonsingular(den[0], ct.table, chain, x);
  const auto num = wronskian_derivatives(full);
  StateJet out = quotient_jet(x, num, den);
  const double c = intertwiner_prefactor(k);
  out.value *= c;
  out.d1 *= c;
  out.d2 *= c;
  out.d3 *= c;
  out.vanishing = relatively_zero(num[0], full, chain.delta_w());
  return out;
}

StateJet transformed_state_jet(const Chain& chain, int n, double x) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "level index n < 0");
  if (chain.is_deleted(n)) {
    throw Error(ErrorKind::DeletedLevel,
                "level " + std::to_string(n) + " is annihilated by the transformation");
  }
  const Frequency& freq = chain.freq();
  const DerivativeTower tower(eigenvalue(n, freq), freq.omega);
  return apply_intertwiner(chain, eigenfunction_jet(n, freq, x), tower, x);
}

cplx transformed_state(const Chain& chain, int n, double x) {
  return transformed_state_jet(chain, n, x).value;
}

StateJet created_state_jet(const Chain& chain, int j, double x) {
  const int k = chain.order();
  if (j < 1 || j > k) throw Error(ErrorKind::InvalidArgument, "created index out of range");
  const ChainTable ct = chain_table(chain, x, 0);
  const auto den = wronskian_derivatives(ct.table);
  require_nonsingular(den[0], ct.table, chain, x);

  Eigen::MatrixXcd reduced(ct.table.rows(), k - 1);
  for (int c = 0, out = 0; c < k; ++c) {
    if (c != j - 1) reduced.col(out++) = ct.table.col(c);
  }
  const auto num = wronskian_derivatives(reduced);
  StateJet out = quotient_jet(x, num, den);
  out.vanishing = k > 1 && relatively_zero(num[0], reduced, chain.delta_w());
  return out;
}

cplx created_state(const Chain& chain, int j, double x) {
  return created_state_jet(chain, j, x).value;
}

FirstOrderIntertwiner::FirstOrderIntertwiner(const JetValue& seed,
                                             const DerivativeTower& tower) {
  if (seed.u == cplx(0.0)) {
    throw Error(ErrorKind::SingularPoint, "seed vanishes; beta is undefined");
  }
  beta_ = seed.du / seed.u;
  dbeta_ = tower.eval(seed, 2) / seed.u - beta_ * beta_;
}

std::array<cplx, 2> FirstOrderIntertwiner::raise(const cplx& f, const cplx& df,
                                                 const cplx& d2f) const {
  const double s = 1.0 / std::numbers::sqrt2;
  return {s * (-df + beta_ * f), s * (-d2f + dbeta_ * f + beta_ * df)};
}

cplx FirstOrderIntertwiner::lower(const cplx& g, const cplx& dg) const {
  return (dg + beta_ * g) / std::numbers::sqrt2;
}

namespace {

bool created_state_decays(const Chain& chain, int j, double radius) {
  const bool half = chain.domain() == Domain::HalfLine;
  const Grid grid = Grid::uniform(half ? kHalfLineStart : -radius, radius, 401);
  Eigen::ArrayXd mag(grid.size());
  try {
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      mag(i) = std::abs(created_state(chain, j, grid.x(i)));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularPoint) return false;
    throw;
  }
  if (!mag.allFinite()) return false;
  const double peak = mag.maxCoeff();
  return peak > 0.0 && mag(0) < 1e-3 * peak && mag(grid.size() - 1) < 1e-3 * peak;
}

}  // namespace

std::vector<SpectrumEntry> spectrum(const Chain& chain, double decay_radius,
                                    int levels) {
  if (!(decay_radius > 1.0) || levels < 1) {
    throw Error(ErrorKind::InvalidArgument, "spectrum needs decay_radius > 1, levels >= 1");
  }
  std::vector<SpectrumEntry> out;
  const auto& eps = chain.epsilons();
  for (int j = chain.order(); j >= 1; --j) {
    if (created_state_decays(chain, j, decay_radius)) {
      out.push_back({-j, eps[j - 1], LevelStatus::Created});
    }
  }
  const bool half = chain.domain() == Domain::HalfLine;
  const int count = half ? 2 * levels : levels;
  for (int n = 0; n < count; ++n) {
    if (half && n % 2 == 0) continue;
    out.push_back({n, eigenvalue(n, chain.freq()),
                   chain.is_deleted(n) ? LevelStatus::Deleted : LevelStatus::Retained});
  }
  return out;
}

Eigen::ArrayXd normalize_on_grid(const Eigen::ArrayXcd& values, const Grid& grid,
                                 Domain domain) {
  if (values.size() != grid.size() || grid.size() < 16) {
    throw Error(ErrorKind::InvalidArgument, "state and grid sizes differ or grid too small");
  }
  const Eigen::ArrayXd density = values.abs2();
  const double total = trapezoid(grid, density);
  if (!std::isfinite(total) || !(total > 0.0)) {
    throw Error(ErrorKind::NonNormalizable, "density integral is not finite and positive");
  }
  const Eigen::Index n = grid.size();
  const Eigen::Index tail = std::max<Eigen::Index>(2, n / 20);
  const Grid left{grid.x.head(tail)};
  const Grid right{grid.x.tail(tail)};
  double tails = trapezoid(right, density.tail(tail).eval());
  // The inner end of the half line is a boundary, not a tail.
  if (domain == Domain::FullLine) tails += trapezoid(left, density.head(tail).eval());
  if (tails > 1e-2 * total) {
    throw Error(ErrorKind::NonNormalizable,
                "window tails carry " + std::to_string(100.0 * tails / total) +
                    "% of the density");
  }
  return density / total;
}

Grid default_grid(Domain domain) {
  return domain == Domain::HalfLine ? Grid::uniform(kHalfLineStart, 8.0, 1200)
                                    : Grid::uniform(-8.0, 8.0, 1601);
}

}  // namespace cosc
