#include "cosc/numerics.hpp"

#include <cmath>

namespace cosc {

Grid Grid::uniform(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorKind::InvalidArgument, "grid needs lo < hi and at least 2 points");
  }
  return {Eigen::ArrayXd::LinSpaced(points, lo, hi)};
}

double relative_spread(const std::vector<std::complex<double>>& ratios) {
  if (ratios.empty()) throw Error(ErrorKind::EmptyGrid, "no ratios to compare");
  std::complex<double> mean = 0.0;
  for (const auto& r : ratios) mean += r;
  mean /= double(ratios.size());
  double worst = 0.0;
  for (const auto& r : ratios) worst = std::max(worst, std::abs(r - mean));
  return worst / std::abs(mean);
}

}  // namespace cosc
