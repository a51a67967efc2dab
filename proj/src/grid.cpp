#include "dqnls/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace dqnls {

Grid make_grid(std::size_t n, double half_width) {
  if (n < 4 || (n & (n - 1)) != 0)
    throw std::invalid_argument("grid size must be a power of two >= 4");
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("grid half width must be positive and finite");
  return Grid{n, half_width};
}

ComplexField make_field(const Grid& g, Side side) {
  return ComplexField{g, side, std::vector<cplx>(g.n, cplx{0.0, 0.0})};
}

void validate(const ModelParams& p) {
  if (!(p.q >= 0.0) || !std::isfinite(p.q))
    throw std::invalid_argument("coupling q must be >= 0 (repulsive case only)");
  // lambda = 0 is admitted: the linear limit is the reference point of several
  // final-state checks
  if (!std::isfinite(p.lambda))
    throw std::invalid_argument("nonlinearity lambda must be finite");
}

double boundary_leak_ratio(const ComplexField& f) {
  const std::size_t n = f.grid.n;
  if (n == 0 || f.values.size() != n) return 0.0;
  double peak = 0.0;
  for (const cplx& v : f.values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  std::size_t edge = std::max<std::size_t>(1, n / 100);
  double worst = 0.0;
  for (std::size_t j = 0; j < edge; ++j) {
    worst = std::max(worst, std::abs(f.values[j]));
    worst = std::max(worst, std::abs(f.values[n - 1 - j]));
  }
  return worst / peak;
}

}  // namespace dqnls
