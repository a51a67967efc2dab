#include "dqnls/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dqnls {

double norm_l2(const ComplexField& f) {
  double s = 0.0;
  for (const cplx& v : f.values) s += std::norm(v);
  return std::sqrt(s * f.grid.dx());
}

double norm_lp(const ComplexField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("norm_lp: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const cplx& v : f.values) s += std::pow(std::abs(v), p);
  return std::pow(s * f.grid.dx(), 1.0 / p);
}

double norm_weighted(const ComplexField& f) {
  if (f.side != Side::position)
    throw std::invalid_argument("norm_weighted: position-side field required");
  double s = 0.0;
  for (std::size_t j = 0; j < f.grid.n; ++j) {
    const double w = 1.0 + std::abs(f.grid.x(j));
    s += w * w * std::norm(f.values[j]);
  }
  return std::sqrt(s * f.grid.dx());
}

double spectrum_l2(const Grid& g, const std::vector<cplx>& values) {
  double s = 0.0;
  for (const cplx& v : values) s += std::norm(v);
  return std::sqrt(s * g.dxi());
}

double norm_spacetime(const std::vector<double>& times,
                      const std::vector<ComplexField>& fields, double q_exp,
                      double r_exp) {
  if (times.size() != fields.size())
    throw std::invalid_argument("norm_spacetime: times/fields size mismatch");
  if (times.empty()) throw std::invalid_argument("norm_spacetime: no samples");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("norm_spacetime: times must be strictly increasing");
  if (!(q_exp >= 1.0)) throw std::invalid_argument("norm_spacetime: q must be >= 1");

  std::vector<double> inner(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) inner[i] = norm_lp(fields[i], r_exp);

  if (std::isinf(q_exp)) return *std::max_element(inner.begin(), inner.end());
  if (times.size() < 2)
    throw std::invalid_argument("norm_spacetime: need >= 2 samples for finite q");

  double s = 0.0;
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    const double a = std::pow(inner[i], q_exp);
    const double b = std::pow(inner[i + 1], q_exp);
    s += 0.5 * (a + b) * (times[i + 1] - times[i]);
  }
  return std::pow(s, 1.0 / q_exp);
}

DecayFit fit_decay(const std::vector<double>& times, const std::vector<double>& norms) {
  if (times.size() != norms.size() || times.size() < 3)
    throw std::invalid_argument("fit_decay: need >= 3 aligned points");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || !(norms[i] > 0.0))
      throw std::invalid_argument("fit_decay: times and norms must be positive");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw std::invalid_argument("fit_decay: times must be strictly increasing");
  }
  const std::size_t m = times.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(times[i]);
    const double ly = std::log(norms[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double md = static_cast<double>(m);
  const double det = md * sxx - sx * sx;
  DecayFit fit;
  fit.times = times;
  fit.norms = norms;
  fit.slope = (md * sxy - sx * sy) / det;
  fit.intercept = (sy * sxx - sx * sxy) / det;
  double rss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = std::log(norms[i]) - (fit.intercept + fit.slope * std::log(times[i]));
    rss += r * r;
  }
  fit.rms_residual = std::sqrt(rss / md);
  return fit;
}

}  // namespace dqnls
