#include "dqnls/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "dqnls/fft.hpp"

namespace dqnls {
namespace {

const cplx i1(0.0, 1.0);

void require_repulsive(double q) {
  if (!(q >= 0.0) || !std::isfinite(q))
    throw std::invalid_argument("repulsive case only: q must be >= 0");
}

void require_position(const ComplexField& f, const char* who) {
  if (f.side != Side::position)
    throw std::invalid_argument(std::string(who) + ": position-side field required");
  if (f.values.size() != f.grid.n)
    throw std::invalid_argument(std::string(who) + ": field length mismatch");
}

// int_{-inf}^{x} e^{q(y-x)} f(y) dy on the trigonometric interpolant:
// each mode e^{i xi y} integrates in closed form to e^{i xi x}/(q + i xi).
std::vector<cplx> exp_tail_from_left(const Grid& g, const std::vector<cplx>& f, double q) {
  std::vector<cplx> c = mode_coeffs(g, f);
  for (std::size_t k = 0; k < g.n; ++k) c[k] /= cplx(q, g.xi(k));
  return mode_synth(g, c);
}

// int_{x}^{inf} e^{-q(y-x)} f(y) dy, mode antiderivative e^{i xi x}/(q - i xi).
std::vector<cplx> exp_tail_from_right(const Grid& g, const std::vector<cplx>& f, double q) {
  std::vector<cplx> c = mode_coeffs(g, f);
  for (std::size_t k = 0; k < g.n; ++k) c[k] /= cplx(q, -g.xi(k));
  return mode_synth(g, c);
}

}  // namespace

cplx ScatteringCoeffs::t(double xi) const {
  if (q == 0.0) return cplx(1.0, 0.0);
  return i1 * xi / (i1 * xi - q);
}

cplx ScatteringCoeffs::r(double xi) const {
  if (q == 0.0) return cplx(0.0, 0.0);
  return q / (i1 * xi - q);
}

cplx JostPair::f_plus(double x, double xi) const {
  if (x >= 0.0) return std::exp(i1 * x * xi);
  const ScatteringCoeffs c{q};
  const cplx t = c.t(xi), r = c.r(xi);
  return std::exp(i1 * x * xi) / t + (r / t) * std::exp(-i1 * x * xi);
}

cplx JostPair::f_minus(double x, double xi) const {
  if (x < 0.0) return std::exp(-i1 * x * xi);
  const ScatteringCoeffs c{q};
  const cplx t = c.t(xi), r = c.r(xi);
  return std::exp(-i1 * x * xi) / t + (r / t) * std::exp(i1 * x * xi);
}

cplx JostPair::psi(double x, double xi) const {
  const ScatteringCoeffs c{q};
  if (xi >= 0.0) return c.t(xi) * f_plus(x, xi);
  return c.t(-xi) * f_minus(x, -xi);
}

ComplexField apply_L_plus(const ComplexField& phi, double q) {
  require_repulsive(q);
  require_position(phi, "apply_L_plus");
  ComplexField out = phi;
  if (q == 0.0) return out;
  const Grid& g = phi.grid;
  const std::size_t n = g.n;
  // phi(x) - q e^{qx} [ int_x^0 e^{-qy} phi + int_0^{-x} e^{qy} phi ] on x < 0.
  // In combined-exponent form the two brackets are
  //   A(x) = E_-[phi](x) - e^{qx} E_-[phi](0),
  //   B(x) = E_+[phi](-x) - e^{qx} E_+[phi](0),
  // with all exponents <= 0 on x < 0.
  const std::vector<cplx> ep = exp_tail_from_left(g, phi.values, q);
  const std::vector<cplx> em = exp_tail_from_right(g, phi.values, q);
  const cplx ep0 = ep[n / 2], em0 = em[n / 2];
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double damp = std::exp(q * g.x(j));
    const cplx A = em[j] - damp * em0;
    const cplx B = ep[(n - j) % n] - damp * ep0;
    out.values[j] = phi.values[j] - q * (A + B);
  }
  return out;
}

ComplexField apply_L_minus(const ComplexField& phi, double q) {
  require_repulsive(q);
  require_position(phi, "apply_L_minus");
  ComplexField out = phi;
  if (q == 0.0) return out;
  const Grid& g = phi.grid;
  const std::size_t n = g.n;
  const std::vector<cplx> ep = exp_tail_from_left(g, phi.values, q);
  const std::vector<cplx> em = exp_tail_from_right(g, phi.values, q);
  const cplx ep0 = ep[n / 2], em0 = em[n / 2];
  for (std::size_t j = n / 2; j < n; ++j) {
    const double damp = std::exp(-q * g.x(j));
    const cplx A = ep[j] - damp * ep0;
    const cplx B = em[(n - j) % n] - damp * em0;
    out.values[j] = phi.values[j] - q * (A + B);
  }
  return out;
}

DistortedSpectrum forward_dft(const ComplexField& phi, double q) {
  require_repulsive(q);
  require_position(phi, "forward_dft");
  const Grid& g = phi.grid;
  if (q == 0.0) return DistortedSpectrum{g, fwd_fft(g, phi.values)};
  // both branches share the same two exponential-tail transforms
  const std::size_t n = g.n;
  const std::vector<cplx> ep = exp_tail_from_left(g, phi.values, q);
  const std::vector<cplx> em = exp_tail_from_right(g, phi.values, q);
  const cplx ep0 = ep[n / 2], em0 = em[n / 2];
  std::vector<cplx> lp = phi.values, lm = phi.values;
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double damp = std::exp(q * g.x(j));
    lp[j] -= q * (em[j] - damp * em0 + ep[(n - j) % n] - damp * ep0);
  }
  for (std::size_t j = n / 2; j < n; ++j) {
    const double damp = std::exp(-q * g.x(j));
    lm[j] -= q * (ep[j] - damp * ep0 + em[(n - j) % n] - damp * em0);
  }
  const std::vector<cplx> fp = fwd_fft(g, lp);
  const std::vector<cplx> fm = fwd_fft(g, lm);
  DistortedSpectrum spec{g, std::vector<cplx>(n)};
  for (std::size_t k = 0; k < n; ++k)
    spec.values[k] = (k >= n / 2) ? fp[k] : fm[k];  // xi = 0 bin from L_+
  return spec;
}

namespace {

struct InverseParts {
  std::vector<cplx> u;      // F^{-1}[psi]
  std::vector<cplx> plus;   // whole-line F_{q,+}^{-1}
  std::vector<cplx> minus;  // whole-line F_{q,-}^{-1}
};

InverseParts inverse_parts(const DistortedSpectrum& spec, double q) {
  const Grid& g = spec.grid;
  const std::size_t n = g.n;
  if (spec.values.size() != n)
    throw std::invalid_argument("inverse_dft: spectrum length mismatch");
  std::vector<cplx> hi(n, cplx{0, 0}), lo(n, cplx{0, 0});
  for (std::size_t k = 0; k < n; ++k) ((k >= n / 2) ? hi[k] : lo[k]) = spec.values[k];
  InverseParts parts;
  std::vector<cplx> up = inv_fft(g, hi);
  std::vector<cplx> um = inv_fft(g, lo);
  parts.u.resize(n);
  for (std::size_t j = 0; j < n; ++j) parts.u[j] = up[j] + um[j];
  if (q == 0.0) {
    parts.plus = parts.u;
    parts.minus = parts.u;
    return parts;
  }
  // Exponential tail integrals of the inverse representation:
  //   T1(x) = int_{-inf}^{-x} e^{q(x+y)} up(y) dy = E_+[up](-x)
  //   T2(x) = int_{x}^{+inf} e^{-q(y-x)} um(y) dy = E_-[um](x)
  //   T3(x) = int_{-inf}^{x} e^{q(y-x)} up(y) dy  = E_+[up](x)
  //   T4(x) = int_{-x}^{+inf} e^{-q(y+x)} um(y) dy = E_-[um](-x)
  const std::vector<cplx> t3 = exp_tail_from_left(g, up, q);
  const std::vector<cplx> t2 = exp_tail_from_right(g, um, q);
  const std::vector<cplx> t1 = mirror(t3);
  const std::vector<cplx> t4 = mirror(t2);
  parts.plus.resize(n);
  parts.minus.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    parts.plus[j] = parts.u[j] - q * (t1[j] + t2[j]);
    parts.minus[j] = parts.u[j] - q * (t3[j] + t4[j]);
  }
  return parts;
}

}  // namespace

ComplexField inverse_dft(const DistortedSpectrum& spec, double q) {
  require_repulsive(q);
  const InverseParts parts = inverse_parts(spec, q);
  ComplexField out = make_field(spec.grid, Side::position);
  const std::size_t n = spec.grid.n;
  for (std::size_t j = 0; j < n; ++j)
    out.values[j] = (j >= n / 2) ? parts.plus[j] : parts.minus[j];
  return out;
}

ComplexField inverse_dft_plus(const DistortedSpectrum& spec, double q) {
  require_repulsive(q);
  ComplexField out = make_field(spec.grid, Side::position);
  out.values = inverse_parts(spec, q).plus;
  return out;
}

ComplexField inverse_dft_minus(const DistortedSpectrum& spec, double q) {
  require_repulsive(q);
  ComplexField out = make_field(spec.grid, Side::position);
  out.values = inverse_parts(spec, q).minus;
  return out;
}

DistortedSpectrum forward_dft_reflect(const ComplexField& phi, double q) {
  require_repulsive(q);
  require_position(phi, "forward_dft_reflect");
  const Grid& g = phi.grid;
  const std::size_t n = g.n;
  std::vector<cplx> cutp(n, cplx{0, 0}), cutm(n, cplx{0, 0});
  for (std::size_t j = 0; j < n; ++j) ((j >= n / 2) ? cutp[j] : cutm[j]) = phi.values[j];
  const std::vector<cplx> full = fwd_fft(g, phi.values);
  const std::vector<cplx> fp = fwd_fft(g, cutp);
  const std::vector<cplx> fm = fwd_fft(g, cutm);
  const std::vector<cplx> fpm = mirror(fp);  // F[1_+ phi](-xi)
  const std::vector<cplx> fmm = mirror(fm);  // F[1_- phi](-xi)
  const ScatteringCoeffs sc{q};
  DistortedSpectrum spec{g, std::vector<cplx>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = g.xi(k);
    const cplx r = sc.r(xi);
    if (xi >= 0.0)
      spec.values[k] = full[k] + r * (fpm[k] + fm[k]);
    else
      spec.values[k] = full[k] + std::conj(r) * (fmm[k] + fp[k]);
  }
  return spec;
}

ComplexField inverse_dft_reflect(const DistortedSpectrum& spec, double q) {
  require_repulsive(q);
  const Grid& g = spec.grid;
  const std::size_t n = g.n;
  if (spec.values.size() != n)
    throw std::invalid_argument("inverse_dft_reflect: spectrum length mismatch");
  const ScatteringCoeffs sc{q};
  std::vector<cplx> a(n, cplx{0, 0}), b(n, cplx{0, 0});
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = g.xi(k);
    if (xi >= 0.0)
      a[k] = std::conj(sc.r(xi)) * spec.values[k];  // 1_+ rbar psi
    else
      b[k] = sc.r(xi) * spec.values[k];  // 1_- r psi
  }
  const std::vector<cplx> u = inv_fft(g, spec.values);
  const std::vector<cplx> ia = inv_fft(g, a);
  const std::vector<cplx> ib = inv_fft(g, b);
  const std::vector<cplx> iam = mirror(ia);
  const std::vector<cplx> ibm = mirror(ib);
  ComplexField out = make_field(g, Side::position);
  for (std::size_t j = 0; j < n; ++j) {
    if (g.x(j) >= 0.0)
      out.values[j] = u[j] + iam[j] + ib[j];
    else
      out.values[j] = u[j] + ibm[j] + ia[j];
  }
  return out;
}

ComplexField kernel_r_inverse_ft(double q, const Grid& g) {
  if (!(q > 0.0)) throw std::invalid_argument("kernel_r_inverse_ft: q must be > 0");
  ComplexField out = make_field(g, Side::position);
  const double c = -std::sqrt(2.0 * pi) * q;
  for (std::size_t j = 0; j < g.n / 2; ++j) out.values[j] = c * std::exp(q * g.x(j));
  return out;
}

std::pair<cplx, cplx> adjoint_pair(const ComplexField& phi, const DistortedSpectrum& psi,
                                   double q) {
  require_repulsive(q);
  require_position(phi, "adjoint_pair");
  if (!(phi.grid == psi.grid)) throw std::invalid_argument("adjoint_pair: grid mismatch");
  const Grid& g = phi.grid;
  const DistortedSpectrum fwd = forward_dft(phi, q);
  const ComplexField inv = inverse_dft(psi, q);
  cplx lhs(0, 0), rhs(0, 0);
  for (std::size_t k = 0; k < g.n; ++k) lhs += fwd.values[k] * std::conj(psi.values[k]);
  for (std::size_t j = 0; j < g.n; ++j) rhs += phi.values[j] * std::conj(inv.values[j]);
  return {lhs * g.dxi(), rhs * g.dx()};
}

}  // namespace dqnls
