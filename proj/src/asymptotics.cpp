#include "dqnls/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dqnls/fft.hpp"

namespace dqnls {
namespace {

const cplx i1(0.0, 1.0);

void require_large_time(double t, const char* who) {
  if (!(t >= 1.0))
    throw std::invalid_argument(std::string(who) + ": profile defined for t >= 1");
}

// Branch values at xi_j = x_j/t from the two cached half-line fields.
std::vector<cplx> scaled_branch_values(const Grid& g, const std::vector<cplx>& lp,
                                       const std::vector<cplx>& lm, double t) {
  const double kappa0 = g.x(0) / t;
  const double dkappa = g.dx() / t;
  const std::vector<cplx> wp = nonlattice_ft(g, lp, kappa0, dkappa);
  const std::vector<cplx> wm = nonlattice_ft(g, lm, kappa0, dkappa);
  std::vector<cplx> out(g.n);
  const double band = g.nyquist();
  for (std::size_t j = 0; j < g.n; ++j) {
    const double xi = g.x(j) / t;
    if (std::abs(xi) > band)
      out[j] = cplx{0.0, 0.0};  // outside the represented band
    else
      out[j] = (xi >= 0.0) ? wp[j] : wm[j];
  }
  return out;
}

ComplexField assemble_u_ap(const Grid& g, const std::vector<cplx>& h, double t,
                           double lambda) {
  const double logt = std::log(t);
  ComplexField out = make_field(g, Side::position);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double x = g.x(j);
    const double phase = 0.5 * x * x / t - lambda * std::norm(h[j]) * logt - pi / 4.0;
    out.values[j] = h[j] * std::exp(i1 * phase) / std::sqrt(t);
  }
  return out;
}

}  // namespace

AsymptoticProfile make_profile(const ComplexField& phi_plus, const ModelParams& p) {
  validate(p);
  AsymptoticProfile prof;
  prof.phi_plus = phi_plus;
  prof.hat_phi = forward_dft(phi_plus, p.q);
  prof.branch_plus = apply_L_plus(phi_plus, p.q);
  prof.branch_minus = apply_L_minus(phi_plus, p.q);
  prof.params = p;
  prof.epsilon_check = norm_weighted(phi_plus);
  return prof;
}

cplx interp_spectrum(const DistortedSpectrum& spec, double xi_star) {
  const Grid& g = spec.grid;
  if (std::abs(xi_star) > g.nyquist()) return cplx{0.0, 0.0};
  const std::vector<cplx> u = inv_fft(g, spec.values);
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < g.n; ++j)
    acc += u[j] * std::exp(i1 * (-xi_star * g.x(j)));
  return acc * g.dx() / std::sqrt(2.0 * pi);
}

double phase_S(const AsymptoticProfile& prof, double t, double xi) {
  require_large_time(t, "phase_S");
  const Grid& g = prof.phi_plus.grid;
  const ComplexField& branch = xi >= 0.0 ? prof.branch_plus : prof.branch_minus;
  cplx h{0.0, 0.0};
  if (std::abs(xi) <= g.nyquist()) {
    for (std::size_t j = 0; j < g.n; ++j)
      h += branch.values[j] * std::exp(i1 * (-xi * g.x(j)));
    h *= g.dx() / std::sqrt(2.0 * pi);
  }
  return -prof.params.lambda * std::norm(h) * std::log(t);
}

std::vector<cplx> sample_spectrum_scaled(const DistortedSpectrum& spec, double t,
                                         double q) {
  if (!(t > 0.0)) throw std::invalid_argument("sample_spectrum_scaled: t must be > 0");
  const Grid& g = spec.grid;
  const ComplexField u = inverse_dft(spec, q);
  const ComplexField lp = apply_L_plus(u, q);
  const ComplexField lm = apply_L_minus(u, q);
  return scaled_branch_values(g, lp.values, lm.values, t);
}

ComplexField build_u_ap(const AsymptoticProfile& prof, double t) {
  require_large_time(t, "build_u_ap");
  const Grid& g = prof.phi_plus.grid;
  const std::vector<cplx> h =
      scaled_branch_values(g, prof.branch_plus.values, prof.branch_minus.values, t);
  return assemble_u_ap(g, h, t, prof.params.lambda);
}

DistortedSpectrum build_w(const AsymptoticProfile& prof, double t) {
  require_large_time(t, "build_w");
  const double lam = prof.params.lambda;
  const double logt = std::log(t);
  DistortedSpectrum w = prof.hat_phi;
  for (cplx& v : w.values) v *= std::exp(-i1 * (lam * std::norm(v) * logt));
  return w;
}

std::pair<ComplexField, ComplexField> leading_order(const DistortedSpectrum& spec,
                                                    double t, double q) {
  if (!(t > 0.0)) throw std::invalid_argument("leading_order: t must be > 0");
  const Grid& g = spec.grid;
  const ComplexField u0 = inverse_dft(spec, q);
  const ComplexField lp = apply_L_plus(u0, q);
  const ComplexField lm = apply_L_minus(u0, q);
  const std::vector<cplx> h = scaled_branch_values(g, lp.values, lm.values, t);
  ComplexField lead = make_field(g, Side::position);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double x = g.x(j);
    lead.values[j] = h[j] * std::exp(i1 * (0.5 * x * x / t - pi / 4.0)) / std::sqrt(t);
  }
  const ComplexField ut = propagate_spectral(u0, t, q).field;
  ComplexField rem = make_field(g, Side::position);
  for (std::size_t j = 0; j < g.n; ++j) rem.values[j] = ut.values[j] - lead.values[j];
  return {std::move(lead), std::move(rem)};
}

ComplexField remainder_R1(const AsymptoticProfile& prof, double t) {
  require_large_time(t, "remainder_R1");
  const double q = prof.params.q;
  const DistortedSpectrum w = build_w(prof, t);
  const ComplexField evolved = propagate_spectral(inverse_dft(w, q), t, q).field;
  const ComplexField uap = build_u_ap(prof, t);
  ComplexField out = make_field(prof.phi_plus.grid, Side::position);
  for (std::size_t j = 0; j < out.grid.n; ++j)
    out.values[j] = evolved.values[j] - uap.values[j];
  return out;
}

ComplexField remainder_R2(const AsymptoticProfile& prof, double t) {
  require_large_time(t, "remainder_R2");
  const double q = prof.params.q;
  const double lam = prof.params.lambda;
  DistortedSpectrum nl = build_w(prof, t);
  for (cplx& v : nl.values) v *= lam / t * std::norm(v);
  const ComplexField evolved = propagate_spectral(inverse_dft(nl, q), t, q).field;
  const ComplexField uap = build_u_ap(prof, t);
  ComplexField out = make_field(prof.phi_plus.grid, Side::position);
  for (std::size_t j = 0; j < out.grid.n; ++j) {
    const cplx a = uap.values[j];
    out.values[j] = evolved.values[j] - lam * std::norm(a) * a;
  }
  return out;
}

}  // namespace dqnls
