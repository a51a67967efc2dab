#include "dqnls/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dqnls/fft.hpp"
#include "dqnls/parallel.hpp"

namespace dqnls {
namespace {

const cplx i1(0.0, 1.0);

double inf_norm(const ComplexField& f) {
  return norm_lp(f, std::numeric_limits<double>::infinity());
}

ComplexField diff(const ComplexField& a, const ComplexField& b) {
  ComplexField d = a;
  for (std::size_t j = 0; j < d.values.size(); ++j) d.values[j] -= b.values[j];
  return d;
}

}  // namespace

TimeGrid uniform_grid(double t0, double t1, std::size_t n_steps) {
  if (!(t1 != t0) || n_steps == 0)
    throw std::invalid_argument("uniform_grid: empty or degenerate time range");
  TimeGrid tg;
  tg.t_start = t0;
  tg.t_end = t1;
  tg.steps.resize(n_steps + 1);
  const double dt = (t1 - t0) / static_cast<double>(n_steps);
  for (std::size_t i = 0; i <= n_steps; ++i) tg.steps[i] = t0 + dt * static_cast<double>(i);
  tg.steps.back() = t1;
  return tg;
}

TimeGrid log_grid(double t0, double t1, std::size_t n_nodes) {
  if (!(t0 > 0.0) || !(t1 > t0) || n_nodes < 2)
    throw std::invalid_argument("log_grid: need 0 < t0 < t1 and >= 2 nodes");
  TimeGrid tg;
  tg.t_start = t0;
  tg.t_end = t1;
  tg.steps.resize(n_nodes);
  const double dl = (std::log(t1) - std::log(t0)) / static_cast<double>(n_nodes - 1);
  for (std::size_t i = 0; i < n_nodes; ++i)
    tg.steps[i] = std::exp(std::log(t0) + dl * static_cast<double>(i));
  tg.steps.front() = t0;
  tg.steps.back() = t1;
  return tg;
}

void validate(const FinalStateConfig& cfg) {
  if (!(cfg.T >= 1.0) || !(cfg.T < cfg.T_max))
    throw std::invalid_argument("final-state config: need 1 <= T < T_max");
  if (!(cfg.alpha > 0.25) || !(cfg.alpha < 0.5))
    throw std::invalid_argument("final-state config: alpha must lie in (1/4, 1/2)");
  if (!(cfg.picard_tol > 0.0) || cfg.max_iters == 0 || cfg.num_times < 4)
    throw std::invalid_argument("final-state config: bad tolerance/iterations/nodes");
  if (!(cfg.dt_backward > 0.0))
    throw std::invalid_argument("final-state config: dt_backward must be > 0");
}

ComplexField forward_step(const ComplexField& u, double dt, const ModelParams& p) {
  validate(p);
  const double half = 0.5 * dt * p.lambda;
  ComplexField v = u;
  // the nonlinear flow conserves |u| pointwise, so the half step is exact
  for (cplx& z : v.values) z *= std::exp(-i1 * (half * std::norm(z)));
  v = propagate_spectral_filtered(v, dt, p.q).field;
  for (cplx& z : v.values) z *= std::exp(-i1 * (half * std::norm(z)));
  return v;
}

std::vector<PropagationResult> evolve(const ComplexField& u0, const TimeGrid& tg,
                                      const ModelParams& p) {
  if (tg.steps.size() < 2) throw std::invalid_argument("evolve: need >= 2 nodes");
  const double dt0 = tg.steps[1] - tg.steps[0];
  for (std::size_t i = 1; i < tg.steps.size(); ++i) {
    const double dt = tg.steps[i] - tg.steps[i - 1];
    if (std::abs(dt - dt0) > 1e-9 * std::abs(dt0))
      throw std::invalid_argument("evolve: forward evolution needs a uniform grid");
  }
  std::vector<PropagationResult> out;
  out.reserve(tg.steps.size());
  const double mass0 = norm_l2(u0);
  PropagationResult first;
  first.t = tg.steps[0];
  first.field = u0;
  first.route = PropagatorRoute::Spectral;
  first.boundary_leak = boundary_leak_ratio(u0);
  out.push_back(std::move(first));
  ComplexField u = u0;
  for (std::size_t i = 1; i < tg.steps.size(); ++i) {
    u = forward_step(u, dt0, p);
    PropagationResult res;
    res.t = tg.steps[i];
    res.route = PropagatorRoute::Spectral;
    res.l2_drift = mass0 > 0.0 ? std::abs(norm_l2(u) - mass0) / mass0 : 0.0;
    res.boundary_leak = boundary_leak_ratio(u);
    res.field = u;
    out.push_back(std::move(res));
  }
  return out;
}

double xnorm(const std::vector<double>& times, const std::vector<ComplexField>& u,
             const std::vector<ComplexField>& u_ap, double alpha) {
  const std::size_t m = times.size();
  if (u.size() != m || u_ap.size() != m || m == 0)
    throw std::invalid_argument("xnorm: misaligned sample lists");
  std::vector<double> l2v(m), infv(m);
  for (std::size_t i = 0; i < m; ++i) {
    const ComplexField v = diff(u[i], u_ap[i]);
    l2v[i] = norm_l2(v);
    infv[i] = inf_norm(v);
  }
  // suffix sup of the L2 part and suffix trapezoid of ||v||_inf^4
  double best = 0.0;
  double sup_l2 = 0.0;
  double tail4 = 0.0;
  for (std::size_t ii = m; ii-- > 0;) {
    sup_l2 = std::max(sup_l2, l2v[ii]);
    if (ii + 1 < m) {
      const double a = std::pow(infv[ii], 4.0), b = std::pow(infv[ii + 1], 4.0);
      tail4 += 0.5 * (a + b) * (times[ii + 1] - times[ii]);
    }
    const double val = std::pow(times[ii], alpha) * (sup_l2 + std::pow(tail4, 0.25));
    best = std::max(best, val);
  }
  return best;
}

double uniqueness_probe(const std::vector<double>& times,
                        const std::vector<ComplexField>& u,
                        const std::vector<ComplexField>& v) {
  const std::size_t m = times.size();
  if (u.size() != m || v.size() != m || m < 2)
    throw std::invalid_argument("uniqueness_probe: misaligned sample lists");
  std::vector<ComplexField> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = diff(u[i], v[i]);
  return norm_spacetime(times, d, 4.0, std::numeric_limits<double>::infinity());
}

namespace {

struct ProfileCache {
  std::vector<double> ts;
  std::vector<ComplexField> uap;   // u_ap(t_i)
  std::vector<ComplexField> base;  // e^{-it H} F_q^{-1} w(t_i)  (= u_ap + R1)
  std::vector<ComplexField> r2;    // R2(t_i)
};

ProfileCache build_cache(const AsymptoticProfile& prof, const FinalStateConfig& cfg) {
  ProfileCache c;
  c.ts = log_grid(cfg.T, cfg.T_max, cfg.num_times).steps;
  const std::size_t m = c.ts.size();
  const double q = prof.params.q;
  const double lam = prof.params.lambda;
  c.uap.resize(m);
  c.base.resize(m);
  c.r2.resize(m);
  parallel_for(m, [&](std::size_t i) {
    const double t = c.ts[i];
    c.uap[i] = build_u_ap(prof, t);
    const DistortedSpectrum w = build_w(prof, t);
    c.base[i] = propagate_spectral(inverse_dft(w, q), t, q).field;
    DistortedSpectrum nl = w;
    for (cplx& v : nl.values) v *= lam / t * std::norm(v);
    const ComplexField ev = propagate_spectral(inverse_dft(nl, q), t, q).field;
    ComplexField r2 = make_field(prof.phi_plus.grid, Side::position);
    for (std::size_t j = 0; j < r2.grid.n; ++j) {
      const cplx a = c.uap[i].values[j];
      r2.values[j] = ev.values[j] - lam * std::norm(a) * a;
    }
    c.r2[i] = std::move(r2);
  });
  return c;
}

void fill_report_tail(FinalStateSolution& sol, const FinalStateConfig& cfg) {
  const std::size_t m = sol.times.size();
  std::vector<double> dn(m), mass(m);
  double leak = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    dn[i] = norm_l2(diff(sol.u[i], sol.u_ap[i]));
    mass[i] = norm_l2(sol.u[i]);
    leak = std::max(leak, boundary_leak_ratio(sol.u[i]));
  }
  sol.report.xnorm_value = xnorm(sol.times, sol.u, sol.u_ap, cfg.alpha);
  // decay fit keeps away from the truncation-polluted tail: window [T, T_max/2]
  std::vector<double> ft, fn;
  for (std::size_t i = 0; i < m; ++i)
    if (sol.times[i] <= cfg.T_max / 2.0 && dn[i] > 0.0) {
      ft.push_back(sol.times[i]);
      fn.push_back(dn[i]);
    }
  if (ft.size() >= 3) sol.report.decay = fit_decay(ft, fn);
  const auto [mn, mx] = std::minmax_element(mass.begin(), mass.end());
  sol.report.mass_drift = (*mx - *mn) / std::max(*mx, 1e-300);
  const double r = sol.report.xnorm_value;
  sol.report.tail_bound = std::pow(cfg.T_max, 0.5 - 2.0 * cfg.alpha) * r * r * r;
  sol.report.boundary_leak = leak;
}

}  // namespace

FinalStateSolution solve_final_state_picard(const AsymptoticProfile& prof,
                                            const FinalStateConfig& cfg) {
  validate(cfg);
  const double q = prof.params.q;
  const double lam = prof.params.lambda;
  const Grid& g = prof.phi_plus.grid;
  const std::size_t n = g.n;
  ProfileCache cache = build_cache(prof, cfg);
  const std::size_t m = cache.ts.size();

  FinalStateSolution sol;
  sol.times = cache.ts;
  sol.u_ap = cache.uap;
  sol.u = cache.uap;  // u^0 = u_ap

  std::size_t worse_in_row = 0;
  double prev_res = std::numeric_limits<double>::infinity();
  for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
    // ghat_m = e^{-i tau_m xi^2/2} F_q[conj G_m],
    // G = i lam (|u|^2 u - |uap|^2 uap) - i R2.
    std::vector<std::vector<cplx>> ghat(m);
    parallel_for(m, [&](std::size_t mi) {
      ComplexField Gbar = make_field(g, Side::position);
      for (std::size_t j = 0; j < n; ++j) {
        const cplx uu = sol.u[mi].values[j];
        const cplx aa = cache.uap[mi].values[j];
        const cplx G = i1 * lam * (std::norm(uu) * uu - std::norm(aa) * aa) -
                       i1 * cache.r2[mi].values[j];
        Gbar.values[j] = std::conj(G);
      }
      std::vector<cplx> h = forward_dft(Gbar, q).values;
      const double tau = cache.ts[mi];
      for (std::size_t k = 0; k < n; ++k) {
        const double xi = g.xi(k);
        h[k] *= std::exp(-i1 * (0.5 * tau * xi * xi));
      }
      ghat[mi] = std::move(h);
    });
    // suffix trapezoid in tau, then one inverse transform per output time:
    // int_t^{Tmax} e^{-i(t-tau)H} G dtau = conj(Fq^{-1}[ e^{i t xi^2/2} Acc(t) ]).
    std::vector<std::vector<cplx>> acc(m);
    acc[m - 1].assign(n, cplx{0, 0});
    for (std::size_t ii = m - 1; ii-- > 0;) {
      const double h2 = 0.5 * (cache.ts[ii + 1] - cache.ts[ii]);
      acc[ii].resize(n);
      for (std::size_t k = 0; k < n; ++k)
        acc[ii][k] = acc[ii + 1][k] + h2 * (ghat[ii][k] + ghat[ii + 1][k]);
    }
    std::vector<ComplexField> unew(m);
    parallel_for(m, [&](std::size_t ii) {
      const double t = cache.ts[ii];
      DistortedSpectrum s{g, acc[ii]};
      for (std::size_t k = 0; k < n; ++k) {
        const double xi = g.xi(k);
        s.values[k] *= std::exp(i1 * (0.5 * t * xi * xi));
      }
      ComplexField integ = inverse_dft(s, q);
      ComplexField next = cache.base[ii];
      for (std::size_t j = 0; j < n; ++j) next.values[j] += std::conj(integ.values[j]);
      unew[ii] = std::move(next);
    });
    const double res = xnorm(cache.ts, unew, sol.u, cfg.alpha);
    sol.report.residuals.push_back(res);
    sol.u = std::move(unew);
    if (!std::isfinite(res)) {  // overflow in the cubic terms: hopeless data
      sol.report.diverged = true;
      break;
    }
    if (res < cfg.picard_tol) {
      sol.report.converged = true;
      break;
    }
    if (res > prev_res) {
      if (++worse_in_row >= 3) {
        sol.report.diverged = true;
        break;
      }
    } else {
      worse_in_row = 0;
    }
    prev_res = res;
  }
  fill_report_tail(sol, cfg);
  return sol;
}

FinalStateSolution solve_final_state_backward(const AsymptoticProfile& prof,
                                              const FinalStateConfig& cfg) {
  validate(cfg);
  const ModelParams p = prof.params;
  FinalStateSolution sol;
  sol.times = log_grid(cfg.T, cfg.T_max, cfg.num_times).steps;
  const std::size_t m = sol.times.size();
  sol.u_ap.resize(m);
  parallel_for(m, [&](std::size_t i) { sol.u_ap[i] = build_u_ap(prof, sol.times[i]); });
  sol.u.resize(m);
  sol.u[m - 1] = sol.u_ap[m - 1];  // start on the profile at T_max
  ComplexField u = sol.u[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) {
    const double span = sol.times[i + 1] - sol.times[i];
    const auto steps = static_cast<std::size_t>(std::ceil(span / cfg.dt_backward));
    const double dt = -span / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) u = forward_step(u, dt, p);
    sol.u[i] = u;
  }
  sol.report.converged = true;
  fill_report_tail(sol, cfg);
  return sol;
}

}  // namespace dqnls
