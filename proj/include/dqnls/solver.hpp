#pragma once

#include "dqnls/asymptotics.hpp"

namespace dqnls {

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  std::vector<double> steps;  // node times, strictly increasing, both ends included
};

TimeGrid uniform_grid(double t0, double t1, std::size_t n_steps);
TimeGrid log_grid(double t0, double t1, std::size_t n_nodes);

struct FinalStateConfig {
  double T = 10.0;             // window start, >= 1
  double T_max = 640.0;        // truncation of the t..infinity integrals
  double alpha = 0.4;          // X_T weight exponent, in (1/4, 1/2)
  double picard_tol = 1e-8;
  std::size_t max_iters = 25;
  std::size_t num_times = 48;  // log-grid nodes on [T, T_max]
  double dt_backward = 0.02;   // step for the backward sweep
};

void validate(const FinalStateConfig& cfg);

struct SolveReport {
  std::vector<double> residuals;  // X_T residual per Picard iteration
  bool converged = false;
  bool diverged = false;
  double xnorm_value = 0.0;       // sup_t t^alpha( ... ) of u - u_ap
  DecayFit decay;                 // fit of ||u - u_ap||_2 on [T, T_max/2]
  double mass_drift = 0.0;        // spread of ||u(t)||_2 across the window
  double tail_bound = 0.0;        // recorded T_max^{1/2 - 2 alpha} r^3 tail estimate
  double boundary_leak = 0.0;
};

// One Strang split step: exact half nonlinear phase, spectral linear step,
// half nonlinear phase. dt < 0 runs backward.
ComplexField forward_step(const ComplexField& u, double dt, const ModelParams& p);

// Repeated forward_step over a uniform grid; returns the state at every node.
std::vector<PropagationResult> evolve(const ComplexField& u0, const TimeGrid& tg,
                                      const ModelParams& p);

struct FinalStateSolution {
  std::vector<double> times;        // log nodes on [T, T_max]
  std::vector<ComplexField> u;      // solution samples
  std::vector<ComplexField> u_ap;   // profile samples
  SolveReport report;
};

// Picard iteration on the backward Duhamel equation: u^0 = u_ap,
// u^{n+1}(t) = e^{-itH}F_q^{-1}w(t)
//            + int_t^{Tmax} e^{-i(t-tau)H} { i lam(|u|^2u - |uap|^2uap) - i R2 } dtau.
// Aborts (diverged) after three consecutive residual increases.
FinalStateSolution solve_final_state_picard(const AsymptoticProfile& prof,
                                            const FinalStateConfig& cfg);

// Independent construction: initialize u(T_max) = u_ap(T_max) and step backward.
FinalStateSolution solve_final_state_backward(const AsymptoticProfile& prof,
                                              const FinalStateConfig& cfg);

// sup_{t_i} t_i^alpha ( sup_{j>=i} ||v_j||_2 + ||v||_{L^4(t_i..; L^inf)} ),
// v = u - u_ap on aligned sample lists.
double xnorm(const std::vector<double>& times, const std::vector<ComplexField>& u,
             const std::vector<ComplexField>& u_ap, double alpha);

// ||u - v||_{L^4(window; L^inf)} for two aligned solution sample sets.
double uniqueness_probe(const std::vector<double>& times,
                        const std::vector<ComplexField>& u,
                        const std::vector<ComplexField>& v);

}  // namespace dqnls
