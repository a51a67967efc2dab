#pragma once

#include <utility>

#include "dqnls/propagator.hpp"

namespace dqnls {

// Final data phi_+ together with its distorted transform and the model
// parameters. The smallness ||(1+|x|) phi_+|| is reported, never enforced.
// branch_plus/minus cache L_pm[phi_+], whose transforms are the two branch
// functions of F_q[phi_+] on the whole xi-line.
struct AsymptoticProfile {
  ComplexField phi_plus;
  DistortedSpectrum hat_phi;
  ComplexField branch_plus;
  ComplexField branch_minus;
  ModelParams params;
  double epsilon_check = 0.0;
};

AsymptoticProfile make_profile(const ComplexField& phi_plus, const ModelParams& p);

// S(t, xi) = -lambda |F_q[phi_+](xi)|^2 log t  (zero at t = 1, real).
double phase_S(const AsymptoticProfile& prof, double t, double xi);

// Value of the trigonometric interpolant of a spectrum at an off-lattice
// frequency (direct sum; exact for transforms of box-supported fields, but it
// rings across the xi = 0 branch kink of q > 0 spectra).
cplx interp_spectrum(const DistortedSpectrum& spec, double xi_star);

// Branch-resolved values of a distorted spectrum at the scaled abscissae
// xi_j = x_j / t: each half-line uses its own branch function F[L_pm u]
// (u = F_q^{-1} spec), evaluated by chirp-Z transform, so the interpolation
// never crosses the xi = 0 branch kink. |xi| beyond the lattice gives 0.
std::vector<cplx> sample_spectrum_scaled(const DistortedSpectrum& spec, double t,
                                         double q);

// u_ap(t,x) = t^{-1/2} h(x/t) exp(i x^2/2t + i S(t, x/t) - i pi/4), h = F_q[phi_+].
ComplexField build_u_ap(const AsymptoticProfile& prof, double t);  // t >= 1

// w(t, xi) = h(xi) e^{-i lambda |h(xi)|^2 log t}; |w| = |h| exactly.
DistortedSpectrum build_w(const AsymptoticProfile& prof, double t);  // t >= 1

// Leading term t^{-1/2} phi(x/t) e^{ix^2/2t - i pi/4} of e^{-itH_q}F_q^{-1}phi
// and the remainder R = propagated - leading. Rates degrade if phi(0) != 0.
std::pair<ComplexField, ComplexField> leading_order(const DistortedSpectrum& spec,
                                                    double t, double q);

// R1(t) = e^{-itH_q} F_q^{-1}[w(t)] - u_ap(t)
ComplexField remainder_R1(const AsymptoticProfile& prof, double t);

// R2(t) = e^{-itH_q} F_q^{-1}[lambda t^{-1} |w|^2 w] - lambda |u_ap|^2 u_ap
ComplexField remainder_R2(const AsymptoticProfile& prof, double t);

}  // namespace dqnls
