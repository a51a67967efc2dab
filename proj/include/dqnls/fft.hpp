#pragma once

#include "dqnls/grid.hpp"

namespace dqnls {

// Unitary transforms in the continuum convention, exact on the trigonometric
// interpolant of the samples and mutually inverse to roundoff:
//   fwd_fft:  F[f](xi_k)    = (2pi)^{-1/2} \int e^{-i x xi_k} f(x) dx
//   inv_fft:  F^{-1}[g](x_j) = (2pi)^{-1/2} \int e^{+i x_j xi} g(xi) dxi
std::vector<cplx> fwd_fft(const Grid& g, const std::vector<cplx>& f);
std::vector<cplx> inv_fft(const Grid& g, const std::vector<cplx>& spec);

// Interpolant coefficients c_k with f(x_j) = sum_k c_k e^{i xi_k x_j}, and the
// matching synthesis back onto the lattice.
std::vector<cplx> mode_coeffs(const Grid& g, const std::vector<cplx>& f);
std::vector<cplx> mode_synth(const Grid& g, const std::vector<cplx>& c);

// Reflection on the periodic lattice: out_j = v_{(n-j) mod n}, i.e. v(-x_j).
std::vector<cplx> mirror(const std::vector<cplx>& v);

// W_k = (dx/sqrt(2pi)) sum_j f_j e^{-i kappa_k x_j} at kappa_k = kappa0 + k*dkappa
// for k = 0..n-1 (Bluestein chirp-Z transform, off-lattice frequencies).
std::vector<cplx> nonlattice_ft(const Grid& g, const std::vector<cplx>& f,
                                double kappa0, double dkappa);

}  // namespace dqnls
