#pragma once

#include <utility>

#include "dqnls/grid.hpp"

namespace dqnls {

// Transmission and reflection coefficients of the delta scatterer,
//   t_q(xi) = i xi / (i xi - q),  r_q(xi) = q / (i xi - q),
// with t = 1, r = 0 for the free case q = 0.
struct ScatteringCoeffs {
  double q = 0.0;
  cplx t(double xi) const;
  cplx r(double xi) const;
};

// Jost solutions of H_q f = (xi^2/2) f asymptotic to plane waves, and the
// generalized eigenfunctions Psi built from them (xi >= 0 uses f_+, xi < 0
// uses f_- at -xi).
struct JostPair {
  double q = 0.0;
  cplx f_plus(double x, double xi) const;
  cplx f_minus(double x, double xi) const;
  cplx psi(double x, double xi) const;
};

// Distorted-transform values on the frequency lattice. The value at xi_k is
// the xi >= 0 branch when xi_k >= 0 (the xi = 0 bin belongs to the plus
// branch), else the xi < 0 branch.
struct DistortedSpectrum {
  Grid grid;
  std::vector<cplx> values;
};

// L_+[phi](x) = phi(x) - q 1_-(x) e^{qx} \int_x^{-x} e^{q|y|} phi(y) dy and its
// mirror L_-. The exponential-weighted integrals are evaluated with combined
// exponents (always <= 0 on the support), so nothing overflows.
ComplexField apply_L_plus(const ComplexField& phi, double q);
ComplexField apply_L_minus(const ComplexField& phi, double q);

// F_q via F[L_+- phi] with branch gluing (the O(n log n) default path).
DistortedSpectrum forward_dft(const ComplexField& phi, double q);

// F_q^{-1} via F^{-1}[1_+- psi] plus exponential tail integrals, glued at x=0;
// the whole-line plus/minus forms are the two non-restricted branches.
ComplexField inverse_dft(const DistortedSpectrum& spec, double q);
ComplexField inverse_dft_plus(const DistortedSpectrum& spec, double q);
ComplexField inverse_dft_minus(const DistortedSpectrum& spec, double q);

// Reflection-coefficient representations of the same transforms; retained as
// cross-check oracles for the default paths.
DistortedSpectrum forward_dft_reflect(const ComplexField& phi, double q);
ComplexField inverse_dft_reflect(const DistortedSpectrum& spec, double q);

// Closed form F^{-1}[r_q](x) = -sqrt(2pi) q 1_-(x) e^{qx}; requires q > 0.
ComplexField kernel_r_inverse_ft(double q, const Grid& g);

// The duality pairing: returns ( <F_q[phi], psi>_xi , <phi, F_q^{-1}[psi]>_x ).
// phi is position-side, psi lives on the same grid's frequency lattice.
std::pair<cplx, cplx> adjoint_pair(const ComplexField& phi,
                                   const DistortedSpectrum& psi, double q);

}  // namespace dqnls
