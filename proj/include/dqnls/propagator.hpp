#pragma once

#include "dqnls/norms.hpp"
#include "dqnls/scattering.hpp"

namespace dqnls {

enum class PropagatorRoute { Spectral, ReflectedFree, FresnelKernel };

struct PropagationResult {
  double t = 0.0;
  ComplexField field;
  PropagatorRoute route = PropagatorRoute::Spectral;
  double l2_drift = 0.0;      // | ||out||_2 - ||in||_2 | / ||in||_2
  double boundary_leak = 0.0; // leak ratio of the output field
};

// e^{-itH_q} phi as the conjugation sandwich
//   conj( F_q^{-1}[ e^{+i t xi^2/2} F_q[ conj phi ] ] );
// valid for either sign of t. This is the reference route.
PropagationResult propagate_spectral(const ComplexField& phi, double t, double q);

// Same propagator with a smooth band-edge damper (identity below 0.85 of the
// Nyquist frequency, ~2e-16 at the edge) applied in the distorted-frequency
// domain. Time-stepping loops must use this one: the outermost lattice modes
// of the discrete transform pair carry a weak per-application amplification
// that is harmless in single shots but compounds over 10^4+ steps.
PropagationResult propagate_spectral_filtered(const ComplexField& phi, double t,
                                              double q);

// Three-term reflected-free-wave assembly: for each half-line,
// F^{-1}[ e^{-it xi^2/2} { F[phi] + r_q-weighted reflected cuts } ].
PropagationResult propagate_reflected_free(const ComplexField& phi, double t, double q);

// Fresnel kernel route, t > 0 only: chirp-multiply e^{iy^2/2t} L_+-[phi], then a
// chirp-Z transform onto the output abscissae x_j/t, then the outer chirp.
PropagationResult propagate_fresnel(const ComplexField& phi, double t, double q);

// Fits the slope of log ||e^{-itH_q} phi||_inf against log t. Throws when the
// dispersed wave reaches the grid edge (boundary-leak check).
DecayFit dispersive_decay_scan(const ComplexField& phi, double q,
                               const std::vector<double>& times);

// || e^{-i . H_q} phi ||_{L^{q_exp}(window; L^{r_exp})} for an admissible pair
// 2/q_exp + 1/r_exp = 1/2, q_exp >= 4 (or (inf, 2)). A boundedness witness.
double strichartz_norm_probe(const ComplexField& phi, double q, double q_exp,
                             double r_exp, const std::vector<double>& window);

}  // namespace dqnls
