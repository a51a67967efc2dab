#pragma once

#include "dqnls/grid.hpp"

namespace dqnls {

// Trapezoid-rule norms on the periodic lattice (uniform weights; the wrap point
// carries the same weight as every interior node).
double norm_l2(const ComplexField& f);
double norm_lp(const ComplexField& f, double p);  // p in [1, inf]; inf -> max|f|
double norm_weighted(const ComplexField& f);      // ||(1+|x|) f||_L2, position side

// Frequency-side L2 with the dual measure dxi.
double spectrum_l2(const Grid& g, const std::vector<cplx>& values);

// ( \int ||f(t)||_{L^r}^{q} dt )^{1/q} by composite trapezoid on the given
// (generally log-spaced) times; q_exp may be infinity.
double norm_spacetime(const std::vector<double>& times,
                      const std::vector<ComplexField>& fields,
                      double q_exp, double r_exp);

struct DecayFit {
  std::vector<double> times;
  std::vector<double> norms;
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

// Least-squares line through (log t, log norm); needs >= 3 positive points.
DecayFit fit_decay(const std::vector<double>& times, const std::vector<double>& norms);

}  // namespace dqnls
