#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dqnls {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

enum class Side { position, frequency };

// Uniform periodic lattice on [-L, L) paired with its dual frequency lattice.
// Invariants: n is a power of two, dx*n = 2L, dxi*dx*n = 2pi, frequencies are
// increasing and xi = 0 sits at index n/2.
struct Grid {
  std::size_t n = 0;
  double half_width = 0.0;  // L

  double dx() const { return 2.0 * half_width / static_cast<double>(n); }
  double dxi() const { return pi / half_width; }
  double x(std::size_t j) const { return -half_width + dx() * static_cast<double>(j); }
  double xi(std::size_t k) const {
    return dxi() * (static_cast<double>(k) - static_cast<double>(n) / 2.0);
  }
  double nyquist() const { return pi / dx(); }

  bool operator==(const Grid&) const = default;
};

// Throws std::invalid_argument unless n is a power of two >= 4 and L > 0.
Grid make_grid(std::size_t n, double half_width);

struct ComplexField {
  Grid grid;
  Side side = Side::position;
  std::vector<cplx> values;
};

ComplexField make_field(const Grid& g, Side side = Side::position);

// q >= 0 (repulsive delta coupling), lambda != 0 (cubic coefficient).
struct ModelParams {
  double q = 0.0;
  double lambda = 1.0;
};

void validate(const ModelParams& p);

// max|f| over the outermost 1% of samples, relative to max|f| overall.
// Fields are considered boundary-clean when this stays below leak_threshold.
double boundary_leak_ratio(const ComplexField& f);
inline constexpr double leak_threshold = 1e-8;

}  // namespace dqnls
