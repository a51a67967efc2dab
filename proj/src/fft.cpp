#include "dqnls/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dqnls {
namespace {

// One forward/backward plan pair per transform size. fftw_execute_dft is
// thread-safe; only plan creation needs the lock. FFTW_UNALIGNED keeps the
// plans valid for any caller buffer.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

PlanPair& plans_for(std::size_t n) {
  static std::map<std::size_t, PlanPair> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> a(n), b(n);
  auto* pa = reinterpret_cast<fftw_complex*>(a.data());
  auto* pb = reinterpret_cast<fftw_complex*>(b.data());
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(static_cast<int>(n), pa, pb, FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_1d(static_cast<int>(n), pa, pb, FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, p).first->second;
}

std::vector<cplx> run_plan(bool forward, const std::vector<cplx>& in) {
  const std::size_t n = in.size();
  PlanPair& p = plans_for(n);
  std::vector<cplx> src(in), dst(n);
  auto* ps = reinterpret_cast<fftw_complex*>(src.data());
  auto* pd = reinterpret_cast<fftw_complex*>(dst.data());
  fftw_execute_dft(forward ? p.fwd : p.bwd, ps, pd);
  return dst;
}

inline double sx(std::size_t j) { return (j & 1) ? -1.0 : 1.0; }
inline double sk(std::size_t k, std::size_t n) { return ((k + n / 2) & 1) ? -1.0 : 1.0; }

}  // namespace

std::vector<cplx> fwd_fft(const Grid& g, const std::vector<cplx>& f) {
  const std::size_t n = g.n;
  if (f.size() != n) throw std::invalid_argument("fwd_fft: size mismatch");
  std::vector<cplx> tmp(n);
  for (std::size_t j = 0; j < n; ++j) tmp[j] = f[j] * sx(j);
  std::vector<cplx> out = run_plan(true, tmp);
  const double scale = g.dx() / std::sqrt(2.0 * pi);
  for (std::size_t k = 0; k < n; ++k) out[k] *= scale * sk(k, n);
  return out;
}

std::vector<cplx> inv_fft(const Grid& g, const std::vector<cplx>& spec) {
  const std::size_t n = g.n;
  if (spec.size() != n) throw std::invalid_argument("inv_fft: size mismatch");
  std::vector<cplx> tmp(n);
  for (std::size_t k = 0; k < n; ++k) tmp[k] = spec[k] * sk(k, n);
  std::vector<cplx> out = run_plan(false, tmp);
  const double scale = g.dxi() / std::sqrt(2.0 * pi);
  for (std::size_t j = 0; j < n; ++j) out[j] *= scale * sx(j);
  return out;
}

std::vector<cplx> mode_coeffs(const Grid& g, const std::vector<cplx>& f) {
  const std::size_t n = g.n;
  if (f.size() != n) throw std::invalid_argument("mode_coeffs: size mismatch");
  std::vector<cplx> tmp(n);
  for (std::size_t j = 0; j < n; ++j) tmp[j] = f[j] * sx(j);
  std::vector<cplx> out = run_plan(true, tmp);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) out[k] *= scale * sk(k, n);
  return out;
}

std::vector<cplx> mode_synth(const Grid& g, const std::vector<cplx>& c) {
  const std::size_t n = g.n;
  if (c.size() != n) throw std::invalid_argument("mode_synth: size mismatch");
  std::vector<cplx> tmp(n);
  for (std::size_t k = 0; k < n; ++k) tmp[k] = c[k] * sk(k, n);
  std::vector<cplx> out = run_plan(false, tmp);
  for (std::size_t j = 0; j < n; ++j) out[j] *= sx(j);
  return out;
}

std::vector<cplx> mirror(const std::vector<cplx>& v) {
  const std::size_t n = v.size();
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = v[(n - j) % n];
  return out;
}

std::vector<cplx> nonlattice_ft(const Grid& g, const std::vector<cplx>& f,
                                double kappa0, double dkappa) {
  const std::size_t n = g.n;
  if (f.size() != n) throw std::invalid_argument("nonlattice_ft: size mismatch");
  // kappa_k x_j = (kappa0 + k dk)(x0 + j dx)
  //            = kappa0 x0 + k dk x0 + j dx kappa0 + j k dk dx,
  // and jk = (j^2 + k^2 - (j-k)^2)/2 turns the cross term into a Bluestein
  // convolution with the quadratic chirp.
  const double x0 = g.x(0);
  const double dx = g.dx();
  const double alpha = dkappa * dx;
  const std::size_t m = 2 * n;  // linear convolution length (n is a power of two)
  const cplx i1(0.0, 1.0);

  std::vector<cplx> a(m, cplx{0.0, 0.0}), b(m, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    const double jd = static_cast<double>(j);
    a[j] = f[j] * std::exp(-i1 * (kappa0 * jd * dx + 0.5 * alpha * jd * jd));
  }
  for (std::size_t d = 0; d < n; ++d) {
    const double dd = static_cast<double>(d);
    const cplx w = std::exp(i1 * (0.5 * alpha * dd * dd));
    b[d] = w;
    if (d > 0) b[m - d] = w;  // b_{-d}
  }
  std::vector<cplx> fa = run_plan(true, a), fb = run_plan(true, b);
  for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  std::vector<cplx> conv = run_plan(false, fa);

  std::vector<cplx> out(n);
  const double scale = dx / std::sqrt(2.0 * pi) / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const cplx pref =
        std::exp(-i1 * (kappa0 * x0 + kd * dkappa * x0 + 0.5 * alpha * kd * kd));
    out[k] = pref * conv[k] * scale;
  }
  return out;
}

}  // namespace dqnls
