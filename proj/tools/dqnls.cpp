// dqnls: experiments on the 1D cubic NLS with a repulsive delta potential.
//
// Subcommands mirror the experiment presets: verify-identities, propagate,
// decay-scan, asymptotic-remainders, final-state, forward-evolve. Every run
// writes a manifest (config echo + version + wall time) plus JSON/CSV reports
// into --out. Exit codes: 0 ok, 2 invalid config, 3 solver divergence,
// 4 boundary-leak abort.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "dqnls/fft.hpp"
#include "dqnls/field_io.hpp"
#include "dqnls/parallel.hpp"
#include "dqnls/solver.hpp"

using namespace dqnls;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* version_string = "1.0.0";
constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_diverged = 3;
constexpr int exit_leak = 4;

struct CommonCfg {
  std::size_t n = 4096;
  double L = 40.0;
  double q = 1.0;
  double lambda = 1.0;
  std::uint64_t seed = 1234;
  std::string out = "out";
};

ComplexField seeded_packets(const Grid& g, std::uint64_t seed, std::size_t count = 5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  ComplexField f = make_field(g);
  for (std::size_t p = 0; p < count; ++p) {
    const double side = uni(rng) < 0.5 ? -1.0 : 1.0;
    const double x0 = side * (5.5 + 3.5 * uni(rng));
    const double w = 0.6 + 0.4 * uni(rng);
    const double k0 = 2.5 * (2.0 * uni(rng) - 1.0);
    const cplx amp = (0.3 + 0.7 * uni(rng)) * std::exp(cplx(0.0, 2.0 * pi * uni(rng)));
    for (std::size_t j = 0; j < g.n; ++j) {
      const double x = g.x(j);
      f.values[j] += amp * std::exp(-(x - x0) * (x - x0) / (2.0 * w * w)) *
                     std::exp(cplx(0.0, k0 * x));
    }
  }
  return f;
}

ComplexField single_packet(const Grid& g, double x0, double w, double k0) {
  ComplexField f = make_field(g);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double x = g.x(j);
    f.values[j] = std::exp(-(x - x0) * (x - x0) / (2.0 * w * w)) *
                  std::exp(cplx(0.0, k0 * x));
  }
  return f;
}

double rel_l2(const ComplexField& a, const ComplexField& b) {
  ComplexField d = a;
  for (std::size_t j = 0; j < d.values.size(); ++j) d.values[j] -= b.values[j];
  const double nb = norm_l2(b);
  return nb > 0 ? norm_l2(d) / nb : norm_l2(d);
}

std::vector<double> log_times(double t0, double t1, std::size_t num) {
  return log_grid(t0, t1, num).steps;
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream os(path);
  os << j.dump(2) << "\n";
}

class Run {
 public:
  Run(const CommonCfg& cfg, const std::string& command, json experiment_echo)
      : cfg_(cfg), command_(command), echo_(std::move(experiment_echo)),
        start_(std::chrono::steady_clock::now()) {
    fs::create_directories(cfg.out);
  }

  fs::path path(const std::string& name) const { return fs::path(cfg_.out) / name; }

  void finish(const json& report) const {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json manifest = {
        {"tool", "dqnls"},
        {"version", version_string},
        {"command", command_},
        {"seed", cfg_.seed},
        {"workers", worker_count()},
        {"wall_time_s", wall},
        {"config",
         {{"grid", {{"n", cfg_.n}, {"L", cfg_.L}}},
          {"model", {{"q", cfg_.q}, {"lambda", cfg_.lambda}}},
          {"out", cfg_.out},
          {"experiment", echo_}}},
    };
    write_json(path("manifest.json"), manifest);
    write_json(path("report.json"), report);
  }

 private:
  CommonCfg cfg_;
  std::string command_;
  json echo_;
  std::chrono::steady_clock::time_point start_;
};

int run_verify_identities(const CommonCfg& cfg, std::size_t n_fields) {
  const Grid g = make_grid(cfg.n, cfg.L);
  Run run(cfg, "verify-identities", {{"fields", n_fields}});
  const json thresholds = {{"roundtrip", 1e-8},   {"isometry", 1e-8},
                           {"rep_forward", 1e-8}, {"rep_inverse", 1e-8},
                           {"lemma_e1", 1e-7},    {"lemma_e2", 1e-7},
                           {"duality", 1e-8},     {"coefficients", 1e-13},
                           {"fq_zero", 1e-6}};

  // coefficient identities on a dense xi sweep
  double coeff_worst = 0.0;
  const ScatteringCoeffs sc{cfg.q};
  for (int i = 0; i <= 100000; ++i) {
    const double xi = -500.0 + 0.01 * i;
    const cplx t = sc.t(xi), r = sc.r(xi);
    coeff_worst = std::max(coeff_worst, std::abs(std::norm(t) + std::norm(r) - 1.0));
    coeff_worst = std::max(coeff_worst, std::abs(t - (1.0 + r)));
    coeff_worst = std::max(coeff_worst, std::abs((t * std::conj(r)).real()));
  }

  DistortedSpectrum pairspec{g, std::vector<cplx>(g.n)};
  for (std::size_t k = 0; k < g.n; ++k) {
    const double xi = g.xi(k);
    pairspec.values[k] =
        std::exp(-(xi - 1.0) * (xi - 1.0) / 2.0) * std::exp(cplx(0.0, 0.7 * xi));
  }

  std::ofstream csv(run.path("identities.csv"));
  csv << "field,roundtrip,isometry,rep_forward,rep_inverse,lemma_e1,lemma_e2,"
         "duality,fq_zero\n";
  double worst[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < n_fields; ++i) {
    const ComplexField phi = seeded_packets(g, cfg.seed + i);
    const double nrm = norm_l2(phi);
    const DistortedSpectrum s = forward_dft(phi, cfg.q);
    const DistortedSpectrum sref = forward_dft_reflect(phi, cfg.q);
    const ComplexField back = inverse_dft(s, cfg.q);
    const ComplexField backG = inverse_dft_reflect(s, cfg.q);
    const ComplexField plus = inverse_dft_plus(s, cfg.q);
    const ComplexField minus = inverse_dft_minus(s, cfg.q);
    const ComplexField lp = apply_L_plus(back, cfg.q);
    const ComplexField lm = apply_L_minus(back, cfg.q);
    double fi = 0.0, e1 = 0.0, e2 = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
      fi = std::max(fi, std::abs(s.values[k] - sref.values[k]));
      e1 = std::max(e1, std::abs(lp.values[k] - plus.values[k]));
      e2 = std::max(e2, std::abs(lm.values[k] - minus.values[k]));
    }
    const auto [lhs, rhs] = adjoint_pair(phi, pairspec, cfg.q);
    const double vals[8] = {rel_l2(back, phi),
                            std::abs(spectrum_l2(g, s.values) - nrm) / nrm,
                            fi,
                            rel_l2(backG, back),
                            e1,
                            e2,
                            std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300),
                            std::abs(s.values[g.n / 2]) / nrm};
    csv << i;
    for (double v : vals) csv << "," << v;
    csv << "\n";
    for (int kk = 0; kk < 8; ++kk) worst[kk] = std::max(worst[kk], vals[kk]);
  }

  const bool pass = coeff_worst < 1e-13 && worst[0] < 1e-8 && worst[1] < 1e-8 &&
                    worst[2] < 1e-8 && worst[3] < 1e-8 && worst[4] < 1e-7 &&
                    worst[5] < 1e-7 && worst[6] < 1e-8 && worst[7] < 1e-6;
  const json report = {{"pass", pass},
                       {"thresholds", thresholds},
                       {"residuals",
                        {{"coefficients", coeff_worst},
                         {"roundtrip", worst[0]},
                         {"isometry", worst[1]},
                         {"rep_forward", worst[2]},
                         {"rep_inverse", worst[3]},
                         {"lemma_e1", worst[4]},
                         {"lemma_e2", worst[5]},
                         {"duality", worst[6]},
                         {"fq_zero", worst[7]}}}};
  run.finish(report);
  std::cout << (pass ? "identities: all residuals below thresholds\n"
                     : "identities: FAILURES present, see report.json\n");
  return pass ? exit_ok : 1;
}

int run_propagate(const CommonCfg& cfg, double t, double x0, double w, double k0,
                  bool dump) {
  const Grid g = make_grid(cfg.n, cfg.L);
  Run run(cfg, "propagate",
          {{"t", t}, {"x0", x0}, {"width", w}, {"momentum", k0}, {"dump", dump}});
  const ComplexField phi = single_packet(g, x0, w, k0);
  const PropagationResult rs = propagate_spectral(phi, t, cfg.q);
  const PropagationResult rr = propagate_reflected_free(phi, t, cfg.q);
  json report = {{"t", t},
                 {"drift_spectral", rs.l2_drift},
                 {"drift_reflected", rr.l2_drift},
                 {"agreement_spectral_reflected", rel_l2(rr.field, rs.field)},
                 {"boundary_leak", std::max(rs.boundary_leak, rr.boundary_leak)}};
  if (t > 0.0) {
    const PropagationResult rf = propagate_fresnel(phi, t, cfg.q);
    report["agreement_spectral_fresnel"] = rel_l2(rf.field, rs.field);
    if (dump) dump_field(rf.field, t, run.path("field_fresnel.dqf"));
  }
  if (dump) {
    dump_field(phi, 0.0, run.path("field_initial.dqf"));
    dump_field(rs.field, t, run.path("field_spectral.dqf"));
    dump_field(rr.field, t, run.path("field_reflected.dqf"));
  }
  run.finish(report);
  if (report["boundary_leak"].get<double>() > leak_threshold) {
    std::cerr << "boundary leak above threshold; enlarge the grid\n";
    return exit_leak;
  }
  return exit_ok;
}

int run_decay_scan(const CommonCfg& cfg, double t0, double t1, std::size_t num,
                   double x0, double w, double k0) {
  const Grid g = make_grid(cfg.n, cfg.L);
  Run run(cfg, "decay-scan",
          {{"t0", t0}, {"t1", t1}, {"num", num}, {"x0", x0}, {"width", w},
           {"momentum", k0}});
  const ComplexField phi = single_packet(g, x0, w, k0);
  const std::vector<double> times = log_times(t0, t1, num);
  try {
    std::vector<double> sup(times.size()), l2(times.size());
    parallel_for(times.size(), [&](std::size_t i) {
      const PropagationResult r = propagate_spectral(phi, times[i], cfg.q);
      sup[i] = norm_lp(r.field, std::numeric_limits<double>::infinity());
      l2[i] = norm_l2(r.field);
      if (r.boundary_leak > leak_threshold)
        throw std::runtime_error("boundary leak at t = " + std::to_string(times[i]));
    });
    std::ofstream csv(run.path("decay.csv"));
    csv << "t,sup_norm,l2_norm\n";
    for (std::size_t i = 0; i < times.size(); ++i)
      csv << times[i] << "," << sup[i] << "," << l2[i] << "\n";
    const DecayFit fit = fit_decay(times, sup);
    run.finish({{"slope", fit.slope},
                {"intercept", fit.intercept},
                {"rms_residual", fit.rms_residual}});
    std::cout << "sup-norm decay slope: " << fit.slope << "\n";
    return exit_ok;
  } catch (const std::runtime_error& e) {
    run.finish({{"error", e.what()}});
    std::cerr << e.what() << "\n";
    return exit_leak;
  }
}

int run_asymptotic_remainders(const CommonCfg& cfg, double t0, double t1,
                              std::size_t num, double target) {
  const Grid g = make_grid(cfg.n, cfg.L);
  Run run(cfg, "asymptotic-remainders",
          {{"t0", t0}, {"t1", t1}, {"num", num}, {"weighted_norm", target}});
  ComplexField phi = single_packet(g, -8.0, 4.0, 0.3);
  const double wn = norm_weighted(phi);
  for (auto& v : phi.values) v *= target / wn;
  const AsymptoticProfile prof = make_profile(phi, ModelParams{cfg.q, cfg.lambda});

  const std::vector<double> times = log_times(t0, t1, num);
  std::vector<double> r1n(times.size()), r2n(times.size()), uapn(times.size());
  parallel_for(times.size(), [&](std::size_t i) {
    const double t = times[i];
    r1n[i] = norm_l2(remainder_R1(prof, t));
    r2n[i] = t * norm_l2(remainder_R2(prof, t));
    uapn[i] = norm_l2(build_u_ap(prof, t));
  });
  std::ofstream csv(run.path("remainders.csv"));
  csv << "t,r1_l2,t_r2_l2,uap_l2\n";
  for (std::size_t i = 0; i < times.size(); ++i)
    csv << times[i] << "," << r1n[i] << "," << r2n[i] << "," << uapn[i] << "\n";
  const DecayFit f1 = fit_decay(times, r1n);
  const DecayFit f2 = fit_decay(times, r2n);
  run.finish({{"epsilon_check", prof.epsilon_check},
              {"slope_r1", f1.slope},
              {"slope_t_r2", f2.slope}});
  std::cout << "R1 slope " << f1.slope << ", t*R2 slope " << f2.slope << "\n";
  return exit_ok;
}

int run_final_state(const CommonCfg& cfg, const FinalStateConfig& fsc, double target,
                    bool with_backward) {
  const Grid g = make_grid(cfg.n, cfg.L);
  Run run(cfg, "final-state",
          {{"T", fsc.T},
           {"T_max", fsc.T_max},
           {"alpha", fsc.alpha},
           {"picard_tol", fsc.picard_tol},
           {"num_times", fsc.num_times},
           {"dt_backward", fsc.dt_backward},
           {"weighted_norm", target},
           {"with_backward", with_backward}});
  ComplexField phi = single_packet(g, -8.0, 4.0, 0.3);
  const double wn = norm_weighted(phi);
  for (auto& v : phi.values) v *= target / wn;
  const AsymptoticProfile prof = make_profile(phi, ModelParams{cfg.q, cfg.lambda});

  const FinalStateSolution pic = solve_final_state_picard(prof, fsc);
  {
    std::ofstream csv(run.path("residuals.csv"));
    csv << "iteration,x_residual\n";
    for (std::size_t i = 0; i < pic.report.residuals.size(); ++i)
      csv << (i + 1) << "," << pic.report.residuals[i] << "\n";
  }
  {
    std::ofstream csv(run.path("window.csv"));
    csv << "t,diff_l2,u_l2,uap_l2\n";
    for (std::size_t i = 0; i < pic.times.size(); ++i) {
      csv << pic.times[i] << "," << rel_l2(pic.u[i], pic.u_ap[i]) * norm_l2(pic.u_ap[i])
          << "," << norm_l2(pic.u[i]) << "," << norm_l2(pic.u_ap[i]) << "\n";
    }
  }
  json report = {{"converged", pic.report.converged},
                 {"diverged", pic.report.diverged},
                 {"iterations", pic.report.residuals.size()},
                 {"final_residual",
                  pic.report.residuals.empty() ? 0.0 : pic.report.residuals.back()},
                 {"xnorm", pic.report.xnorm_value},
                 {"decay_slope", pic.report.decay.slope},
                 {"mass_drift", pic.report.mass_drift},
                 {"tail_bound", pic.report.tail_bound},
                 {"epsilon_check", prof.epsilon_check},
                 {"boundary_leak", pic.report.boundary_leak}};
  if (pic.report.diverged) {
    run.finish(report);
    std::cerr << "picard iteration diverged: data outside the contraction regime\n";
    return exit_diverged;
  }
  if (with_backward) {
    const FinalStateSolution bwd = solve_final_state_backward(prof, fsc);
    report["cross_route_l2_at_T"] =
        rel_l2(bwd.u.front(), pic.u.front()) * norm_l2(pic.u.front());
  }
  run.finish(report);
  std::cout << "picard converged in " << pic.report.residuals.size()
            << " iterations; ||u-u_ap|| slope " << pic.report.decay.slope << "\n";
  return exit_ok;
}

int run_forward_evolve(const CommonCfg& cfg, double t_end, double dt, double x0,
                       double w, double k0) {
  const Grid g = make_grid(cfg.n, cfg.L);
  Run run(cfg, "forward-evolve",
          {{"t_end", t_end}, {"dt", dt}, {"x0", x0}, {"width", w}, {"momentum", k0}});
  const ComplexField u0 = single_packet(g, x0, w, k0);
  const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
  const auto path = evolve(u0, uniform_grid(0.0, t_end, steps), ModelParams{cfg.q, cfg.lambda});
  std::ofstream csv(run.path("evolve.csv"));
  csv << "t,mass_drift,boundary_leak\n";
  double leak = 0.0;
  const std::size_t stride = std::max<std::size_t>(1, path.size() / 200);
  for (std::size_t i = 0; i < path.size(); i += stride) {
    csv << path[i].t << "," << path[i].l2_drift << "," << path[i].boundary_leak << "\n";
    leak = std::max(leak, path[i].boundary_leak);
  }
  // endpoint Richardson check against a dt/2 run
  const auto fine = evolve(u0, uniform_grid(0.0, t_end, 2 * steps), ModelParams{cfg.q, cfg.lambda});
  const double endpoint_diff = rel_l2(path.back().field, fine.back().field);
  run.finish({{"mass_drift", path.back().l2_drift},
              {"boundary_leak", leak},
              {"endpoint_dt_halving_diff", endpoint_diff}});
  if (leak > leak_threshold) {
    std::cerr << "boundary leak above threshold; enlarge the grid\n";
    return exit_leak;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distorted Fourier analysis and modified scattering for the 1D "
               "delta-potential cubic NLS"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CommonCfg cfg;
  // --config JSON is read first; explicit flags win over file values.
  std::string config_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  json file = json::object();
  if (!config_path.empty()) {
    std::ifstream is(config_path);
    if (!is) {
      std::cerr << "cannot open config file " << config_path << "\n";
      return exit_invalid;
    }
    try {
      is >> file;
    } catch (const std::exception& e) {
      std::cerr << "bad config file: " << e.what() << "\n";
      return exit_invalid;
    }
    cfg.n = file.value("grid", json::object()).value("n", cfg.n);
    cfg.L = file.value("grid", json::object()).value("L", cfg.L);
    cfg.q = file.value("model", json::object()).value("q", cfg.q);
    cfg.lambda = file.value("model", json::object()).value("lambda", cfg.lambda);
    cfg.seed = file.value("seed", cfg.seed);
    cfg.out = file.value("out", cfg.out);
  }
  const json expcfg = file.value("experiment", json::object());

  app.add_option("--config", config_path, "JSON config file (flags win over file)");
  app.add_option("--grid-n", cfg.n, "grid points (power of two)");
  app.add_option("--grid-L", cfg.L, "half width of the spatial box");
  app.add_option("--q", cfg.q, "delta coupling, q >= 0");
  app.add_option("--lambda", cfg.lambda, "cubic coefficient");
  app.add_option("--seed", cfg.seed, "seed for randomized field families");
  app.add_option("--out", cfg.out, "output directory");

  auto* vi = app.add_subcommand("verify-identities",
                                "scattering-transform identity residuals");
  std::size_t vi_fields = expcfg.value("fields", 20);
  vi->add_option("--fields", vi_fields, "number of random fields");

  auto* pr = app.add_subcommand("propagate", "one field through all three routes");
  double pr_t = expcfg.value("t", 1.0);
  double pr_x0 = expcfg.value("x0", -7.0), pr_w = expcfg.value("width", 1.2);
  double pr_k0 = expcfg.value("momentum", 1.5);
  bool pr_dump = expcfg.value("dump", false);
  pr->add_option("--t", pr_t, "time");
  pr->add_option("--x0", pr_x0, "packet center");
  pr->add_option("--width", pr_w, "packet width");
  pr->add_option("--momentum", pr_k0, "packet momentum");
  pr->add_flag("--dump", pr_dump, "dump fields in DQF1 format");

  auto* ds = app.add_subcommand("decay-scan", "sup-norm dispersive decay rate");
  double ds_t0 = expcfg.value("t0", 10.0), ds_t1 = expcfg.value("t1", 100.0);
  std::size_t ds_num = expcfg.value("num", 12);
  double ds_x0 = expcfg.value("x0", -6.0), ds_w = expcfg.value("width", 1.0);
  // nonzero momentum keeps the spectrum off the forced F_q[phi](0) = 0 dip
  double ds_k0 = expcfg.value("momentum", -1.5);
  ds->add_option("--t0", ds_t0, "first time");
  ds->add_option("--t1", ds_t1, "last time");
  ds->add_option("--num", ds_num, "number of log-spaced times");
  ds->add_option("--x0", ds_x0, "packet center");
  ds->add_option("--width", ds_w, "packet width");
  ds->add_option("--momentum", ds_k0, "packet momentum");

  auto* ar = app.add_subcommand("asymptotic-remainders", "R1/R2 decay rates");
  double ar_t0 = expcfg.value("t0", 10.0), ar_t1 = expcfg.value("t1", 200.0);
  std::size_t ar_num = expcfg.value("num", 13);
  double ar_eps = expcfg.value("weighted_norm", 0.05);
  ar->add_option("--t0", ar_t0, "first time");
  ar->add_option("--t1", ar_t1, "last time");
  ar->add_option("--num", ar_num, "number of log-spaced times");
  ar->add_option("--weighted-norm", ar_eps, "||(1+|x|) phi_+||_2 of the final data");

  auto* fst = app.add_subcommand("final-state", "modified wave operator construction");
  FinalStateConfig fsc;
  fsc.T = expcfg.value("T", fsc.T);
  fsc.T_max = expcfg.value("T_max", fsc.T_max);
  fsc.alpha = expcfg.value("alpha", fsc.alpha);
  fsc.picard_tol = expcfg.value("picard_tol", fsc.picard_tol);
  fsc.max_iters = expcfg.value("max_iters", fsc.max_iters);
  fsc.num_times = expcfg.value("num_times", fsc.num_times);
  fsc.dt_backward = expcfg.value("dt_backward", fsc.dt_backward);
  double fst_eps = expcfg.value("weighted_norm", 0.05);
  bool fst_bwd = expcfg.value("with_backward", false);
  fst->add_option("--T", fsc.T, "window start");
  fst->add_option("--T-max", fsc.T_max, "window truncation");
  fst->add_option("--alpha", fsc.alpha, "X_T exponent in (1/4, 1/2)");
  fst->add_option("--tol", fsc.picard_tol, "Picard residual tolerance");
  fst->add_option("--max-iters", fsc.max_iters, "Picard iteration cap");
  fst->add_option("--num-times", fsc.num_times, "log-grid nodes");
  fst->add_option("--dt-backward", fsc.dt_backward, "backward sweep step");
  fst->add_option("--weighted-norm", fst_eps, "||(1+|x|) phi_+||_2 of the final data");
  fst->add_flag("--with-backward", fst_bwd, "also run the backward route");

  auto* fe = app.add_subcommand("forward-evolve", "split-step forward run");
  double fe_t = expcfg.value("t_end", 1.0), fe_dt = expcfg.value("dt", 1e-3);
  double fe_x0 = expcfg.value("x0", -10.0), fe_w = expcfg.value("width", 1.0);
  double fe_k0 = expcfg.value("momentum", -2.0);
  fe->add_option("--t-end", fe_t, "final time");
  fe->add_option("--dt", fe_dt, "time step");
  fe->add_option("--x0", fe_x0, "packet center");
  fe->add_option("--width", fe_w, "packet width");
  fe->add_option("--momentum", fe_k0, "packet momentum");

  CLI11_PARSE(app, argc, argv);

  try {
    validate(ModelParams{cfg.q, cfg.lambda});
    make_grid(cfg.n, cfg.L);
    if (fst->parsed()) validate(fsc);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return exit_invalid;
  }

  try {
    if (vi->parsed()) return run_verify_identities(cfg, vi_fields);
    if (pr->parsed()) return run_propagate(cfg, pr_t, pr_x0, pr_w, pr_k0, pr_dump);
    if (ds->parsed()) return run_decay_scan(cfg, ds_t0, ds_t1, ds_num, ds_x0, ds_w, ds_k0);
    if (ar->parsed()) return run_asymptotic_remainders(cfg, ar_t0, ar_t1, ar_num, ar_eps);
    if (fst->parsed()) return run_final_state(cfg, fsc, fst_eps, fst_bwd);
    if (fe->parsed()) return run_forward_evolve(cfg, fe_t, fe_dt, fe_x0, fe_w, fe_k0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_ok;
}
