#include "dollard/suites.hpp"

#include "dollard/wavefront.hpp"

#include <chrono>
#include <future>
#include <random>
#include <sstream>

namespace dollard {

namespace {

struct SuiteInfo {
  std::string name;
  std::string description;
  SuiteResult (*fn)(const ExperimentConfig&);
};

std::string fmt(double v) { return Csv::num(v); }

std::vector<PhasePoint> draw_seeds(const ExperimentConfig& cfg, int dim,
                                   int count) {
  std::mt19937_64 rng(uint64_t(cfg.rng_seed()));
  std::uniform_real_distribution<double> pos(-2.0, 2.0);
  std::uniform_real_distribution<double> mag(0.8, 1.6);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  std::vector<PhasePoint> seeds;
  for (int s = 0; s < count; ++s) {
    Vec x(dim), xi(dim);
    for (int a = 0; a < dim; ++a) x[a] = pos(rng);
    if (dim == 1) {
      xi[0] = mag(rng) * (rng() % 2 ? 1.0 : -1.0);
    } else {
      const double th = ang(rng), m = mag(rng);
      xi[0] = m * std::cos(th);
      xi[1] = m * std::sin(th);
      for (int a = 2; a < dim; ++a) xi[a] = 0.0;
    }
    seeds.push_back({x, xi});
  }
  return seeds;
}

CheckResult guarded(const std::string& name,
                    const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return CheckResult{name, "fail", std::string("exception: ") + e.what()};
  }
}

// ------------------------------------------------------------------ prop1 --

SuiteResult suite_prop1(const ExperimentConfig& cfg) {
  SuiteResult res;
  res.suite = "prop1_asymptotes";
  res.table = Csv({"seed", "t", "abs_z_minus_xplus", "fitted_exponent"});

  SymbolModel model = cfg.build_model();
  const double T_max = cfg.t_max();
  const double tol = cfg.flow_tol();
  const double mu = model.mu();
  const double mu_prime = std::min(mu, model.nu() / 2.0);
  const auto seeds = draw_seeds(cfg, model.dim(), cfg.n_seeds());

  for (int s = 0; s < int(seeds.size()); ++s) {
    const PhasePoint& seed = seeds[s];
    res.checks.push_back(guarded(
        "seed" + std::to_string(s) + "_rates", [&]() -> CheckResult {
          AsymptoteOptions aopt;
          aopt.T_max = T_max;
          aopt.tol = tol;
          AsymptoteSide side = compute_asymptote_side(model, seed, +1, aopt);

          const auto times = geomspace(1e2, T_max, 20);
          Trajectory traj = integrate_flow(model, seed, times.back(),
                                           FlowVariant::kinetic(), tol, times);
          PhaseFunction psi(model, PhaseVariant::Psi, 1e-12);
          std::vector<double> ts, eta_err, z_err;
          for (size_t i = 0; i < traj.times.size(); ++i) {
            const double t = traj.times[i];
            if (t <= 0) continue;
            const PhasePoint& p = traj.states[i];
            ts.push_back(t);
            eta_err.push_back((p.xi - side.xi).norm());
            const Vec z = p.x - psi.gradient(t, p.xi);
            z_err.push_back((z - side.x).norm());
          }
          const double eta_slope = fit_loglog_slope(ts, eta_err, 1e-11).slope;
          const double z_slope = fit_loglog_slope(ts, z_err, 1e-11).slope;
          for (size_t i = 0; i < ts.size(); ++i)
            res.table.add_row({std::to_string(s), fmt(ts[i]), fmt(z_err[i]),
                               fmt(z_slope)});
          const double eta_bound = -mu + 0.15;
          const double z_bound = 1.0 - 2.0 * mu_prime + 0.15;
          const bool ok = !(eta_slope > eta_bound) && !(z_slope > z_bound);
          std::ostringstream detail;
          detail << "eta slope " << eta_slope << " (bound " << eta_bound
                 << "), z slope " << z_slope << " (bound " << z_bound << ")";
          return CheckResult{"seed" + std::to_string(s) + "_rates",
                             ok ? "pass" : "fail", detail.str()};
        }));
  }
  return res;
}

// ------------------------------------------------------------------- thm6 --

SuiteResult suite_thm6(const ExperimentConfig& cfg) {
  SuiteResult res;
  res.suite = "thm6_highenergy";
  res.table = Csv({"seed", "lambda_max", "component", "limit", "reference",
                   "abs_diff"});

  SymbolModel model = cfg.build_model();
  const double tol = cfg.flow_tol();
  const double t = cfg.map.number_or("flow.t", 1.0);
  const double tolerance = cfg.map.number_or("suite.tolerance", 1e-3);
  const double lam_min = cfg.map.number_or("flow.lambda_min", 32.0);
  const double lam_max = cfg.map.number_or("flow.lambda_max", 1024.0);
  std::vector<double> ladder;
  for (double lam = lam_min; lam <= lam_max * 1.0001; lam *= 2.0)
    ladder.push_back(lam);

  PhaseFunction phi(model, PhaseVariant::Phi, 1e-12);
  const auto seeds = draw_seeds(cfg, model.dim(), cfg.n_seeds());
  for (int s = 0; s < int(seeds.size()); ++s) {
    res.checks.push_back(guarded(
        "seed" + std::to_string(s) + "_limit", [&]() -> CheckResult {
          HighEnergyResult h =
              high_energy_limit(model, phi, seeds[s], t, ladder, tol);
          double max_diff = 0.0;
          for (int a = 0; a < model.dim(); ++a) {
            const double dx = std::abs(h.limit.x[a] - h.reference.x[a]);
            const double dxi = std::abs(h.limit.xi[a] - h.reference.xi[a]);
            max_diff = std::max({max_diff, dx, dxi});
            res.table.add_row({std::to_string(s), fmt(lam_max),
                               "x" + std::to_string(a), fmt(h.limit.x[a]),
                               fmt(h.reference.x[a]), fmt(dx)});
            res.table.add_row({std::to_string(s), fmt(lam_max),
                               "xi" + std::to_string(a), fmt(h.limit.xi[a]),
                               fmt(h.reference.xi[a]), fmt(dxi)});
          }
          std::ostringstream detail;
          detail << "max component diff " << max_diff << " (tolerance "
                 << tolerance << "), flagged_consistent=" << h.consistent;
          return CheckResult{"seed" + std::to_string(s) + "_limit",
                             max_diff <= tolerance ? "pass" : "fail",
                             detail.str()};
        }));
  }
  return res;
}

// ----------------------------------------------------------------- lemma7 --

SuiteResult suite_lemma7(const ExperimentConfig& cfg) {
  SuiteResult res;
  res.suite = "lemma7_bounds";
  res.table = Csv({"t", "alpha", "fitted_slope", "expected_slope", "max_ratio",
                   "pass"});

  SymbolModel model = cfg.build_model();
  PhaseFunction phi(model, PhaseVariant::Phi, 1e-12);
  const auto t_grid = cfg.map.array_or("suite.t_grid", {-2.0, -0.5, 0.5, 2.0});
  const int max_order = int(cfg.map.integer_or("suite.max_order", 1));
  const double ratio_threshold =
      cfg.map.number_or("suite.ratio_threshold", 50.0);
  const auto mags = geomspace(cfg.map.number_or("suite.xi_min", 1.0),
                              cfg.map.number_or("suite.xi_max", 1e3),
                              int(cfg.map.integer_or("suite.xi_points", 25)));

  res.checks.push_back(guarded("lemma7_slopes", [&]() -> CheckResult {
    BoundReport report =
        verify_lemma7(phi, t_grid, mags, max_order, ratio_threshold);
    for (const auto& row : report.rows) {
      std::string alpha;
      for (int a : row.alpha) alpha += std::to_string(a);
      res.table.add_row({fmt(row.t), alpha, fmt(row.fitted_slope),
                         fmt(row.expected_slope), fmt(row.max_ratio),
                         row.pass ? "1" : "0"});
    }
    std::ostringstream detail;
    detail << report.rows.size()
           << " rows; bound = 2-mu-|alpha| + 0.1 in the |xi| slope, ratio cap "
           << ratio_threshold;
    return CheckResult{"lemma7_slopes", report.pass ? "pass" : "fail",
                       detail.str()};
  }));
  return res;
}

// ----------------------------------------------------------------- lemma8 --

SuiteResult suite_lemma8(const ExperimentConfig& cfg) {
  SuiteResult res;
  res.suite = "lemma8_consistency";
  res.table = Csv({"seed", "t_end", "max_abs_diff", "bound"});

  SymbolModel model = cfg.build_model();
  const double tol = cfg.map.number_or("flow.tol", 1e-9);
  const double bound = 10.0 * tol;
  const double t_end = cfg.map.number_or("flow.t", 4.0);
  PhaseFunction phi(model, PhaseVariant::Phi, 1e-13);
  const auto seeds = draw_seeds(cfg, model.dim(), cfg.n_seeds());

  for (int s = 0; s < int(seeds.size()); ++s) {
    for (double dir : {+1.0, -1.0}) {
      const double T = dir * t_end;
      res.checks.push_back(guarded(
          "seed" + std::to_string(s) + (dir > 0 ? "_fwd" : "_bwd"),
          [&, s, T]() -> CheckResult {
            std::vector<double> samples;
            for (int k = 1; k <= 8; ++k) samples.push_back(T * k / 8.0);
            Trajectory full = integrate_flow(model, seeds[s], T,
                                             FlowVariant::full(), tol, samples);
            Trajectory eff = effective_hamiltonian_flow(model, phi, seeds[s],
                                                        T, tol, samples);
            double max_diff = 0.0;
            for (size_t i = 0; i < samples.size(); ++i) {
              const double t = full.times[i];
              const Vec zA =
                  full.states[i].x - phi.gradient(t, full.states[i].xi);
              const Vec dz = zA - eff.states[i].x;
              const Vec dxi = full.states[i].xi - eff.states[i].xi;
              max_diff = std::max(
                  {max_diff, dz.cwiseAbs().maxCoeff(),
                   dxi.cwiseAbs().maxCoeff()});
            }
            res.table.add_row({std::to_string(s), fmt(T), fmt(max_diff),
                               fmt(bound)});
            std::ostringstream detail;
            detail << "max |route difference| " << max_diff << " <= 10*tol = "
                   << bound;
            return CheckResult{
                "seed" + std::to_string(s) + (T > 0 ? "_fwd" : "_bwd"),
                max_diff <= bound ? "pass" : "fail", detail.str()};
          }));
    }
  }
  return res;
}

// ------------------------------------------------------------------- thm4 --

SuiteResult suite_thm4(const ExperimentConfig& cfg) {
  SuiteResult res;
  res.suite = "thm4_shift";
  res.table = Csv({"n", "detected_x", "predicted_x", "error_cells",
                   "xi_error", "freq_cell", "norm_loss"});

  SymbolModel model = cfg.build_model();
  const double t = cfg.map.number_or("grid.t", 1.0);
  const int n = int(cfg.map.integer_or("grid.n", 4096));
  const double L = cfg.map.number_or("grid.extent", 160.0);
  PhasePoint center{Vec::Constant(1, cfg.map.number_or("detector.x0", 0.0)),
                    Vec::Constant(1, cfg.map.number_or("detector.xi0", 0.048))};
  ShiftLawOptions opt;
  opt.probe_lambda = cfg.map.number_or("detector.probe_lambda", 256.0);
  opt.center_spacing = L / n;  // fixed physical lattice for both resolutions
  PropagatorConfig pcfg = cfg.propagator_config();

  double err_coarse = 0.0, err_fine = 0.0;
  res.checks.push_back(guarded("shift_displacement", [&]() -> CheckResult {
    GridState like({n}, {L});
    ShiftReport rep = verify_shift_law(model, center, t, like, pcfg, opt);
    err_coarse = rep.displacement_error;
    res.table.add_row({std::to_string(n), fmt(rep.detected.x[0]),
                       fmt(rep.predicted.x[0]),
                       fmt(rep.displacement_error_cells), fmt(rep.xi_error),
                       fmt(rep.freq_cell), fmt(rep.norm_loss)});
    std::ostringstream detail;
    detail << "displacement error " << rep.displacement_error_cells
           << " cells (<= 3), xi error " << rep.xi_error
           << " (<= one frequency cell " << rep.freq_cell << ")";
    return CheckResult{"shift_displacement",
                       rep.pass_position && rep.pass_xi ? "pass" : "fail",
                       detail.str()};
  }));
  res.checks.push_back(guarded("shift_refinement", [&]() -> CheckResult {
    GridState fine({2 * n}, {L});
    PropagatorConfig pf = pcfg;
    ShiftReport rep = verify_shift_law(model, center, t, fine, pf, opt);
    err_fine = rep.displacement_error;
    res.table.add_row({std::to_string(2 * n), fmt(rep.detected.x[0]),
                       fmt(rep.predicted.x[0]),
                       fmt(rep.displacement_error / (L / n)), fmt(rep.xi_error),
                       fmt(rep.freq_cell), fmt(rep.norm_loss)});
    std::ostringstream detail;
    detail << "error " << err_fine << " at 2n vs " << err_coarse
           << " at n (must not increase)";
    return CheckResult{"shift_refinement",
                       err_fine <= err_coarse ? "pass" : "fail", detail.str()};
  }));
  return res;
}

// ------------------------------------------------------------------- thm5 --

SuiteResult suite_thm5(const ExperimentConfig& cfg) {
  SuiteResult res;
  res.suite = "thm5_smoothing";
  res.table = Csv({"kind", "sigma", "N_or_xi", "x0", "value", "verdict"});

  SymbolModel model = cfg.build_model();
  const double beta = model.potential().beta();
  const double sigma_star = 1.0 / (1.0 + beta);  // sigma(t=1)
  SmoothingOptions opt;
  opt.sigma_ladder = cfg.map.array_or(
      "suite.sigma_ladder", {0.1, 0.2, 0.3, 0.4, sigma_star});
  opt.t = cfg.map.number_or("grid.t", 1.0);
  opt.n_translates = int(cfg.map.integer_or("suite.n_translates", 10));
  opt.translate_halfwidth =
      cfg.map.number_or("suite.translate_halfwidth", 2.0);
  opt.ratio_threshold = cfg.map.number_or("suite.ratio_threshold", 1e2);
  DetectorOptions det;
  det.regular_threshold = cfg.map.number_or("detector.regular_threshold", -3.0);
  det.singular_threshold =
      cfg.map.number_or("detector.singular_threshold", -1.0);

  GridState like = cfg.make_grid();
  res.checks.push_back(guarded("smoothing_report", [&]() -> CheckResult {
    SmoothingReport rep = verify_smoothing(model, like, opt, det);
    for (const auto& r : rep.ratios)
      res.table.add_row({r.baseline ? "ratio_baseline" : "ratio", fmt(r.sigma),
                         std::to_string(r.N), fmt(r.x0), fmt(r.ratio), ""});
    for (const auto& p : rep.probes)
      res.table.add_row({"probe", fmt(p.sigma), fmt(p.xi0), fmt(p.x0),
                         fmt(p.exponent), p.verdict});
    std::ostringstream detail;
    detail << "panel verdicts all regular: " << rep.all_regular
           << "; ratio max/min per N:";
    for (const auto& [N, spread] : rep.ratio_spread)
      detail << " N=" << N << " (s=" << fmt((beta - 1.0) * N) << "): " << spread
             << ",";
    detail << " threshold " << opt.ratio_threshold;
    const bool ok = rep.all_regular && rep.ratios_bounded;
    return CheckResult{"smoothing_report", ok ? "pass" : "fail", detail.str()};
  }));
  return res;
}

// ------------------------------------------------------------------ audit --

SuiteResult suite_audit(const ExperimentConfig& cfg) {
  SuiteResult res;
  res.suite = "assumption_audit";
  res.table =
      Csv({"part", "alpha", "fitted_slope", "expected_slope", "c_alpha",
           "pass"});

  res.checks.push_back(guarded("exponent_ranges", [&]() -> CheckResult {
    SymbolModel model = cfg.build_model();
    const double mu = model.mu();
    std::ostringstream detail;
    detail << "mu=" << mu;
    if (!(mu > 0.5 && mu <= 1.0))
      return CheckResult{"exponent_ranges", "fail",
                         detail.str() + " outside (1/2, 1]"};
    if (model.potential().short_family() != PotentialSpec::ShortFamily::Zero) {
      detail << ", nu=" << model.nu();
      if (!(model.nu() > 1.0))
        return CheckResult{"exponent_ranges", "fail",
                           detail.str() + " requires nu > 1"};
    }
    if (model.potential().is_homogeneous()) {
      const double beta = model.potential().beta();
      detail << ", beta=" << beta;
      if (!(beta >= 1.0 && beta < 1.5))
        return CheckResult{"exponent_ranges", "fail",
                           detail.str() + " outside [1, 3/2)"};
    }
    return CheckResult{"exponent_ranges", "pass", detail.str()};
  }));

  res.checks.push_back(guarded("decay_bounds", [&]() -> CheckResult {
    SymbolModel model = cfg.build_model();
    DecaySampleBox box;
    box.r_min = cfg.map.number_or("suite.r_min", 1.0);
    box.r_max = cfg.map.number_or("suite.r_max", 1e3);
    box.max_order = int(cfg.map.integer_or("suite.max_order", 3));
    DecayReport rep = verify_decay(model, box);
    for (const auto& row : rep.rows) {
      std::string alpha;
      for (int a : row.alpha) alpha += std::to_string(a);
      res.table.add_row({row.part, alpha, fmt(row.fitted_slope),
                         fmt(row.expected_slope), fmt(row.c_alpha),
                         row.pass ? "1" : "0"});
    }
    return CheckResult{"decay_bounds", rep.pass ? "pass" : "fail",
                       std::to_string(rep.rows.size()) +
                           " multi-indices audited, slope margin 0.1"};
  }));

  res.checks.push_back(guarded("positive_definiteness", [&]() -> CheckResult {
    SymbolModel model = cfg.build_model();
    double min_eig = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(uint64_t(cfg.rng_seed()));
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
      Vec x(model.dim());
      for (int a = 0; a < model.dim(); ++a) x[a] = u(rng);
      min_eig = std::min(min_eig, model.metric().min_eigenvalue(x));
    }
    return CheckResult{"positive_definiteness",
                       min_eig > 0 ? "pass" : "fail",
                       "min sampled eigenvalue " + fmt(min_eig)};
  }));

  res.checks.push_back(guarded("homogeneity_identity", [&]() -> CheckResult {
    SymbolModel model = cfg.build_model();
    if (!model.potential().is_homogeneous())
      return CheckResult{"homogeneity_identity", "pass",
                         "no homogeneous part; vacuous"};
    const PotentialSpec& spec = model.potential();
    const double beta = spec.beta();
    const double r_base = std::max(1.0, spec.blend_radius());
    double worst = 0.0;
    std::mt19937_64 rng(uint64_t(cfg.rng_seed()) + 1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      Vec dir(model.dim());
      for (int a = 0; a < model.dim(); ++a) dir[a] = u(rng);
      if (dir.norm() < 1e-6) continue;
      dir.normalize();
      const Vec x = r_base * 1.000001 * dir;
      const double vx = spec.long_range_value(x);
      for (double lam : {2.0, 4.0, 8.0}) {
        const double vl = spec.long_range_value(lam * x);
        const double rel =
            std::abs(vl - std::pow(lam, beta) * vx) /
            std::max(1.0, std::abs(vl));
        worst = std::max(worst, rel);
      }
    }
    return CheckResult{"homogeneity_identity", worst <= 1e-12 ? "pass" : "fail",
                       "worst relative defect " + fmt(worst) +
                           " (tolerance 1e-12)"};
  }));

  res.checks.push_back(guarded("sphere_gradient", [&]() -> CheckResult {
    SymbolModel model = cfg.build_model();
    if (!model.potential().is_homogeneous() ||
        !model.potential().gradient_nonvanishing())
      return CheckResult{"sphere_gradient", "pass", "flag not set; vacuous"};
    const double m = model.potential().min_sphere_gradient();
    return CheckResult{"sphere_gradient", m > 0 ? "pass" : "fail",
                       "min |grad V^L| on the sphere " + fmt(m)};
  }));

  return res;
}

const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> suites{
      {"prop1_asymptotes",
       "asymptote extraction and propagation-rate slopes for the kinetic flow",
       &suite_prop1},
      {"thm6_highenergy",
       "high-energy lambda-ladder limits against scattering asymptotes",
       &suite_thm6},
      {"lemma7_bounds",
       "phase-minus-free derivative growth slopes in |xi|", &suite_lemma7},
      {"lemma8_consistency",
       "effective-Hamiltonian flow against the conjugated full flow",
       &suite_lemma8},
      {"thm4_shift",
       "quadratic-in-time wave-front displacement on the grid (d=1)",
       &suite_thm4},
      {"thm5_smoothing",
       "multiplier smoothing ratios and regular probe panels", &suite_thm5},
      {"assumption_audit",
       "decay bounds, positivity, homogeneity and exponent ranges",
       &suite_audit},
  };
  return suites;
}

}  // namespace

std::vector<std::string> list_suites() {
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return true;
  return false;
}

std::string suite_description(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s.description;
  throw ConfigError("unknown suite " + name);
}

SuiteResult run_suite(const std::string& name, const ExperimentConfig& cfg) {
  for (const auto& s : registry()) {
    if (s.name != name) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteResult res = s.fn(cfg);
    res.config_hash = cfg.hash();
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!cfg.out_dir().empty()) emit_report(res, cfg.out_dir());
    return res;
  }
  throw ConfigError("unknown suite " + name);
}

std::string reference_config_text(const std::string& suite) {
  if (suite == "prop1_asymptotes")
    return R"(# metric bump, no potential
[model]
dimension = 2
[model.metric]
family = "isotropic_bump"
epsilon = 0.2
mu = 0.75
[flow]
seeds = 5
t_max = 1.0e4
tol = 1.0e-10
rng_seed = 20260810
)";
  if (suite == "thm6_highenergy")
    return R"(# metric bump plus degree-1 homogeneous long-range part
[model]
dimension = 2
[model.metric]
family = "isotropic_bump"
epsilon = 0.2
mu = 0.75
[model.potential.long_range]
family = "homogeneous"
beta = 1.0
r0 = 1.0
profile_cos = [1.0]
[flow]
seeds = 5
t = 1.0
tol = 1.0e-10
lambda_min = 32
lambda_max = 1024
rng_seed = 20260810
[suite]
tolerance = 1.0e-3
)";
  if (suite == "lemma7_bounds")
    return R"(# flat metric, degree-1 homogeneous potential (mu = 1)
[model]
dimension = 1
[model.potential.long_range]
family = "homogeneous"
beta = 1.0
r0 = 1.0
profile_cos = [1.0]
[suite]
t_grid = [-2.0, -0.5, 0.5, 2.0]
max_order = 1
ratio_threshold = 50.0
xi_min = 1.0
xi_max = 1.0e3
xi_points = 25
)";
  if (suite == "lemma8_consistency")
    return R"(# bump metric, beta = 1.25 homogeneous part, gaussian short range
[model]
dimension = 2
[model.metric]
family = "isotropic_bump"
epsilon = 0.15
mu = 0.8
[model.potential.long_range]
family = "homogeneous"
beta = 1.25
r0 = 1.0
profile_cos = [1.0]
[model.potential.short_range]
family = "gaussian"
amplitude = 0.4
width = 1.5
[flow]
seeds = 5
t = 4.0
tol = 1.0e-9
rng_seed = 20260810
)";
  if (suite == "thm4_shift")
    return R"(# flat metric, V = blended |x| on a d=1 grid
[model]
dimension = 1
[model.potential.long_range]
family = "homogeneous"
beta = 1.0
r0 = 1.0
profile_cos = [1.0]
[grid]
dimension = 1
n = 4096
extent = 160.0
dt = 0.001953125
t = 1.0
absorb_width = 0.1
absorb_strength = 5.0
truncation_frac = 0.8
[detector]
probe_lambda = 256.0
x0 = 0.0
xi0 = 0.048
)";
  if (suite == "thm5_smoothing")
    return R"(# flat metric, beta = 1.25 homogeneous potential
[model]
dimension = 1
[model.potential.long_range]
family = "homogeneous"
beta = 1.25
r0 = 1.0
profile_cos = [1.0]
gradient_nonvanishing = true
[grid]
dimension = 1
n = 2048
extent = 32.0
t = 1.0
[suite]
n_translates = 10
translate_halfwidth = 2.0
ratio_threshold = 100.0
[detector]
regular_threshold = -3.0
singular_threshold = -1.0
)";
  if (suite == "assumption_audit")
    return R"(# defaults audit a bump metric with a homogeneous tail
[model]
dimension = 2
[model.metric]
family = "isotropic_bump"
epsilon = 0.2
mu = 0.75
[model.potential.long_range]
family = "homogeneous"
beta = 1.25
r0 = 1.0
profile_cos = [1.0]
gradient_nonvanishing = true
[suite]
r_min = 1.0
r_max = 1.0e3
max_order = 3
)";
  throw ConfigError("unknown suite " + suite);
}

}  // namespace dollard
