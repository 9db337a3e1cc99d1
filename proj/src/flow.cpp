#include "dollard/flow.hpp"

#include <Eigen/Dense>

namespace dollard {

namespace {

constexpr double kMinXi = 1e-3;  // asymptotic statements need xi_0 != 0

// `tol` in the flow interfaces is a target for the global state error at
// desk horizons; the embedded controller runs tighter per step.
OdeOptions controller_options(double tol) {
  OdeOptions opt;
  opt.rtol = opt.atol = std::max(tol * 0.01, 1e-13);
  return opt;
}

void flow_rhs(const SymbolModel& m, const FlowVariant& v, const Vec& x,
              const Vec& xi, Vec& xdot, Vec& xidot) {
  const double wv = v.potential_weight();
  if (m.metric().is_flat()) {
    xdot = xi;
    xidot = Vec::Zero(x.size());
  } else {
    Jet f = m.metric().bump(x, 1);
    if (1.0 + f.value <= 0.0)
      throw IntegrationError("metric lost positive definiteness", 0.0);
    xdot = (1.0 + f.value) * xi;
    xidot = -0.5 * xi.squaredNorm() * f.grad;
  }
  if (wv != 0.0) {
    xidot -= wv * m.potential().long_range(x, 1).grad;
    if (m.potential().short_family() != PotentialSpec::ShortFamily::Zero)
      xidot -= wv * m.potential().short_range(x, 1).grad;
  }
}

Vec pack(const PhasePoint& p) {
  Vec y(p.x.size() + p.xi.size());
  y << p.x, p.xi;
  return y;
}

PhasePoint unpack(const Vec& y) {
  const int d = int(y.size()) / 2;
  return PhasePoint{y.head(d), y.tail(d)};
}

// Extrapolates w_k = w_inf + A s_k^p sampled on a geometric ladder with
// ratio rho, fitting p from the increment ratios. exponent reported as p.
struct Extrapolated {
  Vec value;
  double exponent;
  double error;
  bool converged_early;
};

Extrapolated extrapolate_geometric(const std::vector<Vec>& w, double rho) {
  if (w.size() < 3)
    throw ConvergenceError("extrapolation ladder needs at least 3 rungs");
  const size_t K = w.size() - 1;
  const double scale = 1.0 + w[K].cwiseAbs().maxCoeff();
  const double floor = 1e-13 * scale;

  std::vector<double> r(K);
  for (size_t k = 0; k < K; ++k) r[k] = (w[k + 1] - w[k]).norm();
  if (r[K - 1] <= floor)
    return {w[K], -std::numeric_limits<double>::infinity(), r[K - 1], true};

  double psum = 0.0;
  int pn = 0;
  for (size_t k = (K >= 4 ? K - 4 : 0); k + 1 < K; ++k) {
    if (r[k] <= floor) continue;
    psum += std::log(r[k + 1] / r[k]) / std::log(rho);
    ++pn;
  }
  if (pn == 0)
    return {w[K], -std::numeric_limits<double>::infinity(), r[K - 1], true};
  const double p = psum / pn;
  if (p >= 0.0)
    throw ConvergenceError("non-converging tail (fitted exponent >= 0)");
  const double q = std::pow(rho, p);
  Vec value = w[K] + (w[K] - w[K - 1]) * (q / (1.0 - q));
  return {value, p, r[K - 1] * q / (1.0 - q), false};
}

}  // namespace

double flow_energy(const SymbolModel& m, const FlowVariant& v,
                   const PhasePoint& p) {
  double e = eval_kinetic(m, p.x, p.xi);
  const double wv = v.potential_weight();
  if (wv != 0.0)
    e += wv * (m.potential().long_range_value(p.x) +
               m.potential().short_range_value(p.x));
  return e;
}

Trajectory integrate_flow(const SymbolModel& m, const PhasePoint& start,
                          double t_end, const FlowVariant& variant, double tol,
                          const std::vector<double>& sample_times) {
  require_finite(start.x, "x0");
  require_finite(start.xi, "xi0");
  if (!(tol > 0)) throw ConfigError("integration tolerance must be positive");
  const int d = m.dim();
  if (start.x.size() != d || start.xi.size() != d)
    throw ConfigError("phase point dimension does not match the model");

  const double e0 = flow_energy(m, variant, start);
  Trajectory traj;
  traj.tol = tol;
  const bool record_steps = sample_times.empty();

  auto record = [&](double t, const Vec& y) {
    traj.times.push_back(t);
    traj.states.push_back(unpack(y));
  };

  Dopri5 solver(
      [&](double, const Vec& y, Vec& dydt) {
        PhasePoint p = unpack(y);
        Vec xd, xid;
        flow_rhs(m, variant, p.x, p.xi, xd, xid);
        dydt.resize(y.size());
        dydt << xd, xid;
      },
      controller_options(tol));

  record(0.0, pack(start));
  Vec yend = solver.solve(
      0.0, pack(start), t_end, sample_times,
      [&](double t, const Vec& y) { record(t, y); },
      [&](double t, const Vec& y) {
        const double drift = std::abs(flow_energy(m, variant, unpack(y)) - e0);
        traj.energy_drift = std::max(traj.energy_drift, drift);
        if (record_steps) record(t, y);
      });
  traj.t_final = t_end;
  traj.final_state = unpack(yend);
  traj.n_steps = solver.stats().n_accepted;
  return traj;
}

NontrappingFit check_nontrapping(const Trajectory& traj) {
  double t_span = 0.0;
  for (double t : traj.times) t_span = std::max(t_span, std::abs(t));
  if (t_span < 10.0)
    throw ConfigError("nontrapping check needs a trajectory spanning |t| >= 10");

  NontrappingFit fit;
  fit.asymptotic_speed = traj.final_state.xi.norm();

  // Linear escape rate from the tail samples, then the smallest offset C
  // making |x(t)| >= c|t| - C hold on every sample.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  const double t_lo = std::max(10.0, t_span / 4.0);
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const double at = std::abs(traj.times[i]);
    if (at < t_lo) continue;
    const double ax = traj.states[i].x.norm();
    sx += at; sy += ax; sxx += at * at; sxy += at * ax;
    ++n;
  }
  if (n >= 2 && n * sxx - sx * sx > 0)
    fit.c = std::max(0.0, (n * sxy - sx * sy) / (n * sxx - sx * sx));
  fit.C = 0.0;
  for (size_t i = 0; i < traj.times.size(); ++i)
    fit.C = std::max(fit.C, fit.c * std::abs(traj.times[i]) -
                                traj.states[i].x.norm());
  fit.pass = fit.c >= 0.1 * fit.asymptotic_speed && fit.c > 0.0;
  return fit;
}

AsymptoteSide compute_asymptote_side(const SymbolModel& m,
                                     const PhasePoint& start, int sign,
                                     const AsymptoteOptions& opt,
                                     FlowVariant::Kind flow_kind) {
  if (start.xi.norm() < kMinXi)
    throw ConfigError("asymptotic data requires |xi_0| >= 1e-3");
  if (sign != 1 && sign != -1) throw ConfigError("sign must be +1 or -1");

  double T0 = opt.T0 > 0 ? opt.T0 : 8.0 / start.xi.norm();
  int rungs = 0;
  while (T0 * std::pow(2.0, rungs) <= opt.T_max) ++rungs;
  if (rungs < 5) {
    T0 = opt.T_max / 32.0;
    rungs = 6;
  }
  std::vector<double> ladder;
  for (int k = 0; k < rungs; ++k) ladder.push_back(sign * T0 * std::pow(2.0, k));

  const FlowVariant variant = flow_kind == FlowVariant::Kind::Kinetic
                                  ? FlowVariant::kinetic()
                                  : FlowVariant::full();
  Trajectory traj =
      integrate_flow(m, start, ladder.back(), variant, opt.tol, ladder);
  if (opt.check_nontrapping) {
    NontrappingFit nt = check_nontrapping(traj);
    if (!nt.pass)
      throw ConvergenceError("trajectory fails the nontrapping bound");
  }

  PhaseFunction phase(m,
                      flow_kind == FlowVariant::Kind::Kinetic
                          ? PhaseVariant::Psi
                          : PhaseVariant::Phi,
                      std::min(opt.tol, 1e-12));
  std::vector<Vec> zs, xis;
  for (size_t i = 0; i < traj.times.size(); ++i) {
    if (traj.times[i] == 0.0) continue;
    const PhasePoint& p = traj.states[i];
    zs.push_back(p.x - phase.gradient(traj.times[i], p.xi));
    xis.push_back(p.xi);
  }

  Extrapolated ez = extrapolate_geometric(zs, 2.0);
  Extrapolated exi = extrapolate_geometric(xis, 2.0);
  AsymptoteSide side;
  side.x = ez.value;
  side.xi = exi.value;
  side.tail_exponent_x = -ez.exponent;
  side.tail_exponent_xi = -exi.exponent;
  side.error_estimate = ez.error + exi.error + opt.tol;
  if (side.xi.norm() < kMinXi)
    throw ConvergenceError("asymptotic momentum collapsed to zero");
  return side;
}

ScatteringData compute_asymptotes(const SymbolModel& m, const PhasePoint& start,
                                  const AsymptoteOptions& opt,
                                  FlowVariant::Kind flow_kind) {
  ScatteringData data;
  data.horizon = opt.T_max;
  data.tol = opt.tol;
  data.plus = compute_asymptote_side(m, start, +1, opt, flow_kind);
  if (opt.both_signs)
    data.minus = compute_asymptote_side(m, start, -1, opt, flow_kind);
  return data;
}

PhasePoint wave_map(const SymbolModel& m, const PhasePoint& point,
                    WaveMapDirection direction, int sign,
                    const WaveMapOptions& opt) {
  if (point.xi.norm() < kMinXi)
    throw ConfigError("wave map requires |xi| >= 1e-3");
  if (direction == WaveMapDirection::Inverse) {
    AsymptoteSide side = compute_asymptote_side(m, point, sign, opt.asym);
    return PhasePoint{side.x, side.xi};
  }

  const int d = m.dim();
  const Vec target = pack(point);
  auto F = [&](const Vec& w) -> Vec {
    AsymptoteSide side =
        compute_asymptote_side(m, unpack(w), sign, opt.asym);
    Vec out(2 * d);
    out << side.x - target.head(d), side.xi - target.tail(d);
    return out;
  };

  Vec w = target;  // the identity map is the right guess near infinity
  Vec f = F(w);
  double res = f.cwiseAbs().maxCoeff();
  for (int it = 0; it < opt.max_iterations && res > opt.tol; ++it) {
    Mat J(2 * d, 2 * d);
    for (int j = 0; j < 2 * d; ++j) {
      Vec wp = w;
      wp[j] += opt.fd_step;
      J.col(j) = (F(wp) - f) / opt.fd_step;
    }
    Vec step = J.partialPivLu().solve(-f);
    if (!step.allFinite())
      throw SolverError("singular shooting Jacobian", res);
    // Armijo backtracking on the residual norm.
    double s = 1.0;
    Vec w_new, f_new;
    double res_new = res;
    for (int halving = 0; halving < 8; ++halving) {
      w_new = w + s * step;
      f_new = F(w_new);
      res_new = f_new.cwiseAbs().maxCoeff();
      if (res_new < (1.0 - 1e-4 * s) * res) break;
      s *= 0.5;
    }
    if (res_new >= res)
      throw SolverError("shooting iteration stalled", res);
    w = w_new;
    f = f_new;
    res = res_new;
  }
  if (res > opt.tol) throw SolverError("shooting did not converge", res);
  return unpack(w);
}

HighEnergyResult high_energy_limit(const SymbolModel& m,
                                   const PhaseFunction& phi,
                                   const PhasePoint& start, double t,
                                   const std::vector<double>& lambda_ladder,
                                   double tol) {
  if (t == 0.0) throw ConfigError("high-energy limit requires t != 0");
  if (lambda_ladder.size() < 3)
    throw ConfigError("lambda ladder needs at least 3 rungs");
  if (lambda_ladder.back() < 256.0)
    throw ConfigError("lambda ladder must reach 2^8");
  if (phi.variant() != PhaseVariant::Phi)
    throw ConfigError("high-energy limit uses the long-range phase");
  if (start.xi.norm() < kMinXi)
    throw ConfigError("high-energy limit requires |xi_0| >= 1e-3");

  const double rho = lambda_ladder[1] / lambda_ladder[0];
  std::vector<Vec> ws, vs;
  for (double lam : lambda_ladder) {
    PhasePoint boosted{start.x, lam * start.xi};
    Trajectory traj =
        integrate_flow(m, boosted, t, FlowVariant::full(), tol, {t});
    const PhasePoint& end = traj.final_state;
    ws.push_back(end.x - phi.gradient(t, end.xi));
    vs.push_back(end.xi / lam);
  }
  Extrapolated ex = extrapolate_geometric(ws, rho);
  Extrapolated ev = extrapolate_geometric(vs, rho);

  HighEnergyResult res;
  res.limit = PhasePoint{ex.value, ev.value};
  res.rate_x = ex.exponent;
  res.rate_xi = ev.exponent;

  AsymptoteOptions aopt;
  aopt.tol = tol;
  AsymptoteSide ref =
      compute_asymptote_side(m, start, t > 0 ? +1 : -1, aopt);
  res.reference = PhasePoint{ref.x, ref.xi};
  res.combined_error = ex.error + ev.error + ref.error_estimate;
  res.discrepancy =
      std::max((res.limit.x - ref.x).cwiseAbs().maxCoeff(),
               (res.limit.xi - ref.xi).cwiseAbs().maxCoeff());
  res.consistent = res.discrepancy <= 5.0 * std::max(res.combined_error, 1e-12);
  return res;
}

Trajectory effective_hamiltonian_flow(const SymbolModel& m,
                                      const PhaseFunction& phi,
                                      const PhasePoint& start, double t_end,
                                      double tol,
                                      const std::vector<double>& sample_times) {
  if (phi.variant() != PhaseVariant::Phi)
    throw ConfigError("the effective Hamiltonian is built from Phi");
  const int d = m.dim();
  Trajectory traj;
  traj.tol = tol;
  const bool record_steps = sample_times.empty();

  Dopri5 solver(
      [&](double s, const Vec& y, Vec& dydt) {
        const Vec z = y.head(d), xi = y.tail(d);
        const Vec g = phi.gradient(s, xi);
        const Mat H = phi.hessian(s, xi);
        SymbolDerivs sd = symbol_derivs(m, z + g, xi, SymbolVariant::Full);
        dydt.resize(2 * d);
        dydt.head(d) = sd.dp_dxi + H * sd.dp_dx - phi.dt_gradient(s, xi);
        dydt.tail(d) = -sd.dp_dx;
      },
      controller_options(tol));

  auto record = [&](double t, const Vec& y) {
    traj.times.push_back(t);
    traj.states.push_back(unpack(y));
  };
  record(0.0, pack(start));
  Vec yend = solver.solve(0.0, pack(start), t_end, sample_times,
                          [&](double t, const Vec& y) { record(t, y); },
                          [&](double t, const Vec& y) {
                            if (record_steps) record(t, y);
                          });
  traj.t_final = t_end;
  traj.final_state = unpack(yend);
  traj.n_steps = solver.stats().n_accepted;
  return traj;
}

EstimateReport verify_flow_estimates(const SymbolModel& m,
                                     const PhasePoint& start, double T_max,
                                     double tol) {
  if (start.xi.norm() < kMinXi)
    throw ConfigError("estimate audit requires |xi_0| >= 1e-3");
  const double mu = m.mu();
  const double mu_prime = std::min(mu, m.nu() / 2.0);

  AsymptoteOptions aopt;
  aopt.T_max = T_max;
  aopt.tol = tol;
  AsymptoteSide ref = compute_asymptote_side(m, start, +1, aopt);

  const auto times = geomspace(std::max(10.0, T_max / 100.0), T_max, 25);
  Trajectory traj =
      integrate_flow(m, start, times.back(), FlowVariant::kinetic(), tol, times);
  PhaseFunction psi(m, PhaseVariant::Psi, std::min(tol, 1e-12));

  std::vector<double> eta_err, ballistic, z_err, ts;
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (t <= 0) continue;
    const PhasePoint& p = traj.states[i];
    ts.push_back(t);
    eta_err.push_back((p.xi - ref.xi).norm());
    ballistic.push_back((p.x - t * p.xi).norm());
    z_err.push_back((p.x - psi.gradient(t, p.xi) - ref.x).norm());
  }

  EstimateReport report;
  auto add = [&](const std::string& name, const std::vector<double>& vals,
                 double expected) {
    EstimateRow row;
    row.quantity = name;
    row.expected_slope = expected;
    row.fitted_slope = fit_loglog_slope(ts, vals, 1e-11).slope;
    row.pass = !(row.fitted_slope > expected + 0.15);
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  };
  add("eta_minus_xiplus", eta_err, -mu);
  add("y_minus_t_eta", ballistic, 1.0 - mu);
  add("z_minus_xplus", z_err, 1.0 - 2.0 * mu_prime);
  return report;
}

}  // namespace dollard
