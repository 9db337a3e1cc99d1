#include "dollard/propagator.hpp"

#include "dollard/fft.hpp"

namespace dollard {

namespace {

void check_config(const GridState& like, const PropagatorConfig& cfg) {
  if (!(cfg.dt > 0)) throw ConfigError("time step must be positive");
  if (!(cfg.absorb_width >= 0 && cfg.absorb_width <= 0.2))
    throw ConfigError("absorbing layer must cover at most 20% per side");
  if (!(cfg.truncation_radius_frac > 0 && cfg.truncation_radius_frac < 1))
    throw ConfigError("truncation radius fraction must lie in (0,1)");
  (void)like;
}

double min_half_extent(const GridState& g) {
  double m = std::numeric_limits<double>::infinity();
  for (int a = 0; a < g.dim(); ++a) m = std::min(m, 0.5 * g.extent(a));
  return m;
}

// Smooth radial saturation: identity below R_tr, asymptote R_sat beyond.
double saturate_radius(double r, double r_tr, double r_sat) {
  if (r <= r_tr) return r;
  return r_tr + (r_sat - r_tr) * std::tanh((r - r_tr) / (r_sat - r_tr));
}

std::vector<double> absorber_table(const GridState& g,
                                   const PropagatorConfig& cfg) {
  std::vector<double> w(g.size(), 0.0);
  if (cfg.absorb_width <= 0 || cfg.absorb_strength <= 0) return w;
  g.for_each_point([&](size_t flat, const Vec& x) {
    double acc = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
      const double half = 0.5 * g.extent(a);
      const double start = (1.0 - 2.0 * cfg.absorb_width) * half;
      const double depth = std::abs(x[a]) - start;
      if (depth > 0) {
        const double s = depth / (half - start);
        acc += s * s * s;
      }
    }
    w[flat] = cfg.absorb_strength * acc;
  });
  return w;
}

}  // namespace

std::vector<double> truncated_potential_table(const GridState& like,
                                              const SymbolModel& model,
                                              const PropagatorConfig& cfg) {
  const double half = min_half_extent(like);
  const double r_tr = cfg.truncation_radius_frac * half;
  const double r_sat = 0.95 * half;
  std::vector<double> v(like.size(), 0.0);
  like.for_each_point([&](size_t flat, const Vec& x) {
    const double r = x.norm();
    Vec xe = x;
    if (r > r_tr && r > 0) xe = (saturate_radius(r, r_tr, r_sat) / r) * x;
    v[flat] = model.potential().long_range_value(xe) +
              model.potential().short_range_value(xe);
  });
  return v;
}

GridState evolve(const GridState& u0, const SymbolModel& model, double t,
                 const PropagatorConfig& cfg, EvolveStats* stats) {
  if (!model.metric().is_flat())
    throw ConfigError("grid evolution supports the flat metric only");
  check_config(u0, cfg);
  if (t == 0.0) {
    if (stats) *stats = {};
    return u0;
  }

  const long n_steps = std::max<long>(1, std::lround(std::abs(t) / cfg.dt));
  const double dt = t / double(n_steps);

  const auto vtab = truncated_potential_table(u0, model, cfg);
  double vmax = 0.0;
  for (double v : vtab) vmax = std::max(vmax, std::abs(v));
  if (std::abs(dt) * vmax > M_PI)
    throw ConfigError("dt * max|V| exceeds pi (potential phase would wrap)");

  const auto wtab = absorber_table(u0, cfg);
  // Potential (and absorber) factor for one full step.
  std::vector<Cplx> pot_factor(u0.size());
  for (size_t i = 0; i < u0.size(); ++i)
    pot_factor[i] =
        std::exp(Cplx(-std::abs(dt) * wtab[i], -dt * vtab[i]));

  // Kinetic phases for half and full steps.
  std::vector<Cplx> kin_half(u0.size()), kin_full(u0.size());
  u0.for_each_mode([&](size_t flat, const Vec& xi) {
    const double w = 0.5 * xi.squaredNorm();
    kin_half[flat] = std::polar(1.0, -0.5 * dt * w);
    kin_full[flat] = std::polar(1.0, -dt * w);
  });

  GridState u = u0;
  const double norm0 = u0.norm_sq();
  auto kinetic = [&](const std::vector<Cplx>& phase) {
    fft::forward(u.data(), u.shape());
    for (size_t i = 0; i < u.size(); ++i) u.data()[i] *= phase[i];
    fft::inverse(u.data(), u.shape());
  };

  kinetic(kin_half);
  for (long s = 0; s < n_steps; ++s) {
    for (size_t i = 0; i < u.size(); ++i) u.data()[i] *= pot_factor[i];
    kinetic(s + 1 < n_steps ? kin_full : kin_half);
  }

  const double loss = norm0 > 0 ? 1.0 - u.norm_sq() / norm0 : 0.0;
  if (stats) {
    stats->n_steps = n_steps;
    stats->norm_loss_fraction = loss;
  }
  if (cfg.strict && loss > 0.10)
    throw NormError("absorbing layer removed more than 10% of the mass");
  return u;
}

MultiplierSpec phase_multiplier(const GridState& like, const PhaseFunction& pf,
                                double t) {
  return MultiplierSpec::from_function(
      like, "phase", [&](const Vec& xi) { return pf.phase(t, xi); });
}

MultiplierSpec potential_multiplier(const GridState& like,
                                    const SymbolModel& model, double sigma) {
  return MultiplierSpec::from_function(
      like, "sigma_VL", [&](const Vec& xi) {
        return sigma * model.potential().long_range_value(xi);
      });
}

DollardConjugate dollard_conjugate(const GridState& u0, const SymbolModel& model,
                                   const PhaseFunction& phi, double t,
                                   const PropagatorConfig& cfg) {
  if (!model.potential().is_homogeneous())
    throw ConfigError("the conjugation identity needs a homogeneous spec");
  if (t == 0.0) throw ConfigError("conjugation requires t != 0");
  const PotentialSpec& spec = model.potential();
  const double beta = spec.beta();
  const double refl = t > 0 ? 1.0 : -1.0;
  const double sigma = std::pow(std::abs(t), 1.0 + beta) / (1.0 + beta);
  const double sigma_signed = refl * sigma;
  const double r0m = std::max(1.0, spec.blend_radius());

  GridState w = evolve(u0, model, t, cfg);

  GridState v_dollard = apply_multiplier(w, phase_multiplier(u0, phi, t));

  // Split route: e^{iF} e^{i sigma_signed V^L(refl D)} e^{itH_0}.
  GridState y = apply_multiplier(w, MultiplierSpec::free_phase(u0, t));
  MultiplierSpec vl = MultiplierSpec::from_function(
      u0, "sigma_VL", [&](const Vec& xi) {
        return sigma_signed * spec.long_range_value(refl * xi);
      });
  y = apply_multiplier(y, vl);
  MultiplierSpec f_mult = MultiplierSpec::from_function(
      u0, "F_correction", [&](const Vec& xi) {
        const double mag = xi.norm();
        const double vlref = spec.long_range_value(refl * xi);
        if (std::abs(t) * mag >= r0m) {
          PhaseDecomposition dec =
              homogeneous_decomposition(spec, t, xi, phi.tol());
          return dec.leading + dec.remainder - sigma_signed * vlref;
        }
        return potential_ray_integral(spec, t, xi, phi.tol()) -
               sigma_signed * vlref;
      });
  GridState v_split = apply_multiplier(y, f_mult);

  DollardConjugate out{std::move(v_dollard), std::move(v_split), 0.0, sigma};
  double diff = 0.0;
  for (size_t i = 0; i < u0.size(); ++i)
    diff += std::norm(out.dollard.data()[i] - out.split.data()[i]);
  diff = std::sqrt(diff * u0.cell_volume());
  const double base = u0.norm();
  out.discrepancy = base > 0 ? diff / base : diff;
  return out;
}

SmoothingNorms smoothing_norms(const GridState& u, const SymbolModel& model,
                               double sigma, int N,
                               double boundary_threshold) {
  if (N < 0) throw ConfigError("weight order N must be nonnegative");
  if (!model.potential().is_homogeneous())
    throw ConfigError("smoothing norms need a homogeneous spec");
  if (u.boundary_mass_fraction() > boundary_threshold)
    throw NormError("state touches the grid boundary; weighted norms unreliable");

  const double beta = model.potential().beta();
  SmoothingNorms out;
  out.s = (beta - 1.0) * N;

  GridState w = sigma == 0.0
                    ? u
                    : apply_multiplier(u, potential_multiplier(u, model, sigma));
  GridState g = w;
  g.for_each_point([&](size_t flat, const Vec& x) {
    g.data()[flat] *= std::pow(jap(x), -double(N));
  });
  out.weighted_sobolev = sobolev_norm(g, out.s);

  double acc = 0.0;
  u.for_each_point([&](size_t flat, const Vec& x) {
    acc += std::norm(u.data()[flat]) * std::pow(jap(x), 2.0 * N);
  });
  out.weighted_input = std::sqrt(acc * u.cell_volume());
  out.ratio = out.weighted_input > 0 ? out.weighted_sobolev / out.weighted_input
                                     : 0.0;
  return out;
}

}  // namespace dollard
