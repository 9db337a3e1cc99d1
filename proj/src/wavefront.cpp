#include "dollard/wavefront.hpp"

#include "dollard/fft.hpp"

namespace dollard {

namespace {

double wrap_delta(double dy, double L) {
  while (dy > 0.5 * L) dy -= L;
  while (dy < -0.5 * L) dy += L;
  return dy;
}

void band_check(const GridState& g, const Vec& xi0, double lambda) {
  for (int a = 0; a < g.dim(); ++a) {
    if (std::abs(lambda * xi0[a]) > 0.5 * g.nyquist(a))
      throw BandError("probe carrier leaves the half-Nyquist band");
  }
  // The carrier must oscillate over at least four frequency cells, else the
  // window cannot separate the probe from a DC bump.
  const double lo = 4.0 * 2.0 * M_PI / g.extent(0);
  if (lambda * xi0.norm() < lo)
    throw BandError("probe carrier below four frequency cells");
}

GridState carrier_packet(const GridState& like, const Vec& x0, const Vec& xi0,
                         double lambda, double width) {
  GridState g = like;
  std::fill(g.data().begin(), g.data().end(), Cplx(0, 0));
  const double w2 = 2.0 * width * width;
  g.for_each_point([&](size_t flat, const Vec& x) {
    double r2 = 0.0, carrier = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
      const double dy = wrap_delta(x[a] - x0[a], g.extent(a));
      r2 += dy * dy;
      carrier += xi0[a] * dy;
    }
    g.data()[flat] = std::polar(std::exp(-r2 / w2), -lambda * carrier);
  });
  const double nrm = g.norm();
  if (!(nrm > 0)) throw std::domain_error("degenerate packet");
  g *= Cplx(1.0 / nrm, 0.0);
  return g;
}

}  // namespace

GridState make_probe(const GridState& like, const CoherentProbe& probe) {
  if (probe.xi0.norm() == 0) throw std::domain_error("probe requires xi0 != 0");
  return carrier_packet(like, probe.x0, probe.xi0, probe.lambda,
                        probe.width());
}

GridState make_coherent_state(const GridState& like, const Vec& x0,
                              const Vec& xi0, double lambda) {
  if (xi0.norm() == 0)
    throw std::domain_error("coherent state requires xi0 != 0");
  return carrier_packet(like, x0, xi0, lambda, 1.0 / std::sqrt(lambda));
}

GridState make_gaussian(const GridState& like, const Vec& x0, double width) {
  return carrier_packet(like, x0, Vec::Zero(like.dim()), 1.0, width);
}

Cplx probe_coefficient(const GridState& u, const CoherentProbe& probe) {
  GridState p = make_probe(u, probe);
  Cplx acc(0, 0);
  for (size_t i = 0; i < u.size(); ++i)
    acc += std::conj(p.data()[i]) * u.data()[i];
  return acc * u.cell_volume();
}

WFSample probe_decay(const GridState& u, const Vec& x0, const Vec& xi0,
                     const std::vector<double>& lambda_ladder,
                     const DetectorOptions& opt) {
  if (lambda_ladder.size() < 5)
    throw ConfigError("lambda ladder needs at least 5 rungs");
  for (size_t i = 2; i < lambda_ladder.size(); ++i) {
    const double r1 = lambda_ladder[i] / lambda_ladder[i - 1];
    const double r0 = lambda_ladder[i - 1] / lambda_ladder[i - 2];
    if (std::abs(r1 / r0 - 1.0) > 0.01)
      throw ConfigError("lambda ladder must be geometric");
  }
  for (double lam : lambda_ladder) band_check(u, xi0, lam);

  WFSample sample;
  sample.x0 = x0;
  sample.xi0 = xi0;
  sample.lambdas = lambda_ladder;
  bool any_above_floor = false;
  for (double lam : lambda_ladder) {
    const double mag =
        std::abs(probe_coefficient(u, CoherentProbe{x0, xi0, lam}));
    sample.magnitudes.push_back(mag);
    any_above_floor = any_above_floor || mag > 10.0 * opt.noise_floor;
  }
  if (!any_above_floor) {
    sample.fitted_exponent = -std::numeric_limits<double>::infinity();
    sample.verdict = "regular";
    return sample;
  }
  std::vector<double> clipped = sample.magnitudes;
  for (double& m : clipped) m = std::max(m, opt.noise_floor);
  sample.fitted_exponent = fit_loglog_slope(sample.lambdas, clipped).slope;
  if (sample.fitted_exponent <= opt.regular_threshold)
    sample.verdict = "regular";
  else if (sample.fitted_exponent >= opt.singular_threshold)
    sample.verdict = "singular";
  else
    sample.verdict = "inconclusive";
  return sample;
}

PhasePoint shift_map_apply(const ShiftMap& map, const PhasePoint& point) {
  if (map.sign != 1 && map.sign != -1)
    throw ConfigError("shift map sign must be +1 or -1");
  if (point.xi.norm() == 0)
    throw std::domain_error("shift map requires xi != 0");
  if (map.sigma == 0.0) return point;
  const Vec dir = double(map.sign) * point.xi.normalized();
  return PhasePoint{
      point.x + double(map.sign) * map.sigma * map.spec.sphere_gradient(dir),
      point.xi};
}

ShiftReport verify_shift_law(const SymbolModel& model, const PhasePoint& center,
                             double t, const GridState& like,
                             const PropagatorConfig& cfg,
                             const ShiftLawOptions& opt) {
  if (like.dim() != 1 || model.dim() != 1)
    throw ConfigError("the shift-law measurement is one-dimensional");
  if (!model.potential().is_homogeneous() ||
      std::abs(model.potential().beta() - 1.0) > 1e-12)
    throw ConfigError("the shift law needs a degree-1 homogeneous potential");
  if (t == 0.0) throw ConfigError("shift law requires t != 0");

  const double lambda = opt.probe_lambda;
  GridState u0 = make_coherent_state(like, center.x, center.xi, lambda);
  band_check(like, center.xi, lambda);

  EvolveStats stats;
  GridState w = evolve(u0, model, t, cfg, &stats);
  GridState v = apply_multiplier(w, MultiplierSpec::free_phase(like, t));

  ShiftMap map{t > 0 ? +1 : -1, -0.5 * t * t, model.potential()};
  const PhasePoint predicted = shift_map_apply(map, center);

  // Position sweep on a fixed physical lattice (refinement studies keep the
  // spacing constant while the grid resolution changes underneath).
  const double spacing = opt.center_spacing > 0 ? opt.center_spacing
                                                : like.dx(0);
  const double lo = predicted.x[0] - opt.center_halfwidth;
  const int n_centers = int(2.0 * opt.center_halfwidth / spacing) + 1;
  double best_mag = -1.0, best_x = predicted.x[0];
  for (int i = 0; i < n_centers; ++i) {
    Vec xc(1);
    xc << lo + i * spacing;
    const double mag =
        std::abs(probe_coefficient(v, CoherentProbe{xc, center.xi, lambda}));
    if (mag > best_mag) {
      best_mag = mag;
      best_x = xc[0];
    }
  }

  // xi localization: probe sweep in the label at the detected position,
  // stepping by an eighth of a frequency cell, with parabolic refinement of
  // the peak. (A raw spectral centroid is not usable here: the packet's
  // momentum spread sqrt(lambda) exceeds its carrier at these parameters,
  // while the probe overlap still peaks at the packet's phase-space center.)
  const double cell = 2.0 * M_PI / like.extent(0);
  const double label_step = cell / 8.0;
  const int n_xi = 33;  // covers +-2 frequency cells around xi0
  Vec xbest(1);
  xbest << best_x;
  std::vector<double> mags(n_xi);
  double xi_peak = center.xi[0];
  double mbest = -1.0;
  int ibest = 0;
  for (int i = 0; i < n_xi; ++i) {
    Vec xi_c(1);
    xi_c << center.xi[0] + (i - n_xi / 2) * label_step;
    mags[i] =
        std::abs(probe_coefficient(v, CoherentProbe{xbest, xi_c, lambda}));
    if (mags[i] > mbest) {
      mbest = mags[i];
      ibest = i;
      xi_peak = xi_c[0];
    }
  }
  double detected_label = xi_peak;
  if (ibest > 0 && ibest < n_xi - 1) {
    const double denom = mags[ibest - 1] - 2 * mags[ibest] + mags[ibest + 1];
    if (denom < 0)
      detected_label +=
          0.5 * (mags[ibest - 1] - mags[ibest + 1]) / denom * label_step;
  }

  ShiftReport report;
  report.detected = PhasePoint{Vec::Constant(1, best_x),
                               Vec::Constant(1, detected_label)};
  report.predicted = predicted;
  report.displacement_error = std::abs(best_x - predicted.x[0]);
  report.displacement_error_cells = report.displacement_error / spacing;
  report.xi_error = std::abs(detected_label - center.xi[0]);
  report.freq_cell = 2.0 * M_PI / like.extent(0);
  report.norm_loss = stats.norm_loss_fraction;
  report.pass_position = report.displacement_error_cells <= 3.0;
  report.pass_xi = report.xi_error <= report.freq_cell;
  return report;
}

SmoothingReport verify_smoothing(const SymbolModel& model,
                                 const GridState& like,
                                 const SmoothingOptions& opt,
                                 const DetectorOptions& det) {
  const PotentialSpec& spec = model.potential();
  if (!spec.is_homogeneous() || !(spec.beta() > 1.0 && spec.beta() < 1.5))
    throw ConfigError("smoothing needs a homogeneous spec with beta in (1,3/2)");
  if (!spec.gradient_nonvanishing())
    throw ConfigError("smoothing needs the gradient-nonvanishing flag");
  if (opt.sigma_ladder.empty())
    throw ConfigError("sigma ladder must not be empty");

  SmoothingReport report;
  const Vec origin = Vec::Zero(like.dim());
  GridState u0 = make_gaussian(like, origin, opt.gauss_width);
  GridState y = apply_multiplier(u0, MultiplierSpec::free_phase(like, opt.t));

  // Probe panel across the sigma ladder.
  report.all_regular = true;
  for (double sigma : opt.sigma_ladder) {
    GridState w = sigma == 0.0 ? y
                               : apply_multiplier(
                                     y, potential_multiplier(like, model, sigma));
    for (double px : opt.panel_x) {
      for (double pxi : opt.panel_xi) {
        Vec x0 = Vec::Constant(like.dim(), 0.0);
        x0[0] = px;
        Vec xi0 = Vec::Zero(like.dim());
        xi0[0] = pxi;
        WFSample s = probe_decay(w, x0, xi0, opt.probe_ladder, det);
        report.probes.push_back(
            {sigma, px, pxi, s.fitted_exponent, s.verdict});
        report.all_regular = report.all_regular && s.verdict == "regular";
      }
    }
  }

  // Lemma-11 ratios over translates, sigma rungs and weight orders, plus the
  // sigma = 0 baseline rows.
  const auto translates =
      linspace(-opt.translate_halfwidth, opt.translate_halfwidth,
               opt.n_translates);
  report.ratios_bounded = true;
  for (int N : opt.weight_orders) {
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    for (double x0 : translates) {
      Vec c = Vec::Zero(like.dim());
      c[0] = x0;
      GridState ut = make_gaussian(like, c, opt.gauss_width);
      for (double sigma : opt.sigma_ladder) {
        SmoothingNorms nm = smoothing_norms(ut, model, sigma, N);
        report.ratios.push_back({sigma, N, x0, nm.ratio, nm.s, false});
        rmin = std::min(rmin, nm.ratio);
        rmax = std::max(rmax, nm.ratio);
      }
      SmoothingNorms base = smoothing_norms(ut, model, 0.0, N);
      report.ratios.push_back({0.0, N, x0, base.ratio, base.s, true});
    }
    report.ratio_spread[N] = rmin > 0 ? rmax / rmin
                                      : std::numeric_limits<double>::infinity();
    report.ratios_bounded =
        report.ratios_bounded && report.ratio_spread[N] < opt.ratio_threshold;
  }
  return report;
}

}  // namespace dollard
