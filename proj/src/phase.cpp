#include "dollard/phase.hpp"

#include <cstring>

namespace dollard {

namespace {

std::string memo_key(double t, const Vec& xi) {
  std::string k(sizeof(double) * (1 + xi.size()), '\0');
  std::memcpy(k.data(), &t, sizeof(double));
  for (int i = 0; i < xi.size(); ++i)
    std::memcpy(k.data() + sizeof(double) * (1 + i), &xi[i], sizeof(double));
  return k;
}

}  // namespace

PhaseFunction::PhaseFunction(SymbolModel model, PhaseVariant variant,
                             double tol, double lambda)
    : model_(std::move(model)),
      variant_(variant),
      tol_(tol),
      lambda_(lambda),
      memo_(std::make_unique<Memo>()) {
  if (!(tol_ > 0)) throw ConfigError("phase tolerance must be positive");
  if (variant_ == PhaseVariant::PhiLambda && !(lambda_ >= 1.0))
    throw ConfigError("scaled phase requires lambda >= 1");
}

PhaseFunction::PhaseFunction(const PhaseFunction& o)
    : model_(o.model_),
      variant_(o.variant_),
      tol_(o.tol_),
      lambda_(o.lambda_),
      memo_(std::make_unique<Memo>()),
      memo_enabled_(o.memo_enabled_) {}

double PhaseFunction::potential_weight() const {
  switch (variant_) {
    case PhaseVariant::Psi: return 0.0;
    case PhaseVariant::Phi: return 1.0;
    case PhaseVariant::PhiLambda: return 1.0 / (lambda_ * lambda_);
  }
  return 0.0;
}

QuadratureOptions PhaseFunction::options_for(double t, const Vec& xi) const {
  QuadratureOptions opt;
  opt.abs_tol = tol_;
  const double mag = xi.norm();
  if (mag > 0 && potential_weight() != 0.0 &&
      model_.potential().is_homogeneous()) {
    const double r0 = model_.potential().blend_radius();
    opt.breakpoints = {r0 / (2.0 * mag), r0 / mag};
  }
  (void)t;
  return opt;
}

double PhaseFunction::integrand(double s, const Vec& xi, double refl) const {
  const Vec x = (refl * s) * xi;
  const double cv = potential_weight();
  double val = eval_kinetic(model_, x, xi);
  if (cv != 0.0) val += cv * model_.potential().long_range_value(x);
  return val;
}

double PhaseFunction::phase(double t, const Vec& xi) const {
  require_finite(t, "t");
  require_finite(xi, "xi");
  if (t == 0.0) return 0.0;

  std::string key;
  if (memo_enabled_) {
    key = memo_key(t, xi);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->cache.find(key);
    if (it != memo_->cache.end()) return it->second;
  }

  const double refl = t >= 0 ? 1.0 : -1.0;
  const double T = std::abs(t);
  const double value =
      refl * integrate_gk([&](double s) { return integrand(s, xi, refl); }, 0.0,
                          T, options_for(t, xi));
  if (memo_enabled_) {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->cache.emplace(std::move(key), value);
  }
  return value;
}

double PhaseFunction::phase_between(double t0, double t1, const Vec& xi) const {
  return phase(t1, xi) - phase(t0, xi);
}

Vec PhaseFunction::gradient(double t, const Vec& xi) const {
  require_finite(t, "t");
  require_finite(xi, "xi");
  const int d = model_.dim();
  if (t == 0.0) return Vec::Zero(d);
  const double refl = t >= 0 ? 1.0 : -1.0;
  const double T = std::abs(t);
  const double cv = potential_weight();
  auto f = [&](double s) -> Vec {
    const Vec x = (refl * s) * xi;
    Jet fb = model_.metric().bump(x, 1);
    Vec dpdx = 0.5 * xi.squaredNorm() * fb.grad;
    if (cv != 0.0) dpdx += cv * model_.potential().long_range(x, 1).grad;
    return s * dpdx + (refl * (1.0 + fb.value)) * xi;
  };
  return integrate_gk_vec(f, d, 0.0, T, options_for(t, xi));
}

Mat PhaseFunction::hessian(double t, const Vec& xi) const {
  const int d = model_.dim();
  if (t == 0.0) return Mat::Zero(d, d);
  const double refl = t >= 0 ? 1.0 : -1.0;
  const double T = std::abs(t);
  const double cv = potential_weight();
  auto f = [&](double s) -> Vec {
    const Vec x = (refl * s) * xi;
    Jet fb = model_.metric().bump(x, 2);
    Mat d2 = 0.5 * xi.squaredNorm() * fb.hess;
    if (cv != 0.0) d2 += cv * model_.potential().long_range(x, 2).hess;
    Mat h = s * s * d2 +
            refl * s *
                (fb.grad * xi.transpose() + xi * fb.grad.transpose()) +
            (1.0 + fb.value) * Mat::Identity(d, d);
    h *= refl;
    return Eigen::Map<const Vec>(h.data(), d * d);
  };
  Vec flat = integrate_gk_vec(f, d * d, 0.0, T, options_for(t, xi));
  return Eigen::Map<const Mat>(flat.data(), d, d);
}

double PhaseFunction::dt(double t, const Vec& xi) const {
  // d/dt phase = p_variant(t xi, xi), exactly.
  const Vec x = t * xi;
  double val = eval_kinetic(model_, x, xi);
  const double cv = potential_weight();
  if (cv != 0.0) val += cv * model_.potential().long_range_value(x);
  return val;
}

Vec PhaseFunction::dt_gradient(double t, const Vec& xi) const {
  const Vec x = t * xi;
  Jet fb = model_.metric().bump(x, 1);
  Vec dpdx = 0.5 * xi.squaredNorm() * fb.grad;
  const double cv = potential_weight();
  if (cv != 0.0) dpdx += cv * model_.potential().long_range(x, 1).grad;
  return t * dpdx + (1.0 + fb.value) * xi;
}

double PhaseFunction::minus_free_deriv(double t, const Vec& xi,
                                       const std::vector<int>& alpha) const {
  int order = 0;
  for (int a : alpha) order += a;
  if (order > 2)
    throw ConfigError("minus_free_deriv supports |alpha| <= 2");
  if (t == 0.0) return 0.0;
  const double refl = t >= 0 ? 1.0 : -1.0;
  const double T = std::abs(t);
  const double cv = potential_weight();
  int i = -1, j = -1;
  for (int k = 0; k < int(alpha.size()); ++k)
    for (int r = 0; r < alpha[k]; ++r) (i < 0 ? i : j) = k;

  auto f = [&](double s) -> double {
    const Vec x = (refl * s) * xi;
    Jet fb = model_.metric().bump(x, order);
    Jet vl = cv != 0.0 ? model_.potential().long_range(x, order)
                       : Jet::constant(0.0, model_.dim(), order);
    const double q = 0.5 * xi.squaredNorm();
    switch (order) {
      case 0:
        return refl * (q * fb.value + cv * vl.value);
      case 1:
        return refl * (refl * s * (q * fb.grad[i] + cv * vl.grad[i]) +
                       fb.value * xi[i]);
      default:
        return refl * (s * s * (q * fb.hess(i, j) + cv * vl.hess(i, j)) +
                       refl * s *
                           (fb.grad[i] * xi[j] + fb.grad[j] * xi[i]) +
                       fb.value * (i == j ? 1.0 : 0.0));
    }
  };
  return integrate_gk(f, 0.0, T, options_for(t, xi));
}

// ------------------------------------------------- homogeneous closed form --

double potential_ray_integral(const PotentialSpec& spec, double t,
                              const Vec& xi, double tol) {
  if (t == 0.0) return 0.0;
  const double refl = t >= 0 ? 1.0 : -1.0;
  const double T = std::abs(t);
  QuadratureOptions opt;
  opt.abs_tol = tol;
  const double mag = xi.norm();
  if (mag > 0 && spec.is_homogeneous()) {
    const double r0 = spec.blend_radius();
    opt.breakpoints = {r0 / (2.0 * mag), r0 / mag};
  }
  return refl * integrate_gk(
                    [&](double s) {
                      return spec.long_range_value((refl * s) * xi);
                    },
                    0.0, T, opt);
}

PhaseDecomposition homogeneous_decomposition(const PotentialSpec& spec,
                                             double t, const Vec& xi,
                                             double tol) {
  if (!spec.is_homogeneous())
    throw ConfigError("decomposition requires a homogeneous potential");
  if (t == 0.0) throw std::domain_error("decomposition requires t != 0");
  require_finite(xi, "xi");
  const double beta = spec.beta();
  const double refl = t >= 0 ? 1.0 : -1.0;
  const double T = std::abs(t);
  const double mag = xi.norm();
  const double r0m = std::max(1.0, spec.blend_radius());
  if (!(T * mag >= r0m))
    throw ConvergenceError(
        "outside the closed-form region |t||xi| >= max(1, r0); "
        "use the quadrature fallback");

  PhaseDecomposition out;
  out.sigma = std::pow(T, 1.0 + beta) / (1.0 + beta);
  const Vec dir = (refl / mag) * xi;  // sign(t) * xi^
  const double v_dir = spec.angular_profile(dir);
  out.leading = refl * out.sigma * std::pow(mag, beta) * v_dir;

  // R = sign(t) * int_0^{r0m/|xi|} [ V^L(s sign(t) xi) - (s|xi|)^beta v ] ds,
  // the integrand vanishing identically beyond the seam.
  QuadratureOptions opt;
  opt.abs_tol = tol;
  const double r0 = spec.blend_radius();
  opt.breakpoints = {r0 / (2.0 * mag), r0 / mag};
  out.remainder =
      refl * integrate_gk(
                 [&](double s) {
                   const Vec x = (refl * s) * xi;
                   return spec.long_range_value(x) -
                          std::pow(s * mag, beta) * v_dir;
                 },
                 0.0, r0m / mag, opt);

  out.correction = potential_ray_integral(spec, t, xi, tol) - out.leading;
  return out;
}

// ------------------------------------------------------------ Lemma-7 audit --

BoundReport verify_lemma7(const PhaseFunction& pf,
                          const std::vector<double>& t_grid,
                          const std::vector<double>& xi_mags, int max_order,
                          double ratio_threshold) {
  const int d = pf.model().dim();
  const double mu = pf.model().mu();
  std::vector<Vec> dirs;
  if (d == 1) {
    Vec u(1);
    u << 1.0;
    dirs.push_back(u);
    u << -1.0;
    dirs.push_back(u);
  } else {
    for (int k = 0; k < 4; ++k) {
      Vec u = Vec::Zero(d);
      const double th = 2 * M_PI * k / 4.0 + 0.2;
      u[0] = std::cos(th);
      u[1] = std::sin(th);
      dirs.push_back(u);
    }
  }

  BoundReport report;
  report.ratio_threshold = ratio_threshold;
  report.pass = true;
  for (double t : t_grid) {
    for (const auto& alpha : multi_indices(d, std::min(max_order, 2))) {
      int order = 0;
      for (int a : alpha) order += a;
      BoundRow row;
      row.t = t;
      row.alpha = alpha;
      row.expected_slope = 2.0 - mu - order;
      row.max_ratio = 0.0;
      std::vector<double> sup(xi_mags.size(), 0.0);
      for (size_t mi = 0; mi < xi_mags.size(); ++mi) {
        for (const auto& dir : dirs) {
          const Vec xi = xi_mags[mi] * dir;
          const double val = std::abs(pf.minus_free_deriv(t, xi, alpha));
          sup[mi] = std::max(sup[mi], val);
          const double bound =
              std::abs(t) * std::pow(jap(xi), row.expected_slope);
          row.max_ratio = std::max(row.max_ratio, val / bound);
        }
      }
      row.fitted_slope = fit_loglog_slope(xi_mags, sup, 1e-250).slope;
      row.pass = !(row.fitted_slope > row.expected_slope + 0.1) &&
                 row.max_ratio <= ratio_threshold;
      report.pass = report.pass && row.pass;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace dollard
