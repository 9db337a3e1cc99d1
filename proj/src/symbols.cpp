#include "dollard/symbols.hpp"

#include <Eigen/Eigenvalues>

namespace dollard {

namespace {

// C^3 polynomial step: 0 for w<=0, 1 for w>=1, h(w)=35w^4-84w^5+70w^6-20w^7.
Jet smoothstep7(const Jet& w) {
  // Horner on jets: h = w^4 (35 - 84w + 70w^2 - 20w^3)
  Jet acc = w * (-20.0) + 70.0;
  acc = acc * w + (-84.0);
  acc = acc * w + 35.0;
  Jet w2 = w * w;
  return w2 * w2 * acc;
}

Vec unit_from_angle(double theta) {
  Vec u(2);
  u << std::cos(theta), std::sin(theta);
  return u;
}

}  // namespace

// ----------------------------------------------------------------- metric --

MetricField MetricField::flat(int dim) {
  if (dim < 1) throw ConfigError("metric dimension must be >= 1");
  return MetricField(Family::Flat, dim, 0.0, 1.0);
}

MetricField MetricField::isotropic_bump(int dim, double eps, double mu) {
  if (dim < 1) throw ConfigError("metric dimension must be >= 1");
  if (!(mu > 0.5 && mu <= 1.0))
    throw ConfigError("metric decay exponent mu must lie in (1/2, 1]");
  if (eps <= -1.0)
    throw ConfigError("bump amplitude eps <= -1 breaks positive definiteness");
  return MetricField(Family::IsotropicBump, dim, eps, mu);
}

Jet MetricField::bump(const Vec& x, int order) const {
  if (family_ == Family::Flat) return Jet::constant(0.0, dim_, order);
  // eps * (1 + |x|^2)^{-mu/2}
  Jet s = Jet::constant(1.0, dim_, order);
  for (int i = 0; i < dim_; ++i) {
    Jet xi = Jet::variable(x, i, order);
    s = s + xi * xi;
  }
  return jet_pow(s, -mu_ / 2.0) * eps_;
}

Jet MetricField::component(const Vec& x, int m, int n, int order) const {
  if (m != n) return Jet::constant(0.0, dim_, order);
  Jet f = bump(x, order);
  return f + 1.0;
}

Mat MetricField::coeff(const Vec& x) const {
  require_finite(x, "metric argument");
  Mat a = Mat::Identity(dim_, dim_);
  if (family_ == Family::IsotropicBump)
    a *= 1.0 + eps_ * std::pow(1.0 + x.squaredNorm(), -mu_ / 2.0);
  return a;
}

double MetricField::min_eigenvalue(const Vec& x) const {
  Eigen::SelfAdjointEigenSolver<Mat> es(coeff(x));
  return es.eigenvalues().minCoeff();
}

// -------------------------------------------------------------- potential --

PotentialSpec PotentialSpec::zero(int dim) {
  PotentialSpec p(dim);
  return p;
}

PotentialSpec PotentialSpec::homogeneous(int dim, const Homogeneous& h,
                                         bool gradient_nonvanishing) {
  if (!(h.beta >= 1.0 && h.beta < 1.5))
    throw ConfigError("homogeneity degree beta must lie in [1, 3/2)");
  if (h.r0 <= 0) throw ConfigError("blend radius r0 must be positive");
  if (dim > 2 && (h.cos_coeffs.size() > 1 || !h.sin_coeffs.empty()))
    throw ConfigError("angular profiles are supported for d <= 2 only");
  if (dim == 1 && !h.sin_coeffs.empty())
    throw ConfigError("sin coefficients are meaningless in d = 1");
  PotentialSpec p(dim);
  p.long_family_ = LongFamily::Homogeneous;
  p.hom_ = h;
  p.mu_ = 2.0 - h.beta;
  p.grad_nonvanishing_ = gradient_nonvanishing;
  p.set_core_coeffs();
  if (gradient_nonvanishing && p.min_sphere_gradient() <= 0)
    throw ConfigError(
        "gradient-nonvanishing flag set but |grad V^L| vanishes on the sphere");
  return p;
}

PotentialSpec PotentialSpec::algebraic_long(int dim, double amplitude,
                                            double mu) {
  if (!(mu > 0.5 && mu <= 1.0))
    throw ConfigError("long-range decay exponent mu must lie in (1/2, 1]");
  PotentialSpec p(dim);
  p.long_family_ = LongFamily::Algebraic;
  p.long_amplitude_ = amplitude;
  p.mu_ = mu;
  return p;
}

PotentialSpec& PotentialSpec::with_short_algebraic(double amplitude,
                                                   double nu) {
  if (!(nu > 1.0)) throw ConfigError("short-range exponent nu must exceed 1");
  short_family_ = ShortFamily::Algebraic;
  short_amplitude_ = amplitude;
  nu_ = nu;
  return *this;
}

PotentialSpec& PotentialSpec::with_short_gaussian(double amplitude,
                                                  double width) {
  if (width <= 0) throw ConfigError("gaussian width must be positive");
  short_family_ = ShortFamily::Gaussian;
  short_amplitude_ = amplitude;
  short_width_ = width;
  nu_ = 1e6;  // decays faster than any power; audits treat it as such
  return *this;
}

void PotentialSpec::set_core_coeffs() {
  // Spherical mean of v: a0, plus even cos terms in d = 1 (where
  // cos(k theta) at theta in {0, pi} contributes (+-1)^k).
  double vbar = hom_.cos_coeffs.empty() ? 0.0 : hom_.cos_coeffs[0];
  if (dim_ == 1)
    for (size_t k = 2; k < hom_.cos_coeffs.size(); k += 2)
      vbar += hom_.cos_coeffs[k];
  const double rm = hom_.r0 / 2.0;
  core_b_ = vbar * hom_.beta * std::pow(rm, hom_.beta - 2.0) / 2.0;
  core_a_ = vbar * std::pow(rm, hom_.beta) - core_b_ * rm * rm;
}

Jet PotentialSpec::homogeneous_extension(const Vec& x, int order) const {
  const double beta = hom_.beta;
  Jet s(dim_, order);
  std::vector<Jet> xv(dim_);
  for (int i = 0; i < dim_; ++i) {
    xv[i] = Jet::variable(x, i, order);
    s = s + xv[i] * xv[i];
  }
  const auto& ac = hom_.cos_coeffs;
  const auto& bc = hom_.sin_coeffs;
  Jet acc = ac.empty() ? Jet::constant(0.0, dim_, order)
                       : jet_pow(s, beta / 2.0) * ac[0];
  const size_t kmax = std::max(ac.size(), bc.size() + 1);
  if (kmax > 1) {
    // P_k + i Q_k = (x1 + i x2)^k; r^beta cos(k theta) = s^{(beta-k)/2} P_k.
    Jet P = xv[0];
    Jet Q = dim_ >= 2 ? xv[1] : Jet::constant(0.0, dim_, order);
    for (size_t k = 1; k < kmax; ++k) {
      Jet radial = jet_pow(s, (beta - double(k)) / 2.0);
      if (k < ac.size() && ac[k] != 0.0) acc = acc + radial * P * ac[k];
      if (k >= 1 && k - 1 < bc.size() && bc[k - 1] != 0.0)
        acc = acc + radial * Q * bc[k - 1];
      if (k + 1 < kmax) {
        Jet Pn = P * xv[0] - Q * (dim_ >= 2 ? xv[1] : Jet::constant(0.0, dim_, order));
        Jet Qn = dim_ >= 2 ? P * xv[1] + Q * xv[0] : Jet::constant(0.0, dim_, order);
        P = Pn;
        Q = Qn;
      }
    }
  }
  return acc;
}

Jet PotentialSpec::long_range(const Vec& x, int order) const {
  switch (long_family_) {
    case LongFamily::Zero:
      return Jet::constant(0.0, dim_, order);
    case LongFamily::Algebraic: {
      Jet s = Jet::constant(1.0, dim_, order);
      for (int i = 0; i < dim_; ++i) {
        Jet xi = Jet::variable(x, i, order);
        s = s + xi * xi;
      }
      return jet_pow(s, (2.0 - mu_) / 2.0) * long_amplitude_;
    }
    case LongFamily::Homogeneous:
      break;
  }
  const double r = x.norm();
  const double r0 = hom_.r0;
  // Polynomial core; chi vanishes identically below r0/2.
  if (r <= r0 / 2.0) {
    Jet s(dim_, order);
    for (int i = 0; i < dim_; ++i) {
      Jet xi = Jet::variable(x, i, order);
      s = s + xi * xi;
    }
    return s * core_b_ + core_a_;
  }
  Jet hom = homogeneous_extension(x, order);
  if (r >= r0) return hom;
  // Blend region: chi(|x|/r0) hom + (1-chi) q.
  Jet s(dim_, order);
  for (int i = 0; i < dim_; ++i) {
    Jet xi = Jet::variable(x, i, order);
    s = s + xi * xi;
  }
  Jet u = jet_sqrt(s) * (1.0 / r0);
  Jet chi = smoothstep7(u * 2.0 - 1.0);
  Jet q = s * core_b_ + core_a_;
  return chi * hom + (1.0 - chi) * q;
}

Jet PotentialSpec::short_range(const Vec& x, int order) const {
  switch (short_family_) {
    case ShortFamily::Zero:
      return Jet::constant(0.0, dim_, order);
    case ShortFamily::Algebraic: {
      Jet s = Jet::constant(1.0, dim_, order);
      for (int i = 0; i < dim_; ++i) {
        Jet xi = Jet::variable(x, i, order);
        s = s + xi * xi;
      }
      return jet_pow(s, (2.0 - nu_) / 2.0) * short_amplitude_;
    }
    case ShortFamily::Gaussian: {
      Jet s(dim_, order);
      for (int i = 0; i < dim_; ++i) {
        Jet xi = Jet::variable(x, i, order);
        s = s + xi * xi;
      }
      return jet_exp(s * (-0.5 / (short_width_ * short_width_))) *
             short_amplitude_;
    }
  }
  return Jet::constant(0.0, dim_, order);
}

double PotentialSpec::angular_profile(const Vec& unit) const {
  if (long_family_ != LongFamily::Homogeneous)
    throw ConfigError("angular profile requires a homogeneous potential");
  return homogeneous_extension(unit / unit.norm(), 0).value;
}

Vec PotentialSpec::sphere_gradient(const Vec& unit) const {
  if (long_family_ != LongFamily::Homogeneous)
    throw ConfigError("sphere gradient requires a homogeneous potential");
  if (unit.norm() == 0) throw std::domain_error("zero direction");
  return homogeneous_extension(unit / unit.norm(), 1).grad;
}

double PotentialSpec::min_sphere_gradient(int n_samples) const {
  double best = std::numeric_limits<double>::infinity();
  if (dim_ == 1) {
    for (double s : {1.0, -1.0}) {
      Vec u(1);
      u << s;
      best = std::min(best, sphere_gradient(u).norm());
    }
  } else if (dim_ == 2) {
    for (int i = 0; i < n_samples; ++i)
      best = std::min(
          best,
          sphere_gradient(unit_from_angle(2 * M_PI * i / n_samples)).norm());
  } else {
    Vec u = Vec::Zero(dim_);
    u[0] = 1.0;
    best = sphere_gradient(u).norm();
  }
  return best;
}

// ------------------------------------------------------------------ model --

SymbolModel::SymbolModel(MetricField metric, PotentialSpec potential)
    : metric_(std::move(metric)), potential_(std::move(potential)) {
  if (metric_.dim() != potential_.dim())
    throw ConfigError("metric and potential dimensions differ");
  mu_ = std::min(metric_.mu(), potential_.is_zero_long() ? 1.0
                                                         : potential_.mu());
}

double eval_kinetic(const SymbolModel& m, const Vec& x, const Vec& xi) {
  require_finite(x, "x");
  require_finite(xi, "xi");
  if (m.metric().is_flat()) return 0.5 * xi.squaredNorm();
  const Mat a = m.metric().coeff(x);
  return 0.5 * xi.dot(a * xi);
}

double eval_symbol(const SymbolModel& m, const Vec& x, const Vec& xi,
                   SymbolVariant variant) {
  double v = eval_kinetic(m, x, xi);
  if (variant == SymbolVariant::Kinetic) return v;
  v += m.potential().long_range_value(x);
  if (variant == SymbolVariant::Full) v += m.potential().short_range_value(x);
  return v;
}

HamiltonField hamilton_field(const SymbolModel& m, const Vec& x, const Vec& xi,
                             SymbolVariant variant) {
  SymbolDerivs d = symbol_derivs(m, x, xi, variant);
  return HamiltonField{d.dp_dxi, -d.dp_dx};
}

SymbolDerivs symbol_derivs(const SymbolModel& m, const Vec& x, const Vec& xi,
                           SymbolVariant variant) {
  require_finite(x, "x");
  require_finite(xi, "xi");
  const int d = m.dim();
  SymbolDerivs out;
  out.dp_dx = Vec::Zero(d);
  if (m.metric().is_flat()) {
    out.p = 0.5 * xi.squaredNorm();
    out.dp_dxi = xi;
  } else {
    Jet f = m.metric().bump(x, 1);  // a = (1+f) I
    const double diag = 1.0 + f.value;
    if (diag <= 0.0)
      throw IntegrationError("metric lost positive definiteness", 0.0);
    const double q = 0.5 * xi.squaredNorm();
    out.p = diag * q;
    out.dp_dxi = diag * xi;
    out.dp_dx = q * f.grad;
  }
  if (variant != SymbolVariant::Kinetic) {
    Jet vl = m.potential().long_range(x, 1);
    out.p += vl.value;
    out.dp_dx += vl.grad;
    if (variant == SymbolVariant::Full) {
      Jet vs = m.potential().short_range(x, 1);
      out.p += vs.value;
      out.dp_dx += vs.grad;
    }
  }
  return out;
}

// ------------------------------------------------------------ decay audit --

namespace {

std::vector<Vec> sample_directions(int d, int n) {
  std::vector<Vec> dirs;
  if (d == 1) {
    Vec u(1);
    u << 1.0;
    dirs.push_back(u);
    u << -1.0;
    dirs.push_back(u);
  } else if (d == 2) {
    for (int i = 0; i < n; ++i)
      dirs.push_back(unit_from_angle(2 * M_PI * i / n + 0.1));
  } else {
    for (int i = 0; i < d; ++i) {
      Vec u = Vec::Zero(d);
      u[i] = 1.0;
      dirs.push_back(u);
      dirs.push_back(-u);
    }
    dirs.push_back(Vec::Ones(d) / std::sqrt(double(d)));
  }
  return dirs;
}

}  // namespace

DecayReport verify_decay(const SymbolModel& m, const DecaySampleBox& box) {
  if (box.r_max < 100.0)
    throw ConfigError("decay sample box must reach |x| >= 100");
  const int d = m.dim();
  const int max_order = std::min(box.max_order, 3);
  const auto alphas = multi_indices(d, max_order);
  const auto radii = geomspace(box.r_min, box.r_max, box.n_radii);
  const auto dirs = sample_directions(d, box.n_directions);

  DecayReport report;
  report.pass = true;

  struct Part {
    std::string name;
    double base_exp;  // exponent before -|alpha|
    std::function<Jet(const Vec&, int)> eval;
    bool enabled;
  };
  std::vector<Part> parts;
  parts.push_back({"metric", -m.metric().mu(),
                   [&](const Vec& x, int o) { return m.metric().bump(x, o); },
                   true});
  parts.push_back({"VL", 2.0 - m.mu(),
                   [&](const Vec& x, int o) {
                     return m.potential().long_range(x, o);
                   },
                   !m.potential().is_zero_long()});
  parts.push_back({"VS", 2.0 - m.nu(),
                   [&](const Vec& x, int o) {
                     return m.potential().short_range(x, o);
                   },
                   m.potential().short_family() !=
                       PotentialSpec::ShortFamily::Zero});

  for (const auto& part : parts) {
    for (const auto& alpha : alphas) {
      int order = 0;
      for (int a : alpha) order += a;
      DecayRow row;
      row.part = part.name;
      row.alpha = alpha;
      row.expected_slope = part.base_exp - order;
      row.c_alpha = 0.0;
      std::vector<double> sup(radii.size(), 0.0);
      if (part.enabled) {
        for (size_t ri = 0; ri < radii.size(); ++ri) {
          for (const auto& dir : dirs) {
            Vec x = radii[ri] * dir;
            const double val = std::abs(part.eval(x, order).deriv(alpha));
            sup[ri] = std::max(sup[ri], val);
            const double weight =
                std::pow(jap(x), -(part.base_exp - order));
            row.c_alpha = std::max(row.c_alpha, val * weight);
          }
        }
      }
      std::vector<double> japr(radii.size());
      for (size_t ri = 0; ri < radii.size(); ++ri) japr[ri] = jap(radii[ri]);
      SlopeFit fit = fit_loglog_slope(japr, sup, 1e-300);
      row.fitted_slope = fit.slope;
      row.pass = !(row.fitted_slope > row.expected_slope + 0.1);
      report.pass = report.pass && row.pass;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace dollard
