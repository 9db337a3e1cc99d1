#include "dollard/ode.hpp"

namespace dollard {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// b - b* (5th-order weights minus embedded 4th-order weights).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output quintic correction weights.
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0,
                 d7 = 69997945.0 / 29380423.0;

}  // namespace

Vec Dopri5::solve(double t0, const Vec& y0, double t1,
                  const std::vector<double>& t_out, const Observer& on_sample,
                  const Observer& on_step) {
  const int n = int(y0.size());
  const double dir = (t1 >= t0) ? 1.0 : -1.0;
  size_t out_idx = 0;

  Vec y = y0;
  double t = t0;
  if (t0 == t1) {
    if (on_sample)
      for (double to : t_out) on_sample(to, y);
    return y;
  }

  Vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), y1(n), err(n);
  rhs_(t, y, k1);
  ++stats_.n_rhs;

  // Initial step: balance |y|/|y'| against the requested accuracy.
  double h = opt_.initial_step;
  if (h == 0.0) {
    const double d0 = y.cwiseAbs().maxCoeff() + opt_.atol;
    const double d1n = k1.cwiseAbs().maxCoeff() + 1e-300;
    h = 0.01 * d0 / d1n;
    h = std::min(h, std::abs(t1 - t0));
    h = std::max(h, 1e-10 * std::abs(t1 - t0));
    h = std::min(h, opt_.max_step);
  }
  h *= dir;

  double err_prev = 1.0;
  bool last_rejected = false;
  while ((t1 - t) * dir > 0) {
    if (stats_.n_accepted + stats_.n_rejected > opt_.max_steps)
      throw IntegrationError("step budget exhausted", t);
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
      throw IntegrationError("step size underflow (near-singular field)", t);
    if ((t + h - t1) * dir > 0) h = t1 - t;

    ytmp = y + h * (a21 * k1);
    rhs_(t + c2 * h, ytmp, k2);
    ytmp = y + h * (a31 * k1 + a32 * k2);
    rhs_(t + c3 * h, ytmp, k3);
    ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    rhs_(t + c4 * h, ytmp, k4);
    ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    rhs_(t + c5 * h, ytmp, k5);
    ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    rhs_(t + h, ytmp, k6);
    y1 = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    rhs_(t + h, y1, k7);
    stats_.n_rhs += 6;

    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double err_norm = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sc =
          opt_.atol + opt_.rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
      const double r = err[i] / sc;
      err_norm += r * r;
    }
    err_norm = std::sqrt(err_norm / n);

    if (err_norm <= 1.0) {
      // Dense output coefficients for this step.
      const Vec ydiff = y1 - y;
      const Vec bspl = h * k1 - ydiff;
      const Vec r4 = ydiff - h * k7 - bspl;
      const Vec r5 =
          h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
      while (out_idx < t_out.size() &&
             (t_out[out_idx] - (t + h)) * dir <= 0) {
        const double th = (t_out[out_idx] - t) / h;
        const double th1 = 1.0 - th;
        Vec yi = y + th * (ydiff + th1 * (bspl + th * (r4 + th1 * r5)));
        if (on_sample) on_sample(t_out[out_idx], yi);
        ++out_idx;
      }
      t += h;
      y = y1;
      k1 = k7;  // FSAL
      ++stats_.n_accepted;
      if (on_step) on_step(t, y);

      double fac = 0.9 * std::pow(err_norm + 1e-40, -0.7 / 5.0) *
                   std::pow(err_prev, 0.4 / 5.0);
      fac = std::min(5.0, std::max(0.2, fac));
      if (last_rejected) fac = std::min(fac, 1.0);
      h *= fac;
      if (std::abs(h) > opt_.max_step) h = dir * opt_.max_step;
      err_prev = std::max(err_norm, 1e-4);
      last_rejected = false;
    } else {
      double fac = std::max(0.2, 0.9 * std::pow(err_norm, -1.0 / 5.0));
      h *= fac;
      ++stats_.n_rejected;
      last_rejected = true;
    }
  }
  // Any samples exactly at t1 that were not swept by the last dense window.
  while (out_idx < t_out.size() && (t_out[out_idx] - t) * dir <= 0) {
    if (on_sample) on_sample(t_out[out_idx], y);
    ++out_idx;
  }
  return y;
}

}  // namespace dollard
