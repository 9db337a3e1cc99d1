#ifndef DOLLARD_TEST_ORACLES_HPP
#define DOLLARD_TEST_ORACLES_HPP

// Independent reference implementations used as test oracles. Everything in
// this header deliberately avoids the library's own quadrature/ODE/jet code
// paths so the comparisons stay meaningful.

#include "dollard/common.hpp"

#include <complex>
#include <functional>

namespace oracles {

using dollard::Vec;

// Adaptive Simpson on [a,b]; plain recursion, no Gauss-Kronrod machinery.
inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double integrate_simpson(const std::function<double(double)>& f,
                                double a, double b, double tol = 1e-12) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Central finite differences.
inline Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x,
                       double h = 1e-5) {
  Vec g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (f(xp) - f(xm)) / (2 * h);
  }
  return g;
}

inline double fd_partial2(const std::function<double(const Vec&)>& f,
                          const Vec& x, int i, int j, double h = 1e-4) {
  Vec xa = x, xb = x, xc = x, xd = x;
  xa[i] += h; xa[j] += h;
  xb[i] += h; xb[j] -= h;
  xc[i] -= h; xc[j] += h;
  xd[i] -= h; xd[j] -= h;
  return (f(xa) - f(xb) - f(xc) + f(xd)) / (4 * h * h);
}

// Exact free-Schroedinger evolution of a 1d Gaussian packet
//   u0(x) = (pi s^2)^{-1/4} exp(-(x-x0)^2/(2 s^2) + i p0 (x-x0)).
inline std::complex<double> free_gaussian(double x, double t, double x0,
                                          double p0, double s) {
  const std::complex<double> I(0.0, 1.0);
  const std::complex<double> a = 1.0 + I * t / (s * s);
  const std::complex<double> amp =
      std::pow(M_PI * s * s, -0.25) / std::sqrt(a);
  const double xc = x - x0 - p0 * t;
  return amp * std::exp(-xc * xc / (2.0 * s * s * a) + I * p0 * (x - x0) -
                        I * 0.5 * p0 * p0 * t);
}

// Closed-form Gabor self-overlap of two coherent packets sharing the center
// and label xi*, scales lam (probe) and lam_s (state):
//   |c| = (4 lam lam_s)^{1/4} / (lam + lam_s)^{1/2} *
//         exp(-(lam - lam_s)^2 xi*^2 / (2 (lam + lam_s))).
inline double coherent_self_overlap(double lam, double lam_s, double xi_star) {
  const double dk = (lam - lam_s) * xi_star;
  return std::pow(4.0 * lam * lam_s, 0.25) / std::sqrt(lam + lam_s) *
         std::exp(-dk * dk / (2.0 * (lam + lam_s)));
}

// Simple fixed-step RK4 for the planar harmonic trap H = |p|^2/2 + |x|^2/2
// (prototype trapped dynamics; not an Assumption-A model).
inline void harmonic_orbit(double t, Vec& x, Vec& p) {
  const int steps = std::max(64, int(t / 1e-3));
  const double h = t / steps;
  auto acc = [](const Vec& q) { return Vec(-q); };
  for (int s = 0; s < steps; ++s) {
    const Vec k1x = p, k1p = acc(x);
    const Vec k2x = p + 0.5 * h * k1p, k2p = acc(x + 0.5 * h * k1x);
    const Vec k3x = p + 0.5 * h * k2p, k3p = acc(x + 0.5 * h * k2x);
    const Vec k4x = p + h * k3p, k4p = acc(x + h * k3x);
    x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    p += h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
  }
}

// The blend formula evaluated directly (mirrors the documented construction,
// written independently of the library's jet path).
inline double blend_formula(double r, double beta, double r0, double vbar) {
  auto hom = [&](double rr) { return vbar * std::pow(rr, beta); };
  const double rm = r0 / 2.0;
  const double B = vbar * beta * std::pow(rm, beta - 2.0) / 2.0;
  const double A = vbar * std::pow(rm, beta) - B * rm * rm;
  auto q = [&](double rr) { return A + B * rr * rr; };
  if (r >= r0) return hom(r);
  if (r <= rm) return q(r);
  const double w = 2.0 * (r / r0) - 1.0;
  const double chi =
      w * w * w * w * (35.0 + w * (-84.0 + w * (70.0 - 20.0 * w)));
  return chi * hom(r) + (1.0 - chi) * q(r);
}

}  // namespace oracles

#endif
