#ifndef DOLLARD_QUADRATURE_HPP
#define DOLLARD_QUADRATURE_HPP

#include "dollard/common.hpp"

#include <functional>

namespace dollard {

// Adaptive Gauss-Kronrod (7,15) quadrature with interval bisection.
// Breakpoints are inserted as initial subdivision nodes so piecewise-smooth
// integrands (the blend seam at s = r0/|xi|) never straddle a seam at the
// top level. Deterministic for fixed inputs.
struct QuadratureOptions {
  double abs_tol = 1e-12;
  // Relative floor: convergence is declared at max(abs_tol, rel_tol*|I|),
  // which keeps huge integrals (phase at |xi| ~ 1e3) from demanding more
  // than double precision can represent.
  double rel_tol = 4e-15;
  int max_intervals = 2000;
  std::vector<double> breakpoints{};  // interior nodes of [a,b], any order
};

double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    const QuadratureOptions& opt = {});

// Vector-valued integrand sharing one subdivision; the error control is on
// the max-norm of the component error estimates.
Vec integrate_gk_vec(const std::function<Vec(double)>& f, int dim, double a,
                     double b, const QuadratureOptions& opt = {});

}  // namespace dollard

#endif
