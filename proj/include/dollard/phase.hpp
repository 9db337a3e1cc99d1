#ifndef DOLLARD_PHASE_HPP
#define DOLLARD_PHASE_HPP

#include "dollard/quadrature.hpp"
#include "dollard/symbols.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace dollard {

// Which generator is integrated along the free ray s -> s*xi:
//   Psi        kinetic only            int_0^t k(s xi, xi) ds
//   Phi        long-range              int_0^t [k + V^L](s xi, xi) ds
//   PhiLambda  lambda-scaled           int_0^t [k + V^L/lambda^2](s xi, xi) ds
enum class PhaseVariant { Psi, Phi, PhiLambda };

// Quadrature-backed evaluation of the modifier phase and its t/xi
// derivatives. Negative times are reduced by the reflection
// phase(t,xi) = -int_0^{|t|} p(-s xi, xi) ds. The blend seam radii are
// inserted as quadrature breakpoints. Evaluations are pure; a memo cache
// (keyed by the exact argument bits, which is how the lattice tabulation
// re-requests nodes) is guarded by a mutex.
class PhaseFunction {
 public:
  PhaseFunction(SymbolModel model, PhaseVariant variant, double tol = 1e-12,
                double lambda = 1.0);
  PhaseFunction(const PhaseFunction& o);  // fresh memo, shared config
  PhaseFunction& operator=(const PhaseFunction&) = delete;

  double phase(double t, const Vec& xi) const;
  double operator()(double t, const Vec& xi) const { return phase(t, xi); }
  // int_{t0}^{t1} of the same generator (additivity checks).
  double phase_between(double t0, double t1, const Vec& xi) const;
  Vec gradient(double t, const Vec& xi) const;
  Mat hessian(double t, const Vec& xi) const;
  double dt(double t, const Vec& xi) const;        // equals p_variant(t xi, xi)
  Vec dt_gradient(double t, const Vec& xi) const;  // d/dxi of the above
  // d^alpha_xi (phase - t|xi|^2/2), |alpha| <= 2, by quadrature of the
  // differentiated integrand (the Lemma-7 audit quantity).
  double minus_free_deriv(double t, const Vec& xi,
                          const std::vector<int>& alpha) const;

  const SymbolModel& model() const { return model_; }
  PhaseVariant variant() const { return variant_; }
  double lambda() const { return lambda_; }
  double tol() const { return tol_; }
  void enable_memo(bool on) { memo_enabled_ = on; }

 private:
  double potential_weight() const;
  QuadratureOptions options_for(double t, const Vec& xi) const;
  // integrand value p_variant(s xi, xi) with the reflection already applied
  double integrand(double s, const Vec& xi, double refl) const;

  struct Memo {
    std::unordered_map<std::string, double> cache;
    std::mutex mutex;
  };

  SymbolModel model_;
  PhaseVariant variant_;
  double tol_;
  double lambda_;
  mutable std::unique_ptr<Memo> memo_;
  bool memo_enabled_ = true;
};

// Closed-form decomposition of the potential part of Phi for homogeneous
// specs:  int_0^t V^L(s xi) ds = leading + remainder  whenever |t||xi| >= r0m,
// r0m = max(1, r0), with
//   leading  = sign(t) * sigma * |xi|^beta * v(sign(t) xi^)
//   sigma    = |t|^{1+beta} / (1+beta)
//   remainder= the one-dimensional seam integral (independent of t)
//   correction (F) = int_0^t V^L(s xi) ds - leading, valid for every (t,xi)
// Below the threshold the closed form does not apply; decompose() throws and
// correction_quadrature() is the pure-quadrature fallback.
struct PhaseDecomposition {
  double leading;
  double remainder;
  double correction;
  double sigma;
};

PhaseDecomposition homogeneous_decomposition(const PotentialSpec& spec,
                                             double t, const Vec& xi,
                                             double tol = 1e-13);

// int_0^t V^L(s xi) ds by adaptive quadrature (any t, xi).
double potential_ray_integral(const PotentialSpec& spec, double t,
                              const Vec& xi, double tol = 1e-13);

// Lemma-7-style bound audit: log-log slopes in |xi| of
// |d^alpha_xi (Phi - t|xi|^2/2)| and the sup of the ratio against
// |t| <xi>^{2-mu-|alpha|}. Pass needs slope <= expected + 0.1 and
// max_ratio <= ratio_threshold.
struct BoundRow {
  double t;
  std::vector<int> alpha;
  double fitted_slope;
  double expected_slope;
  double max_ratio;
  bool pass;
};
struct BoundReport {
  std::vector<BoundRow> rows;
  double ratio_threshold;
  bool pass;
};

BoundReport verify_lemma7(const PhaseFunction& pf,
                          const std::vector<double>& t_grid,
                          const std::vector<double>& xi_mags, int max_order = 2,
                          double ratio_threshold = 50.0);

}  // namespace dollard

#endif
