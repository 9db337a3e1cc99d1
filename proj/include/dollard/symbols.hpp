#ifndef DOLLARD_SYMBOLS_HPP
#define DOLLARD_SYMBOLS_HPP

#include "dollard/common.hpp"
#include "dollard/jet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dollard {

// ---------------------------------------------------------------------------
// Metric coefficients a_mn(x). Families:
//   flat            a = I
//   isotropic_bump  a = (1 + eps * <x>^-mu) * I
// Components evaluate as jets, so all derivatives up to order 3 are analytic.
// ---------------------------------------------------------------------------
class MetricField {
 public:
  enum class Family { Flat, IsotropicBump };

  static MetricField flat(int dim);
  static MetricField isotropic_bump(int dim, double eps, double mu);

  int dim() const { return dim_; }
  double mu() const { return mu_; }
  double eps() const { return eps_; }
  bool is_flat() const { return family_ == Family::Flat; }
  Family family() const { return family_; }

  Mat coeff(const Vec& x) const;  // a(x)
  // Jet of component a_mn at x, carrying derivatives up to `order`.
  Jet component(const Vec& x, int m, int n, int order) const;
  // Scalar bump jet f(x) with a = (1+f) I; zero jet for the flat family.
  Jet bump(const Vec& x, int order) const;

  double min_eigenvalue(const Vec& x) const;

 private:
  MetricField(Family f, int dim, double eps, double mu)
      : family_(f), dim_(dim), eps_(eps), mu_(mu) {}
  Family family_;
  int dim_;
  double eps_;
  double mu_;
};

// ---------------------------------------------------------------------------
// Potential V = V^(L) + V^(S).
//
// Long-range families:
//   zero
//   homogeneous   V^L(x) = |x|^beta v(x^) exactly for |x| >= max(1, r0),
//                 blended smoothly onto a matched polynomial core inside:
//                 V^L = chi(|x|/r0) |x|^beta v(x^) + (1-chi) (A + B|x|^2),
//                 chi = 0 for s<=1/2, 1 for s>=1 (C^3 polynomial step).
//   algebraic     V^L(x) = c <x>^{2-mu}
// Short-range families: zero, algebraic c <x>^{2-nu}, gaussian c e^{-|x|^2/2w^2}.
//
// The angular profile v is a truncated trig series: in d=2,
// v(theta) = a0 + sum_k (a_k cos k theta + b_k sin k theta); in d=1 the same
// coefficients act through v(x^) = sum_k a_k x^^k. d >= 3 accepts a0 only.
// ---------------------------------------------------------------------------
class PotentialSpec {
 public:
  enum class LongFamily { Zero, Homogeneous, Algebraic };
  enum class ShortFamily { Zero, Algebraic, Gaussian };

  struct Homogeneous {
    double beta = 1.0;
    double r0 = 1.0;
    std::vector<double> cos_coeffs{1.0};
    std::vector<double> sin_coeffs{};
  };

  static PotentialSpec zero(int dim);
  static PotentialSpec homogeneous(int dim, const Homogeneous& h,
                                   bool gradient_nonvanishing = false);
  static PotentialSpec algebraic_long(int dim, double amplitude, double mu);

  PotentialSpec& with_short_algebraic(double amplitude, double nu);
  PotentialSpec& with_short_gaussian(double amplitude, double width);

  int dim() const { return dim_; }
  double mu() const { return mu_; }
  double nu() const { return nu_; }
  bool is_homogeneous() const { return long_family_ == LongFamily::Homogeneous; }
  bool is_zero_long() const { return long_family_ == LongFamily::Zero; }
  LongFamily long_family() const { return long_family_; }
  ShortFamily short_family() const { return short_family_; }
  double beta() const { return hom_.beta; }
  double blend_radius() const { return hom_.r0; }
  const Homogeneous& homogeneous_spec() const { return hom_; }
  bool gradient_nonvanishing() const { return grad_nonvanishing_; }

  Jet long_range(const Vec& x, int order) const;
  Jet short_range(const Vec& x, int order) const;
  double long_range_value(const Vec& x) const { return long_range(x, 0).value; }
  double short_range_value(const Vec& x) const { return short_range(x, 0).value; }

  // Exact homogeneous extension |x|^beta v(x^) for any x != 0, regardless of
  // the blend; this is what the closed-form phase decomposition subtracts.
  Jet homogeneous_extension(const Vec& x, int order) const;
  double angular_profile(const Vec& unit) const;  // v(x^)
  // grad V^L on the unit sphere (the shift-map field). Uses the exact
  // homogeneous extension, which equals V^L there when r0 <= 1.
  Vec sphere_gradient(const Vec& unit) const;
  // min over sampled unit vectors of |grad V^L(x^)|.
  double min_sphere_gradient(int n_samples = 64) const;

 private:
  explicit PotentialSpec(int dim) : dim_(dim) {}
  int dim_;
  LongFamily long_family_ = LongFamily::Zero;
  ShortFamily short_family_ = ShortFamily::Zero;
  Homogeneous hom_;
  double long_amplitude_ = 0.0;
  double short_amplitude_ = 0.0;
  double short_width_ = 1.0;
  double mu_ = 1.0;
  double nu_ = 2.0;
  bool grad_nonvanishing_ = false;
  double core_a_ = 0.0, core_b_ = 0.0;  // blend core q(x) = A + B|x|^2

  void set_core_coeffs();
};

// ---------------------------------------------------------------------------
// The full symbol p(x,xi) = k(x,xi) + V(x), k = 1/2 xi^T a(x) xi.
// Immutable after construction; all evaluators are pure.
// ---------------------------------------------------------------------------
enum class SymbolVariant { Kinetic, LongRange, Full };

class SymbolModel {
 public:
  SymbolModel(MetricField metric, PotentialSpec potential);

  int dim() const { return metric_.dim(); }
  const MetricField& metric() const { return metric_; }
  const PotentialSpec& potential() const { return potential_; }
  // Effective decay exponents of Assumption A/C for this model.
  double mu() const { return mu_; }
  double nu() const { return potential_.nu(); }

 private:
  MetricField metric_;
  PotentialSpec potential_;
  double mu_;
};

double eval_kinetic(const SymbolModel& m, const Vec& x, const Vec& xi);
double eval_symbol(const SymbolModel& m, const Vec& x, const Vec& xi,
                   SymbolVariant variant);

struct HamiltonField {
  Vec velocity;  // d p/d xi
  Vec force;     // -d p/d x
};
HamiltonField hamilton_field(const SymbolModel& m, const Vec& x, const Vec& xi,
                             SymbolVariant variant);

// First derivatives of the symbol in both slots (dp_dx, dp_dxi) plus value.
struct SymbolDerivs {
  double p;
  Vec dp_dx;
  Vec dp_dxi;
};
SymbolDerivs symbol_derivs(const SymbolModel& m, const Vec& x, const Vec& xi,
                           SymbolVariant variant);

// ---------------------------------------------------------------------------
// Sampled verification of the Assumption A/C decay bounds.
// For each part (metric components, V^L, V^S) and each |alpha| <= max_order,
// fits the log-log slope of sup_direction |d^alpha f| against <r> and reports
// the smallest admissible constant C_alpha. Fails when a fitted slope exceeds
// the assumption exponent by more than 0.1.
// ---------------------------------------------------------------------------
struct DecaySampleBox {
  double r_min = 1.0;
  double r_max = 1e3;
  int n_radii = 25;
  int n_directions = 8;
  int max_order = 3;
};

struct DecayRow {
  std::string part;  // "metric", "VL", "VS"
  std::vector<int> alpha;
  double fitted_slope;    // -inf when the sampled sup vanishes
  double expected_slope;  // -mu-|a| or 2-mu-|a| or 2-nu-|a|
  double c_alpha;         // smallest constant making the bound hold on samples
  bool pass;
};

struct DecayReport {
  std::vector<DecayRow> rows;
  bool pass;
};

DecayReport verify_decay(const SymbolModel& m, const DecaySampleBox& box);

}  // namespace dollard

#endif
