#ifndef DOLLARD_JET_HPP
#define DOLLARD_JET_HPP

#include "dollard/common.hpp"

#include <array>

namespace dollard {

// Truncated Taylor expansion (value, gradient, Hessian, third derivatives)
// of a scalar function of d variables. `order` selects how many levels are
// carried; arithmetic below propagates exact Leibniz / Faa di Bruno rules,
// so evaluating a model family on jets yields its analytic derivatives.
//
// The third-derivative block is stored as a dense d^3 array kept fully
// symmetric. Dimensions here are tiny (d <= 3), so no sparsity is needed.
class Jet {
 public:
  Jet() : dim_(0), order_(0), value(0) {}
  Jet(int dim, int order) : dim_(dim), order_(order), value(0) {
    if (order_ >= 1) grad = Vec::Zero(dim_);
    if (order_ >= 2) hess = Mat::Zero(dim_, dim_);
    if (order_ >= 3) third.assign(size_t(dim_) * dim_ * dim_, 0.0);
  }

  static Jet constant(double c, int dim, int order) {
    Jet j(dim, order);
    j.value = c;
    return j;
  }
  // Seed for the i-th coordinate at point x.
  static Jet variable(const Vec& x, int i, int order) {
    Jet j(int(x.size()), order);
    j.value = x[i];
    if (order >= 1) j.grad[i] = 1.0;
    return j;
  }

  int dim() const { return dim_; }
  int order() const { return order_; }

  double t3(int i, int j, int k) const {
    return third[(size_t(i) * dim_ + j) * dim_ + k];
  }
  double& t3(int i, int j, int k) {
    return third[(size_t(i) * dim_ + j) * dim_ + k];
  }

  // Derivative for a multi-index with |alpha| <= order.
  double deriv(const std::vector<int>& alpha) const;

  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet operator+(double c) const;
  Jet operator-(double c) const;
  Jet operator*(double c) const;
  Jet operator-() const { return *this * -1.0; }

  // g(f) for a univariate outer function with derivatives g0..g3 at f.value.
  Jet compose(double g0, double g1, double g2, double g3) const;

  double value;
  Vec grad;
  Mat hess;
  std::vector<double> third;

 private:
  int dim_;
  int order_;
};

inline Jet operator*(double c, const Jet& j) { return j * c; }
inline Jet operator+(double c, const Jet& j) { return j + c; }
inline Jet operator-(double c, const Jet& j) { return (-j) + c; }

// f^p for f.value > 0 (or integer-like use on positive branch).
Jet jet_pow(const Jet& f, double p);
Jet jet_exp(const Jet& f);
Jet jet_sqrt(const Jet& f);

}  // namespace dollard

#endif
