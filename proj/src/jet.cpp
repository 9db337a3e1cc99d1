#include "dollard/jet.hpp"

namespace dollard {

double Jet::deriv(const std::vector<int>& alpha) const {
  int total = 0;
  std::vector<int> idx;
  for (int i = 0; i < int(alpha.size()); ++i) {
    total += alpha[i];
    for (int r = 0; r < alpha[i]; ++r) idx.push_back(i);
  }
  if (total > order_)
    throw std::logic_error("jet does not carry this derivative order");
  switch (total) {
    case 0: return value;
    case 1: return grad[idx[0]];
    case 2: return hess(idx[0], idx[1]);
    default: return t3(idx[0], idx[1], idx[2]);
  }
}

Jet Jet::operator+(const Jet& o) const {
  Jet r(*this);
  r.value += o.value;
  if (order_ >= 1) r.grad += o.grad;
  if (order_ >= 2) r.hess += o.hess;
  if (order_ >= 3)
    for (size_t i = 0; i < third.size(); ++i) r.third[i] += o.third[i];
  return r;
}

Jet Jet::operator-(const Jet& o) const {
  Jet r(*this);
  r.value -= o.value;
  if (order_ >= 1) r.grad -= o.grad;
  if (order_ >= 2) r.hess -= o.hess;
  if (order_ >= 3)
    for (size_t i = 0; i < third.size(); ++i) r.third[i] -= o.third[i];
  return r;
}

Jet Jet::operator*(const Jet& o) const {
  const Jet& f = *this;
  const Jet& g = o;
  Jet r(dim_, order_);
  r.value = f.value * g.value;
  if (order_ >= 1) r.grad = f.grad * g.value + g.grad * f.value;
  if (order_ >= 2)
    r.hess = f.hess * g.value + g.hess * f.value + f.grad * g.grad.transpose() +
             g.grad * f.grad.transpose();
  if (order_ >= 3) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          r.t3(i, j, k) = f.t3(i, j, k) * g.value + g.t3(i, j, k) * f.value +
                          f.hess(i, j) * g.grad[k] + f.hess(i, k) * g.grad[j] +
                          f.hess(j, k) * g.grad[i] + g.hess(i, j) * f.grad[k] +
                          g.hess(i, k) * f.grad[j] + g.hess(j, k) * f.grad[i];
  }
  return r;
}

Jet Jet::operator+(double c) const {
  Jet r(*this);
  r.value += c;
  return r;
}
Jet Jet::operator-(double c) const {
  Jet r(*this);
  r.value -= c;
  return r;
}
Jet Jet::operator*(double c) const {
  Jet r(*this);
  r.value *= c;
  if (order_ >= 1) r.grad *= c;
  if (order_ >= 2) r.hess *= c;
  if (order_ >= 3)
    for (auto& t : r.third) t *= c;
  return r;
}

Jet Jet::compose(double g0, double g1, double g2, double g3) const {
  const Jet& f = *this;
  Jet r(dim_, order_);
  r.value = g0;
  if (order_ >= 1) r.grad = g1 * f.grad;
  if (order_ >= 2)
    r.hess = g2 * (f.grad * f.grad.transpose()) + g1 * f.hess;
  if (order_ >= 3) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          r.t3(i, j, k) = g3 * f.grad[i] * f.grad[j] * f.grad[k] +
                          g2 * (f.hess(i, j) * f.grad[k] +
                                f.hess(i, k) * f.grad[j] +
                                f.hess(j, k) * f.grad[i]) +
                          g1 * f.t3(i, j, k);
  }
  return r;
}

Jet jet_pow(const Jet& f, double p) {
  const double v = f.value;
  const double g0 = std::pow(v, p);
  const double g1 = p * std::pow(v, p - 1);
  const double g2 = p * (p - 1) * std::pow(v, p - 2);
  const double g3 = p * (p - 1) * (p - 2) * std::pow(v, p - 3);
  return f.compose(g0, g1, g2, g3);
}

Jet jet_exp(const Jet& f) {
  const double e = std::exp(f.value);
  return f.compose(e, e, e, e);
}

Jet jet_sqrt(const Jet& f) { return jet_pow(f, 0.5); }

}  // namespace dollard
