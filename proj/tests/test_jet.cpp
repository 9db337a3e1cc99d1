#include "dollard/jet.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace dollard;

namespace {

// f(x,y) = exp(-(x^2+y^2)/4) * (1 + x*y)^{0.6}
Jet sample_fn(const Vec& x, int order) {
  Jet X = Jet::variable(x, 0, order);
  Jet Y = Jet::variable(x, 1, order);
  Jet s = X * X + Y * Y;
  Jet envelope = jet_exp(s * (-0.25));
  Jet body = jet_pow(X * Y + 1.0, 0.6);
  return envelope * body;
}

double sample_value(const Vec& x) { return sample_fn(x, 0).value; }

}  // namespace

TEST_CASE("jet derivatives agree with finite differences to third order") {
  Vec x(2);
  x << 0.7, -0.4;
  Jet j = sample_fn(x, 3);

  Vec g = oracles::fd_gradient(sample_value, x);
  CHECK(j.grad[0] == doctest::Approx(g[0]).epsilon(1e-8));
  CHECK(j.grad[1] == doctest::Approx(g[1]).epsilon(1e-8));

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(j.hess(a, b) ==
            doctest::Approx(oracles::fd_partial2(sample_value, x, a, b))
                .epsilon(2e-6));

  // third derivative d^3/dx^2 dy via differences of analytic Hessians
  auto hess01 = [&](const Vec& xx) { return sample_fn(xx, 2).hess(0, 1); };
  Vec xp = x, xm = x;
  xp[0] += 1e-5;
  xm[0] -= 1e-5;
  const double fd3 = (hess01(xp) - hess01(xm)) / 2e-5;
  CHECK(j.t3(0, 0, 1) == doctest::Approx(fd3).epsilon(1e-7));
}

TEST_CASE("jet third tensor is symmetric and order limits are enforced") {
  Vec x(2);
  x << 0.3, 0.9;
  Jet j = sample_fn(x, 3);
  CHECK(j.t3(0, 1, 1) == doctest::Approx(j.t3(1, 0, 1)));
  CHECK(j.t3(0, 1, 1) == doctest::Approx(j.t3(1, 1, 0)));

  Jet low = sample_fn(x, 1);
  CHECK_THROWS_AS(low.deriv({1, 1}), std::logic_error);
  CHECK(low.deriv({1, 0}) == doctest::Approx(j.grad[0]));
}

TEST_CASE("jet arithmetic respects the Leibniz rule") {
  Vec x(1);
  x << 1.3;
  Jet X = Jet::variable(x, 0, 3);
  Jet prod = jet_pow(X, 2.5) * jet_exp(X * (-1.0));
  // d/dx [x^2.5 e^-x] = (2.5 x^1.5 - x^2.5) e^-x
  const double expect =
      (2.5 * std::pow(1.3, 1.5) - std::pow(1.3, 2.5)) * std::exp(-1.3);
  CHECK(prod.grad[0] == doctest::Approx(expect).epsilon(1e-12));
}
