#include "dollard/symbols.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dollard;

namespace {

SymbolModel flat_free(int d) {
  return SymbolModel(MetricField::flat(d), PotentialSpec::zero(d));
}

SymbolModel abs_potential_1d() {
  PotentialSpec::Homogeneous h;  // beta = 1, v = 1, r0 = 1
  return SymbolModel(MetricField::flat(1), PotentialSpec::homogeneous(1, h));
}

}  // namespace

TEST_CASE("eval_kinetic on flat and bump metrics") {
  SymbolModel flat = flat_free(2);
  Vec x(2), xi(2);
  x << 3.0, -1.0;
  xi << 1.0, 0.0;
  CHECK(eval_kinetic(flat, x, xi) == doctest::Approx(0.5));
  CHECK(eval_kinetic(flat, x, Vec::Zero(2)) == 0.0);

  // a_mn = delta_mn (1 + <x>^-1): a(0) = 2 I
  SymbolModel bump(MetricField::isotropic_bump(2, 1.0, 1.0),
                   PotentialSpec::zero(2));
  CHECK(eval_kinetic(bump, Vec::Zero(2), xi) == doctest::Approx(1.0));

  Vec bad(2);
  bad << std::numeric_limits<double>::quiet_NaN(), 0.0;
  CHECK_THROWS_AS(eval_kinetic(flat, bad, xi), std::domain_error);
}

TEST_CASE("eval_symbol variants") {
  SymbolModel free2 = flat_free(2);
  Vec x(2), xi(2);
  x << 0.4, 1.1;
  xi << 0.3, -0.8;
  const double k = eval_kinetic(free2, x, xi);
  CHECK(eval_symbol(free2, x, xi, SymbolVariant::Kinetic) == k);
  CHECK(eval_symbol(free2, x, xi, SymbolVariant::LongRange) == k);
  CHECK(eval_symbol(free2, x, xi, SymbolVariant::Full) == k);

  SymbolModel m = abs_potential_1d();
  Vec x1(1), xi1(1);
  x1 << 2.0;
  xi1 << 1.0;
  CHECK(eval_symbol(m, x1, xi1, SymbolVariant::LongRange) ==
        doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("blended region matches the documented blend formula") {
  PotentialSpec::Homogeneous h;
  h.beta = 1.25;
  h.r0 = 1.0;
  PotentialSpec pot = PotentialSpec::homogeneous(1, h);
  for (int i = 0; i < 20; ++i) {
    const double r = 0.05 + i * (1.3 - 0.05) / 19.0;
    Vec x(1);
    x << r;
    CHECK(pot.long_range_value(x) ==
          doctest::Approx(oracles::blend_formula(r, 1.25, 1.0, 1.0))
              .epsilon(1e-13));
  }
}

TEST_CASE("hamilton_field free and linear-force cases") {
  SymbolModel free2 = flat_free(2);
  Vec x(2), xi(2);
  x << 5.0, 2.0;
  xi << 0.7, -0.2;
  HamiltonField f = hamilton_field(free2, x, xi, SymbolVariant::Full);
  CHECK((f.velocity - xi).norm() == 0.0);
  CHECK(f.force.norm() == 0.0);

  SymbolModel m = abs_potential_1d();
  Vec x1(1), xi1(1);
  x1 << 2.0;
  xi1 << 0.4;
  HamiltonField g = hamilton_field(m, x1, xi1, SymbolVariant::Full);
  CHECK(g.velocity[0] == doctest::Approx(0.4));
  CHECK(g.force[0] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("hamilton_field agrees with finite differences of eval_symbol") {
  SymbolModel m(MetricField::isotropic_bump(2, 0.3, 0.8),
                PotentialSpec::homogeneous(
                    2, PotentialSpec::Homogeneous{1.25, 1.0, {1.0, 0.4}, {0.2}})
                    .with_short_gaussian(0.5, 1.2));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    Vec x(2), xi(2);
    x << u(rng), u(rng);
    xi << u(rng), u(rng);
    const double r = x.norm();
    // keep clear of the blend seam where the formula is only C^3
    if (r > 0.4 && r < 1.1) continue;
    HamiltonField f = hamilton_field(m, x, xi, SymbolVariant::Full);
    auto in_x = [&](const Vec& xx) {
      return eval_symbol(m, xx, xi, SymbolVariant::Full);
    };
    auto in_xi = [&](const Vec& xixi) {
      return eval_symbol(m, x, xixi, SymbolVariant::Full);
    };
    Vec gx = oracles::fd_gradient(in_x, x);
    Vec gxi = oracles::fd_gradient(in_xi, xi);
    const double scale = std::max(1.0, gx.norm());
    CHECK((f.force + gx).norm() / scale < 1e-6);
    CHECK((f.velocity - gxi).norm() / std::max(1.0, gxi.norm()) < 1e-6);
  }
}

TEST_CASE("metric stays positive definite along sampled rays") {
  MetricField m = MetricField::isotropic_bump(2, 0.4, 0.6);
  for (double r : {0.0, 0.5, 3.0, 40.0, 500.0}) {
    Vec x(2);
    x << r, -0.3 * r;
    CHECK(m.min_eigenvalue(x) > 0.0);
  }
  CHECK_THROWS_AS(MetricField::isotropic_bump(2, -1.5, 0.8), ConfigError);
}

TEST_CASE("exact homogeneity holds outside the blend radius") {
  PotentialSpec::Homogeneous h;
  h.beta = 1.25;
  h.cos_coeffs = {1.0, 0.3};
  h.sin_coeffs = {0.15};
  PotentialSpec pot = PotentialSpec::homogeneous(2, h);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    Vec dir(2);
    dir << u(rng), u(rng);
    if (dir.norm() < 1e-3) continue;
    dir.normalize();
    const Vec x = 1.0000001 * dir;
    const double base = pot.long_range_value(x);
    for (double lam : {1.0, 2.0, 5.0, 32.0}) {
      const double lhs = pot.long_range_value(lam * x);
      CHECK(lhs == doctest::Approx(std::pow(lam, 1.25) * base).epsilon(1e-13));
    }
  }
}

TEST_CASE("verify_decay: flat model passes with zero constants") {
  DecayReport rep = verify_decay(flat_free(2), DecaySampleBox{});
  CHECK(rep.pass);
  for (const auto& row : rep.rows) {
    CHECK(row.c_alpha == 0.0);
    CHECK(row.pass);
  }
}

TEST_CASE("verify_decay: bump metric slope matches -mu") {
  SymbolModel m(MetricField::isotropic_bump(2, 1.0, 0.75),
                PotentialSpec::zero(2));
  DecaySampleBox box;
  box.r_min = 10.0;
  box.r_max = 1e3;
  DecayReport rep = verify_decay(m, box);
  CHECK(rep.pass);
  for (const auto& row : rep.rows) {
    if (row.part == "metric" && row.alpha == std::vector<int>{0, 0})
      CHECK(row.fitted_slope == doctest::Approx(-0.75).epsilon(0.13));
  }
}

TEST_CASE("verify_decay: degree-1 potential grows with slope +1") {
  SymbolModel m = abs_potential_1d();
  DecaySampleBox box;
  box.r_min = 10.0;
  box.r_max = 1e3;
  DecayReport rep = verify_decay(m, box);
  CHECK(rep.pass);
  bool found = false;
  for (const auto& row : rep.rows) {
    if (row.part == "VL" && row.alpha == std::vector<int>{0}) {
      found = true;
      CHECK(row.fitted_slope == doctest::Approx(1.0).epsilon(0.1));
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(verify_decay(m, DecaySampleBox{1.0, 50.0, 10, 4, 3}),
                  ConfigError);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(PotentialSpec::homogeneous(
                      1, PotentialSpec::Homogeneous{1.6, 1.0, {1.0}, {}}),
                  ConfigError);
  CHECK_THROWS_AS(PotentialSpec::algebraic_long(1, 1.0, 0.4), ConfigError);
  CHECK_THROWS_AS(PotentialSpec::zero(1).with_short_algebraic(1.0, 0.9),
                  ConfigError);
  CHECK_THROWS_AS(
      SymbolModel(MetricField::flat(2), PotentialSpec::zero(1)), ConfigError);
  // d = 1 profile with odd coefficients: V = |x| x^ = x for |x| >= 1
  PotentialSpec odd = PotentialSpec::homogeneous(
      1, PotentialSpec::Homogeneous{1.0, 1.0, {0.0, 1.0}, {}});
  Vec xp(1), xm(1);
  xp << 3.0;
  xm << -3.0;
  CHECK(odd.long_range_value(xp) == doctest::Approx(3.0));
  CHECK(odd.long_range_value(xm) == doctest::Approx(-3.0));
}

TEST_CASE("sphere gradient and the nonvanishing flag") {
  PotentialSpec::Homogeneous h;
  h.beta = 1.25;
  PotentialSpec pot = PotentialSpec::homogeneous(2, h, true);
  Vec dir(2);
  dir << 1.0, 0.0;
  CHECK(pot.sphere_gradient(dir).norm() == doctest::Approx(1.25));
  CHECK(pot.min_sphere_gradient() > 0.0);
}
