#ifndef DOLLARD_ODE_HPP
#define DOLLARD_ODE_HPP

#include "dollard/common.hpp"

#include <functional>

namespace dollard {

// Embedded Dormand-Prince 5(4) pair with FSAL, PI step-size control and
// 4th-order dense output. Integrates forward or backward in t.
struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-10;
  double initial_step = 0.0;  // 0 -> automatic
  double max_step = std::numeric_limits<double>::infinity();
  long max_steps = 20'000'000;
};

struct OdeStats {
  long n_accepted = 0;
  long n_rejected = 0;
  long n_rhs = 0;
};

class Dopri5 {
 public:
  using Rhs = std::function<void(double, const Vec&, Vec&)>;
  using Observer = std::function<void(double, const Vec&)>;

  Dopri5(Rhs rhs, OdeOptions opt = {}) : rhs_(std::move(rhs)), opt_(opt) {}

  // Integrates from (t0,y0) to t1. `t_out` must be sorted in the direction
  // of integration and contained in [t0,t1]; each requested time is emitted
  // through `on_sample` using the local dense interpolant. `on_step`, when
  // set, sees every accepted step endpoint (used for conservation monitors).
  Vec solve(double t0, const Vec& y0, double t1,
            const std::vector<double>& t_out = {},
            const Observer& on_sample = nullptr,
            const Observer& on_step = nullptr);

  const OdeStats& stats() const { return stats_; }

 private:
  Rhs rhs_;
  OdeOptions opt_;
  OdeStats stats_;
};

}  // namespace dollard

#endif
