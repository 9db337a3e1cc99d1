#ifndef DOLLARD_FLOW_HPP
#define DOLLARD_FLOW_HPP

#include "dollard/ode.hpp"
#include "dollard/phase.hpp"
#include "dollard/symbols.hpp"

namespace dollard {

struct PhasePoint {
  Vec x;
  Vec xi;
};

// Which Hamiltonian generates the flow:
//   kinetic    k(x,xi)
//   full       p(x,xi) = k + V^L + V^S
//   scaled     p^lambda(x,xi) = k + V/lambda^2
struct FlowVariant {
  enum class Kind { Kinetic, Full, Scaled };
  Kind kind = Kind::Full;
  double lambda = 1.0;

  static FlowVariant kinetic() { return {Kind::Kinetic, 1.0}; }
  static FlowVariant full() { return {Kind::Full, 1.0}; }
  static FlowVariant scaled(double lambda) {
    if (!(lambda >= 1.0)) throw ConfigError("scaled flow requires lambda >= 1");
    return {Kind::Scaled, lambda};
  }
  double potential_weight() const {
    switch (kind) {
      case Kind::Kinetic: return 0.0;
      case Kind::Full: return 1.0;
      case Kind::Scaled: return 1.0 / (lambda * lambda);
    }
    return 0.0;
  }
};

struct Trajectory {
  std::vector<double> times;      // strictly monotone
  std::vector<PhasePoint> states;
  double tol = 0.0;               // integrator tolerance used
  double energy_drift = 0.0;      // max |E(t) - E(0)| over accepted steps
  double t_final = 0.0;
  PhasePoint final_state;
  long n_steps = 0;
};

// Conserved energy of the given variant at a phase point.
double flow_energy(const SymbolModel& m, const FlowVariant& v,
                   const PhasePoint& p);

// Adaptive integration of the Hamilton flow from t=0 to t_end. Sample times
// (sorted toward t_end) are emitted through the dense interpolant; when
// empty, accepted step endpoints are recorded instead.
Trajectory integrate_flow(const SymbolModel& m, const PhasePoint& start,
                          double t_end, const FlowVariant& variant, double tol,
                          const std::vector<double>& sample_times = {});

// Nontrapping diagnostic: largest linear escape rate. Fits |x(t)| >= c|t| - C
// on the recorded samples and passes when c >= 0.1 * asymptotic speed.
struct NontrappingFit {
  double c = 0.0;
  double C = 0.0;
  double asymptotic_speed = 0.0;
  bool pass = false;
};
NontrappingFit check_nontrapping(const Trajectory& traj);

// Scattering asymptotes by geometric-ladder extrapolation of
// z(t) = x(t) - grad_xi Psi(t, xi(t)) (kinetic flow; Phi for the full flow).
struct AsymptoteSide {
  Vec x;
  Vec xi;
  double tail_exponent_x = 0.0;   // rho in |z - x_pm| ~ C t^-rho
  double tail_exponent_xi = 0.0;
  double error_estimate = 0.0;
};
struct ScatteringData {
  AsymptoteSide plus;
  AsymptoteSide minus;
  double horizon = 0.0;
  double tol = 0.0;
};

struct AsymptoteOptions {
  double T_max = 1e4;
  double T0 = 0.0;  // 0 -> 8/|xi_0|
  double tol = 1e-10;
  bool both_signs = true;
  bool check_nontrapping = true;
};

ScatteringData compute_asymptotes(const SymbolModel& m, const PhasePoint& start,
                                  const AsymptoteOptions& opt = {},
                                  FlowVariant::Kind flow_kind =
                                      FlowVariant::Kind::Kinetic);

// One side only (used by the shooting solver); sign = +1 or -1.
AsymptoteSide compute_asymptote_side(const SymbolModel& m,
                                     const PhasePoint& start, int sign,
                                     const AsymptoteOptions& opt = {},
                                     FlowVariant::Kind flow_kind =
                                         FlowVariant::Kind::Kinetic);

// The classical wave map W_pm: (x_pm, xi_pm) -> (x_0, xi_0) and its inverse.
// direction Forward solves the shooting problem by damped Newton iteration
// on the inverse (asymptote) map with finite-difference Jacobians.
enum class WaveMapDirection { Forward, Inverse };

struct WaveMapOptions {
  AsymptoteOptions asym{};
  double tol = 1e-8;
  int max_iterations = 30;
  double fd_step = 1e-5;
};

PhasePoint wave_map(const SymbolModel& m, const PhasePoint& point,
                    WaveMapDirection direction, int sign,
                    const WaveMapOptions& opt = {});

// High-energy asymptotics: x(t; x0, lambda xi0) - grad_xi Phi(t, xi(t)) and
// xi(t)/lambda along a geometric lambda ladder, extrapolated and compared
// with the kinetic-flow asymptotes from the same start.
struct HighEnergyResult {
  PhasePoint limit;
  double rate_x = 0.0;   // fitted lambda-exponents of the ladder increments
  double rate_xi = 0.0;
  PhasePoint reference;  // (x_pm, xi_pm) from compute_asymptotes
  double discrepancy = 0.0;
  double combined_error = 0.0;
  bool consistent = false;
};

HighEnergyResult high_energy_limit(const SymbolModel& m,
                                   const PhaseFunction& phi,
                                   const PhasePoint& start, double t,
                                   const std::vector<double>& lambda_ladder,
                                   double tol = 1e-10);

// Flow of the time-dependent effective Hamiltonian
// l(t;z,xi) = p(z + grad_xi Phi(t,xi), xi) - dPhi/dt(t,xi).
Trajectory effective_hamiltonian_flow(const SymbolModel& m,
                                      const PhaseFunction& phi,
                                      const PhasePoint& start, double t_end,
                                      double tol,
                                      const std::vector<double>& sample_times =
                                          {});

// Log-log slope audit of the propagation estimates along one trajectory.
struct EstimateRow {
  std::string quantity;
  double fitted_slope;
  double expected_slope;
  bool pass;
};
struct EstimateReport {
  std::vector<EstimateRow> rows;
  bool pass = true;
};

EstimateReport verify_flow_estimates(const SymbolModel& m,
                                     const PhasePoint& start, double T_max,
                                     double tol = 1e-10);

}  // namespace dollard

#endif
