#ifndef DOLLARD_PROPAGATOR_HPP
#define DOLLARD_PROPAGATOR_HPP

#include "dollard/grid.hpp"
#include "dollard/phase.hpp"
#include "dollard/symbols.hpp"

namespace dollard {

// Split-step configuration. The potential is evaluated through a radial
// saturation map that freezes it beyond truncation_radius_frac * L/2 (a
// polynomially growing V cannot be periodized as-is), and a complex
// absorbing layer occupies the outer absorb_width fraction of each side.
struct PropagatorConfig {
  double dt = 1e-3;
  double absorb_width = 0.10;
  double absorb_strength = 5.0;
  double truncation_radius_frac = 0.8;
  bool strict = false;
};

struct EvolveStats {
  long n_steps = 0;
  double norm_loss_fraction = 0.0;  // 1 - |u_out|^2 / |u_in|^2
};

// e^{-itH} with H = -1/2 Laplacian + V by Strang splitting
// (half kinetic, potential phase, half kinetic), flat metric only.
GridState evolve(const GridState& u0, const SymbolModel& model, double t,
                 const PropagatorConfig& cfg, EvolveStats* stats = nullptr);

// The truncated potential actually applied on the lattice (for wrap guards
// and inspection).
std::vector<double> truncated_potential_table(const GridState& like,
                                              const SymbolModel& model,
                                              const PropagatorConfig& cfg);

// Multiplier with symbol Phi(t, .) tabulated on the lattice by quadrature.
MultiplierSpec phase_multiplier(const GridState& like, const PhaseFunction& pf,
                                double t);
// Multiplier with symbol sigma * V^L(xi) (the blended potential evaluated on
// the frequency lattice; smooth at xi = 0).
MultiplierSpec potential_multiplier(const GridState& like,
                                    const SymbolModel& model, double sigma);

// Dollard conjugation identity at fixed t > 0:
//   v_dollard = e^{i Phi(t,D)} e^{-itH} u0
//   v_split   = e^{i F(t,D)} e^{i sigma V^L(D)} e^{itH_0} e^{-itH} u0
// with sigma = t^{1+beta}/(1+beta) and F from the homogeneous decomposition
// (quadrature fallback below the closed-form threshold).
struct DollardConjugate {
  GridState dollard;
  GridState split;
  double discrepancy;  // ||v_dollard - v_split|| / ||u0||
  double sigma;
};

DollardConjugate dollard_conjugate(const GridState& u0, const SymbolModel& model,
                                   const PhaseFunction& phi, double t,
                                   const PropagatorConfig& cfg);

// Lemma-11-style smoothing measurement:
//   weighted_sobolev = || <x>^-N e^{i sigma V^L(D)} u ||_{H^s},  s = (beta-1) N
//   weighted_input   = || <x>^N u ||
struct SmoothingNorms {
  double weighted_sobolev;
  double weighted_input;
  double ratio;
  double s;
};

SmoothingNorms smoothing_norms(const GridState& u, const SymbolModel& model,
                               double sigma, int N,
                               double boundary_threshold = 1e-6);

}  // namespace dollard

#endif
