#ifndef DOLLARD_WAVEFRONT_HPP
#define DOLLARD_WAVEFRONT_HPP

#include "dollard/flow.hpp"
#include "dollard/grid.hpp"
#include "dollard/propagator.hpp"

#include <map>

namespace dollard {

// Phase-space labeling convention used by every probe and packet here:
// the point (x0, xi0) at scale lambda refers to the window
//     probe(y) = N e^{-i lambda xi0 . (y - x0)} exp(-|y-x0|^2 / (2 w^2)),
// w = lambda^{-1/2}, so the coefficient <probe, u> integrates
// e^{+i lambda xi0 . y} (conj) against u and measures the analysis component
// u_hat(+lambda xi0) with u_hat = int e^{+i x xi} u dx. Under this labeling
// the quadratic-time shift law holds with the stated sign; the conjugate
// labeling would flip the xi sign of every detected center.
struct CoherentProbe {
  Vec x0;
  Vec xi0;
  double lambda;
  double width() const { return 1.0 / std::sqrt(lambda); }
};

// Unit-norm probe window sampled on the lattice (minimal-image distances).
GridState make_probe(const GridState& like, const CoherentProbe& probe);
// Same packet used as initial data.
GridState make_coherent_state(const GridState& like, const Vec& x0,
                              const Vec& xi0, double lambda);
// Gaussian with no carrier (real, centered at x0), unit norm.
GridState make_gaussian(const GridState& like, const Vec& x0, double width);

Cplx probe_coefficient(const GridState& u, const CoherentProbe& probe);

struct DetectorOptions {
  double regular_threshold = -3.0;
  double singular_threshold = -1.0;
  double noise_floor = 1e-15;
};

struct WFSample {
  Vec x0;
  Vec xi0;
  std::vector<double> lambdas;
  std::vector<double> magnitudes;
  double fitted_exponent;
  std::string verdict;  // regular | singular | inconclusive
};

// Fits log|<probe_lambda, u>| against log lambda over a geometric ladder
// (>= 5 rungs, all within the Nyquist band) and maps the exponent to a
// verdict through the configured thresholds.
WFSample probe_decay(const GridState& u, const Vec& x0, const Vec& xi0,
                     const std::vector<double>& lambda_ladder,
                     const DetectorOptions& opt = {});

// S^+_sigma (x,xi) = (x + sigma grad V^L(+xi^), xi),
// S^-_sigma (x,xi) = (x - sigma grad V^L(-xi^), xi).
struct ShiftMap {
  int sign;  // +1 or -1
  double sigma;
  PotentialSpec spec;
};

PhasePoint shift_map_apply(const ShiftMap& map, const PhasePoint& point);

// Shift-law measurement (d = 1): evolves a coherent state at `center`
// through e^{itH_0} e^{-itH}, localizes the output by a probe sweep over a
// fixed physical center lattice, and compares against the shift map with
// sigma = -t^2/2.
struct ShiftLawOptions {
  double probe_lambda = 256.0;
  double center_halfwidth = 2.0;  // sweep radius around the predicted center
  double center_spacing = 0.0;    // 0 -> the grid spacing
};

struct ShiftReport {
  PhasePoint detected;
  PhasePoint predicted;
  double displacement_error = 0.0;
  double displacement_error_cells = 0.0;
  double xi_error = 0.0;
  double freq_cell = 0.0;
  double norm_loss = 0.0;
  bool pass_position = false;  // within 3 sweep cells
  bool pass_xi = false;        // within one frequency cell
};

ShiftReport verify_shift_law(const SymbolModel& model, const PhasePoint& center,
                             double t, const GridState& like,
                             const PropagatorConfig& cfg,
                             const ShiftLawOptions& opt = {});

// Smoothing measurement: probe verdicts of e^{i sigma V^L(D)} e^{itH_0} u0
// across a panel of centers, plus Lemma-11 ratio sweeps over translates and
// a sigma ladder. sigma = 0 rows are kept as the no-claim baseline and stay
// out of the boundedness statistic.
struct SmoothingOptions {
  std::vector<double> sigma_ladder;  // positive rungs
  std::vector<int> weight_orders{1, 2};
  int n_translates = 10;
  double translate_halfwidth = 2.0;
  std::vector<double> panel_x{-2.0, 0.0, 2.0};
  std::vector<double> panel_xi{0.8, 1.0, 1.2};
  std::vector<double> probe_ladder{4, 8, 16, 32, 64};
  double gauss_width = 1.0;
  double t = 1.0;
  double ratio_threshold = 1e2;
};

struct SmoothingReport {
  struct RatioRow {
    double sigma;
    int N;
    double x0;
    double ratio;
    double s;
    bool baseline;  // sigma == 0 control
  };
  struct ProbeRow {
    double sigma;
    double x0;
    double xi0;
    double exponent;
    std::string verdict;
  };
  std::vector<RatioRow> ratios;
  std::vector<ProbeRow> probes;
  std::map<int, double> ratio_spread;  // per N: max/min over sigma>0 rows
  bool all_regular = false;
  bool ratios_bounded = false;
};

SmoothingReport verify_smoothing(const SymbolModel& model,
                                 const GridState& like,
                                 const SmoothingOptions& opt,
                                 const DetectorOptions& det = {});

}  // namespace dollard

#endif
