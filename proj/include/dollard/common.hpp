#ifndef DOLLARD_COMMON_HPP
#define DOLLARD_COMMON_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dollard {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Error taxonomy. Everything derives from std::runtime_error so callers that
// do not care can catch one type; the CLI maps ConfigError to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IntegrationError : std::runtime_error {
  double t_fail;
  IntegrationError(const std::string& msg, double t)
      : std::runtime_error(msg), t_fail(t) {}
};
struct SolverError : std::runtime_error {
  double last_residual;
  SolverError(const std::string& msg, double res)
      : std::runtime_error(msg), last_residual(res) {}
};
struct QuadratureError : std::runtime_error {
  double achieved;
  QuadratureError(const std::string& msg, double est)
      : std::runtime_error(msg), achieved(est) {}
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const Vec& v) { return v.allFinite(); }

inline void require_finite(const Vec& v, const char* what) {
  if (!v.allFinite())
    throw std::domain_error(std::string("non-finite ") + what);
}
inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw std::domain_error(std::string("non-finite ") + what);
}

// <x> = (1+|x|^2)^{1/2}, the standard Japanese bracket.
inline double jap(const Vec& x) { return std::sqrt(1.0 + x.squaredNorm()); }
inline double jap(double x) { return std::sqrt(1.0 + x * x); }

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = (n == 1) ? a : a + (b - a) * i / double(n - 1);
  return out;
}

inline std::vector<double> geomspace(double a, double b, int n) {
  std::vector<double> out(n);
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i)
    out[i] = (n == 1) ? a : std::exp(la + (lb - la) * i / double(n - 1));
  return out;
}

// Least-squares slope of log(y) against log(x). Pairs with y <= floor are
// dropped; returns -inf when fewer than two usable points remain (the
// "identically at the limit" case in the flow/phase reports).
struct SlopeFit {
  double slope = -std::numeric_limits<double>::infinity();
  double intercept = 0.0;
  int n_used = 0;
};

inline SlopeFit fit_loglog_slope(const std::vector<double>& x,
                                 const std::vector<double>& y,
                                 double floor = 0.0) {
  SlopeFit f;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(y[i] > floor) || !(x[i] > 0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++n;
  }
  f.n_used = n;
  if (n < 2) return f;
  const double det = n * sxx - sx * sx;
  if (det == 0) return f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

// Multi-indices with |alpha| <= max_order in dimension d, graded order.
inline std::vector<std::vector<int>> multi_indices(int d, int max_order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == d - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      cur[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  for (int total = 0; total <= max_order; ++total) rec(rec, 0, total);
  return out;
}

}  // namespace dollard

#endif
