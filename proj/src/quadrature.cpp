#include "dollard/quadrature.hpp"

#include <algorithm>
#include <queue>

namespace dollard {

namespace {

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights sit at
// the odd Kronrod nodes. Values from the QUADPACK dqk15 tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename Value>
struct Ops;

template <>
struct Ops<double> {
  static double zero(int) { return 0.0; }
  static void axpy(double& acc, double w, double v) { acc += w * v; }
  static double scaled(double v, double h) { return h * v; }
  static double norm(double v) { return std::abs(v); }
};

template <>
struct Ops<Vec> {
  static Vec zero(int dim) { return Vec::Zero(dim); }
  static void axpy(Vec& acc, double w, const Vec& v) { acc += w * v; }
  static Vec scaled(const Vec& v, double h) { return h * v; }
  static double norm(const Vec& v) { return v.cwiseAbs().maxCoeff(); }
};

template <typename Value, typename Eval>
Value adaptive(const Eval& f, int dim, double a, double b,
               const QuadratureOptions& opt) {
  using O = Ops<Value>;

  struct Segment {
    double a, b;
    double error;
    size_t slot;
    bool operator<(const Segment& o) const { return error < o.error; }
  };

  auto gk15 = [&](double lo, double hi, Value& out) -> double {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    Value resg = O::zero(dim), resk = O::zero(dim);
    for (int i = 0; i < 7; ++i) {
      Value f1 = f(c - h * kXgk[i]);
      Value f2 = f(c + h * kXgk[i]);
      O::axpy(resk, kWgk[i], f1);
      O::axpy(resk, kWgk[i], f2);
      if (i % 2 == 1) {
        O::axpy(resg, kWg[i / 2], f1);
        O::axpy(resg, kWg[i / 2], f2);
      }
    }
    Value fc = f(c);
    O::axpy(resk, kWgk[7], fc);
    O::axpy(resg, kWg[3], fc);
    out = O::scaled(resk, h);
    Value diff = resk;
    O::axpy(diff, -1.0, resg);
    return O::norm(O::scaled(diff, h));
  };

  std::vector<double> nodes{a, b};
  const double lo = std::min(a, b), hi = std::max(a, b);
  for (double t : opt.breakpoints)
    if (t > lo && t < hi) nodes.push_back(t);
  std::sort(nodes.begin(), nodes.end());
  if (a > b) std::reverse(nodes.begin(), nodes.end());

  std::priority_queue<Segment> queue;
  std::vector<Value> values;
  Value total = O::zero(dim);
  double total_err = 0.0;
  auto push_segment = [&](double s0, double s1) {
    Value v = O::zero(dim);
    const double e = gk15(s0, s1, v);
    queue.push(Segment{s0, s1, e, values.size()});
    values.push_back(v);
    O::axpy(total, 1.0, v);
    total_err += e;
  };
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    push_segment(nodes[i], nodes[i + 1]);

  auto target = [&]() {
    return std::max(opt.abs_tol, opt.rel_tol * O::norm(total));
  };
  while (total_err > target() && int(values.size()) < opt.max_intervals &&
         !queue.empty()) {
    Segment worst = queue.top();
    queue.pop();
    if (worst.error <= 0) break;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) break;  // machine-precision interval
    O::axpy(total, -1.0, values[worst.slot]);
    total_err -= worst.error;
    push_segment(worst.a, mid);
    push_segment(mid, worst.b);
  }
  if (total_err > std::max(target() * 10.0, 1e-9) &&
      int(values.size()) >= opt.max_intervals)
    throw QuadratureError("quadrature failed to converge", total_err);
  return total;
}

}  // namespace

double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    const QuadratureOptions& opt) {
  if (a == b) return 0.0;
  return adaptive<double>(f, 1, a, b, opt);
}

Vec integrate_gk_vec(const std::function<Vec(double)>& f, int dim, double a,
                     double b, const QuadratureOptions& opt) {
  if (a == b) return Vec::Zero(dim);
  return adaptive<Vec>(f, dim, a, b, opt);
}

}  // namespace dollard
