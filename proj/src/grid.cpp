#include "dollard/grid.hpp"

#include "dollard/fft.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace dollard {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

GridState::GridState(std::vector<int> n_per_axis, std::vector<double> extent)
    : n_(std::move(n_per_axis)), extent_(std::move(extent)) {
  if (n_.empty() || n_.size() > 2)
    throw ConfigError("grid dimension must be 1 or 2");
  if (n_.size() != extent_.size())
    throw ConfigError("grid shape and extent sizes differ");
  size_t total = 1;
  for (size_t a = 0; a < n_.size(); ++a) {
    if (!power_of_two(n_[a]))
      throw ConfigError("lattice size must be a power of two");
    if (!(extent_[a] > 0)) throw ConfigError("extent must be positive");
    total *= size_t(n_[a]);
  }
  data_.assign(total, Cplx(0.0, 0.0));
}

double GridState::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim(); ++a) v *= dx(a);
  return v;
}

size_t GridState::flat_index(const std::vector<int>& idx) const {
  size_t flat = 0;
  for (size_t a = 0; a < n_.size(); ++a) flat = flat * n_[a] + idx[a];
  return flat;
}

void GridState::for_each_point(
    const std::function<void(size_t, const Vec&)>& fn) const {
  Vec x(dim());
  if (dim() == 1) {
    for (int i = 0; i < n_[0]; ++i) {
      x[0] = coord(0, i);
      fn(size_t(i), x);
    }
  } else {
    size_t flat = 0;
    for (int i = 0; i < n_[0]; ++i) {
      x[0] = coord(0, i);
      for (int j = 0; j < n_[1]; ++j, ++flat) {
        x[1] = coord(1, j);
        fn(flat, x);
      }
    }
  }
}

void GridState::for_each_mode(
    const std::function<void(size_t, const Vec&)>& fn) const {
  Vec xi(dim());
  if (dim() == 1) {
    for (int i = 0; i < n_[0]; ++i) {
      xi[0] = freq(0, i);
      fn(size_t(i), xi);
    }
  } else {
    size_t flat = 0;
    for (int i = 0; i < n_[0]; ++i) {
      xi[0] = freq(0, i);
      for (int j = 0; j < n_[1]; ++j, ++flat) {
        xi[1] = freq(1, j);
        fn(flat, xi);
      }
    }
  }
}

double GridState::norm_sq() const {
  double acc = 0.0;
  for (const Cplx& z : data_) acc += std::norm(z);
  return acc * cell_volume();
}

double GridState::norm() const { return std::sqrt(norm_sq()); }

double GridState::boundary_mass_fraction(double band) const {
  double inside = 0.0, total = 0.0;
  for_each_point([&](size_t flat, const Vec& x) {
    const double w = std::norm(data_[flat]);
    total += w;
    for (int a = 0; a < dim(); ++a)
      if (std::abs(x[a]) >= (0.5 - band) * extent_[a]) {
        inside += w;
        break;
      }
  });
  return total > 0 ? inside / total : 0.0;
}

GridState& GridState::operator*=(Cplx c) {
  for (Cplx& z : data_) z *= c;
  return *this;
}

void GridState::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  const uint64_t d = uint64_t(dim());
  out.write(reinterpret_cast<const char*>(&d), 8);
  for (int a = 0; a < dim(); ++a) {
    const uint64_t na = uint64_t(n_[a]);
    out.write(reinterpret_cast<const char*>(&na), 8);
  }
  for (int a = 0; a < dim(); ++a)
    out.write(reinterpret_cast<const char*>(&extent_[a]), 8);
  for (const Cplx& z : data_) {
    const double re = z.real(), im = z.imag();
    out.write(reinterpret_cast<const char*>(&re), 8);
    out.write(reinterpret_cast<const char*>(&im), 8);
  }
  if (!out) throw std::runtime_error("short write to " + path);
}

GridState GridState::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  uint64_t d = 0;
  in.read(reinterpret_cast<char*>(&d), 8);
  if (!in || d < 1 || d > 2) throw std::runtime_error("bad grid container");
  std::vector<int> n(d);
  std::vector<double> ext(d);
  for (uint64_t a = 0; a < d; ++a) {
    uint64_t na = 0;
    in.read(reinterpret_cast<char*>(&na), 8);
    n[a] = int(na);
  }
  for (uint64_t a = 0; a < d; ++a)
    in.read(reinterpret_cast<char*>(&ext[a]), 8);
  GridState g(n, ext);
  for (Cplx& z : g.data_) {
    double re = 0, im = 0;
    in.read(reinterpret_cast<char*>(&re), 8);
    in.read(reinterpret_cast<char*>(&im), 8);
    z = Cplx(re, im);
  }
  if (!in) throw std::runtime_error("truncated grid container " + path);
  return g;
}

void GridState::export_marginals_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "axis,coord,abs2_marginal\n";
  out.precision(17);
  for (int a = 0; a < dim(); ++a) {
    std::vector<double> marg(n_[a], 0.0);
    for_each_point([&](size_t flat, const Vec&) {
      // recover the index along axis a from the flat index
      size_t rest = flat;
      int idx_a = 0;
      for (int b = dim() - 1; b >= 0; --b) {
        const int ib = int(rest % n_[b]);
        rest /= n_[b];
        if (b == a) idx_a = ib;
      }
      marg[idx_a] += std::norm(data_[flat]);
    });
    const double weight = cell_volume() / dx(a);
    for (int i = 0; i < n_[a]; ++i)
      out << a << ',' << coord(a, i) << ',' << marg[i] * weight << '\n';
  }
}

MultiplierSpec MultiplierSpec::from_function(
    const GridState& like, std::string label,
    const std::function<double(const Vec&)>& F) {
  MultiplierSpec spec;
  spec.label = std::move(label);
  spec.shape = like.shape();
  spec.symbol.resize(like.size());
  like.for_each_mode([&](size_t flat, const Vec& xi) {
    const double v = F(xi);
    if (!std::isfinite(v))
      throw std::domain_error("multiplier symbol is not finite at a mode");
    spec.symbol[flat] = v;
  });
  return spec;
}

MultiplierSpec MultiplierSpec::free_phase(const GridState& like, double t) {
  return from_function(like, "free_phase", [t](const Vec& xi) {
    return 0.5 * t * xi.squaredNorm();
  });
}

GridState apply_multiplier(const GridState& u, const MultiplierSpec& spec) {
  if (spec.shape != u.shape() || spec.symbol.size() != u.size())
    throw ConfigError("multiplier tabulated on a different lattice");
  GridState out = u;
  fft::forward(out.data(), u.shape());
  for (size_t k = 0; k < out.size(); ++k)
    out.data()[k] *= std::polar(1.0, spec.symbol[k]);
  fft::inverse(out.data(), u.shape());
  return out;
}

double sobolev_norm(const GridState& u, double s) {
  std::vector<Cplx> hat = u.data();
  fft::forward(hat, u.shape());
  // u_hat(xi) ~ cell_volume * DFT; Plancherel with dxi = (2 pi / L)^d then
  // divides by (2 pi)^d.
  double acc = 0.0;
  u.for_each_mode([&](size_t flat, const Vec& xi) {
    const double w = std::pow(1.0 + xi.squaredNorm(), s);
    acc += w * std::norm(hat[flat]);
  });
  // For s = 0 this reduces to the discrete L^2 norm (Parseval).
  const double cv = u.cell_volume();
  double measure = cv * cv;
  for (int a = 0; a < u.dim(); ++a) measure /= u.extent(a);
  return std::sqrt(acc * measure);
}

}  // namespace dollard
