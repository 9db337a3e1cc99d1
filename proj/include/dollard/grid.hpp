#ifndef DOLLARD_GRID_HPP
#define DOLLARD_GRID_HPP

#include "dollard/common.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace dollard {

using Cplx = std::complex<double>;

// Complex wavefunction on a uniform periodic lattice, d in {1,2}, power-of-two
// points per axis. Coordinates are centered: x_j = -L/2 + j*L/n. The
// frequency lattice is xi_k = 2*pi*k~/L with k~ the signed index, and bin k
// holds the amplitude of the physical carrier e^{+i xi_k . x}.
class GridState {
 public:
  GridState(std::vector<int> n_per_axis, std::vector<double> extent);

  int dim() const { return int(n_.size()); }
  int n(int axis) const { return n_[axis]; }
  double extent(int axis) const { return extent_[axis]; }
  const std::vector<int>& shape() const { return n_; }
  size_t size() const { return data_.size(); }
  double dx(int axis) const { return extent_[axis] / n_[axis]; }
  double cell_volume() const;
  double coord(int axis, int idx) const {
    return -0.5 * extent_[axis] + idx * dx(axis);
  }
  double freq(int axis, int idx) const {
    const int half = n_[axis] / 2;
    const int signed_idx = idx < half ? idx : idx - n_[axis];
    return 2.0 * M_PI * signed_idx / extent_[axis];
  }
  double nyquist(int axis) const { return M_PI * n_[axis] / extent_[axis]; }

  std::vector<Cplx>& data() { return data_; }
  const std::vector<Cplx>& data() const { return data_; }
  Cplx& at(size_t flat) { return data_[flat]; }

  size_t flat_index(const std::vector<int>& idx) const;
  // Iterates (flat index, position) / (flat index, frequency) over the grid.
  void for_each_point(
      const std::function<void(size_t, const Vec&)>& fn) const;
  void for_each_mode(
      const std::function<void(size_t, const Vec&)>& fn) const;

  double norm() const;  // discrete L^2 norm (cell-volume weighted)
  double norm_sq() const;
  // |u|^2 mass fraction inside the outer `band` fraction of each axis.
  double boundary_mass_fraction(double band = 0.05) const;

  GridState& operator*=(Cplx c);

  // Binary container: u64 d, u64 n per axis, f64 L per axis (little-endian),
  // then interleaved re/im f64 in row-major order.
  void save(const std::string& path) const;
  static GridState load(const std::string& path);
  // CSV of |u|^2 marginals (one block per axis in d=2).
  void export_marginals_csv(const std::string& path) const;

 private:
  std::vector<int> n_;
  std::vector<double> extent_;
  std::vector<Cplx> data_;
};

// A unimodular Fourier multiplier e^{i F(xi)} tabulated on the lattice of a
// specific grid.
struct MultiplierSpec {
  std::string label;
  std::vector<int> shape;
  std::vector<double> symbol;  // F(xi_k), row-major over the lattice

  static MultiplierSpec from_function(
      const GridState& like, std::string label,
      const std::function<double(const Vec&)>& F);
  // F(xi) = t |xi|^2 / 2 (so e^{iF} = e^{itH_0}).
  static MultiplierSpec free_phase(const GridState& like, double t);
};

GridState apply_multiplier(const GridState& u, const MultiplierSpec& spec);

// Spectral Sobolev norm ||<xi>^s u_hat|| with continuum-consistent constants.
double sobolev_norm(const GridState& u, double s);

}  // namespace dollard

#endif
