#ifndef DOLLARD_FFT_HPP
#define DOLLARD_FFT_HPP

#include <complex>
#include <vector>

namespace dollard {

// Thin cached-plan wrapper around FFTW for complex lattices (d <= 2).
// forward: unnormalized DFT with kernel e^{-2 pi i j k / n} per axis, so a
// physical carrier e^{+i xi_k x} lands in bin k; inverse applies the 1/N
// normalization. Plans use FFTW_ESTIMATE, keeping results bit-reproducible
// across runs.
namespace fft {

void forward(std::vector<std::complex<double>>& data,
             const std::vector<int>& shape);
void inverse(std::vector<std::complex<double>>& data,
             const std::vector<int>& shape);

}  // namespace fft

}  // namespace dollard

#endif
