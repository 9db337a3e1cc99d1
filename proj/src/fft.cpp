#include "dollard/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace dollard {
namespace fft {

namespace {

std::mutex plan_mutex;

fftw_plan get_plan(const std::vector<int>& shape, int sign) {
  static std::map<std::pair<std::vector<int>, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(shape, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  size_t total = 1;
  for (int n : shape) total *= size_t(n);
  // Plan on a scratch buffer with FFTW_UNALIGNED so the plan can execute on
  // any caller array via fftw_execute_dft.
  std::vector<std::complex<double>> scratch(total);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft(int(shape.size()), shape.data(), ptr, ptr,
                                 sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(std::move(key), plan);
  return plan;
}

}  // namespace

void forward(std::vector<std::complex<double>>& data,
             const std::vector<int>& shape) {
  size_t total = 1;
  for (int n : shape) total *= size_t(n);
  if (data.size() != total) throw std::runtime_error("fft shape mismatch");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(get_plan(shape, FFTW_FORWARD), ptr, ptr);
}

void inverse(std::vector<std::complex<double>>& data,
             const std::vector<int>& shape) {
  size_t total = 1;
  for (int n : shape) total *= size_t(n);
  if (data.size() != total) throw std::runtime_error("fft shape mismatch");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(get_plan(shape, FFTW_BACKWARD), ptr, ptr);
  const double scale = 1.0 / double(total);
  for (auto& z : data) z *= scale;
}

}  // namespace fft
}  // namespace dollard
