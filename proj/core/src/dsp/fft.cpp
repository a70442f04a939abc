#include "sdspect/dsp/fft.hpp"

#include <cmath>

#include "sdspect/error.hpp"

namespace sdspect::dsp {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
  require(n >= 1 && (n & (n - 1)) == 0, ErrorKind::config,
          "FFT size must be a power of two");
  bitrev_.resize(n);
  std::size_t log2n = 0;
  while ((std::size_t{1} << log2n) < n) ++log2n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2n; ++b) r |= ((i >> b) & 1u) << (log2n - 1 - b);
    bitrev_[i] = r;
  }
  twiddles_.resize(n / 2);
  const double step = -2.0 * M_PI / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double a = step * static_cast<double>(k);
    twiddles_[k] = {std::cos(a), std::sin(a)};
  }
}

void FftPlan::forward(std::vector<std::complex<double>>& data) const {
  require(data.size() == n_, ErrorKind::shape, "FFT input size mismatch");
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t tstep = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> w = twiddles_[k * tstep];
        const std::complex<double> even = data[start + k];
        const std::complex<double> odd = data[start + k + half] * w;
        data[start + k] = even + odd;
        data[start + k + half] = even - odd;
      }
    }
  }
}

}  // namespace sdspect::dsp
