#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sdspect::dsp {

std::size_t next_pow2(std::size_t n);

// Iterative radix-2 decimation-in-time FFT for power-of-two sizes.
// Twiddle factors and the bit-reversal permutation are precomputed once per
// plan, so one plan can transform many frames.
class FftPlan {
public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  // In-place forward transform; data.size() must equal size().
  void forward(std::vector<std::complex<double>>& data) const;

private:
  std::size_t n_{0};
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddles_;  // e^{-2 pi i k / n}, k < n/2
};

}  // namespace sdspect::dsp
