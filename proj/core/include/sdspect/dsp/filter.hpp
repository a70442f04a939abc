#pragma once

#include <cstddef>
#include <vector>

#include "sdspect/dsp/bands.hpp"
#include "sdspect/dsp/signal.hpp"

namespace sdspect::dsp {

// One normalized second-order section (a0 == 1).
struct Biquad {
  double b0{0}, b1{0}, b2{0};
  double a1{0}, a2{0};
};

// Digital Butterworth bandpass designed from the analog prototype via the
// bilinear transform with prewarped edges. A lowpass prototype of the given
// order yields 2*order poles, paired into `order` biquad sections; the gain
// is normalized to unity at the warped geometric center frequency.
class BandpassFilter {
public:
  BandpassFilter(double lo_hz, double hi_hz, double sample_rate_hz,
                 int order = 4);

  const std::vector<Biquad>& sections() const { return sections_; }
  double sample_rate_hz() const { return sample_rate_hz_; }

  // Samples until the impulse response settles below 1e-8 of its peak,
  // measured numerically at construction time.
  std::size_t transient_samples() const { return transient_samples_; }

  // Single forward pass through the cascade, zero initial conditions.
  std::vector<double> apply_forward(const std::vector<double>& x) const;

  // Forward-backward pass (zero phase). The input is extended at both ends
  // by odd reflection over one transient length before filtering, so edge
  // transients stay out of the returned samples.
  std::vector<double> apply_zero_phase(const std::vector<double>& x) const;

  // Magnitude response of a single pass at the given frequency.
  double magnitude(double freq_hz) const;

private:
  double sample_rate_hz_{0};
  std::vector<Biquad> sections_;
  std::size_t transient_samples_{0};
};

// Zero-phase 4th-order Butterworth bandpass over the band edges.
// Rejects bands at or above Nyquist and signals shorter than three times the
// filter transient.
Signal bandpass(const Signal& signal, const BandDef& band);

}  // namespace sdspect::dsp
