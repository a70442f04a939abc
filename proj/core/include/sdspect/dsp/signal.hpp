#pragma once

#include <cstddef>
#include <vector>

namespace sdspect::dsp {

// Uniformly sampled single-channel ECoG trace, microvolts.
struct Signal {
  std::vector<double> samples;
  double sample_rate_hz{0.0};

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

// Enforces: fs > 0, length >= 1, all samples finite.
void validate_signal(const Signal& s);

}  // namespace sdspect::dsp
