#include "sdspect/dsp/signal.hpp"

#include <cmath>

#include "sdspect/error.hpp"

namespace sdspect::dsp {

void validate_signal(const Signal& s) {
  require(s.sample_rate_hz > 0.0, ErrorKind::config,
          "sample rate must be positive");
  require(!s.samples.empty(), ErrorKind::data, "signal is empty");
  for (double v : s.samples) {
    if (!std::isfinite(v))
      fail(ErrorKind::nonfinite, "signal contains a non-finite sample");
  }
}

}  // namespace sdspect::dsp
