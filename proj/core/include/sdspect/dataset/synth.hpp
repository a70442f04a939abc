#pragma once

#include <cstdint>
#include <string>

#include "sdspect/dataset/recording.hpp"

namespace sdspect::dataset {

// Synthetic ECoG generator. The signal is a sum of unit-RMS band-limited
// noise components scaled by per-band amplitudes, delta-dominant as in
// injured brains. Each injected SD multiplies the per-band amplitudes by the
// configured suppression depth over the event duration, with raised-cosine
// onset and recovery ramps. An unsuppressed broadband floor keeps the weaker
// bands from being noise-free.
struct SynthConfig {
  double duration_s{86400.0};
  double sample_rate_hz{200.0};
  int n_events{8};

  // Base amplitudes (RMS scale) of the generated components. Generation uses
  // full delta (0.5-4 Hz) so the restricted delta window sees power.
  double delta_power{1.0};
  double alpha_power{0.45};
  double beta_power{0.30};
  double noise_floor{0.10};  // broadband 0.5-45 Hz, never suppressed

  // Multiplicative amplitude factors during an event, in (0, 1].
  double delta_depth{0.60};
  double alpha_depth{0.35};
  double beta_depth{0.50};

  double suppression_duration_s{900.0};
  double onset_ramp_s{60.0};

  std::uint64_t noise_seed{0};
};

void validate_synth_config(const SynthConfig& cfg);

// Fully determined by (cfg, id): same inputs give bitwise-identical samples.
// Throws ErrorKind::data if the requested events cannot be placed without
// overlap.
EcogRecording synthesize(const SynthConfig& cfg, const std::string& id);

}  // namespace sdspect::dataset
