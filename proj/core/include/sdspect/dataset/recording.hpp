#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sdspect/dsp/signal.hpp"

namespace sdspect::dataset {

// One annotated SD event. Annotations are kept sorted and non-overlapping.
struct SdAnnotation {
  double onset_s{0.0};
  double duration_s{0.0};
};

struct EcogRecording {
  std::string id;
  dsp::Signal signal;
  std::vector<SdAnnotation> annotations;
};

// Enforces signal invariants, annotation ordering/overlap, and that every
// annotation falls within the signal duration.
void validate_recording(const EcogRecording& rec);

// Recording file format, version 1. Text header lines
//   version 1
//   id <token>
//   sample_rate_hz <g17>
//   n_samples <count>
//   annotations <onset_s>,<duration_s>;...
// followed immediately by n_samples little-endian IEEE-754 doubles.
// Round-trips are bit-exact.
void write_recording(const std::filesystem::path& path,
                     const EcogRecording& rec);
EcogRecording read_recording(const std::filesystem::path& path);

}  // namespace sdspect::dataset
