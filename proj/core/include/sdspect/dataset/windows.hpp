#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sdspect/dataset/recording.hpp"
#include "sdspect/dsp/spectrogram.hpp"

namespace sdspect::dataset {

inline constexpr std::size_t kWindowMinutes = 30;

// One 30-minute training/inference unit. images is row-major
// [channels][32][30]; channels follow the fixed band rank order. Both the
// images and the power vector are min-max normalized per window.
struct WindowSample {
  std::vector<double> images;
  std::size_t channels{0};
  std::vector<double> power;  // kWindowMinutes values
  int label{0};
  std::string recording_id;
  std::size_t start_minute{0};
};

enum class LabelRule {
  onset_in_window,         // positive iff an SD onset lies in [start, end)
  onset_in_central_third,  // positive iff an onset lies in the middle 10 min
};

struct WindowingOptions {
  std::vector<dsp::BandName> bands{dsp::BandName::restricted_delta,
                                   dsp::BandName::alpha};
  int stride_min{1};
  LabelRule label_rule{LabelRule::onset_in_window};
  double leak_tau_s{600.0};
  // Which band feeds the leaky power vector; full_ac unless studying a
  // band-specific vector.
  dsp::BandName leak_band{dsp::BandName::full_ac};
};

// Full-length per-recording features: unnormalized band images (one per band
// actually extracted, rank order) plus the smoothed power series. Windows
// are cheap column slices of this.
struct PreprocessedRecording {
  std::string id;
  std::vector<SdAnnotation> annotations;
  std::size_t n_frames{0};
  std::vector<dsp::BandSpectrogram> band_images;
  dsp::PowerSeries power;
};

// Bandpass to the AC range, STFT, band extraction, leaky power integration.
PreprocessedRecording preprocess(const EcogRecording& rec,
                                 const WindowingOptions& opt);

// Windows start at minutes 0, stride, 2*stride, ...; each requested band's
// image slice and the power slice are min-max normalized independently.
// Requested bands must be present in the preprocessed recording.
std::vector<WindowSample> make_windows(const PreprocessedRecording& pre,
                                       const WindowingOptions& opt);
std::vector<WindowSample> make_windows(const EcogRecording& rec,
                                       const WindowingOptions& opt);

struct SplitResult {
  std::vector<WindowSample> train;
  std::vector<WindowSample> val;
  std::vector<std::string> train_ids;
  std::vector<std::string> val_ids;
};

// Grouped split: every window of a recording lands on one side, so
// overlapping windows never leak across the boundary. Deterministic in seed.
SplitResult split_by_recording(const std::vector<WindowSample>& samples,
                               double val_fraction, std::uint64_t seed);

// Window cache, version 1: magic "SDWIN", u32 version, u64 count, then per
// window u32 C, u32 H, u32 W, u8 label, u32 start_minute, u16 id length, id
// bytes, C*H*W image doubles, W power doubles. All little-endian.
void save_windows(const std::filesystem::path& path,
                  const std::vector<WindowSample>& samples);
std::vector<WindowSample> load_windows(const std::filesystem::path& path);

}  // namespace sdspect::dataset
