#pragma once

#include <cstddef>
#include <vector>

#include "sdspect/dsp/bands.hpp"
#include "sdspect/dsp/signal.hpp"

namespace sdspect::dsp {

// Height of every band-restricted image. A fixed row count lets differently
// wide bands stack channel-wise with identical shapes.
inline constexpr std::size_t kBandImageRows = 32;

inline constexpr double kFrameDurationS = 60.0;

// Time-frequency power grid, one column per minute.
// power is row-major [n_freq][n_frames]; freq_axis_hz spans 0..Nyquist.
struct Spectrogram {
  std::vector<double> power;
  std::vector<double> freq_axis_hz;
  double frame_duration_s{kFrameDurationS};
  std::size_t n_freq{0};
  std::size_t n_frames{0};

  double at(std::size_t f, std::size_t t) const {
    return power[f * n_frames + t];
  }
  double& at(std::size_t f, std::size_t t) { return power[f * n_frames + t]; }
};

// Non-overlapping 60 s frames, Hann window, zero-padding to the next power
// of two, one-sided |DFT|^2 with interior bins doubled so that the per-frame
// bin sum equals the windowed-segment energy. Rejects signals shorter than
// one frame.
Spectrogram stft(const Signal& signal);

// Band-restricted image: 32 rows x n_frames.
struct BandSpectrogram {
  BandDef band;
  std::vector<double> image;  // row-major [kBandImageRows][n_frames]
  std::size_t n_frames{0};
  bool normalized{false};

  double at(std::size_t row, std::size_t t) const {
    return image[row * n_frames + t];
  }
  double& at(std::size_t row, std::size_t t) {
    return image[row * n_frames + t];
  }
};

// Raw bins with band.lo <= f < band.hi are partitioned into 32 contiguous
// groups whose sizes differ by at most one; each output row (row 0 = lowest
// frequencies) is the mean power of its group. Rejects bands covering fewer
// than 32 raw bins.
BandSpectrogram extract_band(const Spectrogram& spec, const BandDef& band);

// Min-max normalization of the whole image to [0, 1]; a constant image maps
// to all zeros. Idempotent.
BandSpectrogram normalize_band(BandSpectrogram bspec);

// Per-minute in-band power, exponentially smoothed.
struct PowerSeries {
  std::vector<double> values;
  double tau_s{600.0};
};

// p[n] = total in-band power of frame n; y[0] = p[0],
// y[n] = lambda*y[n-1] + (1-lambda)*p[n] with lambda = exp(-60/tau_s).
PowerSeries leaky_power_integral(const Spectrogram& spec, const BandDef& band,
                                 double tau_s);

}  // namespace sdspect::dsp
