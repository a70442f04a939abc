#include "sdspect/dsp/spectrogram.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sdspect/dsp/fft.hpp"
#include "sdspect/error.hpp"

namespace sdspect::dsp {

Spectrogram stft(const Signal& signal) {
  validate_signal(signal);
  const double fs = signal.sample_rate_hz;
  const std::size_t frame_len =
      static_cast<std::size_t>(std::llround(fs * kFrameDurationS));
  require(signal.samples.size() >= frame_len, ErrorKind::data,
          "signal shorter than one 60 s frame");

  const std::size_t n_frames = signal.samples.size() / frame_len;
  const std::size_t nfft = next_pow2(frame_len);
  const std::size_t n_freq = nfft / 2 + 1;
  const FftPlan plan(nfft);

  // Periodic Hann window.
  std::vector<double> window(frame_len);
  for (std::size_t i = 0; i < frame_len; ++i) {
    window[i] =
        0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(i) /
                              static_cast<double>(frame_len)));
  }

  Spectrogram spec;
  spec.frame_duration_s = kFrameDurationS;
  spec.n_freq = n_freq;
  spec.n_frames = n_frames;
  spec.freq_axis_hz.resize(n_freq);
  for (std::size_t k = 0; k < n_freq; ++k) {
    spec.freq_axis_hz[k] =
        static_cast<double>(k) * fs / static_cast<double>(nfft);
  }
  spec.power.assign(n_freq * n_frames, 0.0);

  std::vector<std::complex<double>> buf(nfft);
  for (std::size_t t = 0; t < n_frames; ++t) {
    const double* seg = signal.samples.data() + t * frame_len;
    for (std::size_t i = 0; i < frame_len; ++i) buf[i] = seg[i] * window[i];
    std::fill(buf.begin() + static_cast<std::ptrdiff_t>(frame_len), buf.end(),
              std::complex<double>{0.0, 0.0});
    plan.forward(buf);

    // One-sided power with interior bins doubled: the per-frame bin sum then
    // equals the windowed-segment energy (Parseval).
    const double scale = 1.0 / static_cast<double>(nfft);
    spec.at(0, t) = std::norm(buf[0]) * scale;
    for (std::size_t k = 1; k + 1 < n_freq; ++k) {
      spec.at(k, t) = 2.0 * std::norm(buf[k]) * scale;
    }
    spec.at(n_freq - 1, t) = std::norm(buf[nfft / 2]) * scale;
  }
  return spec;
}

namespace {

// Indices [first, last) of raw bins with band.lo <= f < band.hi.
std::pair<std::size_t, std::size_t> band_bin_range(const Spectrogram& spec,
                                                   const BandDef& band) {
  const auto& f = spec.freq_axis_hz;
  const auto lo = std::lower_bound(f.begin(), f.end(), band.lo_hz);
  const auto hi = std::lower_bound(f.begin(), f.end(), band.hi_hz);
  return {static_cast<std::size_t>(lo - f.begin()),
          static_cast<std::size_t>(hi - f.begin())};
}

}  // namespace

BandSpectrogram extract_band(const Spectrogram& spec, const BandDef& band) {
  validate_band(band);
  require(band.hi_hz <= spec.freq_axis_hz.back(), ErrorKind::range,
          "band outside the spectrogram frequency axis");
  const auto [first, last] = band_bin_range(spec, band);
  const std::size_t n_bins = last - first;
  require(n_bins >= kBandImageRows, ErrorKind::data,
          "fewer raw frequency bins in band than image rows");

  BandSpectrogram out;
  out.band = band;
  out.n_frames = spec.n_frames;
  out.normalized = false;
  out.image.assign(kBandImageRows * spec.n_frames, 0.0);

  // Contiguous groups whose sizes differ by at most one; the first
  // (n_bins % rows) groups take the extra bin. Row 0 = lowest frequencies.
  const std::size_t base = n_bins / kBandImageRows;
  const std::size_t extra = n_bins % kBandImageRows;
  std::size_t bin = first;
  for (std::size_t row = 0; row < kBandImageRows; ++row) {
    const std::size_t group = base + (row < extra ? 1 : 0);
    for (std::size_t t = 0; t < spec.n_frames; ++t) {
      double sum = 0.0;
      for (std::size_t k = 0; k < group; ++k) sum += spec.at(bin + k, t);
      out.at(row, t) = sum / static_cast<double>(group);
    }
    bin += group;
  }
  return out;
}

BandSpectrogram normalize_band(BandSpectrogram bspec) {
  const auto [lo_it, hi_it] =
      std::minmax_element(bspec.image.begin(), bspec.image.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi > lo) {
    const double inv = 1.0 / (hi - lo);
    for (double& v : bspec.image) v = (v - lo) * inv;
  } else {
    std::fill(bspec.image.begin(), bspec.image.end(), 0.0);
  }
  bspec.normalized = true;
  return bspec;
}

PowerSeries leaky_power_integral(const Spectrogram& spec, const BandDef& band,
                                 double tau_s) {
  require(tau_s > 0.0, ErrorKind::config, "leak time constant must be > 0");
  const auto [first, last] = band_bin_range(spec, band);

  PowerSeries series;
  series.tau_s = tau_s;
  series.values.resize(spec.n_frames);
  const double lambda = std::exp(-spec.frame_duration_s / tau_s);
  double y = 0.0;
  for (std::size_t t = 0; t < spec.n_frames; ++t) {
    double p = 0.0;
    for (std::size_t k = first; k < last; ++k) p += spec.at(k, t);
    y = (t == 0) ? p : lambda * y + (1.0 - lambda) * p;
    series.values[t] = y;
  }
  return series;
}

}  // namespace sdspect::dsp
