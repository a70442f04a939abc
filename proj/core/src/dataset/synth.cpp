#include "sdspect/dataset/synth.hpp"

#include <algorithm>
#include <cmath>

#include "sdspect/dsp/filter.hpp"
#include "sdspect/error.hpp"
#include "sdspect/rng.hpp"

namespace sdspect::dataset {

namespace {

struct Component {
  double lo_hz;
  double hi_hz;
  double amplitude;
  double depth;  // amplitude factor during events; 1 = unsuppressed
};

// Unit-RMS band-limited Gaussian noise.
std::vector<double> band_noise(std::size_t n, double lo_hz, double hi_hz,
                               double fs, Rng& rng) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.gaussian();
  const dsp::BandpassFilter filter(lo_hz, hi_hz, fs);
  x = filter.apply_zero_phase(x);
  double energy = 0.0;
  for (double v : x) energy += v * v;
  const double rms = std::sqrt(energy / static_cast<double>(n));
  require(rms > 0.0, ErrorKind::data, "degenerate noise component");
  const double inv = 1.0 / rms;
  for (double& v : x) v *= inv;
  return x;
}

// Raised-cosine dip: 1 outside the event, `depth` in the plateau.
double envelope_at(double t, double onset, double duration, double ramp,
                   double depth) {
  const double u = t - onset;
  if (u < 0.0 || u > duration) return 1.0;
  double r = 1.0;
  if (u < ramp) {
    r = 0.5 * (1.0 - std::cos(M_PI * u / ramp));
  } else if (u > duration - ramp) {
    r = 0.5 * (1.0 - std::cos(M_PI * (duration - u) / ramp));
  }
  return 1.0 - (1.0 - depth) * r;
}

std::vector<double> place_events(const SynthConfig& cfg, Rng& rng) {
  const int n = cfg.n_events;
  std::vector<double> onsets;
  if (n == 0) return onsets;
  const double span = cfg.duration_s - cfg.suppression_duration_s;
  require(span > 0.0, ErrorKind::data,
          "event duration exceeds recording duration");
  const int max_attempts = 1000 * n;
  int attempts = 0;
  while (static_cast<int>(onsets.size()) < n) {
    require(attempts++ < max_attempts, ErrorKind::data,
            "cannot place events without overlap");
    const double onset = rng.uniform(0.0, span);
    bool ok = true;
    for (double existing : onsets) {
      if (std::abs(existing - onset) < cfg.suppression_duration_s) {
        ok = false;
        break;
      }
    }
    if (ok) onsets.push_back(onset);
  }
  std::sort(onsets.begin(), onsets.end());
  return onsets;
}

}  // namespace

void validate_synth_config(const SynthConfig& cfg) {
  require(cfg.duration_s > 0.0 && cfg.sample_rate_hz > 0.0, ErrorKind::config,
          "duration and sample rate must be positive");
  require(cfg.n_events >= 0, ErrorKind::config, "n_events must be >= 0");
  require(cfg.delta_power > cfg.alpha_power &&
              cfg.alpha_power > cfg.beta_power && cfg.beta_power > 0.0,
          ErrorKind::config,
          "base powers must be delta-dominant: delta > alpha > beta > 0");
  require(cfg.noise_floor >= 0.0, ErrorKind::config,
          "noise floor must be >= 0");
  for (double d : {cfg.delta_depth, cfg.alpha_depth, cfg.beta_depth}) {
    require(d > 0.0 && d <= 1.0, ErrorKind::config,
            "suppression depths must lie in (0, 1]");
  }
  require(cfg.delta_depth < 1.0 || cfg.alpha_depth < 1.0 ||
              cfg.beta_depth < 1.0,
          ErrorKind::config, "at least one band must be suppressed");
  require(cfg.onset_ramp_s > 0.0 &&
              cfg.suppression_duration_s >= 2.0 * cfg.onset_ramp_s,
          ErrorKind::config,
          "suppression duration must cover both cosine ramps");
}

EcogRecording synthesize(const SynthConfig& cfg, const std::string& id) {
  validate_synth_config(cfg);
  const double fs = cfg.sample_rate_hz;
  const std::size_t n =
      static_cast<std::size_t>(std::llround(cfg.duration_s * fs));
  require(n > 0, ErrorKind::config, "empty synthetic recording");

  // Independent deterministic streams per concern; the id participates so
  // different recordings from one master seed differ.
  std::uint64_t base = cfg.noise_seed;
  for (char c : id) base = base * 131 + static_cast<unsigned char>(c);
  Rng placement_rng(derive_seed(base, 0));

  const std::vector<double> onsets = place_events(cfg, placement_rng);

  const Component components[] = {
      {0.5, 4.0, cfg.delta_power, cfg.delta_depth},
      {8.0, 12.0, cfg.alpha_power, cfg.alpha_depth},
      {12.0, 30.0, cfg.beta_power, cfg.beta_depth},
      {0.5, 45.0, cfg.noise_floor, 1.0},
  };

  std::vector<double> samples(n, 0.0);
  std::uint64_t stream = 1;
  for (const Component& comp : components) {
    if (comp.amplitude <= 0.0) {
      ++stream;
      continue;
    }
    Rng rng(derive_seed(base, stream++));
    std::vector<double> noise = band_noise(n, comp.lo_hz, comp.hi_hz, fs, rng);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / fs;
      double env = 1.0;
      if (comp.depth < 1.0) {
        for (double onset : onsets) {
          env *= envelope_at(t, onset, cfg.suppression_duration_s,
                             cfg.onset_ramp_s, comp.depth);
        }
      }
      samples[i] += comp.amplitude * env * noise[i];
    }
  }

  EcogRecording rec;
  rec.id = id;
  rec.signal.sample_rate_hz = fs;
  rec.signal.samples = std::move(samples);
  for (double onset : onsets) {
    rec.annotations.push_back({onset, cfg.suppression_duration_s});
  }
  validate_recording(rec);
  return rec;
}

}  // namespace sdspect::dataset
