#include "sdspect/dsp/filter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sdspect/error.hpp"

namespace sdspect::dsp {

namespace {

using cplx = std::complex<double>;

double section_magnitude(const Biquad& s, double omega) {
  const cplx z1 = std::polar(1.0, -omega);
  const cplx z2 = z1 * z1;
  const cplx num = s.b0 + s.b1 * z1 + s.b2 * z2;
  const cplx den = 1.0 + s.a1 * z1 + s.a2 * z2;
  return std::abs(num) / std::abs(den);
}

double max_pole_radius(const Biquad& s) {
  const double disc = s.a1 * s.a1 - 4.0 * s.a2;
  if (disc < 0.0) return std::sqrt(s.a2);  // conjugate pair
  const double r1 = std::abs((-s.a1 + std::sqrt(disc)) / 2.0);
  const double r2 = std::abs((-s.a1 - std::sqrt(disc)) / 2.0);
  return std::max(r1, r2);
}

Biquad section_from_conjugate_pole(const cplx& z) {
  Biquad s;
  s.b0 = 1.0;
  s.b1 = 0.0;
  s.b2 = -1.0;
  s.a1 = -2.0 * z.real();
  s.a2 = std::norm(z);
  return s;
}

Biquad section_from_real_poles(double z1, double z2) {
  Biquad s;
  s.b0 = 1.0;
  s.b1 = 0.0;
  s.b2 = -1.0;
  s.a1 = -(z1 + z2);
  s.a2 = z1 * z2;
  return s;
}

}  // namespace

BandpassFilter::BandpassFilter(double lo_hz, double hi_hz,
                               double sample_rate_hz, int order)
    : sample_rate_hz_(sample_rate_hz) {
  require(sample_rate_hz > 0.0, ErrorKind::config,
          "sample rate must be positive");
  require(lo_hz > 0.0 && lo_hz < hi_hz, ErrorKind::config,
          "band edges must satisfy 0 < lo < hi");
  require(hi_hz < sample_rate_hz / 2.0, ErrorKind::range,
          "band upper edge must be below Nyquist");
  require(order >= 1, ErrorKind::config, "filter order must be >= 1");

  // Bilinear transform constant and prewarped band edges.
  const double c = 2.0 * sample_rate_hz;
  const double w1 = c * std::tan(M_PI * lo_hz / sample_rate_hz);
  const double w2 = c * std::tan(M_PI * hi_hz / sample_rate_hz);
  const double bw = w2 - w1;
  const double w0sq = w1 * w2;

  const auto bandpass_poles = [&](const cplx& proto) {
    const cplx bp = bw * proto;
    const cplx sq = std::sqrt(bp * bp - 4.0 * w0sq);
    return std::pair<cplx, cplx>{(bp + sq) / 2.0, (bp - sq) / 2.0};
  };
  const auto to_z = [&](const cplx& s) { return (c + s) / (c - s); };

  const int n = order;
  for (int k = 0; k < n; ++k) {
    const double theta = M_PI * (2.0 * k + n + 1.0) / (2.0 * n);
    const cplx proto{std::cos(theta), std::sin(theta)};
    if (proto.imag() > 1e-12) {
      // Upper half-plane prototype pole: its two bandpass poles each pair
      // with their own conjugate (contributed by the conjugate prototype).
      const auto [s1, s2] = bandpass_poles(proto);
      sections_.push_back(section_from_conjugate_pole(to_z(s1)));
      sections_.push_back(section_from_conjugate_pole(to_z(s2)));
    } else if (std::abs(proto.imag()) <= 1e-12) {
      // Real prototype pole (odd order): one section holds both poles.
      const auto [s1, s2] = bandpass_poles(proto);
      if (std::abs(s1.imag()) > 1e-9 * std::abs(s1.real())) {
        sections_.push_back(section_from_conjugate_pole(to_z(s1)));
      } else {
        sections_.push_back(
            section_from_real_poles(to_z(s1).real(), to_z(s2).real()));
      }
    }
  }

  for (const Biquad& s : sections_) {
    require(max_pole_radius(s) < 1.0, ErrorKind::config,
            "filter design produced an unstable section");
  }

  // Normalize to unit gain at the warped center frequency.
  const double omega_c = 2.0 * std::atan(std::sqrt(w0sq) / c);
  double gain = 1.0;
  for (const Biquad& s : sections_) gain *= section_magnitude(s, omega_c);
  const double per_section =
      std::pow(1.0 / gain, 1.0 / static_cast<double>(sections_.size()));
  for (Biquad& s : sections_) {
    s.b0 *= per_section;
    s.b1 *= per_section;
    s.b2 *= per_section;
  }

  // Measure the impulse-response settling length. The slowest pole bounds
  // how far we need to look.
  double r_max = 0.0;
  for (const Biquad& s : sections_) r_max = std::max(r_max, max_pole_radius(s));
  const std::size_t horizon = std::min<std::size_t>(
      static_cast<std::size_t>(std::log(1e-12) / std::log(r_max)) + 1024,
      std::size_t{1} << 24);
  std::vector<double> impulse(horizon, 0.0);
  impulse[0] = 1.0;
  impulse = apply_forward(impulse);
  double peak = 0.0;
  for (double v : impulse) peak = std::max(peak, std::abs(v));
  std::size_t last = 0;
  for (std::size_t i = 0; i < impulse.size(); ++i) {
    if (std::abs(impulse[i]) >= 1e-8 * peak) last = i;
  }
  transient_samples_ = last + 1;
}

std::vector<double> BandpassFilter::apply_forward(
    const std::vector<double>& x) const {
  std::vector<double> y = x;
  for (const Biquad& s : sections_) {
    // Direct form II transposed.
    double z1 = 0.0, z2 = 0.0;
    for (double& v : y) {
      const double in = v;
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
  return y;
}

std::vector<double> BandpassFilter::apply_zero_phase(
    const std::vector<double>& x) const {
  require(!x.empty(), ErrorKind::data, "cannot filter an empty signal");
  const std::size_t n = x.size();
  const std::size_t pad = std::min(transient_samples_, n - 1);

  // Odd reflection about the end samples keeps the extension continuous.
  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = 0; i < pad; ++i) ext.push_back(2.0 * x[0] - x[pad - i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 0; i < pad; ++i)
    ext.push_back(2.0 * x[n - 1] - x[n - 2 - i]);

  ext = apply_forward(ext);
  std::reverse(ext.begin(), ext.end());
  ext = apply_forward(ext);
  std::reverse(ext.begin(), ext.end());

  return std::vector<double>(ext.begin() + static_cast<std::ptrdiff_t>(pad),
                             ext.begin() + static_cast<std::ptrdiff_t>(pad + n));
}

double BandpassFilter::magnitude(double freq_hz) const {
  const double omega = 2.0 * M_PI * freq_hz / sample_rate_hz_;
  double m = 1.0;
  for (const Biquad& s : sections_) m *= section_magnitude(s, omega);
  return m;
}

Signal bandpass(const Signal& signal, const BandDef& band) {
  validate_signal(signal);
  validate_band(band);
  const BandpassFilter filter(band.lo_hz, band.hi_hz, signal.sample_rate_hz);
  require(signal.samples.size() >= 3 * filter.transient_samples(),
          ErrorKind::data,
          "signal shorter than three filter transient lengths");
  Signal out;
  out.sample_rate_hz = signal.sample_rate_hz;
  out.samples = filter.apply_zero_phase(signal.samples);
  return out;
}

}  // namespace sdspect::dsp
