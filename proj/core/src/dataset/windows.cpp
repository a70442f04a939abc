#include "sdspect/dataset/windows.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>

#include "sdspect/dsp/filter.hpp"
#include "sdspect/error.hpp"
#include "sdspect/rng.hpp"

namespace sdspect::dataset {

namespace {

void minmax_normalize(double* values, std::size_t n) {
  double lo = values[0], hi = values[0];
  for (std::size_t i = 1; i < n; ++i) {
    lo = std::min(lo, values[i]);
    hi = std::max(hi, values[i]);
  }
  if (hi > lo) {
    const double inv = 1.0 / (hi - lo);
    for (std::size_t i = 0; i < n; ++i) values[i] = (values[i] - lo) * inv;
  } else {
    for (std::size_t i = 0; i < n; ++i) values[i] = 0.0;
  }
}

bool window_label(const std::vector<SdAnnotation>& annotations,
                  std::size_t start_minute, LabelRule rule) {
  double lo_s = static_cast<double>(start_minute) * 60.0;
  double hi_s = static_cast<double>(start_minute + kWindowMinutes) * 60.0;
  if (rule == LabelRule::onset_in_central_third) {
    const double third = (hi_s - lo_s) / 3.0;
    lo_s += third;
    hi_s -= third;
  }
  for (const SdAnnotation& a : annotations) {
    if (a.onset_s >= lo_s && a.onset_s < hi_s) return true;
  }
  return false;
}

}  // namespace

PreprocessedRecording preprocess(const EcogRecording& rec,
                                 const WindowingOptions& opt) {
  validate_recording(rec);
  require(!opt.bands.empty(), ErrorKind::config, "no bands requested");

  const dsp::Signal ac =
      dsp::bandpass(rec.signal, dsp::canonical_band(dsp::BandName::full_ac));
  const dsp::Spectrogram spec = dsp::stft(ac);

  PreprocessedRecording pre;
  pre.id = rec.id;
  pre.annotations = rec.annotations;
  pre.n_frames = spec.n_frames;
  for (dsp::BandName name : dsp::sort_bands_by_rank(opt.bands)) {
    pre.band_images.push_back(
        dsp::extract_band(spec, dsp::canonical_band(name)));
  }
  pre.power = dsp::leaky_power_integral(
      spec, dsp::canonical_band(opt.leak_band), opt.leak_tau_s);
  return pre;
}

std::vector<WindowSample> make_windows(const PreprocessedRecording& pre,
                                       const WindowingOptions& opt) {
  require(opt.stride_min >= 1, ErrorKind::config, "stride must be >= 1");
  require(pre.n_frames >= kWindowMinutes, ErrorKind::data,
          "recording shorter than one 30-minute window");

  // Select the requested bands (rank order) from the preprocessed images.
  std::vector<const dsp::BandSpectrogram*> selected;
  for (dsp::BandName name : dsp::sort_bands_by_rank(opt.bands)) {
    const dsp::BandSpectrogram* found = nullptr;
    for (const auto& img : pre.band_images) {
      if (img.band.name == name) found = &img;
    }
    require(found != nullptr, ErrorKind::config,
            std::string("band not preprocessed: ") + dsp::band_name(name));
    selected.push_back(found);
  }

  const std::size_t channels = selected.size();
  const std::size_t rows = dsp::kBandImageRows;
  const std::size_t width = kWindowMinutes;
  const std::size_t stride = static_cast<std::size_t>(opt.stride_min);

  std::vector<WindowSample> out;
  for (std::size_t start = 0; start + width <= pre.n_frames; start += stride) {
    WindowSample w;
    w.recording_id = pre.id;
    w.start_minute = start;
    w.channels = channels;
    w.images.resize(channels * rows * width);
    for (std::size_t c = 0; c < channels; ++c) {
      double* dst = w.images.data() + c * rows * width;
      for (std::size_t r = 0; r < rows; ++r) {
        const double* src = selected[c]->image.data() + r * pre.n_frames + start;
        std::copy(src, src + width, dst + r * width);
      }
      minmax_normalize(dst, rows * width);
    }
    w.power.resize(width);
    std::copy(pre.power.values.begin() + static_cast<std::ptrdiff_t>(start),
              pre.power.values.begin() + static_cast<std::ptrdiff_t>(start + width),
              w.power.begin());
    minmax_normalize(w.power.data(), width);
    w.label = window_label(pre.annotations, start, opt.label_rule) ? 1 : 0;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<WindowSample> make_windows(const EcogRecording& rec,
                                       const WindowingOptions& opt) {
  return make_windows(preprocess(rec, opt), opt);
}

SplitResult split_by_recording(const std::vector<WindowSample>& samples,
                               double val_fraction, std::uint64_t seed) {
  require(val_fraction > 0.0 && val_fraction < 1.0, ErrorKind::config,
          "val_fraction must lie in (0, 1)");
  std::vector<std::string> ids;
  for (const WindowSample& w : samples) {
    if (std::find(ids.begin(), ids.end(), w.recording_id) == ids.end())
      ids.push_back(w.recording_id);
  }
  require(ids.size() >= 2, ErrorKind::data,
          "grouped split needs at least two recordings");
  std::sort(ids.begin(), ids.end());

  Rng rng(seed);
  rng.shuffle(ids);
  std::size_t n_val = static_cast<std::size_t>(
      std::llround(val_fraction * static_cast<double>(ids.size())));
  n_val = std::clamp<std::size_t>(n_val, 1, ids.size() - 1);

  SplitResult result;
  result.val_ids.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n_val));
  result.train_ids.assign(ids.begin() + static_cast<std::ptrdiff_t>(n_val), ids.end());
  std::sort(result.val_ids.begin(), result.val_ids.end());
  std::sort(result.train_ids.begin(), result.train_ids.end());
  for (const WindowSample& w : samples) {
    const bool in_val =
        std::binary_search(result.val_ids.begin(), result.val_ids.end(),
                           w.recording_id);
    (in_val ? result.val : result.train).push_back(w);
  }
  return result;
}

namespace {

template <class T>
void put_le(std::string& out, T value) {
  for (std::size_t b = 0; b < sizeof(T); ++b)
    out.push_back(static_cast<char>((value >> (8 * b)) & 0xffu));
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_le(out, bits);
}

class Reader {
public:
  explicit Reader(std::istream& in) : in_(in) {}

  template <class T>
  T get_le() {
    unsigned char bytes[sizeof(T)];
    read(bytes, sizeof(T));
    T v = 0;
    for (std::size_t b = sizeof(T); b-- > 0;)
      v = static_cast<T>((v << 8) | bytes[b]);
    return v;
  }

  double get_f64() {
    const std::uint64_t bits = get_le<std::uint64_t>();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }

  void read(unsigned char* dst, std::size_t n) {
    in_.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    require(static_cast<std::size_t>(in_.gcount()) == n, ErrorKind::format,
            "truncated window cache");
  }

private:
  std::istream& in_;
};

constexpr char kWindowMagic[5] = {'S', 'D', 'W', 'I', 'N'};

}  // namespace

void save_windows(const std::filesystem::path& path,
                  const std::vector<WindowSample>& samples) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::io,
          "cannot open for writing: " + path.string());
  std::string buf;
  buf.append(kWindowMagic, sizeof(kWindowMagic));
  put_le<std::uint32_t>(buf, 1);  // version
  put_le<std::uint64_t>(buf, samples.size());
  for (const WindowSample& w : samples) {
    const std::size_t rows = dsp::kBandImageRows;
    require(w.images.size() == w.channels * rows * kWindowMinutes &&
                w.power.size() == kWindowMinutes,
            ErrorKind::shape, "window sample with inconsistent shape");
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(w.channels));
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(rows));
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(kWindowMinutes));
    buf.push_back(static_cast<char>(w.label));
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(w.start_minute));
    put_le<std::uint16_t>(buf, static_cast<std::uint16_t>(w.recording_id.size()));
    buf.append(w.recording_id);
    for (double v : w.images) put_f64(buf, v);
    for (double v : w.power) put_f64(buf, v);
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  require(static_cast<bool>(out), ErrorKind::io,
          "write failed: " + path.string());
}

std::vector<WindowSample> load_windows(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io,
          "cannot open for reading: " + path.string());
  Reader reader(in);
  unsigned char magic[sizeof(kWindowMagic)];
  reader.read(magic, sizeof(magic));
  require(std::memcmp(magic, kWindowMagic, sizeof(magic)) == 0,
          ErrorKind::format, "not a window cache file");
  const std::uint32_t version = reader.get_le<std::uint32_t>();
  require(version == 1, ErrorKind::version,
          "unsupported window cache version");
  const std::uint64_t count = reader.get_le<std::uint64_t>();
  std::vector<WindowSample> samples;
  samples.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    WindowSample w;
    w.channels = reader.get_le<std::uint32_t>();
    const std::uint32_t rows = reader.get_le<std::uint32_t>();
    const std::uint32_t width = reader.get_le<std::uint32_t>();
    require(rows == dsp::kBandImageRows && width == kWindowMinutes,
            ErrorKind::shape, "window cache with unexpected geometry");
    unsigned char label = 0;
    reader.read(&label, 1);
    w.label = label;
    w.start_minute = reader.get_le<std::uint32_t>();
    const std::uint16_t id_len = reader.get_le<std::uint16_t>();
    std::vector<unsigned char> id(id_len);
    reader.read(id.data(), id_len);
    w.recording_id.assign(id.begin(), id.end());
    w.images.resize(static_cast<std::size_t>(w.channels) * rows * width);
    for (double& v : w.images) v = reader.get_f64();
    w.power.resize(width);
    for (double& v : w.power) v = reader.get_f64();
    samples.push_back(std::move(w));
  }
  return samples;
}

}  // namespace sdspect::dataset
