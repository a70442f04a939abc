#include "sdspect/dataset/recording.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "sdspect/error.hpp"

namespace sdspect::dataset {

namespace {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    fail(ErrorKind::format, std::string("malformed header: bad ") + what);
  }
  require(pos == text.size(), ErrorKind::format,
          std::string("malformed header: bad ") + what);
  return v;
}

void write_le_doubles(std::ostream& out, const std::vector<double>& values) {
  std::vector<unsigned char> bytes(values.size() * 8);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t bits;
    std::memcpy(&bits, &values[i], 8);
    for (int b = 0; b < 8; ++b)
      bytes[i * 8 + static_cast<std::size_t>(b)] =
          static_cast<unsigned char>(bits >> (8 * b));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::vector<double> read_le_doubles(std::istream& in, std::size_t count) {
  std::vector<unsigned char> bytes(count * 8);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  require(static_cast<std::size_t>(in.gcount()) == bytes.size(),
          ErrorKind::format, "truncated sample payload");
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b)
      bits = (bits << 8) | bytes[i * 8 + static_cast<std::size_t>(b)];
    std::memcpy(&values[i], &bits, 8);
  }
  return values;
}

// Reads one header line; the key must match.
std::string header_value(std::istream& in, const char* key) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorKind::format,
          "malformed header: unexpected end of file");
  const std::string prefix = std::string(key);
  if (line == prefix) return "";
  require(line.size() > prefix.size() && line.compare(0, prefix.size(), prefix) == 0 &&
              line[prefix.size()] == ' ',
          ErrorKind::format, "malformed header: expected '" + prefix + "' line");
  return line.substr(prefix.size() + 1);
}

}  // namespace

void validate_recording(const EcogRecording& rec) {
  require(!rec.id.empty(), ErrorKind::data, "recording id is empty");
  dsp::validate_signal(rec.signal);
  const double duration = rec.signal.duration_s();
  double prev_end = -1.0;
  for (const SdAnnotation& a : rec.annotations) {
    require(std::isfinite(a.onset_s) && std::isfinite(a.duration_s),
            ErrorKind::nonfinite, "annotation with non-finite field");
    require(a.onset_s >= 0.0 && a.duration_s > 0.0, ErrorKind::range,
            "annotation with negative onset or non-positive duration");
    require(a.onset_s + a.duration_s <= duration, ErrorKind::range,
            "annotation extends past the end of the recording");
    require(a.onset_s >= prev_end, ErrorKind::range,
            "annotations unsorted or overlapping");
    prev_end = a.onset_s + a.duration_s;
  }
}

void write_recording(const std::filesystem::path& path,
                     const EcogRecording& rec) {
  validate_recording(rec);
  require(rec.id.find_first_of(" \t\r\n") == std::string::npos,
          ErrorKind::data, "recording id must not contain whitespace");

  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::io,
          "cannot open for writing: " + path.string());

  out << "version 1\n";
  out << "id " << rec.id << "\n";
  out << "sample_rate_hz " << format_g17(rec.signal.sample_rate_hz) << "\n";
  out << "n_samples " << rec.signal.samples.size() << "\n";
  out << "annotations";
  for (std::size_t i = 0; i < rec.annotations.size(); ++i) {
    out << (i == 0 ? " " : ";") << format_g17(rec.annotations[i].onset_s) << ","
        << format_g17(rec.annotations[i].duration_s);
  }
  out << "\n";
  write_le_doubles(out, rec.signal.samples);
  require(static_cast<bool>(out), ErrorKind::io,
          "write failed: " + path.string());
}

EcogRecording read_recording(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io,
          "cannot open for reading: " + path.string());

  EcogRecording rec;
  const std::string version = header_value(in, "version");
  require(version == "1", ErrorKind::version,
          "unsupported recording format version: " + version);
  rec.id = header_value(in, "id");
  require(!rec.id.empty(), ErrorKind::format, "malformed header: empty id");
  rec.signal.sample_rate_hz =
      parse_double(header_value(in, "sample_rate_hz"), "sample_rate_hz");
  const std::string n_text = header_value(in, "n_samples");
  std::uint64_t n_samples = 0;
  require(std::sscanf(n_text.c_str(), "%" SCNu64, &n_samples) == 1,
          ErrorKind::format, "malformed header: bad n_samples");

  const std::string ann = header_value(in, "annotations");
  if (!ann.empty()) {
    std::stringstream ss(ann);
    std::string item;
    while (std::getline(ss, item, ';')) {
      const std::size_t comma = item.find(',');
      require(comma != std::string::npos, ErrorKind::format,
              "malformed header: bad annotation entry");
      SdAnnotation a;
      a.onset_s = parse_double(item.substr(0, comma), "annotation onset");
      a.duration_s = parse_double(item.substr(comma + 1), "annotation duration");
      rec.annotations.push_back(a);
    }
  }

  rec.signal.samples = read_le_doubles(in, n_samples);
  validate_recording(rec);
  return rec;
}

}  // namespace sdspect::dataset
