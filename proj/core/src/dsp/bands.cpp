#include "sdspect/dsp/bands.hpp"

#include <algorithm>

#include "sdspect/error.hpp"

namespace sdspect::dsp {

BandDef canonical_band(BandName name) {
  switch (name) {
    case BandName::restricted_delta: return {name, 0.5, 1.8};
    case BandName::full_delta: return {name, 0.5, 4.0};
    case BandName::alpha: return {name, 8.0, 12.0};
    case BandName::beta: return {name, 12.0, 30.0};
    case BandName::full_ac: return {name, 0.5, 45.0};
  }
  fail(ErrorKind::config, "unknown band");
}

const char* band_name(BandName name) {
  switch (name) {
    case BandName::restricted_delta: return "restricted_delta";
    case BandName::full_delta: return "full_delta";
    case BandName::alpha: return "alpha";
    case BandName::beta: return "beta";
    case BandName::full_ac: return "full_ac";
  }
  return "unknown";
}

BandName parse_band_name(const std::string& text) {
  if (text == "restricted_delta" || text == "delta")
    return BandName::restricted_delta;
  if (text == "full_delta") return BandName::full_delta;
  if (text == "alpha") return BandName::alpha;
  if (text == "beta") return BandName::beta;
  if (text == "full_ac") return BandName::full_ac;
  fail(ErrorKind::config, "unknown band name: " + text);
}

int band_channel_rank(BandName name) {
  switch (name) {
    case BandName::restricted_delta: return 0;
    case BandName::full_delta: return 1;
    case BandName::alpha: return 2;
    case BandName::beta: return 3;
    case BandName::full_ac: return 4;
  }
  return 5;
}

std::vector<BandName> sort_bands_by_rank(std::vector<BandName> bands) {
  std::sort(bands.begin(), bands.end(), [](BandName a, BandName b) {
    return band_channel_rank(a) < band_channel_rank(b);
  });
  bands.erase(std::unique(bands.begin(), bands.end()), bands.end());
  return bands;
}

void validate_band(const BandDef& band) {
  require(band.lo_hz > 0.0 && band.lo_hz < band.hi_hz, ErrorKind::config,
          "band edges must satisfy 0 < lo < hi");
}

}  // namespace sdspect::dsp
