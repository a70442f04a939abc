#pragma once

#include <string>
#include <vector>

namespace sdspect::dsp {

// Named analysis bands. restricted_delta is the narrowed delta range used for
// SD monitoring in injured brains; full_ac is the AC extraction band applied
// before the STFT. full_delta is the wider delta variant kept for band-stack
// experiments.
enum class BandName {
  restricted_delta,
  full_delta,
  alpha,
  beta,
  full_ac,
};

struct BandDef {
  BandName name{BandName::full_ac};
  double lo_hz{0.0};
  double hi_hz{0.0};
};

// Canonical edges: restricted_delta [0.5, 1.8], full_delta [0.5, 4],
// alpha [8, 12], beta [12, 30], full_ac [0.5, 45].
BandDef canonical_band(BandName name);

const char* band_name(BandName name);
BandName parse_band_name(const std::string& text);

// Fixed channel order for stacked band images: restricted_delta, full_delta,
// alpha, beta. Requested order never changes the stored order.
int band_channel_rank(BandName name);
std::vector<BandName> sort_bands_by_rank(std::vector<BandName> bands);

void validate_band(const BandDef& band);

}  // namespace sdspect::dsp
