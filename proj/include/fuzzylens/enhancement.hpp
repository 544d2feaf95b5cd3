#pragma once

#include <array>

#include "fuzzylens/config.hpp"
#include "fuzzylens/fuzzy_engine.hpp"
#include "fuzzylens/image.hpp"

namespace fuzzylens {

/// Half-away-from-zero, the one rounding rule used for every intensity map.
long round_half_away(double v);

Histogram histogram(const GrayImage& img);

/// round(cdf(v) / N * 255) with the inclusive running sum. Evaluated in
/// integers, so the half case is exact.
Lut256 equalization_lut(const Histogram& hist);
GrayImage equalize(const GrayImage& img);

/// v + infer(v) for every level, before rounding and clamping.
std::array<double, 256> lut_targets(const FisEngine& engine);
/// clamp(round(v + infer(v)), 0, 255).
Lut256 build_lut(const FisEngine& engine);

GrayImage apply_lut(const GrayImage& img, const Lut256& lut);

GrayImage fuzzy_enhance(const GrayImage& img, const FisEngine& engine);
/// Throws ConfigError when the config does not validate.
GrayImage fuzzy_enhance(const GrayImage& img, const AppConfig& config);

}  // namespace fuzzylens
