#include "fuzzylens/enhancement.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzylens/kernels.hpp"

namespace fuzzylens {

long round_half_away(double v) { return std::lround(v); }

Histogram histogram(const GrayImage& img) { return Histogram{kernels::parallel::histogram(img.pixels())}; }

Lut256 equalization_lut(const Histogram& hist) {
  const std::uint64_t n = hist.total();
  Lut256 lut;
  if (n == 0) return lut;
  std::uint64_t cdf = 0;
  for (std::size_t v = 0; v < 256; ++v) {
    cdf += hist.counts[v];
    // floor(cdf * 255 / n + 1/2)
    lut.table[v] = static_cast<std::uint8_t>((2 * cdf * 255 + n) / (2 * n));
  }
  return lut;
}

GrayImage equalize(const GrayImage& img) { return apply_lut(img, equalization_lut(histogram(img))); }

std::array<double, 256> lut_targets(const FisEngine& engine) {
  std::array<double, 256> targets{};
#pragma omp parallel for schedule(dynamic, 8)
  for (int v = 0; v < 256; ++v) targets[v] = v + engine.infer(v);
  return targets;
}

Lut256 build_lut(const FisEngine& engine) {
  const auto targets = lut_targets(engine);
  Lut256 lut;
  for (std::size_t v = 0; v < 256; ++v) {
    lut.table[v] = static_cast<std::uint8_t>(std::clamp(round_half_away(targets[v]), 0L, 255L));
  }
  return lut;
}

GrayImage apply_lut(const GrayImage& img, const Lut256& lut) {
  GrayImage out(img.width(), img.height());
  kernels::parallel::apply_lut(img.pixels(), lut.table, out.pixels());
  return out;
}

GrayImage fuzzy_enhance(const GrayImage& img, const FisEngine& engine) { return apply_lut(img, build_lut(engine)); }

GrayImage fuzzy_enhance(const GrayImage& img, const AppConfig& config) {
  return fuzzy_enhance(img, make_engine(config));
}

}  // namespace fuzzylens
