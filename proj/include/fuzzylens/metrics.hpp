#pragma once

#include <limits>

#include "fuzzylens/image.hpp"

namespace fuzzylens {

inline constexpr double kLmax8Bit = 255.0;

struct MetricsReport {
  double mean_original = 0.0;
  double mean_enhanced = 0.0;
  double mli = 0.0;
  double mse = 0.0;
  /// +inf when mse == 0.
  double psnr_db = 0.0;
};

double mean_intensity(const GrayImage& img);

/// Mean squared difference. Throws std::invalid_argument on a shape mismatch.
double mse(const GrayImage& original, const GrayImage& enhanced);

/// 10 log10(l_max^2 / mse) in dB; +inf for mse == 0. Throws
/// std::invalid_argument for a negative or NaN mse.
double psnr(double mse_value, double l_max = kLmax8Bit);

/// mean(enhanced) / mean(original). Throws std::domain_error when the
/// original is all black.
double mli(const GrayImage& original, const GrayImage& enhanced);

MetricsReport evaluate(const GrayImage& original, const GrayImage& enhanced);

}  // namespace fuzzylens
