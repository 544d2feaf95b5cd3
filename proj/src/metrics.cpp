#include "fuzzylens/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "fuzzylens/kernels.hpp"

namespace fuzzylens {

double mean_intensity(const GrayImage& img) {
  if (img.empty()) throw std::invalid_argument("mean_intensity: empty image");
  return static_cast<double>(kernels::parallel::sum(img.pixels())) / static_cast<double>(img.size());
}

double mse(const GrayImage& original, const GrayImage& enhanced) {
  if (original.width() != enhanced.width() || original.height() != enhanced.height()) {
    throw std::invalid_argument("mse: dimension mismatch, original is " + original.shape() + ", enhanced is " +
                                enhanced.shape());
  }
  if (original.empty()) throw std::invalid_argument("mse: empty images");
  const std::uint64_t sq = kernels::parallel::sum_squared_diff(original.pixels(), enhanced.pixels());
  return static_cast<double>(sq) / static_cast<double>(original.size());
}

double psnr(double mse_value, double l_max) {
  if (std::isnan(mse_value) || mse_value < 0.0) throw std::invalid_argument("psnr: mse must be >= 0");
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(l_max * l_max / mse_value);
}

double mli(const GrayImage& original, const GrayImage& enhanced) {
  const double base = mean_intensity(original);
  if (!(base > 0.0)) throw std::domain_error("mli: original image is all black (mean intensity 0)");
  return mean_intensity(enhanced) / base;
}

MetricsReport evaluate(const GrayImage& original, const GrayImage& enhanced) {
  MetricsReport r;
  r.mse = mse(original, enhanced);
  r.psnr_db = psnr(r.mse);
  r.mean_original = mean_intensity(original);
  r.mean_enhanced = mean_intensity(enhanced);
  if (!(r.mean_original > 0.0)) throw std::domain_error("mli: original image is all black (mean intensity 0)");
  r.mli = r.mean_enhanced / r.mean_original;
  return r;
}

}  // namespace fuzzylens
