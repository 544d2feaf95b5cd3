#include "fuzzylens/image.hpp"

#include <numeric>

namespace fuzzylens {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width == 0 || height == 0) throw std::invalid_argument("GrayImage: width and height must be positive");
  if (data_.size() != width * height) {
    throw std::invalid_argument("GrayImage: buffer holds " + std::to_string(data_.size()) + " pixels, " +
                                shape() + " needs " + std::to_string(width * height));
  }
}

std::string GrayImage::shape() const { return std::to_string(width_) + "x" + std::to_string(height_); }

std::uint64_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

Lut256 Lut256::identity() {
  Lut256 lut;
  std::iota(lut.table.begin(), lut.table.end(), std::uint8_t{0});
  return lut;
}

Lut256 Lut256::compose(const Lut256& outer, const Lut256& inner) {
  Lut256 lut;
  for (std::size_t v = 0; v < 256; ++v) lut.table[v] = outer.table[inner.table[v]];
  return lut;
}

}  // namespace fuzzylens
