#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzylens {

/// 8-bit single channel image, row-major.
class GrayImage {
 public:
  GrayImage() = default;

  /// Zero-filled image. Throws std::invalid_argument if either side is 0.
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);

  /// Adopts `data`; its length must equal width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> data);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::uint8_t at(std::size_t x, std::size_t y) const { return data_[y * width_ + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) { return data_[y * width_ + x]; }

  std::span<const std::uint8_t> pixels() const { return data_; }
  std::span<std::uint8_t> pixels() { return data_; }

  std::string shape() const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Pixel counts per intensity level.
struct Histogram {
  std::array<std::uint64_t, 256> counts{};

  std::uint64_t total() const;
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Intensity -> intensity table.
struct Lut256 {
  std::array<std::uint8_t, 256> table{};

  static Lut256 identity();
  std::uint8_t operator[](std::uint8_t v) const { return table[v]; }

  /// Table of `outer[inner[v]]`, i.e. inner applied first.
  static Lut256 compose(const Lut256& outer, const Lut256& inner);

  friend bool operator==(const Lut256&, const Lut256&) = default;
};

}  // namespace fuzzylens
