#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fuzzylens/image.hpp"

namespace fuzzylens {

class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// PGM (P2 or P5, maxval 255) or PNG (8-bit gray; 8-bit RGB only when
/// `luma` is set, reduced with Rec.601 weights). The format is sniffed from
/// the file content, not the extension.
GrayImage read_image(const std::filesystem::path& path, bool luma = true);

/// Format follows the extension: .pgm -> P5, .png -> 8-bit gray PNG.
/// Written to a temporary sibling and renamed, so a failure never leaves a
/// partial file at `path`.
void write_image(const GrayImage& img, const std::filesystem::path& path);

GrayImage decode_pgm(std::string_view bytes, const std::string& source);
std::string encode_pgm(const GrayImage& img);
GrayImage decode_png(std::string_view bytes, const std::string& source, bool luma);
std::string encode_png(const GrayImage& img);

/// round(0.299 r + 0.587 g + 0.114 b), computed exactly in integers.
std::uint8_t rec601_luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

std::string read_file(const std::filesystem::path& path);
/// Temp file + rename. Throws std::runtime_error naming the path.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace fuzzylens
