#include "fuzzylens/image_io.hpp"

#include <png.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <system_error>

namespace fuzzylens {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kPngSignature = "\x89PNG\r\n\x1a\n";

bool starts_with_png(std::string_view bytes) { return bytes.substr(0, kPngSignature.size()) == kPngSignature; }

// Header tokenizer for the PNM family: whitespace separated, '#' starts a
// comment that runs to the end of the line.
class PnmCursor {
 public:
  PnmCursor(std::string_view bytes, const std::string& source) : bytes_(bytes), source_(source) {}

  std::size_t pos() const { return pos_; }

  bool skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return true;
      }
    }
    return false;
  }

  std::optional<unsigned long> next_uint() {
    if (!skip_space_and_comments()) return std::nullopt;
    unsigned long value = 0;
    const char* first = bytes_.data() + pos_;
    const char* last = bytes_.data() + bytes_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw ImageError(source_ + ": number out of range in PGM data");
    if (ec != std::errc() || (ptr < last && !std::isspace(static_cast<unsigned char>(*ptr)) && *ptr != '#')) {
      throw ImageError(source_ + ": malformed number in PGM data at byte " + std::to_string(pos_));
    }
    pos_ = static_cast<std::size_t>(ptr - bytes_.data());
    return value;
  }

  unsigned long header_field(const char* what) {
    auto v = next_uint();
    if (!v) throw ImageError(source_ + ": truncated PGM header, missing " + what);
    return *v;
  }

 private:
  std::string_view bytes_;
  const std::string& source_;
  std::size_t pos_ = 2;
};

std::string png_failure(const png_image& img, const std::string& source) {
  return source + ": PNG error: " + (img.message[0] != '\0' ? img.message : "unknown");
}

struct PngImageGuard {
  png_image* img;
  ~PngImageGuard() { png_image_free(img); }
};

}  // namespace

std::uint8_t rec601_luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const unsigned weighted = 299u * r + 587u * g + 114u * b;
  return static_cast<std::uint8_t>((weighted + 500u) / 1000u);
}

GrayImage decode_pgm(std::string_view bytes, const std::string& source) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw ImageError(source + ": not a PGM file");
  const char kind = bytes[1];
  if (kind != '2' && kind != '5') {
    throw ImageError(source + ": unsupported PNM variant P" + std::string(1, kind) + " (only P2 and P5 are read)");
  }

  PnmCursor cur(bytes, source);
  const unsigned long width = cur.header_field("width");
  const unsigned long height = cur.header_field("height");
  const unsigned long maxval = cur.header_field("maxval");
  if (width == 0 || height == 0) throw ImageError(source + ": image dimensions must be positive");
  if (maxval != 255) throw ImageError(source + ": maxval " + std::to_string(maxval) + " is not supported (expected 255)");
  if (width > (1ul << 20) || height > (1ul << 20)) throw ImageError(source + ": image dimensions are too large");

  const std::size_t count = width * height;
  std::vector<std::uint8_t> data(count);
  if (kind == '5') {
    // Exactly one whitespace byte separates maxval from the raster.
    const std::size_t start = cur.pos() + 1;
    const std::size_t available = start <= bytes.size() ? bytes.size() - start : 0;
    if (available < count) {
      throw ImageError(source + ": truncated pixel data, expected " + std::to_string(count) + " bytes, found " +
                       std::to_string(available));
    }
    std::copy_n(bytes.data() + start, count, data.begin());
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      auto v = cur.next_uint();
      if (!v) {
        throw ImageError(source + ": truncated pixel data, expected " + std::to_string(count) + " samples, found " +
                         std::to_string(i));
      }
      if (*v > 255) throw ImageError(source + ": sample " + std::to_string(i) + " exceeds maxval 255");
      data[i] = static_cast<std::uint8_t>(*v);
    }
  }
  return GrayImage(width, height, std::move(data));
}

std::string encode_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  const auto px = img.pixels();
  out.append(reinterpret_cast<const char*>(px.data()), px.size());
  return out;
}

GrayImage decode_png(std::string_view bytes, const std::string& source, bool luma) {
  png_image img{};
  img.version = PNG_IMAGE_VERSION;
  PngImageGuard guard{&img};
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) throw ImageError(png_failure(img, source));

  const auto fmt = img.format;
  if (fmt & PNG_FORMAT_FLAG_COLORMAP) throw ImageError(source + ": palette PNGs are not supported");
  if (fmt & PNG_FORMAT_FLAG_ALPHA) throw ImageError(source + ": PNGs with an alpha channel are not supported");
  if (fmt & PNG_FORMAT_FLAG_LINEAR) throw ImageError(source + ": only 8-bit PNGs are supported");
  const bool color = (fmt & PNG_FORMAT_FLAG_COLOR) != 0;
  if (color && !luma) throw ImageError(source + ": RGB PNG requires luma conversion to be enabled");
  if (img.width == 0 || img.height == 0) throw ImageError(source + ": image dimensions must be positive");

  img.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const std::size_t channels = color ? 3 : 1;
  std::vector<std::uint8_t> raw(std::size_t{img.width} * img.height * channels);
  if (!png_image_finish_read(&img, nullptr, raw.data(), 0, nullptr)) throw ImageError(png_failure(img, source));

  if (!color) return GrayImage(img.width, img.height, std::move(raw));
  std::vector<std::uint8_t> gray(std::size_t{img.width} * img.height);
  for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = rec601_luma(raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]);
  return GrayImage(img.width, img.height, std::move(gray));
}

std::string encode_png(const GrayImage& img) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width());
  png.height = static_cast<png_uint_32>(img.height());
  png.format = PNG_FORMAT_GRAY;
  PngImageGuard guard{&png};

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png, nullptr, &size, 0, img.pixels().data(), 0, nullptr)) {
    throw ImageError(png_failure(png, "<png encoder>"));
  }
  std::string out(size, '\0');
  if (!png_image_write_to_memory(&png, out.data(), &size, 0, img.pixels().data(), 0, nullptr)) {
    throw ImageError(png_failure(png, "<png encoder>"));
  }
  out.resize(size);
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ImageError(path.string() + ": read error");
  return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error(path.string() + ": write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error(path.string() + ": cannot replace file: " + ec.message());
  }
}

GrayImage read_image(const fs::path& path, bool luma) {
  const std::string bytes = read_file(path);
  const std::string source = path.string();
  if (starts_with_png(bytes)) return decode_png(bytes, source, luma);
  if (bytes.size() >= 2 && bytes[0] == 'P' && std::isdigit(static_cast<unsigned char>(bytes[1]))) {
    return decode_pgm(bytes, source);
  }
  throw ImageError(source + ": unsupported image format (expected PGM or PNG)");
}

void write_image(const GrayImage& img, const fs::path& path) {
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".pgm") {
    write_file_atomic(path, encode_pgm(img));
  } else if (ext == ".png") {
    write_file_atomic(path, encode_png(img));
  } else {
    throw ImageError(path.string() + ": unsupported output extension '" + ext + "' (use .pgm or .png)");
  }
}

}  // namespace fuzzylens
