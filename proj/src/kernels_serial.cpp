#include "fuzzylens/kernels.hpp"

#include <cassert>

namespace fuzzylens::kernels::serial {

void apply_lut(std::span<const std::uint8_t> in, const Table& table, std::span<std::uint8_t> out) {
  assert(in.size() == out.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = table[in[i]];
}

Counts histogram(std::span<const std::uint8_t> in) {
  Counts counts{};
  for (std::uint8_t v : in) ++counts[v];
  return counts;
}

std::uint64_t sum(std::span<const std::uint8_t> in) {
  std::uint64_t total = 0;
  for (std::uint8_t v : in) total += v;
  return total;
}

std::uint64_t sum_squared_diff(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  assert(a.size() == b.size());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = std::int64_t{a[i]} - std::int64_t{b[i]};
    total += static_cast<std::uint64_t>(d * d);
  }
  return total;
}

}  // namespace fuzzylens::kernels::serial
