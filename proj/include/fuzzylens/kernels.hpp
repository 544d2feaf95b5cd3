#pragma once

// Pixel-loop kernels. `serial` is the reference implementation the tests
// hold `parallel` to; both must produce bit-identical results. Reductions
// accumulate in 64-bit integers, so parallel results do not depend on the
// partitioning.

#include <array>
#include <cstdint>
#include <span>

namespace fuzzylens::kernels {

using Table = std::array<std::uint8_t, 256>;
using Counts = std::array<std::uint64_t, 256>;

namespace serial {

void apply_lut(std::span<const std::uint8_t> in, const Table& table, std::span<std::uint8_t> out);
Counts histogram(std::span<const std::uint8_t> in);
std::uint64_t sum(std::span<const std::uint8_t> in);
std::uint64_t sum_squared_diff(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace serial

namespace parallel {

// Buffers shorter than this run on the calling thread.
inline constexpr std::size_t kMinParallelPixels = 1 << 14;

void apply_lut(std::span<const std::uint8_t> in, const Table& table, std::span<std::uint8_t> out);
Counts histogram(std::span<const std::uint8_t> in);
std::uint64_t sum(std::span<const std::uint8_t> in);
std::uint64_t sum_squared_diff(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace parallel

}  // namespace fuzzylens::kernels
