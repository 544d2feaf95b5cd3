#include "fuzzylens/kernels.hpp"

#include <omp.h>

#include <cassert>
#include <cstddef>

namespace fuzzylens::kernels::parallel {

namespace {

using Index = std::ptrdiff_t;

bool worth_threading(std::size_t n) { return n >= kMinParallelPixels && omp_get_max_threads() > 1; }

}  // namespace

void apply_lut(std::span<const std::uint8_t> in, const Table& table, std::span<std::uint8_t> out) {
  assert(in.size() == out.size());
  const Index n = static_cast<Index>(in.size());
  const std::uint8_t* src = in.data();
  std::uint8_t* dst = out.data();
#pragma omp parallel for schedule(static) if (worth_threading(in.size()))
  for (Index i = 0; i < n; ++i) dst[i] = table[src[i]];
}

Counts histogram(std::span<const std::uint8_t> in) {
  if (!worth_threading(in.size())) return serial::histogram(in);

  const Index n = static_cast<Index>(in.size());
  const std::uint8_t* src = in.data();
  Counts merged{};
#pragma omp parallel
  {
    Counts local{};
#pragma omp for schedule(static) nowait
    for (Index i = 0; i < n; ++i) ++local[src[i]];
#pragma omp critical(fuzzylens_histogram_merge)
    for (std::size_t v = 0; v < local.size(); ++v) merged[v] += local[v];
  }
  return merged;
}

std::uint64_t sum(std::span<const std::uint8_t> in) {
  const Index n = static_cast<Index>(in.size());
  const std::uint8_t* src = in.data();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (worth_threading(in.size()))
  for (Index i = 0; i < n; ++i) total += src[i];
  return total;
}

std::uint64_t sum_squared_diff(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  assert(a.size() == b.size());
  const Index n = static_cast<Index>(a.size());
  const std::uint8_t* pa = a.data();
  const std::uint8_t* pb = b.data();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (worth_threading(a.size()))
  for (Index i = 0; i < n; ++i) {
    const std::int64_t d = std::int64_t{pa[i]} - std::int64_t{pb[i]};
    total += static_cast<std::uint64_t>(d * d);
  }
  return total;
}

}  // namespace fuzzylens::kernels::parallel
