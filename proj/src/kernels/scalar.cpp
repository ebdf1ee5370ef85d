#include "hgpeel/kernels.hpp"

namespace hgpeel::kernels::scalar {

std::size_t count_below(std::span<const std::uint32_t> values, std::uint32_t bound) {
  std::size_t count = 0;
  for (std::uint32_t v : values) count += v < bound;
  return count;
}

void collect_below(std::span<const std::uint32_t> values, std::uint32_t bound,
                   std::vector<std::uint32_t>& out) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < bound) out.push_back(static_cast<std::uint32_t>(i));
  }
}

std::size_t count_covered(std::span<const std::uint64_t> masks, std::uint64_t subset) {
  std::size_t count = 0;
  for (std::uint64_t m : masks) count += (m & ~subset) == 0;
  return count;
}

}  // namespace hgpeel::kernels::scalar
