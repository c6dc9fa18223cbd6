#include "sparsek/common.hpp"

namespace sparsek {

Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  const Count c = binomial(n, k);
  if (c > Count(UINT64_MAX)) return UINT64_MAX;
  return static_cast<std::uint64_t>(c);
}

std::string to_string(const Count& c) { return c.str(); }

}  // namespace sparsek
