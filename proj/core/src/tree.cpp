#include "sublist/tree.hpp"

#include <numeric>
#include <string>

namespace sublist {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // acc = C(n-k+i, i) after step i. Dividing out gcd(acc, i) first keeps the
  // division exact without a wider intermediate.
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t g = std::gcd(acc, i);
    std::uint64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(acc / g, factor, &acc)) {
      throw Overflow("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                     ") exceeds 64 bits");
    }
  }
  return acc;
}

}  // namespace sublist
