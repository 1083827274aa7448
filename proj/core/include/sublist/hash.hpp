#pragma once

#include <cstdint>
#include <string_view>

namespace sublist {

/// 64-bit FNV-1a.
class Fnv1a64 {
 public:
  static constexpr std::uint64_t kOffsetBasis = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  constexpr Fnv1a64() = default;
  constexpr explicit Fnv1a64(std::uint64_t state) : state_(state) {}

  constexpr Fnv1a64& add_byte(unsigned char b) {
    state_ ^= b;
    state_ *= kPrime;
    return *this;
  }
  constexpr Fnv1a64& add(std::string_view bytes) {
    for (char c : bytes) add_byte(static_cast<unsigned char>(c));
    return *this;
  }
  /// Little-endian, fixed width.
  constexpr Fnv1a64& add_u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) add_byte(static_cast<unsigned char>(v >> (8 * i)));
    return *this;
  }
  constexpr std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = kOffsetBasis;
};

constexpr std::uint64_t fnv1a64(std::string_view bytes) { return Fnv1a64{}.add(bytes).value(); }

}  // namespace sublist
