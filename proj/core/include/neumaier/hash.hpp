#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace neumaier {

// 64-bit FNV-1a. Stable across platforms; used for checkpoint fingerprints
// and catalog file names.
class Fnv1a {
 public:
  Fnv1a& add(std::string_view s) {
    for (unsigned char c : s) byte(c);
    return *this;
  }
  Fnv1a& add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(x >> (8 * i)));
    return *this;
  }
  template <typename T>
  Fnv1a& add_all(std::span<const T> xs) {
    add(static_cast<std::uint64_t>(xs.size()));
    for (const auto& x : xs) add(static_cast<std::uint64_t>(x));
    return *this;
  }
  std::uint64_t value() const noexcept { return h_; }
  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) out[15 - i] = kDigits[(h_ >> (4 * i)) & 0xF];
    return out;
  }

 private:
  void byte(unsigned char c) {
    h_ ^= c;
    h_ *= 0x100000001b3ULL;
  }
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace neumaier
