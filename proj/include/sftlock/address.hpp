#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace sftlock {

/// 20-byte participant or contract identity. The all-zero value is the
/// mint/burn sentinel and never names a real participant.
class Address {
 public:
  static constexpr std::size_t kSize = 20;
  using Bytes = std::array<std::uint8_t, kSize>;

  constexpr Address() = default;
  explicit constexpr Address(const Bytes& bytes) : bytes_(bytes) {}

  static constexpr Address zero() { return Address{}; }

  /// Accepts "0x" followed by exactly 40 hex digits, any case.
  static Address from_hex(std::string_view text);

  /// Deterministic test/tooling helper: the low 8 bytes carry `n`.
  static Address from_index(std::uint64_t n);

  bool is_zero() const;
  const Bytes& bytes() const { return bytes_; }

  /// Canonical lowercase 0x-prefixed rendering.
  std::string hex() const;

  friend constexpr auto operator<=>(const Address&, const Address&) = default;

 private:
  Bytes bytes_{};
};

}  // namespace sftlock

template <>
struct std::hash<sftlock::Address> {
  std::size_t operator()(const sftlock::Address& a) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : a.bytes()) {
      h = (h ^ b) * 1099511628211ULL;
    }
    return h;
  }
};
