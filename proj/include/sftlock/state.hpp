#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "sftlock/address.hpp"
#include "sftlock/amount.hpp"
#include "sftlock/authorization.hpp"
#include "sftlock/securitization.hpp"
#include "sftlock/sharing.hpp"

namespace sftlock {

/// Byte sink for the canonical state encoding. Integers are big-endian and
/// fixed width so that map iteration order equals bytewise key order;
/// strings are length-prefixed.
class Canonical {
 public:
  void tag(std::string_view section);
  void u8(std::uint8_t v) { bytes_.push_back(static_cast<char>(v)); }
  void u64(std::uint64_t v);
  void amount(Amount v);
  void address(const Address& a);
  void str(std::string_view s);

  const std::string& bytes() const { return bytes_; }

 private:
  std::string bytes_;
};

using Digest = std::array<std::uint8_t, 32>;

std::string to_hex(const Digest& d);

/// The three contracts' combined state. Contract configuration (SMA and
/// contract addresses) is not part of the digest.
struct SystemState {
  Registry registry;
  Vault vault;
  Rentals rentals;

  std::string canonical() const;
  /// SHA-256 over canonical().
  Digest digest() const;
};

}  // namespace sftlock
