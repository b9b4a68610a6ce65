#include "sftlock/state.hpp"

#include <openssl/sha.h>

namespace sftlock {

void Canonical::tag(std::string_view section) {
  str(section);
}

void Canonical::u64(std::uint64_t v) {
  for (int i = 7; i >= 0; --i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Canonical::amount(Amount v) {
  u64(static_cast<std::uint64_t>(v >> 64));
  u64(static_cast<std::uint64_t>(v));
}

void Canonical::address(const Address& a) {
  for (auto b : a.bytes()) u8(b);
}

void Canonical::str(std::string_view s) {
  u64(s.size());
  bytes_.append(s);
}

std::string to_hex(const Digest& d) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto b : d) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::string SystemState::canonical() const {
  Canonical c;
  registry.encode(c);
  vault.encode(c);
  rentals.encode(c);
  return c.bytes();
}

Digest SystemState::digest() const {
  const std::string bytes = canonical();
  Digest d{};
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), d.data());
  return d;
}

}  // namespace sftlock
