#include "sftlock/address.hpp"

#include <algorithm>

#include "sftlock/errors.hpp"

namespace sftlock {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Address Address::from_hex(std::string_view text) {
  if (text.size() != 2 + 2 * kSize || text[0] != '0' ||
      (text[1] != 'x' && text[1] != 'X')) {
    fail(ErrorCode::parse,
         "address must be 0x followed by 40 hex digits: '" +
             std::string(text) + "'");
  }
  Bytes bytes{};
  for (std::size_t i = 0; i < kSize; ++i) {
    int hi = hex_value(text[2 + 2 * i]);
    int lo = hex_value(text[3 + 2 * i]);
    if (hi < 0 || lo < 0) {
      fail(ErrorCode::parse, "invalid hex in address '" + std::string(text) + "'");
    }
    bytes[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Address(bytes);
}

Address Address::from_index(std::uint64_t n) {
  Bytes bytes{};
  for (std::size_t i = 0; i < 8; ++i) {
    bytes[kSize - 1 - i] = static_cast<std::uint8_t>(n >> (8 * i));
  }
  return Address(bytes);
}

bool Address::is_zero() const {
  return std::all_of(bytes_.begin(), bytes_.end(),
                     [](std::uint8_t b) { return b == 0; });
}

std::string Address::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "0x";
  out.reserve(2 + 2 * kSize);
  for (auto b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

}  // namespace sftlock
