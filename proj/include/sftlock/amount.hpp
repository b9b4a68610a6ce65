#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sftlock {

/// Exact atto-share quantity. 128 bits covers every value below 2^127 that
/// the ledger is required to carry; no floating point is used anywhere.
__extension__ typedef unsigned __int128 Amount;

/// Token identifiers for NFSTs/SNFSTs and, separately, for rental tokens.
using TokenId = std::uint64_t;

inline constexpr Amount kUnit = 1'000'000'000'000'000'000ULL;  // 10^18

/// Whole-unit count: floor(balance / 10^18).
inline constexpr std::uint64_t whole_shares(Amount balance) {
  return static_cast<std::uint64_t>(balance / kUnit);
}

std::string to_decimal(Amount value);

/// Plain base-10 integer, no sign, no separators.
Amount parse_decimal(std::string_view text);

/// "0.3" -> 3*10^17. At most 18 fractional digits; exact.
Amount parse_shares(std::string_view text);

/// Scenario amount syntax: text containing '.' is share notation, anything
/// else is a raw atto-share integer.
Amount parse_amount(std::string_view text);

/// Renders an amount in share notation with trailing zeros trimmed,
/// e.g. 17*10^17 -> "1.7", 2*10^18 -> "2".
std::string to_shares(Amount value);

}  // namespace sftlock
