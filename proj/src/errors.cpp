#include "sftlock/errors.hpp"

namespace sftlock {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::authorization: return "authorization";
    case ErrorCode::duplicate_spectrum: return "duplicate-spectrum";
    case ErrorCode::invalid_recipient: return "invalid-recipient";
    case ErrorCode::not_found: return "not-found";
    case ErrorCode::staked_asset: return "staked-asset";
    case ErrorCode::ownership: return "ownership";
    case ErrorCode::already_staked: return "already-staked";
    case ErrorCode::state: return "state";
    case ErrorCode::invalid_list: return "invalid-list";
    case ErrorCode::balance: return "balance";
    case ErrorCode::invalid_expiry: return "invalid-expiry";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::incomplete_data: return "incomplete-data";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::unknown_actor: return "unknown-actor";
    case ErrorCode::assertion: return "assertion";
    case ErrorCode::parse: return "parse";
    case ErrorCode::replay: return "replay";
    case ErrorCode::io: return "io";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

std::optional<ErrorCode> error_code_from_string(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::internal); ++i) {
    auto code = static_cast<ErrorCode>(i);
    if (to_string(code) == name) return code;
  }
  return std::nullopt;
}

}  // namespace sftlock
