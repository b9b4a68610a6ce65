#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sftlock {

enum class ErrorCode {
  authorization,
  duplicate_spectrum,
  invalid_recipient,
  not_found,
  staked_asset,
  ownership,
  already_staked,
  state,
  invalid_list,
  balance,
  invalid_expiry,
  invalid_argument,
  incomplete_data,
  unsupported,
  unknown_actor,
  assertion,
  parse,
  replay,
  io,
  internal,
};

std::string_view to_string(ErrorCode code);
std::optional<ErrorCode> error_code_from_string(std::string_view name);

/// Every rejection raised by the ledger carries a category so that callers
/// (scenario runner, bindings, tests) can match on it without parsing text.
class LedgerError : public std::runtime_error {
 public:
  LedgerError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw LedgerError(code, message);
}

}  // namespace sftlock
