#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sftlock/address.hpp"

namespace sftlock {

enum class EventKind {
  mint_nfst,
  reclaim_nfst,
  transfer_snfst,
  transfer_sfst,
  lock_snfst,
  unlock_snfst,
  set_lock_order,
  set_unlock_order,
  mint_rnfst,
  update_user,
};

/// Wire names, e.g. "MINT_NFST".
std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view name);

/// Audit record. Args keep their emission order so serialized lines are
/// byte-stable; values are always strings (addresses as 0x-hex, amounts and
/// ids as decimal).
struct Event {
  std::uint64_t sequence = 0;
  Address emitter;
  EventKind kind = EventKind::mint_nfst;
  std::vector<std::pair<std::string, std::string>> args;

  const std::string* arg(std::string_view name) const;
  /// Throws LedgerError(replay) naming the sequence if the arg is absent.
  const std::string& require_arg(std::string_view name) const;

  bool operator==(const Event&) const = default;
};

namespace arg {
inline constexpr std::string_view from = "_from";
inline constexpr std::string_view to = "_to";
inline constexpr std::string_view token_id = "_tokenId";
inline constexpr std::string_view token_ids = "_tokenIds";
inline constexpr std::string_view primary_user = "_primaryUser";
inline constexpr std::string_view amount = "_amount";
inline constexpr std::string_view channel = "_channel";
inline constexpr std::string_view location = "_location";
inline constexpr std::string_view rental_id = "_rentalId";
inline constexpr std::string_view user = "_user";
inline constexpr std::string_view expires = "_expires";
}  // namespace arg

/// Receives events as operations execute. The engine stages events through
/// one of these and only commits them to the journal once a command
/// succeeds.
class EventSink {
 public:
  virtual ~EventSink() = default;
  virtual void emit(Address emitter, EventKind kind,
                    std::vector<std::pair<std::string, std::string>> args) = 0;
};

}  // namespace sftlock
