#include "sftlock/event.hpp"

#include <array>

#include "sftlock/errors.hpp"

namespace sftlock {

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 10> kNames = {{
    {EventKind::mint_nfst, "MINT_NFST"},
    {EventKind::reclaim_nfst, "RECLAIM_NFST"},
    {EventKind::transfer_snfst, "TRANSFER_SNFST"},
    {EventKind::transfer_sfst, "TRANSFER_SFST"},
    {EventKind::lock_snfst, "LOCK_SNFST"},
    {EventKind::unlock_snfst, "UNLOCK_SNFST"},
    {EventKind::set_lock_order, "SET_LOCK_ORDER"},
    {EventKind::set_unlock_order, "SET_UNLOCK_ORDER"},
    {EventKind::mint_rnfst, "MINT_RNFST"},
    {EventKind::update_user, "UPDATE_USER"},
}};

}  // namespace

std::string_view to_string(EventKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "UNKNOWN";
}

std::optional<EventKind> event_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const std::string* Event::arg(std::string_view name) const {
  for (const auto& [key, value] : args) {
    if (key == name) return &value;
  }
  return nullptr;
}

const std::string& Event::require_arg(std::string_view name) const {
  if (const auto* v = arg(name)) return *v;
  fail(ErrorCode::replay, "sequence " + std::to_string(sequence) + ": " +
                              std::string(to_string(kind)) + " missing arg " +
                              std::string(name));
}

}  // namespace sftlock
