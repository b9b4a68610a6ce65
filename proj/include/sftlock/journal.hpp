#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sftlock/amount.hpp"
#include "sftlock/event.hpp"

namespace sftlock {

/// Append-only, gapless event log. Entries are never rewritten.
class Journal {
 public:
  Journal() = default;

  /// Requires event.sequence == size(); anything else is an internal
  /// consistency error.
  std::uint64_t append(Event event);

  std::span<const Event> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Event& operator[](std::size_t i) const { return entries_[i]; }

  /// One JSON object per line, newline-terminated.
  std::string serialize() const;
  void write_file(const std::filesystem::path& path) const;

  /// Parses and validates gaplessness. Errors name the 0-based line.
  static Journal parse(std::string_view text);
  static Journal read_file(const std::filesystem::path& path);

 private:
  std::vector<Event> entries_;
};

/// {"sequence":N,"emitter":"0x..","kind":"..","args":{...}} without newline.
std::string serialize_event(const Event& event);
Event parse_event(std::string_view line);

/// Lifecycle of one NFST/SNFST id: every event whose _tokenId equals `id`,
/// plus the SFST issuance that a stake emits immediately after minting the
/// SNFST. Unknown ids yield an empty listing.
std::vector<Event> trace(std::span<const Event> journal, TokenId id);

}  // namespace sftlock
