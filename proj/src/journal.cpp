#include "sftlock/journal.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sftlock/errors.hpp"

namespace sftlock {

using ordered_json = nlohmann::ordered_json;

std::uint64_t Journal::append(Event event) {
  if (event.sequence != entries_.size()) {
    fail(ErrorCode::internal, "journal append out of order: expected sequence " +
                                  std::to_string(entries_.size()) + ", got " +
                                  std::to_string(event.sequence));
  }
  entries_.push_back(std::move(event));
  return entries_.back().sequence;
}

std::string serialize_event(const Event& event) {
  ordered_json args = ordered_json::object();
  for (const auto& [key, value] : event.args) {
    args[key] = value;
  }
  ordered_json j;
  j["sequence"] = event.sequence;
  j["emitter"] = event.emitter.hex();
  j["kind"] = std::string(to_string(event.kind));
  j["args"] = std::move(args);
  return j.dump();
}

Event parse_event(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed journal line: ") + e.what());
  }
  if (!j.is_object() || !j.contains("sequence") || !j.contains("emitter") ||
      !j.contains("kind") || !j.contains("args")) {
    fail(ErrorCode::parse,
         "journal line needs sequence, emitter, kind and args");
  }
  Event event;
  if (!j["sequence"].is_number_unsigned()) {
    fail(ErrorCode::parse, "sequence must be a non-negative integer");
  }
  event.sequence = j["sequence"].get<std::uint64_t>();
  if (!j["emitter"].is_string() || !j["kind"].is_string() ||
      !j["args"].is_object()) {
    fail(ErrorCode::parse, "sequence " + std::to_string(event.sequence) +
                               ": emitter/kind must be strings, args an object");
  }
  event.emitter = Address::from_hex(j["emitter"].get<std::string>());
  auto kind = event_kind_from_string(j["kind"].get<std::string>());
  if (!kind) {
    fail(ErrorCode::parse, "sequence " + std::to_string(event.sequence) +
                               ": unknown event kind '" +
                               j["kind"].get<std::string>() + "'");
  }
  event.kind = *kind;
  for (const auto& [key, value] : j["args"].items()) {
    if (!value.is_string()) {
      fail(ErrorCode::parse, "sequence " + std::to_string(event.sequence) +
                                 ": arg " + key + " must be a string");
    }
    event.args.emplace_back(key, value.get<std::string>());
  }
  return event;
}

std::string Journal::serialize() const {
  std::string out;
  for (const auto& e : entries_) {
    out += serialize_event(e);
    out += '\n';
  }
  return out;
}

void Journal::write_file(const std::filesystem::path& path) const {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(ErrorCode::io, "cannot write journal " + path.string());
  f << serialize();
  if (!f) fail(ErrorCode::io, "write failed for " + path.string());
}

Journal Journal::parse(std::string_view text) {
  Journal journal;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      ++line_no;
      continue;
    }
    Event event;
    try {
      event = parse_event(line);
    } catch (const LedgerError& e) {
      fail(ErrorCode::parse, "journal line " + std::to_string(line_no) + ": " + e.what());
    }
    if (event.sequence != journal.size()) {
      fail(ErrorCode::parse, "journal line " + std::to_string(line_no) +
                                 ": sequence " + std::to_string(event.sequence) +
                                 " breaks the gapless order (expected " +
                                 std::to_string(journal.size()) + ")");
    }
    journal.entries_.push_back(std::move(event));
    ++line_no;
  }
  return journal;
}

Journal Journal::read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::io, "cannot read journal " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

std::vector<Event> trace(std::span<const Event> journal, TokenId id) {
  const std::string wanted = std::to_string(id);
  std::vector<Event> out;
  for (std::size_t i = 0; i < journal.size(); ++i) {
    const Event& e = journal[i];
    const std::string* tid = e.arg(arg::token_id);
    if (tid && *tid == wanted) {
      out.push_back(e);
      continue;
    }
    // A stake emits TRANSFER_SNFST(mint, id) immediately followed by the
    // SFST issuance; that issuance belongs to the same lifecycle.
    if (e.kind == EventKind::transfer_sfst && i > 0) {
      const Event& prev = journal[i - 1];
      const std::string* from = e.arg(arg::from);
      const std::string* prev_id = prev.arg(arg::token_id);
      const std::string* prev_from = prev.arg(arg::from);
      if (prev.kind == EventKind::transfer_snfst && prev_id &&
          *prev_id == wanted && from && *from == Address::zero().hex() &&
          prev_from && *prev_from == Address::zero().hex()) {
        out.push_back(e);
      }
    }
  }
  return out;
}

}  // namespace sftlock
