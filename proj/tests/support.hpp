#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "sftlock/address.hpp"
#include "sftlock/amount.hpp"
#include "sftlock/engine.hpp"
#include "sftlock/errors.hpp"
#include "sftlock/event.hpp"

namespace sftlock::test {

inline Address sma() { return Address::from_hex("0x050c0720d772d21017d0bd4d1cb1357b3dc59bcb"); }
inline Address pu() { return Address::from_hex("0x0aa7652b45d957b9d2de60afbbd90b2dad3d1f60"); }
inline Address su() { return Address::from_hex("0x0408dd44b2c2ebfd0f9b66a448eea7293b3c1f9f"); }
inline Address su2() { return Address::from_hex("0x5e2000000000000000000000000000000000c0de"); }

inline std::filesystem::path source_dir() { return SFTLOCK_SOURCE_DIR; }
inline std::filesystem::path scenario_path(const std::string& name) {
  return source_dir() / "scenarios" / (name + ".scenario");
}

/// Collects emitted events in order, without sequencing.
struct RecordingSink : EventSink {
  struct Entry {
    Address emitter;
    EventKind kind;
    std::vector<std::pair<std::string, std::string>> args;

    std::string arg(std::string_view name) const {
      for (const auto& [k, v] : args)
        if (k == name) return v;
      return {};
    }
  };
  std::vector<Entry> events;

  void emit(Address emitter, EventKind kind,
            std::vector<std::pair<std::string, std::string>> args) override {
    events.push_back({emitter, kind, std::move(args)});
  }
};

/// Runs `fn` and returns the LedgerError code it raised; fails the test
/// if nothing was thrown.
template <typename Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const LedgerError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a LedgerError";
  return ErrorCode::internal;
}

/// SMA mints NFST 1 and 2 to the PU, the PU stakes both.
inline Engine staked_pair() {
  Engine e({.sma = sma()});
  e.mint_nfst(sma(), pu(), "ch-36", "cell-017");
  e.mint_nfst(sma(), pu(), "ch-40", "cell-017");
  e.stake_nfst(pu(), 1);
  e.stake_nfst(pu(), 2);
  return e;
}

inline std::vector<std::pair<EventKind, std::string>> transitions(const Engine& e) {
  std::vector<std::pair<EventKind, std::string>> out;
  for (const auto& ev : e.journal().entries())
    if (ev.kind == EventKind::lock_snfst || ev.kind == EventKind::unlock_snfst)
      out.emplace_back(ev.kind, ev.require_arg(arg::token_id));
  return out;
}

}  // namespace sftlock::test
