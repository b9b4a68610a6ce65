#pragma once

#include <span>

#include "sftlock/event.hpp"
#include "sftlock/state.hpp"

namespace sftlock {

/// Rebuilds state from events alone. Lock/unlock transitions are taken from
/// the LOCK_SNFST/UNLOCK_SNFST records, never recomputed from balances, so a
/// replayed state is an independent witness of the live engine.
class Replayer {
 public:
  /// Errors are LedgerError(replay) naming the offending sequence.
  void apply(const Event& event);
  const SystemState& state() const { return state_; }
  std::uint64_t next_sequence() const { return next_; }

 private:
  void apply_unchecked(const Event& event);

  SystemState state_;
  std::uint64_t next_ = 0;
};

SystemState replay(std::span<const Event> journal);

}  // namespace sftlock
