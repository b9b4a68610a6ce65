#include "sftlock/engine.hpp"

#include "sftlock/errors.hpp"

namespace sftlock {

namespace contracts {

Address authorization() {
  return Address::from_hex("0x748998d49e1504df069b7075edfe0b1fe8a7b646");
}

Address securitization() {
  return Address::from_hex("0xd30c2759bae44819d4817568649664750a78b10f");
}

Address sharing() {
  return Address::from_hex("0x4907000000000000000000000000000000000000");
}

}  // namespace contracts

namespace {

/// Buffers events until the enclosing command commits.
class StagingSink final : public EventSink {
 public:
  void emit(Address emitter, EventKind kind,
            std::vector<std::pair<std::string, std::string>> args) override {
    staged.push_back(Event{0, emitter, kind, std::move(args)});
  }
  std::vector<Event> staged;
};

}  // namespace

Engine::Engine(Config config) : config_(config) {
  state_.registry = Registry({config.sma, config.authorization_contract});
  state_.vault = Vault({config.securitization_contract});
  state_.rentals = Rentals({config.sharing_contract});
}

template <typename Fn>
auto Engine::transact(Fn&& fn) {
  SystemState snapshot = state_;
  const std::size_t cost_mark = meter_.size();
  StagingSink sink;
  auto commit = [&] {
    for (auto& e : sink.staged) {
      e.sequence = journal_.size();
      journal_.append(std::move(e));
    }
  };
  try {
    if constexpr (std::is_void_v<decltype(fn(sink))>) {
      fn(sink);
      commit();
    } else {
      auto result = fn(sink);
      commit();
      return result;
    }
  } catch (...) {
    state_ = std::move(snapshot);
    meter_.truncate(cost_mark);
    throw;
  }
}

TokenId Engine::mint_nfst(Address caller, Address to, const std::string& channel,
                          const std::string& location) {
  return transact([&](EventSink& sink) {
    return state_.registry.mint_nfst(caller, to, channel, location, sink, &meter_);
  });
}

void Engine::reclaim_nfst(Address caller, TokenId id) {
  transact([&](EventSink& sink) {
    state_.registry.reclaim_nfst(caller, id, sink, &meter_);
  });
}

void Engine::stake_nfst(Address pu, TokenId id) {
  transact([&](EventSink& sink) {
    state_.vault.stake_nfst(pu, id, state_.registry, sink, &meter_);
  });
}

void Engine::set_lock_order(Address caller, std::span<const TokenId> ids) {
  transact([&](EventSink& sink) {
    state_.vault.set_lock_order(caller, ids, sink, &meter_);
  });
}

void Engine::set_unlock_order(Address caller, std::span<const TokenId> ids) {
  transact([&](EventSink& sink) {
    state_.vault.set_unlock_order(caller, ids, sink, &meter_);
  });
}

void Engine::transfer(Address from, Address to, Address pu, Amount amount) {
  transact([&](EventSink& sink) {
    state_.vault.transfer(from, to, pu, amount, sink, &meter_);
  });
}

void Engine::lock_snfst(Address pu, TokenId id, bool is_order) {
  transact([&](EventSink& sink) {
    state_.vault.lock_snfst(pu, id, is_order, sink, &meter_);
  });
}

void Engine::unlock_snfst(Address pu, TokenId id, bool is_order) {
  transact([&](EventSink& sink) {
    state_.vault.unlock_snfst(pu, id, is_order, sink, &meter_);
  });
}

TokenId Engine::mint_rnfst(Address pu) {
  return transact([&](EventSink& sink) {
    return state_.rentals.mint_rnfst(pu, state_.registry, sink, &meter_);
  });
}

void Engine::set_user(Address caller, TokenId id, Address user, Timestamp expires,
                      Timestamp now) {
  transact([&](EventSink& sink) {
    state_.rentals.set_user(caller, id, user, expires, now, sink, &meter_);
  });
}

}  // namespace sftlock
