#pragma once

#include <cstdint>
#include <map>

#include "sftlock/address.hpp"
#include "sftlock/amount.hpp"
#include "sftlock/cost.hpp"
#include "sftlock/event.hpp"

namespace sftlock {

class Canonical;
class Registry;

/// Logical unix-seconds; never read from the wall clock.
using Timestamp = std::uint64_t;

/// Rentable token with ERC-4907 user/expires semantics.
struct Rnfst {
  TokenId id = 0;
  Address owner;
  Address user;
  Timestamp expires = 0;
};

/// Rental tokens. Nothing here touches SFST balances or SNFST lock state.
class Rentals {
 public:
  struct Config {
    Address contract;
  };

  Rentals() = default;
  explicit Rentals(Config config) : config_(config) {}

  const Config& config() const { return config_; }

  /// Caller must be a registered PU.
  TokenId mint_rnfst(Address pu, const Registry& registry, EventSink& sink,
                     cost::CostMeter* meter = nullptr);

  void set_user(Address caller, TokenId id, Address user, Timestamp expires,
                Timestamp now, EventSink& sink,
                cost::CostMeter* meter = nullptr);

  /// The renter while now < expires, otherwise the zero address.
  Address user_of(TokenId id, Timestamp now) const;

  const Rnfst* find(TokenId id) const;
  TokenId counter() const { return counter_; }

  void apply_mint(TokenId id, Address owner);
  void apply_update(TokenId id, Address user, Timestamp expires);

  void encode(Canonical& out) const;

 private:
  Config config_;
  TokenId counter_ = 0;
  std::map<TokenId, Rnfst> tokens_;
};

}  // namespace sftlock
