#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sftlock/address.hpp"
#include "sftlock/amount.hpp"
#include "sftlock/cost.hpp"
#include "sftlock/event.hpp"

namespace sftlock {

class Canonical;
class Registry;

/// Securitized twin of a staked NFST. The id is the NFST's id and the
/// primary user never changes.
struct Snfst {
  TokenId id = 0;
  Address primary_user;
  std::string channel;
  std::string location;
  bool locked = false;
};

/// Escrow, SNFST/SFST issuance and the lock/unlock transfer engine.
///
/// SFST balances live in per-PU namespaces: balance(pu, holder). Only the
/// namespace owner's own whole-share count drives SNFST transitions, and at
/// every quiescent point |unlocked(pu)| == floor(balance(pu, pu) / 10^18).
///
/// Order lists are kept consistent eagerly: an id leaving the unlocked state
/// is purged from lock_order, an id leaving the locked state from
/// unlock_order, whichever path caused the transition.
class Vault {
 public:
  struct Config {
    Address contract;  // escrow holder and event emitter
  };

  Vault() = default;
  explicit Vault(Config config) : config_(config) {}

  const Config& config() const { return config_; }

  void stake_nfst(Address pu, TokenId id, Registry& registry,
                  EventSink& sink, cost::CostMeter* meter = nullptr);

  void set_lock_order(Address caller, std::span<const TokenId> ids,
                      EventSink& sink, cost::CostMeter* meter = nullptr);
  void set_unlock_order(Address caller, std::span<const TokenId> ids,
                        EventSink& sink, cost::CostMeter* meter = nullptr);

  /// Balance move plus every SNFST transition the share deltas imply.
  void transfer(Address from, Address to, Address pu, Amount amount,
                EventSink& sink, cost::CostMeter* meter = nullptr);

  // Internal operations, public for direct testing.
  void transfer_sfst(Address from, Address to, Address pu, Amount amount,
                     EventSink& sink, cost::CostMeter* meter = nullptr);
  void lock_snfst(Address pu, TokenId id, bool is_order, EventSink& sink,
                  cost::CostMeter* meter = nullptr);
  void unlock_snfst(Address pu, TokenId id, bool is_order, EventSink& sink,
                    cost::CostMeter* meter = nullptr);

  // Queries. Absent keys read as zero / empty.
  Amount balance_of(Address pu, Address holder) const;
  std::uint64_t share_of(Address pu, Address holder) const;
  Amount total_supply(Address pu) const;
  const std::vector<TokenId>& locked_of(Address pu) const;
  const std::vector<TokenId>& unlocked_of(Address pu) const;
  const std::vector<TokenId>& lock_order(Address pu) const;
  const std::vector<TokenId>& unlock_order(Address pu) const;
  /// Zero address when the id was never staked.
  Address origin_owner(TokenId id) const;
  const Snfst* find(TokenId id) const;
  const std::map<TokenId, Snfst>& snfsts() const { return snfsts_; }
  /// Every SNFST id bound to `pu`, ascending.
  std::vector<TokenId> snfst_ids(Address pu) const;
  /// Primary users with at least one SNFST, ascending.
  std::vector<Address> primary_users() const;
  /// Holders with a nonzero balance in `pu`'s namespace.
  std::map<Address, Amount> holders(Address pu) const;

  // Raw state transitions shared by commands and replay.
  void apply_stake(Address pu, TokenId id, std::string channel,
                   std::string location);
  void apply_issue(Address pu, Address to, Amount amount);
  void apply_move(Address from, Address to, Address pu, Amount amount);
  void apply_lock(Address pu, TokenId id);
  void apply_unlock(Address pu, TokenId id);
  void apply_lock_order(Address pu, std::vector<TokenId> ids);
  void apply_unlock_order(Address pu, std::vector<TokenId> ids);

  void encode(Canonical& out) const;

 private:
  Snfst& owned_snfst(Address pu, TokenId id);
  void validate_order(Address caller, std::span<const TokenId> ids,
                      bool want_locked) const;

  Config config_;
  std::map<TokenId, Snfst> snfsts_;
  std::map<Address, std::map<Address, Amount>> shares_;
  std::map<Address, Amount> supply_;
  std::map<Address, std::vector<TokenId>> locked_;
  std::map<Address, std::vector<TokenId>> unlocked_;
  std::map<Address, std::vector<TokenId>> lock_order_;
  std::map<Address, std::vector<TokenId>> unlock_order_;
  std::map<TokenId, Address> origin_;
};

}  // namespace sftlock
