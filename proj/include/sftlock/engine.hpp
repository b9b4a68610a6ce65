#pragma once

#include <span>
#include <string>
#include <vector>

#include "sftlock/cost.hpp"
#include "sftlock/journal.hpp"
#include "sftlock/state.hpp"

namespace sftlock {

/// Contract addresses used when a scenario does not override them. The
/// authorization and securitization values match the deployment in the
/// reference experiment.
namespace contracts {
Address authorization();
Address securitization();
Address sharing();
}  // namespace contracts

/// Single-writer command stream over the three contracts.
///
/// Each command is atomic: events are staged and only appended to the
/// journal if the command succeeds; on any error the state and cost records
/// roll back to what they were before the command.
class Engine {
 public:
  struct Config {
    Address sma;
    Address authorization_contract = contracts::authorization();
    Address securitization_contract = contracts::securitization();
    Address sharing_contract = contracts::sharing();
  };

  explicit Engine(Config config);

  TokenId mint_nfst(Address caller, Address to, const std::string& channel,
                    const std::string& location);
  void reclaim_nfst(Address caller, TokenId id);
  void stake_nfst(Address pu, TokenId id);
  void set_lock_order(Address caller, std::span<const TokenId> ids);
  void set_unlock_order(Address caller, std::span<const TokenId> ids);
  void transfer(Address from, Address to, Address pu, Amount amount);
  void lock_snfst(Address pu, TokenId id, bool is_order);
  void unlock_snfst(Address pu, TokenId id, bool is_order);
  TokenId mint_rnfst(Address pu);
  void set_user(Address caller, TokenId id, Address user, Timestamp expires,
                Timestamp now);

  const Config& config() const { return config_; }
  const SystemState& state() const { return state_; }
  const Registry& registry() const { return state_.registry; }
  const Vault& vault() const { return state_.vault; }
  const Rentals& rentals() const { return state_.rentals; }
  const Journal& journal() const { return journal_; }
  const cost::CostMeter& costs() const { return meter_; }

 private:
  template <typename Fn>
  auto transact(Fn&& fn);

  Config config_;
  SystemState state_;
  Journal journal_;
  cost::CostMeter meter_;
};

}  // namespace sftlock
