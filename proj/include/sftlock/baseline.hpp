#pragma once

#include <map>
#include <vector>

#include "sftlock/address.hpp"
#include "sftlock/amount.hpp"
#include "sftlock/cost.hpp"

namespace sftlock {

/// ERC-404-style hybrid ledger: one global fungible pool whose whole-unit
/// threshold crossings burn the sender's NFTs and mint fresh ones for the
/// receiver. Burned ids are gone for good; new ids always come from a
/// monotonic counter.
class HybridLedger {
 public:
  /// units >= 1; mints `units` fresh ids to `to`.
  std::vector<TokenId> hybrid_mint(Address to, std::uint64_t units,
                                   cost::CostMeter* meter = nullptr);

  void hybrid_transfer(Address from, Address to, Amount amount,
                       cost::CostMeter* meter = nullptr);

  Amount balance_of(Address a) const;
  const std::vector<TokenId>& held(Address a) const;
  TokenId nft_counter() const { return counter_; }
  const std::map<Address, Amount>& balances() const { return balances_; }

 private:
  TokenId mint_one(Address to, cost::CostMeter* meter);
  void burn_front(Address from, cost::CostMeter* meter);

  std::map<Address, Amount> balances_;
  std::map<Address, std::vector<TokenId>> held_;
  TokenId counter_ = 0;
};

}  // namespace sftlock
