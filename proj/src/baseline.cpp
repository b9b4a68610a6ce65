#include "sftlock/baseline.hpp"

#include "sftlock/errors.hpp"

namespace sftlock {

using cost::Primitive;
using cost::tick;

namespace {
const std::vector<TokenId> kNone;
}

std::vector<TokenId> HybridLedger::hybrid_mint(Address to, std::uint64_t units,
                                               cost::CostMeter* meter) {
  if (to.is_zero()) fail(ErrorCode::invalid_recipient, "cannot mint to the zero address");
  if (units == 0) fail(ErrorCode::invalid_argument, "hybrid mint needs at least one unit");
  const Amount add = static_cast<Amount>(units) * kUnit;
  if (add / kUnit != units || balance_of(to) > ~Amount{0} - add) {
    fail(ErrorCode::invalid_argument, "hybrid mint overflows the balance");
  }
  balances_[to] += add;
  std::vector<TokenId> ids;
  ids.reserve(units);
  for (std::uint64_t i = 0; i < units; ++i) ids.push_back(mint_one(to, meter));
  return ids;
}

void HybridLedger::hybrid_transfer(Address from, Address to, Amount amount,
                                   cost::CostMeter* meter) {
  if (to.is_zero()) fail(ErrorCode::invalid_recipient, "cannot transfer to the zero address");
  if (balance_of(from) < amount) {
    fail(ErrorCode::balance, "insufficient balance: " + from.hex() + " holds " +
                                 to_decimal(balance_of(from)) + ", needs " +
                                 to_decimal(amount));
  }
  const std::uint64_t from_old = whole_shares(balance_of(from));
  const std::uint64_t to_old = whole_shares(balance_of(to));
  {
    cost::Scope scope(meter, cost::OpKind::hybrid_transfer);
    tick(meter, Primitive::slot_read, 2);
    const bool fresh = balance_of(to) == 0 && amount > 0 && from != to;
    balances_[from] -= amount;
    balances_[to] += amount;
    tick(meter, Primitive::slot_update);
    tick(meter, fresh ? Primitive::slot_write_new : Primitive::slot_update);
    tick(meter, Primitive::event_emit);
  }
  const std::uint64_t from_now = whole_shares(balance_of(from));
  const std::uint64_t to_now = whole_shares(balance_of(to));

  for (std::uint64_t k = from_old > from_now ? from_old - from_now : 0; k > 0; --k) {
    burn_front(from, meter);
  }
  for (std::uint64_t k = to_now > to_old ? to_now - to_old : 0; k > 0; --k) {
    mint_one(to, meter);
  }
}

Amount HybridLedger::balance_of(Address a) const {
  auto it = balances_.find(a);
  return it == balances_.end() ? 0 : it->second;
}

const std::vector<TokenId>& HybridLedger::held(Address a) const {
  auto it = held_.find(a);
  return it == held_.end() ? kNone : it->second;
}

TokenId HybridLedger::mint_one(Address to, cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::mint);
  tick(meter, Primitive::slot_read);             // id counter
  const TokenId id = ++counter_;
  tick(meter, Primitive::slot_update);           // id counter
  tick(meter, Primitive::slot_write_new, 2);     // owner of id, index in owner list
  held_[to].push_back(id);
  tick(meter, Primitive::list_insert);
  tick(meter, Primitive::event_emit);
  return id;
}

void HybridLedger::burn_front(Address from, cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::burn);
  auto& ids = held_[from];
  if (ids.empty()) {
    fail(ErrorCode::internal, "no NFT left to burn for " + from.hex());
  }
  tick(meter, Primitive::slot_read, 2);     // owner, index
  ids.erase(ids.begin());
  tick(meter, Primitive::slot_delete, 3);   // owner, index, approval
  tick(meter, Primitive::list_remove);
  tick(meter, Primitive::event_emit);
}

}  // namespace sftlock
