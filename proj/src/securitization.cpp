#include "sftlock/securitization.hpp"

#include <algorithm>
#include <set>

#include "sftlock/authorization.hpp"
#include "sftlock/errors.hpp"
#include "sftlock/state.hpp"

namespace sftlock {

using cost::Primitive;
using cost::tick;

namespace {

const std::vector<TokenId> kEmpty;

template <typename Map>
const std::vector<TokenId>& list_or_empty(const Map& m, Address pu) {
  auto it = m.find(pu);
  return it == m.end() ? kEmpty : it->second;
}

bool erase_value(std::vector<TokenId>& list, TokenId id) {
  auto it = std::find(list.begin(), list.end(), id);
  if (it == list.end()) return false;
  list.erase(it);
  return true;
}

std::string join_ids(std::span<const TokenId> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string id_str(TokenId id) { return std::to_string(id); }

}  // namespace

void Vault::stake_nfst(Address pu, TokenId id, Registry& registry,
                       EventSink& sink, cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::stake);
  tick(meter, Primitive::slot_read);
  NfstInfo info = registry.get_nfst_info(id);
  if (info.owner != pu) {
    fail(ErrorCode::ownership, "only the owner of NFST " + id_str(id) + " may stake it");
  }
  if (registry.find(id)->staked || snfsts_.contains(id)) {
    fail(ErrorCode::already_staked, "NFST " + id_str(id) + " is already staked");
  }

  registry.apply_stake(id, config_.contract);
  apply_stake(pu, id, info.channel, info.location);
  const bool fresh_balance = balance_of(pu, pu) == 0;
  apply_issue(pu, pu, kUnit);

  tick(meter, Primitive::slot_write_new);       // originOwnerOfNFST
  tick(meter, Primitive::slot_update, 2);       // staking status, holder
  tick(meter, Primitive::slot_write_new, 3);    // SNFST owner, channel, location
  tick(meter, Primitive::list_insert);          // unlockedSNFST[pu]
  tick(meter, fresh_balance ? Primitive::slot_write_new : Primitive::slot_update);
  tick(meter, Primitive::slot_update);          // total supply
  tick(meter, Primitive::event_emit, 2);

  sink.emit(config_.contract, EventKind::transfer_snfst,
            {{std::string(arg::from), Address::zero().hex()},
             {std::string(arg::to), pu.hex()},
             {std::string(arg::token_id), id_str(id)}});
  // The issuance record leaves _primaryUser at the zero address, as the
  // reference deployment's stake output does; the namespace is _to.
  sink.emit(config_.contract, EventKind::transfer_sfst,
            {{std::string(arg::from), Address::zero().hex()},
             {std::string(arg::to), pu.hex()},
             {std::string(arg::primary_user), Address::zero().hex()},
             {std::string(arg::amount), to_decimal(kUnit)}});
}

void Vault::validate_order(Address caller, std::span<const TokenId> ids,
                           bool want_locked) const {
  std::set<TokenId> seen;
  for (TokenId id : ids) {
    const Snfst* s = find(id);
    if (!s) fail(ErrorCode::not_found, "SNFST " + id_str(id) + " does not exist");
    if (s->primary_user != caller) {
      fail(ErrorCode::ownership, "caller does not own SNFST " + id_str(id));
    }
    if (s->locked != want_locked) {
      fail(ErrorCode::state, "SNFST " + id_str(id) + " is currently " +
                                 (s->locked ? "locked" : "unlocked"));
    }
    if (!seen.insert(id).second) {
      fail(ErrorCode::invalid_list, "SNFST " + id_str(id) + " listed twice");
    }
  }
}

void Vault::set_lock_order(Address caller, std::span<const TokenId> ids,
                           EventSink& sink, cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::set_lock_order);
  tick(meter, Primitive::slot_read, ids.size());
  validate_order(caller, ids, /*want_locked=*/false);
  const auto old_size = lock_order(caller).size();
  apply_lock_order(caller, {ids.begin(), ids.end()});
  tick(meter, Primitive::slot_update, std::min(old_size, ids.size()));
  if (ids.size() > old_size) tick(meter, Primitive::slot_write_new, ids.size() - old_size);
  if (old_size > ids.size()) tick(meter, Primitive::slot_delete, old_size - ids.size());
  tick(meter, Primitive::event_emit);
  sink.emit(config_.contract, EventKind::set_lock_order,
            {{std::string(arg::primary_user), caller.hex()},
             {std::string(arg::token_ids), join_ids(ids)}});
}

void Vault::set_unlock_order(Address caller, std::span<const TokenId> ids,
                             EventSink& sink, cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::set_unlock_order);
  tick(meter, Primitive::slot_read, ids.size());
  validate_order(caller, ids, /*want_locked=*/true);
  const auto old_size = unlock_order(caller).size();
  apply_unlock_order(caller, {ids.begin(), ids.end()});
  tick(meter, Primitive::slot_update, std::min(old_size, ids.size()));
  if (ids.size() > old_size) tick(meter, Primitive::slot_write_new, ids.size() - old_size);
  if (old_size > ids.size()) tick(meter, Primitive::slot_delete, old_size - ids.size());
  tick(meter, Primitive::event_emit);
  sink.emit(config_.contract, EventKind::set_unlock_order,
            {{std::string(arg::primary_user), caller.hex()},
             {std::string(arg::token_ids), join_ids(ids)}});
}

namespace {

void check_transfer(const Vault& vault, Address from, Address to, Address pu,
                    Amount amount) {
  if (from.is_zero()) {
    fail(ErrorCode::invalid_argument, "cannot transfer from the zero address");
  }
  if (to.is_zero()) {
    fail(ErrorCode::invalid_recipient, "cannot transfer SFSTs to the zero address");
  }
  if (vault.balance_of(pu, from) < amount) {
    fail(ErrorCode::balance, "insufficient SFST balance: " + from.hex() + " holds " +
                                 to_decimal(vault.balance_of(pu, from)) + ", needs " +
                                 to_decimal(amount));
  }
}

}  // namespace

void Vault::transfer_sfst(Address from, Address to, Address pu, Amount amount,
                          EventSink& sink, cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::transfer);
  check_transfer(*this, from, to, pu, amount);
  tick(meter, Primitive::slot_read, 2);
  const bool fresh = balance_of(pu, to) == 0 && amount > 0 && from != to;
  apply_move(from, to, pu, amount);
  tick(meter, Primitive::slot_update);
  tick(meter, fresh ? Primitive::slot_write_new : Primitive::slot_update);
  tick(meter, Primitive::event_emit);
  sink.emit(config_.contract, EventKind::transfer_sfst,
            {{std::string(arg::from), from.hex()},
             {std::string(arg::to), to.hex()},
             {std::string(arg::primary_user), pu.hex()},
             {std::string(arg::amount), to_decimal(amount)}});
}

void Vault::transfer(Address from, Address to, Address pu, Amount amount,
                     EventSink& sink, cost::CostMeter* meter) {
  check_transfer(*this, from, to, pu, amount);

  const std::uint64_t from_old = share_of(pu, from);
  const std::uint64_t to_old = share_of(pu, to);
  transfer_sfst(from, to, pu, amount, sink, meter);
  const std::uint64_t from_now = share_of(pu, from);
  const std::uint64_t to_now = share_of(pu, to);

  if (from == pu) {
    const std::uint64_t lock_num = from_old > from_now ? from_old - from_now : 0;
    const std::uint64_t by_order =
        std::min<std::uint64_t>(lock_num, lock_order(pu).size());
    for (std::uint64_t i = 0; i < by_order; ++i) {
      lock_snfst(pu, lock_order(pu).front(), true, sink, meter);
    }
    for (std::uint64_t i = by_order; i < lock_num; ++i) {
      if (unlocked_of(pu).empty()) {
        fail(ErrorCode::internal, "no unlocked SNFST left to lock for " + pu.hex());
      }
      lock_snfst(pu, unlocked_of(pu).front(), false, sink, meter);
    }
  }
  if (to == pu) {
    const std::uint64_t unlock_num = to_now > to_old ? to_now - to_old : 0;
    const std::uint64_t by_order =
        std::min<std::uint64_t>(unlock_num, unlock_order(pu).size());
    for (std::uint64_t i = 0; i < by_order; ++i) {
      unlock_snfst(pu, unlock_order(pu).front(), true, sink, meter);
    }
    for (std::uint64_t i = by_order; i < unlock_num; ++i) {
      if (locked_of(pu).empty()) {
        fail(ErrorCode::internal, "no locked SNFST left to unlock for " + pu.hex());
      }
      unlock_snfst(pu, locked_of(pu).front(), false, sink, meter);
    }
  }
}

void Vault::lock_snfst(Address pu, TokenId id, bool is_order, EventSink& sink,
                       cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::lock);
  tick(meter, Primitive::slot_read);
  const bool in_order = [&] {
    const auto& order = lock_order(pu);
    return std::find(order.begin(), order.end(), id) != order.end();
  }();
  apply_lock(pu, id);
  tick(meter, Primitive::slot_update);
  tick(meter, Primitive::list_remove);  // unlockedSNFST[pu]
  tick(meter, Primitive::list_insert);  // lockedSNFST[pu]
  if (!is_order) tick(meter, Primitive::slot_read);  // lockOrder membership
  if (in_order) tick(meter, Primitive::list_remove);
  tick(meter, Primitive::event_emit);
  sink.emit(config_.contract, EventKind::lock_snfst,
            {{std::string(arg::primary_user), pu.hex()},
             {std::string(arg::token_id), id_str(id)}});
}

void Vault::unlock_snfst(Address pu, TokenId id, bool is_order, EventSink& sink,
                         cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::unlock);
  tick(meter, Primitive::slot_read);
  const bool in_order = [&] {
    const auto& order = unlock_order(pu);
    return std::find(order.begin(), order.end(), id) != order.end();
  }();
  apply_unlock(pu, id);
  tick(meter, Primitive::slot_update);
  tick(meter, Primitive::list_remove);  // lockedSNFST[pu]
  tick(meter, Primitive::list_insert);  // unlockedSNFST[pu]
  if (!is_order) tick(meter, Primitive::slot_read);  // unlockOrder membership
  if (in_order) tick(meter, Primitive::list_remove);
  tick(meter, Primitive::event_emit);
  sink.emit(config_.contract, EventKind::unlock_snfst,
            {{std::string(arg::primary_user), pu.hex()},
             {std::string(arg::token_id), id_str(id)}});
}

Amount Vault::balance_of(Address pu, Address holder) const {
  auto ns = shares_.find(pu);
  if (ns == shares_.end()) return 0;
  auto it = ns->second.find(holder);
  return it == ns->second.end() ? 0 : it->second;
}

std::uint64_t Vault::share_of(Address pu, Address holder) const {
  return whole_shares(balance_of(pu, holder));
}

Amount Vault::total_supply(Address pu) const {
  auto it = supply_.find(pu);
  return it == supply_.end() ? 0 : it->second;
}

const std::vector<TokenId>& Vault::locked_of(Address pu) const {
  return list_or_empty(locked_, pu);
}
const std::vector<TokenId>& Vault::unlocked_of(Address pu) const {
  return list_or_empty(unlocked_, pu);
}
const std::vector<TokenId>& Vault::lock_order(Address pu) const {
  return list_or_empty(lock_order_, pu);
}
const std::vector<TokenId>& Vault::unlock_order(Address pu) const {
  return list_or_empty(unlock_order_, pu);
}

Address Vault::origin_owner(TokenId id) const {
  auto it = origin_.find(id);
  return it == origin_.end() ? Address::zero() : it->second;
}

const Snfst* Vault::find(TokenId id) const {
  auto it = snfsts_.find(id);
  return it == snfsts_.end() ? nullptr : &it->second;
}

std::vector<TokenId> Vault::snfst_ids(Address pu) const {
  std::vector<TokenId> out;
  for (const auto& [id, s] : snfsts_) {
    if (s.primary_user == pu) out.push_back(id);
  }
  return out;
}

std::vector<Address> Vault::primary_users() const {
  std::set<Address> pus;
  for (const auto& [id, s] : snfsts_) pus.insert(s.primary_user);
  return {pus.begin(), pus.end()};
}

std::map<Address, Amount> Vault::holders(Address pu) const {
  auto it = shares_.find(pu);
  return it == shares_.end() ? std::map<Address, Amount>{} : it->second;
}

Snfst& Vault::owned_snfst(Address pu, TokenId id) {
  auto it = snfsts_.find(id);
  if (it == snfsts_.end()) {
    fail(ErrorCode::not_found, "SNFST " + id_str(id) + " does not exist");
  }
  if (it->second.primary_user != pu) {
    fail(ErrorCode::ownership, "SNFST " + id_str(id) + " is not bound to " + pu.hex());
  }
  return it->second;
}

void Vault::apply_stake(Address pu, TokenId id, std::string channel,
                        std::string location) {
  if (snfsts_.contains(id)) {
    fail(ErrorCode::already_staked, "SNFST " + id_str(id) + " already exists");
  }
  origin_[id] = pu;
  snfsts_.emplace(id, Snfst{id, pu, std::move(channel), std::move(location), false});
  unlocked_[pu].push_back(id);
}

void Vault::apply_issue(Address pu, Address to, Amount amount) {
  shares_[pu][to] += amount;
  supply_[pu] += amount;
}

void Vault::apply_move(Address from, Address to, Address pu, Amount amount) {
  if (balance_of(pu, from) < amount) {
    fail(ErrorCode::balance, "insufficient SFST balance for " + from.hex());
  }
  auto& ns = shares_[pu];
  ns[from] -= amount;
  ns[to] += amount;
  for (auto a : {from, to}) {
    auto it = ns.find(a);
    if (it != ns.end() && it->second == 0) ns.erase(it);
  }
}

void Vault::apply_lock(Address pu, TokenId id) {
  Snfst& s = owned_snfst(pu, id);
  if (s.locked) fail(ErrorCode::state, "SNFST " + id_str(id) + " is already locked");
  s.locked = true;
  erase_value(unlocked_[pu], id);
  locked_[pu].push_back(id);
  erase_value(lock_order_[pu], id);
}

void Vault::apply_unlock(Address pu, TokenId id) {
  Snfst& s = owned_snfst(pu, id);
  if (!s.locked) fail(ErrorCode::state, "SNFST " + id_str(id) + " is already unlocked");
  s.locked = false;
  erase_value(locked_[pu], id);
  unlocked_[pu].push_back(id);
  erase_value(unlock_order_[pu], id);
}

void Vault::apply_lock_order(Address pu, std::vector<TokenId> ids) {
  lock_order_[pu] = std::move(ids);
}

void Vault::apply_unlock_order(Address pu, std::vector<TokenId> ids) {
  unlock_order_[pu] = std::move(ids);
}

void Vault::encode(Canonical& out) const {
  auto lists = [&out](std::string_view tag,
                      const std::map<Address, std::vector<TokenId>>& m) {
    out.tag(tag);
    for (const auto& [pu, ids] : m) {
      if (ids.empty()) continue;
      out.address(pu);
      out.u64(ids.size());
      for (auto id : ids) out.u64(id);
    }
  };

  out.tag("snfsts");
  for (const auto& [id, s] : snfsts_) {
    out.u64(id);
    out.address(s.primary_user);
    out.str(s.channel);
    out.str(s.location);
    out.u8(s.locked ? 1 : 0);
  }
  out.tag("shares");
  for (const auto& [pu, ns] : shares_) {
    for (const auto& [holder, amount] : ns) {
      if (amount == 0) continue;
      out.address(pu);
      out.address(holder);
      out.amount(amount);
    }
  }
  out.tag("supply");
  for (const auto& [pu, amount] : supply_) {
    if (amount == 0) continue;
    out.address(pu);
    out.amount(amount);
  }
  lists("locked", locked_);
  lists("unlocked", unlocked_);
  lists("lock_order", lock_order_);
  lists("unlock_order", unlock_order_);
  out.tag("origin");
  for (const auto& [id, pu] : origin_) {
    out.u64(id);
    out.address(pu);
  }
}

}  // namespace sftlock
