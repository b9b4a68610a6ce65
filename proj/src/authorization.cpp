#include "sftlock/authorization.hpp"

#include <algorithm>

#include "sftlock/errors.hpp"
#include "sftlock/state.hpp"

namespace sftlock {

using cost::Primitive;
using cost::tick;

namespace {

void erase_value(std::vector<TokenId>& list, TokenId id) {
  list.erase(std::remove(list.begin(), list.end(), id), list.end());
}

}  // namespace

TokenId Registry::mint_nfst(Address caller, Address to, std::string channel,
                            std::string location, EventSink& sink,
                            cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::mint_nfst);
  if (config_.sma.is_zero() || caller != config_.sma) {
    fail(ErrorCode::authorization, "only the SMA may mint NFSTs");
  }
  if (to.is_zero()) {
    fail(ErrorCode::invalid_recipient, "cannot mint an NFST to the zero address");
  }
  tick(meter, Primitive::slot_read);
  if (is_uploaded(channel, location)) {
    fail(ErrorCode::duplicate_spectrum,
         "spectrum (" + channel + ", " + location + ") is already uploaded");
  }

  const TokenId id = counter_ + 1;
  tick(meter, Primitive::slot_read);
  const bool new_pu = !is_pu(to);
  apply_mint(id, to, channel, location);

  tick(meter, Primitive::slot_update);          // counter
  tick(meter, Primitive::slot_write_new, 4);    // owner, channel, location, uploaded
  tick(meter, Primitive::list_insert, 2);       // minted list, owned list
  if (new_pu) tick(meter, Primitive::slot_write_new);
  tick(meter, Primitive::event_emit);

  sink.emit(config_.contract, EventKind::mint_nfst,
            {{std::string(arg::from), Address::zero().hex()},
             {std::string(arg::to), to.hex()},
             {std::string(arg::token_id), std::to_string(id)},
             {std::string(arg::channel), std::move(channel)},
             {std::string(arg::location), std::move(location)}});
  return id;
}

void Registry::reclaim_nfst(Address caller, TokenId id, EventSink& sink,
                            cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::reclaim_nfst);
  if (config_.sma.is_zero() || caller != config_.sma) {
    fail(ErrorCode::authorization, "only the SMA may reclaim NFSTs");
  }
  tick(meter, Primitive::slot_read);
  const Nfst* nfst = find(id);
  if (!nfst || nfst->reclaimed) {
    fail(ErrorCode::not_found, "NFST " + std::to_string(id) + " does not exist");
  }
  if (nfst->staked) {
    fail(ErrorCode::staked_asset,
         "NFST " + std::to_string(id) + " is escrowed by the securitization contract");
  }
  const Address holder = nfst->holder;
  apply_reclaim(id, caller);

  tick(meter, Primitive::slot_delete);        // uploaded flag
  tick(meter, Primitive::list_remove, 2);     // minted list, owned list
  tick(meter, Primitive::slot_update, 2);     // reclaimed flag, holder
  if (!is_pu(holder)) tick(meter, Primitive::slot_delete);
  tick(meter, Primitive::event_emit);

  sink.emit(config_.contract, EventKind::reclaim_nfst,
            {{std::string(arg::from), caller.hex()},
             {std::string(arg::token_id), std::to_string(id)}});
}

NfstInfo Registry::get_nfst_info(TokenId id) const {
  const Nfst* nfst = find(id);
  if (!nfst || nfst->reclaimed) {
    fail(ErrorCode::not_found, "NFST " + std::to_string(id) + " does not exist");
  }
  return NfstInfo{nfst->owner, nfst->channel, nfst->location};
}

const Nfst* Registry::find(TokenId id) const {
  auto it = nfsts_.find(id);
  return it == nfsts_.end() ? nullptr : &it->second;
}

bool Registry::is_uploaded(const std::string& channel,
                           const std::string& location) const {
  return uploaded_.contains({channel, location});
}

std::vector<TokenId> Registry::owned_list(Address a) const {
  auto it = owned_.find(a);
  return it == owned_.end() ? std::vector<TokenId>{} : it->second;
}

void Registry::apply_mint(TokenId id, Address to, std::string channel,
                          std::string location) {
  if (id <= counter_ || nfsts_.contains(id)) {
    fail(ErrorCode::internal, "NFST id " + std::to_string(id) + " reused");
  }
  if (is_uploaded(channel, location)) {
    fail(ErrorCode::duplicate_spectrum,
         "spectrum (" + channel + ", " + location + ") is already uploaded");
  }
  counter_ = id;
  uploaded_.emplace(channel, location);
  nfsts_.emplace(id, Nfst{id, to, std::move(channel), std::move(location),
                          false, to, false});
  minted_.push_back(id);
  owned_[to].push_back(id);
  pu_flags_.insert(to);
}

void Registry::apply_reclaim(TokenId id, Address reclaimer) {
  auto it = nfsts_.find(id);
  if (it == nfsts_.end() || it->second.reclaimed) {
    fail(ErrorCode::not_found, "NFST " + std::to_string(id) + " does not exist");
  }
  Nfst& nfst = it->second;
  const Address former = nfst.holder;
  uploaded_.erase({nfst.channel, nfst.location});
  erase_value(minted_, id);
  auto owned = owned_.find(former);
  if (owned != owned_.end()) {
    erase_value(owned->second, id);
    if (owned->second.empty()) owned_.erase(owned);
  }
  nfst.reclaimed = true;
  nfst.holder = reclaimer;
  // Staked NFSTs stay on their owner's list and cannot be reclaimed, so an
  // empty owned list also means the address holds no SNFST.
  if (!owned_.contains(former)) pu_flags_.erase(former);
}

void Registry::apply_stake(TokenId id, Address holder) {
  auto it = nfsts_.find(id);
  if (it == nfsts_.end() || it->second.reclaimed) {
    fail(ErrorCode::not_found, "NFST " + std::to_string(id) + " does not exist");
  }
  if (it->second.staked) {
    fail(ErrorCode::already_staked, "NFST " + std::to_string(id) + " is already staked");
  }
  it->second.staked = true;
  it->second.holder = holder;
}

void Registry::encode(Canonical& out) const {
  out.tag("registry");
  out.u64(counter_);
  out.tag("nfsts");
  for (const auto& [id, n] : nfsts_) {
    out.u64(id);
    out.address(n.owner);
    out.str(n.channel);
    out.str(n.location);
    out.u8(n.staked ? 1 : 0);
    out.address(n.holder);
    out.u8(n.reclaimed ? 1 : 0);
  }
  out.tag("uploaded");
  for (const auto& [channel, location] : uploaded_) {
    out.str(channel);
    out.str(location);
  }
  out.tag("minted");
  for (auto id : minted_) out.u64(id);
  out.tag("owned");
  for (const auto& [a, ids] : owned_) {
    if (ids.empty()) continue;
    out.address(a);
    out.u64(ids.size());
    for (auto id : ids) out.u64(id);
  }
  out.tag("pu");
  for (const auto& a : pu_flags_) out.address(a);
}

}  // namespace sftlock
