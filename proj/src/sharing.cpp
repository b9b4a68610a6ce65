#include "sftlock/sharing.hpp"

#include "sftlock/authorization.hpp"
#include "sftlock/errors.hpp"
#include "sftlock/state.hpp"

namespace sftlock {

using cost::Primitive;
using cost::tick;

TokenId Rentals::mint_rnfst(Address pu, const Registry& registry,
                            EventSink& sink, cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::mint_rnfst);
  tick(meter, Primitive::slot_read);
  if (!registry.is_pu(pu)) {
    fail(ErrorCode::authorization, pu.hex() + " is not a registered PU");
  }
  const TokenId id = counter_ + 1;
  apply_mint(id, pu);
  tick(meter, Primitive::slot_update);
  tick(meter, Primitive::slot_write_new);
  tick(meter, Primitive::event_emit);
  sink.emit(config_.contract, EventKind::mint_rnfst,
            {{std::string(arg::to), pu.hex()},
             {std::string(arg::rental_id), std::to_string(id)}});
  return id;
}

void Rentals::set_user(Address caller, TokenId id, Address user,
                       Timestamp expires, Timestamp now, EventSink& sink,
                       cost::CostMeter* meter) {
  cost::Scope scope(meter, cost::OpKind::set_user);
  tick(meter, Primitive::slot_read);
  const Rnfst* token = find(id);
  if (!token) fail(ErrorCode::not_found, "RNFST " + std::to_string(id) + " does not exist");
  if (token->owner != caller) {
    fail(ErrorCode::authorization, "only the owner may set the user of RNFST " +
                                       std::to_string(id));
  }
  if (expires <= now) {
    fail(ErrorCode::invalid_expiry, "expiry " + std::to_string(expires) +
                                        " is not after now " + std::to_string(now));
  }
  const bool fresh = token->user.is_zero() && token->expires == 0;
  apply_update(id, user, expires);
  tick(meter, fresh ? Primitive::slot_write_new : Primitive::slot_update, 2);
  tick(meter, Primitive::event_emit);
  sink.emit(config_.contract, EventKind::update_user,
            {{std::string(arg::rental_id), std::to_string(id)},
             {std::string(arg::user), user.hex()},
             {std::string(arg::expires), std::to_string(expires)}});
}

Address Rentals::user_of(TokenId id, Timestamp now) const {
  const Rnfst* token = find(id);
  if (!token) fail(ErrorCode::not_found, "RNFST " + std::to_string(id) + " does not exist");
  return now < token->expires ? token->user : Address::zero();
}

const Rnfst* Rentals::find(TokenId id) const {
  auto it = tokens_.find(id);
  return it == tokens_.end() ? nullptr : &it->second;
}

void Rentals::apply_mint(TokenId id, Address owner) {
  if (id <= counter_ || tokens_.contains(id)) {
    fail(ErrorCode::internal, "RNFST id " + std::to_string(id) + " reused");
  }
  counter_ = id;
  tokens_.emplace(id, Rnfst{id, owner, Address::zero(), 0});
}

void Rentals::apply_update(TokenId id, Address user, Timestamp expires) {
  auto it = tokens_.find(id);
  if (it == tokens_.end()) {
    fail(ErrorCode::not_found, "RNFST " + std::to_string(id) + " does not exist");
  }
  it->second.user = user;
  it->second.expires = expires;
}

void Rentals::encode(Canonical& out) const {
  out.tag("rentals");
  out.u64(counter_);
  for (const auto& [id, t] : tokens_) {
    out.u64(id);
    out.address(t.owner);
    out.address(t.user);
    out.u64(t.expires);
  }
}

}  // namespace sftlock
