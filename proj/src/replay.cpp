#include "sftlock/replay.hpp"

#include <limits>

#include "sftlock/errors.hpp"

namespace sftlock {

namespace {

TokenId parse_id(const std::string& text) {
  Amount v = parse_decimal(text);
  if (v == 0 || v > std::numeric_limits<TokenId>::max()) {
    fail(ErrorCode::parse, "token id out of range: '" + text + "'");
  }
  return static_cast<TokenId>(v);
}

std::vector<TokenId> parse_id_list(const std::string& text) {
  std::vector<TokenId> ids;
  if (text.empty()) return ids;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    ids.push_back(parse_id(text.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ids;
}

Address addr(const Event& e, std::string_view name) {
  return Address::from_hex(e.require_arg(name));
}

}  // namespace

void Replayer::apply(const Event& event) {
  if (event.sequence != next_) {
    fail(ErrorCode::replay, "sequence " + std::to_string(event.sequence) +
                                ": expected sequence " + std::to_string(next_));
  }
  try {
    apply_unchecked(event);
  } catch (const LedgerError& e) {
    if (e.code() == ErrorCode::replay) throw;
    fail(ErrorCode::replay, "sequence " + std::to_string(event.sequence) + " (" +
                                std::string(to_string(event.kind)) + "): " + e.what());
  }
  ++next_;
}

void Replayer::apply_unchecked(const Event& e) {
  auto& registry = state_.registry;
  auto& vault = state_.vault;
  switch (e.kind) {
    case EventKind::mint_nfst:
      registry.apply_mint(parse_id(e.require_arg(arg::token_id)), addr(e, arg::to),
                          e.require_arg(arg::channel), e.require_arg(arg::location));
      break;
    case EventKind::reclaim_nfst:
      registry.apply_reclaim(parse_id(e.require_arg(arg::token_id)), addr(e, arg::from));
      break;
    case EventKind::transfer_snfst: {
      if (!addr(e, arg::from).is_zero()) {
        fail(ErrorCode::replay, "SNFSTs never move after issuance");
      }
      const TokenId id = parse_id(e.require_arg(arg::token_id));
      const Address pu = addr(e, arg::to);
      const NfstInfo info = registry.get_nfst_info(id);
      if (info.owner != pu) {
        fail(ErrorCode::replay, "stake of NFST " + std::to_string(id) + " by non-owner");
      }
      registry.apply_stake(id, e.emitter);
      vault.apply_stake(pu, id, info.channel, info.location);
      break;
    }
    case EventKind::transfer_sfst: {
      const Address from = addr(e, arg::from);
      const Address to = addr(e, arg::to);
      const Address pu = addr(e, arg::primary_user);
      const Amount amount = parse_decimal(e.require_arg(arg::amount));
      if (from.is_zero()) {
        vault.apply_issue(pu.is_zero() ? to : pu, to, amount);
      } else {
        vault.apply_move(from, to, pu, amount);
      }
      break;
    }
    case EventKind::lock_snfst:
      vault.apply_lock(addr(e, arg::primary_user), parse_id(e.require_arg(arg::token_id)));
      break;
    case EventKind::unlock_snfst:
      vault.apply_unlock(addr(e, arg::primary_user), parse_id(e.require_arg(arg::token_id)));
      break;
    case EventKind::set_lock_order:
      vault.apply_lock_order(addr(e, arg::primary_user),
                             parse_id_list(e.require_arg(arg::token_ids)));
      break;
    case EventKind::set_unlock_order:
      vault.apply_unlock_order(addr(e, arg::primary_user),
                               parse_id_list(e.require_arg(arg::token_ids)));
      break;
    case EventKind::mint_rnfst:
      state_.rentals.apply_mint(parse_id(e.require_arg(arg::rental_id)), addr(e, arg::to));
      break;
    case EventKind::update_user: {
      Amount expires = parse_decimal(e.require_arg(arg::expires));
      if (expires > std::numeric_limits<Timestamp>::max()) {
        fail(ErrorCode::parse, "expiry out of range");
      }
      state_.rentals.apply_update(parse_id(e.require_arg(arg::rental_id)),
                                  addr(e, arg::user), static_cast<Timestamp>(expires));
      break;
    }
  }
}

SystemState replay(std::span<const Event> journal) {
  Replayer r;
  for (const auto& e : journal) r.apply(e);
  return r.state();
}

}  // namespace sftlock
