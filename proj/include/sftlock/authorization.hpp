#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sftlock/address.hpp"
#include "sftlock/amount.hpp"
#include "sftlock/cost.hpp"
#include "sftlock/event.hpp"

namespace sftlock {

class Canonical;

/// Authorized spectrum asset.
struct Nfst {
  TokenId id = 0;
  Address owner;
  std::string channel;
  std::string location;
  bool staked = false;
  Address holder;  // custodian; the securitization contract once staked
  bool reclaimed = false;
};

struct NfstInfo {
  Address owner;
  std::string channel;
  std::string location;
};

/// NFST registry operated by the Spectrum Management Authority.
///
/// Commands validate, mutate through the apply_* primitives, then emit. The
/// apply_* primitives are also what journal replay uses, so they perform no
/// authorization checks and emit nothing.
class Registry {
 public:
  struct Config {
    Address sma;
    Address contract;  // emitter of MINT_NFST / RECLAIM_NFST
  };

  Registry() = default;
  explicit Registry(Config config) : config_(config) {}

  const Config& config() const { return config_; }

  TokenId mint_nfst(Address caller, Address to, std::string channel,
                    std::string location, EventSink& sink,
                    cost::CostMeter* meter = nullptr);

  void reclaim_nfst(Address caller, TokenId id, EventSink& sink,
                    cost::CostMeter* meter = nullptr);

  /// Not-found for unknown or reclaimed ids.
  NfstInfo get_nfst_info(TokenId id) const;

  /// Live or reclaimed record; nullptr if the id was never issued.
  const Nfst* find(TokenId id) const;

  bool is_pu(Address a) const { return pu_flags_.contains(a); }
  bool is_uploaded(const std::string& channel,
                   const std::string& location) const;
  TokenId token_id_counter() const { return counter_; }
  const std::vector<TokenId>& minted_list() const { return minted_; }
  std::vector<TokenId> owned_list(Address a) const;
  const std::map<TokenId, Nfst>& nfsts() const { return nfsts_; }
  const std::set<Address>& pu_flags() const { return pu_flags_; }

  // Raw state transitions shared by commands and replay.
  void apply_mint(TokenId id, Address to, std::string channel,
                  std::string location);
  void apply_reclaim(TokenId id, Address reclaimer);
  void apply_stake(TokenId id, Address holder);

  void encode(Canonical& out) const;

 private:
  Config config_;
  TokenId counter_ = 0;
  std::map<TokenId, Nfst> nfsts_;
  std::set<std::pair<std::string, std::string>> uploaded_;
  std::vector<TokenId> minted_;
  std::map<Address, std::vector<TokenId>> owned_;
  std::set<Address> pu_flags_;
};

}  // namespace sftlock
