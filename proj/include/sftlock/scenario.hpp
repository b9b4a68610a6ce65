#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sftlock/baseline.hpp"
#include "sftlock/cost.hpp"
#include "sftlock/engine.hpp"
#include "sftlock/errors.hpp"

namespace sftlock::scenario {

struct MintNfst { Address caller, to; std::string channel, location; };
struct ReclaimNfst { Address caller; TokenId token = 0; };
struct StakeNfst { Address pu; TokenId token = 0; };
struct SetLockOrder { Address caller; std::vector<TokenId> tokens; };
struct SetUnlockOrder { Address caller; std::vector<TokenId> tokens; };
struct Transfer { Address from, to, pu; Amount amount = 0; };
struct MintRnfst { Address pu; };
struct SetUser { Address caller; TokenId token = 0; Address user; Timestamp expires = 0, now = 0; };
struct AssertBalance { Address pu, holder; Amount amount = 0; };
struct AssertLocked { Address pu; TokenId token = 0; };
struct AssertUnlocked { Address pu; TokenId token = 0; };
struct AssertShare { Address pu, holder; std::uint64_t share = 0; };

using Command =
    std::variant<MintNfst, ReclaimNfst, StakeNfst, SetLockOrder, SetUnlockOrder,
                 Transfer, MintRnfst, SetUser, AssertBalance, AssertLocked,
                 AssertUnlocked, AssertShare>;

std::string_view op_name(const Command& cmd);

struct Step {
  std::size_t line = 0;  // 1-based line in the scenario file
  Command command;
  /// When set, the step must fail with exactly this category.
  std::optional<ErrorCode> expect_error;
};

/// Declarative scenario. One JSON object per line:
///   {"scenario": "<name>"}
///   {"actors": {"SMA": "0x..", "PU": "0x..", ...}}
///   {"cost_weights": {"slot_write_new": 20000, ...}}      (optional)
///   {"op": "<command>", ...fields, "expect_error": "<code>"}
/// Blank lines and lines starting with '#' are ignored. Amounts are strings:
/// "0.3" is share notation, "300000000000000000" raw atto-shares.
struct Scenario {
  std::string name;
  std::vector<std::pair<std::string, Address>> actors;
  std::optional<cost::Weights> cost_weights;
  std::vector<Step> steps;

  std::optional<Address> actor(std::string_view role) const;
  /// Role name for an address, or its hex form.
  std::string label(const Address& a) const;
};

/// Throws LedgerError(parse) or LedgerError(unknown_actor), naming the line.
Scenario parse(std::string_view text);
Scenario load(const std::filesystem::path& path);

/// Reads {"primitive": weight, ...} over a base weight set.
cost::Weights parse_weights(std::string_view json_text, cost::Weights base);
cost::Weights load_weights(const std::filesystem::path& path, cost::Weights base);

struct StepFailure {
  std::size_t step = 0;  // 0-based index into Scenario::steps
  std::size_t line = 0;
  std::string op;
  ErrorCode code = ErrorCode::internal;
  bool assertion = false;
  std::string message;

  std::string describe() const;
};

struct RunResult {
  explicit RunResult(Engine e) : engine(std::move(e)) {}

  Engine engine;
  std::size_t steps_executed = 0;
  std::optional<StepFailure> failure;

  bool ok() const { return !failure.has_value(); }
};

Engine::Config engine_config(const Scenario& s);

/// Drives the SFT-Lock engine step by step, stopping at the first failure.
RunResult run(const Scenario& s);

/// Per-step, per-address NFT count comparison between the two models.
struct CountCheck {
  std::size_t step = 0;
  Address holder;
  std::uint64_t sft_lock = 0;  // unlocked SNFSTs (PU) or whole shares (others)
  std::uint64_t baseline = 0;  // NFTs held in the hybrid ledger
};

struct CompareResult {
  explicit CompareResult(Engine e) : engine(std::move(e)) {}

  Engine engine;
  HybridLedger baseline;
  cost::CostMeter baseline_costs;
  std::optional<Address> primary_user;
  std::optional<StepFailure> failure;
  std::vector<CountCheck> checks;
  std::vector<CountCheck> mismatches;
  std::vector<TokenId> sft_ids_before, sft_ids_after;
  std::vector<TokenId> baseline_ids_before, baseline_ids_after;

  bool counts_equal() const { return mismatches.empty(); }
  bool sft_identity_preserved() const { return sft_ids_before == sft_ids_after; }
  bool baseline_identity_preserved() const {
    return baseline_ids_before == baseline_ids_after;
  }
  cost::Report report(const cost::Weights& weights) const;
};

/// Feeds one command stream to both models. Stakes become one-unit hybrid
/// mints, transfers become hybrid transfers; other commands only affect the
/// SFT-Lock engine. Throws LedgerError(unsupported) if more than one PU
/// namespace appears.
CompareResult compare(const Scenario& s);

}  // namespace sftlock::scenario
