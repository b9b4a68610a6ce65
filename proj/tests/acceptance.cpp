// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "invariant_harness.hpp"
#include "sftlock/baseline.hpp"
#include "sftlock/engine.hpp"
#include "sftlock/journal.hpp"
#include "sftlock/scenario.hpp"

using namespace sftlock;
namespace sc = sftlock::scenario;
using Clock = std::chrono::steady_clock;

namespace {

const Address kSma = Address::from_hex("0x050c0720d772d21017d0bd4d1cb1357b3dc59bcb");
const Address kPu = Address::from_hex("0x0aa7652b45d957b9d2de60afbbd90b2dad3d1f60");
const Address kSu = Address::from_hex("0x0408dd44b2c2ebfd0f9b66a448eea7293b3c1f9f");

const std::vector<std::string> kGoldenSet = {
    "fig4_1_mint",      "fig4_2_reclaim", "fig4_3_stake",      "fig4_4_order",
    "table2_roundtrip", "su_to_su_noop",  "erc404_divergence",
};

std::filesystem::path scenario_path(const std::string& name) {
  return std::filesystem::path(SFTLOCK_SOURCE_DIR) / "scenarios" / (name + ".scenario");
}

// Collects reasons; a criterion passes iff nothing was noted.
struct Verdict {
  std::vector<std::string> problems;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::pair<EventKind, std::string>> transitions(std::span<const Event> events) {
  std::vector<std::pair<EventKind, std::string>> out;
  for (const auto& e : events)
    if (e.kind == EventKind::lock_snfst || e.kind == EventKind::unlock_snfst)
      out.emplace_back(e.kind, *e.arg(arg::token_id));
  return out;
}

std::vector<std::vector<std::string>> transition_args(std::span<const Event> events) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : events) {
    if (e.kind != EventKind::lock_snfst && e.kind != EventKind::unlock_snfst) continue;
    std::vector<std::string> row{std::string(to_string(e.kind)), e.emitter.hex()};
    for (const auto& [k, v] : e.args) row.push_back(k + "=" + v);
    out.push_back(std::move(row));
  }
  return out;
}

Engine staked(int n) {
  Engine e({.sma = kSma});
  for (int i = 1; i <= n; ++i) {
    e.mint_nfst(kSma, kPu, fmt::format("ch-{}", i), "cell-017");
    e.stake_nfst(kPu, static_cast<TokenId>(i));
  }
  return e;
}

using Transitions = std::vector<std::pair<EventKind, std::string>>;

Transitions locks(std::vector<std::string> ids) {
  Transitions out;
  for (auto& id : ids) out.emplace_back(EventKind::lock_snfst, std::move(id));
  return out;
}

Verdict ac1_round_trip() {
  Verdict v;
  const auto t0 = Clock::now();
  Engine e = staked(2);
  std::vector<TokenId> order{2, 1};
  e.set_lock_order(kPu, order);
  v.require(e.vault().balance_of(kPu, kPu) == parse_shares("2") &&
                e.vault().balance_of(kPu, kSu) == 0,
            "initial balances");

  auto mark = e.journal().size();
  e.transfer(kPu, kSu, kPu, parse_shares("0.3"));
  v.require(e.vault().balance_of(kPu, kPu) == parse_shares("1.7"), "PU not 1.7 after row 1");
  v.require(e.vault().balance_of(kPu, kSu) == parse_shares("0.3"), "SU not 0.3 after row 1");
  v.require(transitions(e.journal().entries().subspan(mark)) == locks({"2"}),
            "row 1 must emit exactly LOCK_SNFST(2)");

  mark = e.journal().size();
  e.transfer(kSu, kPu, kPu, parse_shares("0.3"));
  v.require(e.vault().balance_of(kPu, kPu) == parse_shares("2"), "PU not 2 after row 2");
  v.require(e.vault().balance_of(kPu, kSu) == 0, "SU not 0 after row 2");
  v.require(transitions(e.journal().entries().subspan(mark)) ==
                Transitions{{EventKind::unlock_snfst, "2"}},
            "row 2 must emit exactly UNLOCK_SNFST(2)");
  v.require(transitions(e.journal().entries()) ==
                Transitions{{EventKind::lock_snfst, "2"}, {EventKind::unlock_snfst, "2"}},
            "whole run must hold one LOCK(2) then one UNLOCK(2)");

  // The bundled scenario drives the same steps through the runner.
  auto r = sc::run(sc::load(scenario_path("table2_roundtrip")));
  v.require(r.ok(), "table2_roundtrip scenario failed");
  v.require(transitions(r.engine.journal().entries()) == transitions(e.journal().entries()),
            "scenario transitions differ from direct run");

  const double secs = seconds_since(t0);
  v.require(secs < 1.0, fmt::format("runtime {:.3f}s >= 1s", secs));
  v.detail = fmt::format("PU 2 -> 1.7 -> 2, SU 0 -> 0.3 -> 0, LOCK(2) UNLOCK(2), {:.3f}s", secs);
  return v;
}

Verdict ac2_priority() {
  Verdict v;
  {
    Engine e = staked(2);
    std::vector<TokenId> order{2, 1};
    e.set_lock_order(kPu, order);
    auto mark = e.journal().size();
    e.transfer(kPu, kSu, kPu, parse_shares("1.3"));
    v.require(transitions(e.journal().entries().subspan(mark)) == locks({"2", "1"}),
              "ordered 1.3 outflow must lock 2 then 1");
  }
  {
    Engine e = staked(2);
    auto mark = e.journal().size();
    e.transfer(kPu, kSu, kPu, parse_shares("1.3"));
    v.require(transitions(e.journal().entries().subspan(mark)) == locks({"1", "2"}),
              "unordered 1.3 outflow must lock front-of-list (1 then 2)");
  }
  {
    Engine e = staked(2);
    auto mark = e.journal().size();
    e.transfer(kPu, kSu, kPu, parse_shares("0.3"));
    v.require(transitions(e.journal().entries().subspan(mark)) == locks({"1"}),
              "unordered 0.3 outflow must lock the list front (1)");
  }
  v.detail = "order [2,1]: LOCK 2,1; no order: LOCK 1,2 / LOCK 1";
  return v;
}

Verdict ac3_identity() {
  Verdict v;
  auto r = sc::compare(sc::load(scenario_path("table2_roundtrip")));
  v.require(!r.failure, "compare run failed");
  v.require(r.sft_ids_before == std::vector<TokenId>{1, 2}, "SFT-Lock ids before != {1,2}");
  v.require(r.sft_identity_preserved(), "SFT-Lock id set changed");
  v.require(!r.baseline_identity_preserved(), "baseline id set unchanged");
  v.require(r.counts_equal() && !r.checks.empty(), "per-step NFT counts differ");
  v.detail = fmt::format("SFT-Lock {{1,2}} preserved; baseline {} -> {}; {} count checks equal",
                         fmt::join(r.baseline_ids_before, ","),
                         fmt::join(r.baseline_ids_after, ","), r.checks.size());
  return v;
}

Verdict ac4_invariants() {
  Verdict v;
  const auto t0 = Clock::now();
  std::uint64_t transitions = 0;
  std::size_t violations = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    test::PropertyOptions o;
    o.seed = seed;
    auto r = test::run_property(o);
    transitions += r.transitions;
    violations += r.violations.size();
    v.require(r.steps == 1000, fmt::format("seed {} ran {} steps", seed, r.steps));
    if (!r.violations.empty()) v.problems.push_back(r.violations.front());
  }
  const double secs = seconds_since(t0);
  v.require(secs < 60.0, fmt::format("runtime {:.1f}s >= 60s", secs));
  v.require(transitions > 0, "no SNFST transitions exercised");
  v.detail = fmt::format("100 seeds x 1000 steps, {} transitions, {} violations, {:.1f}s",
                         transitions, violations, secs);
  return v;
}

Verdict ac5_costs() {
  Verdict v;
  const auto w = cost::Weights::defaults();
  int compared_pairs = 0;
  for (const auto& name : kGoldenSet) {
    auto r = sc::compare(sc::load(scenario_path(name)));
    auto rep = r.report(w);
    if (rep.unlock.instances && rep.mint.instances) {
      ++compared_pairs;
      v.require(rep.unlock.per_instance() < rep.mint.per_instance(), name + ": unlock >= mint");
    }
    if (rep.lock.instances && rep.burn.instances) {
      ++compared_pairs;
      v.require(rep.lock.per_instance() < rep.burn.per_instance(), name + ": lock >= burn");
    }
    const auto text = rep.to_text();
    v.require(text.find("unlock vs mint reduction: ") != std::string::npos &&
                  text.find("lock vs burn reduction: ") != std::string::npos,
              name + ": report lacks reduction lines");
    if (rep.unlock.instances && rep.mint.instances)
      v.require(text.find(cost::format_percent(rep.unlock_vs_mint)) != std::string::npos &&
                    rep.unlock_vs_mint.has_value(),
                name + ": unlock-vs-mint percentage not rendered");
  }
  v.require(compared_pairs >= 2, "no golden scenario exercises both cost pairs");

  // Constant lock/unlock counts: 2 vs 10 SNFSTs.
  auto counts = [](int n) {
    Engine e = staked(n);
    const auto mark = e.costs().size();
    e.transfer(kPu, kSu, kPu, parse_shares("0.5"));
    e.transfer(kSu, kPu, kPu, parse_shares("0.5"));
    std::vector<cost::Counts> out;
    for (auto i = mark; i < e.costs().size(); ++i) {
      const auto& rec = e.costs().records()[i];
      if (rec.kind == cost::OpKind::lock || rec.kind == cost::OpKind::unlock)
        out.push_back(rec.counts);
    }
    return out;
  };
  const auto small = counts(2), large = counts(10);
  v.require(small.size() == 2 && small == large, "lock/unlock counts depend on holdings");

  HybridLedger h;
  cost::CostMeter m;
  h.hybrid_mint(kPu, 3, &m);
  bool fresh = m.instances(cost::OpKind::mint) == 3;
  for (const auto& rec : m.records())
    if (rec.kind == cost::OpKind::mint)
      fresh = fresh && rec.counts[static_cast<std::size_t>(cost::Primitive::slot_write_new)] >= 1;
  v.require(fresh, "hybrid mint lacks a fresh-slot allocation per token");

  auto t2 = sc::compare(sc::load(scenario_path("table2_roundtrip"))).report(w);
  v.detail = fmt::format("table2 per-op: mint {:.0f}, burn {:.0f}, unlock {:.0f}, lock {:.0f}; "
                         "reductions {} / {}",
                         t2.mint.per_instance(), t2.burn.per_instance(), t2.unlock.per_instance(),
                         t2.lock.per_instance(), cost::format_percent(t2.unlock_vs_mint),
                         cost::format_percent(t2.lock_vs_burn));
  return v;
}

Verdict ac6_golden() {
  Verdict v;
  for (const auto& name : kGoldenSet) {
    auto r = sc::run(sc::load(scenario_path(name)));
    std::ifstream f(std::filesystem::path(SFTLOCK_SOURCE_DIR) / "tests" / "golden" /
                        (name + ".journal"),
                    std::ios::binary);
    std::string golden{std::istreambuf_iterator<char>(f), {}};
    v.require(r.ok() && !golden.empty() && r.engine.journal().serialize() == golden,
              name + ": journal differs from golden");
  }
  auto first = [](const Journal& j, EventKind k) -> const Event* {
    for (const auto& e : j.entries())
      if (e.kind == k) return &e;
    return nullptr;
  };
  auto mint = sc::run(sc::load(scenario_path("fig4_1_mint"))).engine.journal();
  const Event* m = first(mint, EventKind::mint_nfst);
  v.require(m && *m->arg("_from") == Address::zero().hex() && *m->arg("_tokenId") == "1" &&
                serialize_event(*m).find(R"("_tokenId":"1")") != std::string::npos,
            "MINT_NFST shape");

  auto reclaim = sc::run(sc::load(scenario_path("fig4_2_reclaim"))).engine.journal();
  const Event* rc = first(reclaim, EventKind::reclaim_nfst);
  v.require(rc && *rc->arg("_from") == kSma.hex(), "RECLAIM_NFST _from must be the SMA");

  auto stake = sc::run(sc::load(scenario_path("fig4_3_stake"))).engine.journal();
  bool pair = false;
  for (std::size_t i = 0; i + 1 < stake.size(); ++i) {
    if (stake[i].kind == EventKind::transfer_snfst &&
        *stake[i].arg("_from") == Address::zero().hex() &&
        stake[i + 1].kind == EventKind::transfer_sfst &&
        *stake[i + 1].arg("_amount") == "1000000000000000000")
      pair = true;
  }
  v.require(pair, "stake must emit TRANSFER_SNFST(mint) then TRANSFER_SFST(10^18)");
  v.detail = fmt::format("{} golden journals byte-identical; mint/reclaim/stake shapes ok",
                         kGoldenSet.size());
  return v;
}

Verdict ac7_rentals() {
  Verdict v;
  auto with = sc::load(scenario_path("rental_isolation"));
  auto without = with;
  std::erase_if(without.steps, [](const sc::Step& s) {
    return std::holds_alternative<sc::MintRnfst>(s.command) ||
           std::holds_alternative<sc::SetUser>(s.command);
  });
  v.require(without.steps.size() < with.steps.size(), "scenario has no rental steps");
  auto a = sc::run(with), b = sc::run(without);
  v.require(a.ok() && b.ok(), "rental scenario or its stripped variant failed");
  const auto ta = transition_args(a.engine.journal().entries());
  v.require(!ta.empty(), "scenario produces no LOCK/UNLOCK events");
  v.require(ta == transition_args(b.engine.journal().entries()),
            "LOCK/UNLOCK events differ once rental steps are removed");

  Engine e = staked(1);
  const TokenId id = e.mint_rnfst(kPu);
  const Timestamp t = 1'700'000'000;
  e.set_user(kPu, id, kSu, t + 3600, t);
  v.require(e.rentals().user_of(id, t + 3599) == kSu, "renter missing before expiry");
  v.require(e.rentals().user_of(id, t + 3600).is_zero(), "renter present at expiry");
  v.detail = fmt::format("{} LOCK/UNLOCK events identical with and without rentals; "
                         "userOf(expires) = zero",
                         ta.size());
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1 fractional round trip", ac1_round_trip},
      {"AC2 lock-order priority", ac2_priority},
      {"AC3 identity continuity vs baseline", ac3_identity},
      {"AC4 invariant suite", ac4_invariants},
      {"AC5 cost ordering", ac5_costs},
      {"AC6 event-shape goldens", ac6_golden},
      {"AC7 rental isolation", ac7_rentals},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    if (v.problems.empty()) {
      std::cout << "PASS " << name << ": " << v.detail << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << name << ": " << v.problems.front();
      if (v.problems.size() > 1) std::cout << " (+" << v.problems.size() - 1 << " more)";
      std::cout << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
