#include "sftlock/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace sftlock::scenario {

using json = nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorCode::parse, fmt::format("line {}: {}", line, msg));
}

/// Field access for one step line; tracks which keys were consumed so that
/// misspelled fields are rejected instead of silently ignored.
class Fields {
 public:
  Fields(const json& obj, std::size_t line, const Scenario& s)
      : obj_(obj), line_(line), scenario_(s) {}

  const json& raw(const char* key) {
    used_.insert(key);
    if (!obj_.contains(key)) parse_fail(line_, fmt::format("missing field '{}'", key));
    return obj_.at(key);
  }

  std::string text(const char* key) {
    const json& v = raw(key);
    if (!v.is_string()) parse_fail(line_, fmt::format("field '{}' must be a string", key));
    return v.get<std::string>();
  }

  Address actor(const char* key) {
    std::string role = text(key);
    auto a = scenario_.actor(role);
    if (!a) {
      fail(ErrorCode::unknown_actor,
           fmt::format("line {}: field '{}' references undeclared actor '{}'", line_, key, role));
    }
    return *a;
  }

  std::uint64_t u64(const char* key) {
    const json& v = raw(key);
    if (!v.is_number_unsigned()) {
      parse_fail(line_, fmt::format("field '{}' must be a non-negative integer", key));
    }
    return v.get<std::uint64_t>();
  }

  TokenId token(const char* key) {
    std::uint64_t id = u64(key);
    if (id == 0) parse_fail(line_, fmt::format("field '{}' must be a positive token id", key));
    return id;
  }

  std::vector<TokenId> tokens(const char* key) {
    const json& v = raw(key);
    if (!v.is_array()) parse_fail(line_, fmt::format("field '{}' must be an array", key));
    std::vector<TokenId> ids;
    for (const auto& e : v) {
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() == 0) {
        parse_fail(line_, fmt::format("field '{}' must hold positive token ids", key));
      }
      ids.push_back(e.get<std::uint64_t>());
    }
    return ids;
  }

  Amount amount(const char* key) {
    const json& v = raw(key);
    if (!v.is_string()) {
      parse_fail(line_, fmt::format("field '{}' must be a decimal string", key));
    }
    try {
      return parse_amount(v.get<std::string>());
    } catch (const LedgerError& e) {
      parse_fail(line_, e.what());
    }
  }

  void reject_unused() const {
    for (const auto& [key, _] : obj_.items()) {
      if (!used_.contains(key)) parse_fail(line_, fmt::format("unknown field '{}'", key));
    }
  }

  void mark(const char* key) { used_.insert(key); }

 private:
  const json& obj_;
  std::size_t line_;
  const Scenario& scenario_;
  std::set<std::string> used_;
};

Command parse_command(const std::string& op, Fields& f, std::size_t line) {
  if (op == "mint_nfst") {
    return MintNfst{f.actor("caller"), f.actor("to"), f.text("channel"), f.text("location")};
  }
  if (op == "reclaim_nfst") return ReclaimNfst{f.actor("caller"), f.token("token")};
  if (op == "stake_nfst") return StakeNfst{f.actor("pu"), f.token("token")};
  if (op == "set_lock_order") return SetLockOrder{f.actor("caller"), f.tokens("tokens")};
  if (op == "set_unlock_order") return SetUnlockOrder{f.actor("caller"), f.tokens("tokens")};
  if (op == "transfer") {
    return Transfer{f.actor("from"), f.actor("to"), f.actor("pu"), f.amount("amount")};
  }
  if (op == "mint_rnfst") return MintRnfst{f.actor("pu")};
  if (op == "set_user") {
    return SetUser{f.actor("caller"), f.token("token"), f.actor("user"), f.u64("expires"),
                   f.u64("now")};
  }
  if (op == "assert_balance") {
    return AssertBalance{f.actor("pu"), f.actor("holder"), f.amount("amount")};
  }
  if (op == "assert_locked") return AssertLocked{f.actor("pu"), f.token("token")};
  if (op == "assert_unlocked") return AssertUnlocked{f.actor("pu"), f.token("token")};
  if (op == "assert_share") return AssertShare{f.actor("pu"), f.actor("holder"), f.u64("share")};
  parse_fail(line, fmt::format("unknown op '{}'", op));
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::io, "cannot read " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void check(bool cond, const std::string& message) {
  if (!cond) fail(ErrorCode::assertion, message);
}

/// Executes one command against the engine. Assertions are read-only.
void execute(Engine& engine, const Scenario& s, const Command& cmd) {
  std::visit(
      overloaded{
          [&](const MintNfst& c) { engine.mint_nfst(c.caller, c.to, c.channel, c.location); },
          [&](const ReclaimNfst& c) { engine.reclaim_nfst(c.caller, c.token); },
          [&](const StakeNfst& c) { engine.stake_nfst(c.pu, c.token); },
          [&](const SetLockOrder& c) { engine.set_lock_order(c.caller, c.tokens); },
          [&](const SetUnlockOrder& c) { engine.set_unlock_order(c.caller, c.tokens); },
          [&](const Transfer& c) { engine.transfer(c.from, c.to, c.pu, c.amount); },
          [&](const MintRnfst& c) { engine.mint_rnfst(c.pu); },
          [&](const SetUser& c) { engine.set_user(c.caller, c.token, c.user, c.expires, c.now); },
          [&](const AssertBalance& c) {
            Amount got = engine.vault().balance_of(c.pu, c.holder);
            check(got == c.amount,
                  fmt::format("balance of {} in {}'s namespace is {}, expected {}",
                              s.label(c.holder), s.label(c.pu), to_decimal(got),
                              to_decimal(c.amount)));
          },
          [&](const AssertLocked& c) {
            const Snfst* snfst = engine.vault().find(c.token);
            check(snfst && snfst->primary_user == c.pu && snfst->locked,
                  fmt::format("SNFST {} of {} is not locked", c.token, s.label(c.pu)));
          },
          [&](const AssertUnlocked& c) {
            const Snfst* snfst = engine.vault().find(c.token);
            check(snfst && snfst->primary_user == c.pu && !snfst->locked,
                  fmt::format("SNFST {} of {} is not unlocked", c.token, s.label(c.pu)));
          },
          [&](const AssertShare& c) {
            std::uint64_t got = engine.vault().share_of(c.pu, c.holder);
            check(got == c.share, fmt::format("share of {} in {}'s namespace is {}, expected {}",
                                              s.label(c.holder), s.label(c.pu), got, c.share));
          },
      },
      cmd);
}

/// Runs one step, honouring expect_error. Returns the failure, if any.
std::optional<StepFailure> run_step(Engine& engine, const Scenario& s, std::size_t index) {
  const Step& step = s.steps[index];
  StepFailure failure{index, step.line, std::string(op_name(step.command)),
                      ErrorCode::internal, false, {}};
  try {
    execute(engine, s, step.command);
  } catch (const LedgerError& e) {
    if (step.expect_error && *step.expect_error == e.code()) return std::nullopt;
    failure.code = e.code();
    failure.assertion = e.code() == ErrorCode::assertion;
    failure.message = e.what();
    if (step.expect_error) {
      failure.message = fmt::format("expected {} error, got {}: {}",
                                    to_string(*step.expect_error), to_string(e.code()), e.what());
    }
    return failure;
  }
  if (step.expect_error) {
    failure.code = ErrorCode::assertion;
    failure.assertion = true;
    failure.message =
        fmt::format("expected {} error, but the step succeeded", to_string(*step.expect_error));
    return failure;
  }
  return std::nullopt;
}

}  // namespace

std::string_view op_name(const Command& cmd) {
  return std::visit(
      overloaded{
          [](const MintNfst&) -> std::string_view { return "mint_nfst"; },
          [](const ReclaimNfst&) -> std::string_view { return "reclaim_nfst"; },
          [](const StakeNfst&) -> std::string_view { return "stake_nfst"; },
          [](const SetLockOrder&) -> std::string_view { return "set_lock_order"; },
          [](const SetUnlockOrder&) -> std::string_view { return "set_unlock_order"; },
          [](const Transfer&) -> std::string_view { return "transfer"; },
          [](const MintRnfst&) -> std::string_view { return "mint_rnfst"; },
          [](const SetUser&) -> std::string_view { return "set_user"; },
          [](const AssertBalance&) -> std::string_view { return "assert_balance"; },
          [](const AssertLocked&) -> std::string_view { return "assert_locked"; },
          [](const AssertUnlocked&) -> std::string_view { return "assert_unlocked"; },
          [](const AssertShare&) -> std::string_view { return "assert_share"; },
      },
      cmd);
}

std::optional<Address> Scenario::actor(std::string_view role) const {
  for (const auto& [name, a] : actors) {
    if (name == role) return a;
  }
  return std::nullopt;
}

std::string Scenario::label(const Address& a) const {
  for (const auto& [name, addr] : actors) {
    if (addr == a) return name;
  }
  return a.hex();
}

cost::Weights parse_weights(std::string_view json_text, cost::Weights base) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed weights: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::parse, "weights must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    auto p = cost::primitive_from_string(key);
    if (!p) fail(ErrorCode::parse, "unknown cost primitive '" + key + "'");
    if (!value.is_number_unsigned()) {
      fail(ErrorCode::parse, "weight for '" + key + "' must be a non-negative integer");
    }
    base[*p] = value.get<std::uint64_t>();
  }
  return base;
}

cost::Weights load_weights(const std::filesystem::path& path, cost::Weights base) {
  return parse_weights(read_text(path), base);
}

Scenario parse(std::string_view text) {
  Scenario s;
  bool have_actors = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      parse_fail(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) parse_fail(line_no, "expected a JSON object");

    if (obj.contains("scenario")) {
      if (obj.size() != 1 || !obj["scenario"].is_string()) {
        parse_fail(line_no, "scenario header must be {\"scenario\": \"<name>\"}");
      }
      s.name = obj["scenario"].get<std::string>();
    } else if (obj.contains("actors")) {
      if (obj.size() != 1 || !obj["actors"].is_object()) {
        parse_fail(line_no, "actors line must be {\"actors\": {role: address}}");
      }
      for (const auto& [role, value] : obj["actors"].items()) {
        if (!value.is_string()) parse_fail(line_no, "actor '" + role + "' needs a hex address");
        if (s.actor(role)) parse_fail(line_no, "actor '" + role + "' declared twice");
        try {
          s.actors.emplace_back(role, Address::from_hex(value.get<std::string>()));
        } catch (const LedgerError& e) {
          parse_fail(line_no, e.what());
        }
      }
      have_actors = true;
    } else if (obj.contains("cost_weights")) {
      if (obj.size() != 1) parse_fail(line_no, "cost_weights line takes no other fields");
      try {
        s.cost_weights = parse_weights(obj["cost_weights"].dump(), cost::Weights::defaults());
      } catch (const LedgerError& e) {
        parse_fail(line_no, e.what());
      }
    } else if (obj.contains("op")) {
      if (!have_actors) parse_fail(line_no, "steps must follow the actors declaration");
      if (!obj["op"].is_string()) parse_fail(line_no, "op must be a string");
      Fields f(obj, line_no, s);
      f.mark("op");
      Step step;
      step.line = line_no;
      step.command = parse_command(obj["op"].get<std::string>(), f, line_no);
      if (obj.contains("expect_error")) {
        f.mark("expect_error");
        const json& v = obj["expect_error"];
        auto code = v.is_string() ? error_code_from_string(v.get<std::string>()) : std::nullopt;
        if (!code) parse_fail(line_no, "expect_error must name an error category");
        step.expect_error = code;
      }
      f.reject_unused();
      s.steps.push_back(std::move(step));
    } else {
      parse_fail(line_no, "expected a scenario, actors, cost_weights or op line");
    }
    if (end == text.size()) break;
  }
  return s;
}

Scenario load(const std::filesystem::path& path) { return parse(read_text(path)); }

std::string StepFailure::describe() const {
  return fmt::format("step {} (line {}, {}): {}{}", step, line, op,
                     assertion ? "" : std::string(to_string(code)) + " error: ", message);
}

Engine::Config engine_config(const Scenario& s) {
  Engine::Config config;
  if (auto sma = s.actor("SMA")) config.sma = *sma;
  return config;
}

RunResult run(const Scenario& s) {
  RunResult result(Engine(engine_config(s)));
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (auto failure = run_step(result.engine, s, i)) {
      result.failure = std::move(failure);
      return result;
    }
    ++result.steps_executed;
  }
  return result;
}

cost::Report CompareResult::report(const cost::Weights& weights) const {
  return cost::partial_report(engine.costs(), baseline_costs, weights);
}

CompareResult compare(const Scenario& s) {
  std::set<Address> pus;
  for (const auto& step : s.steps) {
    if (const auto* c = std::get_if<StakeNfst>(&step.command)) pus.insert(c->pu);
    if (const auto* c = std::get_if<Transfer>(&step.command)) pus.insert(c->pu);
  }
  if (pus.size() > 1) {
    fail(ErrorCode::unsupported,
         fmt::format("compare supports a single PU namespace; scenario uses {}", pus.size()));
  }

  CompareResult r(Engine(engine_config(s)));
  if (!pus.empty()) r.primary_user = *pus.begin();

  auto sft_ids = [&] {
    return r.primary_user ? r.engine.vault().snfst_ids(*r.primary_user) : std::vector<TokenId>{};
  };
  auto baseline_ids = [&] {
    if (!r.primary_user) return std::vector<TokenId>{};
    auto ids = r.baseline.held(*r.primary_user);
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  bool snapshotted = false;
  auto snapshot = [&] {
    r.sft_ids_before = sft_ids();
    r.baseline_ids_before = baseline_ids();
    snapshotted = true;
  };

  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const Command& cmd = s.steps[i].command;
    if (!snapshotted && std::holds_alternative<Transfer>(cmd)) snapshot();
    const std::size_t events_before = r.engine.journal().size();
    if (auto failure = run_step(r.engine, s, i)) {
      r.failure = std::move(failure);
      break;
    }
    const bool applied = r.engine.journal().size() > events_before;
    if (applied) {
      if (const auto* c = std::get_if<StakeNfst>(&cmd)) {
        r.baseline.hybrid_mint(c->pu, 1, &r.baseline_costs);
      } else if (const auto* c = std::get_if<Transfer>(&cmd)) {
        r.baseline.hybrid_transfer(c->from, c->to, c->amount, &r.baseline_costs);
      }
    }
    if (!r.primary_user) continue;
    const Address pu = *r.primary_user;
    for (const auto& [role, a] : s.actors) {
      CountCheck check{i, a,
                       a == pu ? r.engine.vault().unlocked_of(pu).size()
                               : r.engine.vault().share_of(pu, a),
                       r.baseline.held(a).size()};
      r.checks.push_back(check);
      if (check.sft_lock != check.baseline) r.mismatches.push_back(check);
    }
  }
  if (!snapshotted) snapshot();
  r.sft_ids_after = sft_ids();
  r.baseline_ids_after = baseline_ids();
  return r;
}

}  // namespace sftlock::scenario
