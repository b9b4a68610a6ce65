#include "sftlock/cli.hpp"

#include <filesystem>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "sftlock/journal.hpp"
#include "sftlock/replay.hpp"
#include "sftlock/scenario.hpp"

namespace sftlock::cli {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  bool json = false;
  std::string weights_path;
  std::string scenario_path;
  std::string journal_path;
  std::string trace_journal;
  std::uint64_t trace_token = 0;
};

cost::Weights resolve_weights(const Options& opts, const scenario::Scenario* s) {
  cost::Weights w = s && s->cost_weights ? *s->cost_weights : cost::Weights::defaults();
  if (!opts.weights_path.empty()) w = scenario::load_weights(opts.weights_path, w);
  return w;
}

std::string ids_text(const std::vector<TokenId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  return out + "}";
}

ordered_json failure_json(const scenario::StepFailure& f) {
  ordered_json j;
  j["step"] = f.step;
  j["line"] = f.line;
  j["op"] = f.op;
  j["code"] = std::string(to_string(f.code));
  j["message"] = f.message;
  return j;
}

ordered_json report_json(const cost::Report& r) {
  ordered_json j;
  for (const cost::ReportRow* row : {&r.mint, &r.burn, &r.unlock, &r.lock}) {
    ordered_json e;
    e["instances"] = row->instances;
    e["total"] = row->total;
    e["per_instance"] = row->per_instance();
    j[std::string(cost::to_string(row->kind))] = std::move(e);
  }
  ordered_json reductions;
  reductions["unlock_vs_mint"] = r.unlock_vs_mint ? ordered_json(*r.unlock_vs_mint) : ordered_json();
  reductions["lock_vs_burn"] = r.lock_vs_burn ? ordered_json(*r.lock_vs_burn) : ordered_json();
  j["reductions"] = std::move(reductions);
  return j;
}

ordered_json costs_json(const cost::CostMeter& meter, const cost::Weights& w) {
  ordered_json j = ordered_json::object();
  for (int k = 0; k <= static_cast<int>(cost::OpKind::burn); ++k) {
    auto kind = static_cast<cost::OpKind>(k);
    if (meter.instances(kind) == 0) continue;
    ordered_json e;
    e["instances"] = meter.instances(kind);
    e["total"] = meter.total(kind, w);
    j[std::string(cost::to_string(kind))] = std::move(e);
  }
  return j;
}

fs::path default_journal_path(const fs::path& scenario_path) {
  fs::path p = scenario_path;
  p.replace_extension(".journal");
  return p;
}

int cmd_run(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto s = scenario::load(opts.scenario_path);
  const auto weights = resolve_weights(opts, &s);
  auto result = scenario::run(s);
  const fs::path journal_path = opts.journal_path.empty()
                                    ? default_journal_path(opts.scenario_path)
                                    : fs::path(opts.journal_path);
  result.engine.journal().write_file(journal_path);
  const auto digest = to_hex(result.engine.state().digest());

  if (opts.json) {
    ordered_json j;
    j["scenario"] = s.name;
    j["ok"] = result.ok();
    j["steps"] = s.steps.size();
    j["steps_executed"] = result.steps_executed;
    j["events"] = result.engine.journal().size();
    j["journal"] = journal_path.string();
    j["digest"] = digest;
    j["costs"] = costs_json(result.engine.costs(), weights);
    if (result.failure) j["failure"] = failure_json(*result.failure);
    out << j.dump(2) << "\n";
  } else {
    out << "scenario: " << s.name << "\n";
    out << "steps:    " << result.steps_executed << "/" << s.steps.size() << "\n";
    out << "events:   " << result.engine.journal().size() << "\n";
    out << "journal:  " << journal_path.string() << "\n";
    out << "digest:   " << digest << "\n";
    for (int k = 0; k <= static_cast<int>(cost::OpKind::burn); ++k) {
      auto kind = static_cast<cost::OpKind>(k);
      if (result.engine.costs().instances(kind) == 0) continue;
      out << fmt::format("cost {:<16} x{:<4} {}\n", cost::to_string(kind),
                         result.engine.costs().instances(kind),
                         result.engine.costs().total(kind, weights));
    }
    out << "result:   " << (result.ok() ? "ok" : "FAILED") << "\n";
  }
  if (result.failure) {
    err << result.failure->describe() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_trace(const Options& opts, std::ostream& out) {
  const auto journal = Journal::read_file(opts.trace_journal);
  const auto events = trace(journal.entries(), opts.trace_token);
  if (opts.json) {
    ordered_json j = ordered_json::array();
    for (const auto& e : events) j.push_back(ordered_json::parse(serialize_event(e)));
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : events) {
    out << e.sequence << " " << to_string(e.kind);
    for (const auto& [k, v] : e.args) out << " " << k << "=" << v;
    out << "\n";
  }
  return kExitOk;
}

int cmd_compare(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto s = scenario::load(opts.scenario_path);
  const auto weights = resolve_weights(opts, &s);
  const auto r = scenario::compare(s);
  const auto report = r.report(weights);

  if (opts.json) {
    ordered_json j;
    j["scenario"] = s.name;
    j["primary_user"] = r.primary_user ? r.primary_user->hex() : "";
    j["completed"] = !r.failure.has_value();
    j["counts_equal"] = r.counts_equal();
    j["count_checks"] = r.checks.size();
    ordered_json mism = ordered_json::array();
    for (const auto& m : r.mismatches) {
      mism.push_back({{"step", m.step}, {"holder", m.holder.hex()},
                      {"sft_lock", m.sft_lock}, {"baseline", m.baseline}});
    }
    j["mismatches"] = std::move(mism);
    j["sft_lock"] = {{"ids_before", r.sft_ids_before},
                     {"ids_after", r.sft_ids_after},
                     {"identity_preserved", r.sft_identity_preserved()}};
    j["baseline"] = {{"ids_before", r.baseline_ids_before},
                     {"ids_after", r.baseline_ids_after},
                     {"identity_preserved", r.baseline_identity_preserved()}};
    j["cost"] = report_json(report);
    if (r.failure) j["failure"] = failure_json(*r.failure);
    out << j.dump(2) << "\n";
  } else {
    out << "scenario: " << s.name << "\n";
    if (r.primary_user) out << "primary user: " << s.label(*r.primary_user) << "\n";
    if (r.counts_equal()) {
      out << "per-step NFT counts: equal (" << r.checks.size() << " checks)\n";
    } else {
      for (const auto& m : r.mismatches) {
        out << fmt::format("count mismatch at step {}: {} sft-lock={} baseline={}\n", m.step,
                           s.label(m.holder), m.sft_lock, m.baseline);
      }
    }
    out << fmt::format("SFT-Lock SNFST ids: {} -> {} ({})\n", ids_text(r.sft_ids_before),
                       ids_text(r.sft_ids_after),
                       r.sft_identity_preserved() ? "preserved" : "changed");
    out << fmt::format("baseline NFT ids:   {} -> {} ({})\n", ids_text(r.baseline_ids_before),
                       ids_text(r.baseline_ids_after),
                       r.baseline_identity_preserved() ? "preserved" : "changed");
    out << report.to_text();
  }
  if (r.failure) {
    err << r.failure->describe() << "\n";
    return kExitFailure;
  }
  return r.counts_equal() ? kExitOk : kExitFailure;
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SFT-Lock spectrum securitization ledger", "sftlock"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--json", opts.json, "Machine-readable output");
  app.add_option("--weights", opts.weights_path, "JSON cost weights overriding defaults")
      ->check(CLI::ExistingFile);

  auto* run = app.add_subcommand("run", "Run a scenario and write its journal");
  run->add_option("scenario", opts.scenario_path, "Scenario file")->required();
  run->add_option("-o,--journal", opts.journal_path,
                  "Journal output path (default: scenario path with .journal)");

  auto* tr = app.add_subcommand("trace", "List a token's lifecycle from a journal");
  tr->add_option("journal", opts.trace_journal, "Journal file")->required();
  tr->add_option("token", opts.trace_token, "Token id")->required();

  auto* cmp = app.add_subcommand("compare", "Run SFT-Lock and the hybrid baseline side by side");
  cmp->add_option("scenario", opts.scenario_path, "Scenario file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(opts, out, err);
    if (tr->parsed()) return cmd_trace(opts, out);
    if (cmp->parsed()) return cmd_compare(opts, out, err);
  } catch (const LedgerError& e) {
    err << to_string(e.code()) << " error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::parse:
      case ErrorCode::unknown_actor:
      case ErrorCode::io:
      case ErrorCode::unsupported:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  }
  return kExitUsage;
}

}  // namespace sftlock::cli
