#include "sftlock/cost.hpp"

#include <fmt/format.h>

#include "sftlock/errors.hpp"

namespace sftlock::cost {

namespace {

constexpr std::array<std::string_view, kPrimitiveCount> kPrimitiveNames = {
    "slot_write_new", "slot_update", "slot_delete", "slot_read",
    "list_insert",    "list_remove", "event_emit",
};

std::size_t index(Primitive p) { return static_cast<std::size_t>(p); }

ReportRow row(const CostMeter& meter, OpKind kind, const Weights& weights) {
  return ReportRow{kind, meter.instances(kind), meter.total(kind, weights)};
}

Report tabulate(ReportRow mint, ReportRow burn, ReportRow unlock, ReportRow lock) {
  Report r{mint, burn, unlock, lock, std::nullopt, std::nullopt};
  if (mint.instances > 0 && unlock.instances > 0) {
    r.unlock_vs_mint = reduction_percent(mint.per_instance(), unlock.per_instance());
  }
  if (burn.instances > 0 && lock.instances > 0) {
    r.lock_vs_burn = reduction_percent(burn.per_instance(), lock.per_instance());
  }
  return r;
}

}  // namespace

std::string_view to_string(Primitive p) { return kPrimitiveNames[index(p)]; }

std::optional<Primitive> primitive_from_string(std::string_view name) {
  for (auto p : kAllPrimitives) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view to_string(OpKind op) {
  switch (op) {
    case OpKind::mint_nfst: return "mint_nfst";
    case OpKind::reclaim_nfst: return "reclaim_nfst";
    case OpKind::stake: return "stake";
    case OpKind::lock: return "lock";
    case OpKind::unlock: return "unlock";
    case OpKind::set_lock_order: return "set_lock_order";
    case OpKind::set_unlock_order: return "set_unlock_order";
    case OpKind::transfer: return "transfer";
    case OpKind::mint_rnfst: return "mint_rnfst";
    case OpKind::set_user: return "set_user";
    case OpKind::hybrid_transfer: return "hybrid_transfer";
    case OpKind::mint: return "mint";
    case OpKind::burn: return "burn";
  }
  return "unknown";
}

Weights Weights::defaults() {
  Weights w;
  w[Primitive::slot_write_new] = 20000;
  w[Primitive::slot_update] = 5000;
  w[Primitive::slot_delete] = 4800;
  w[Primitive::slot_read] = 2100;
  w[Primitive::list_insert] = 1200;
  w[Primitive::list_remove] = 1200;
  w[Primitive::event_emit] = 750;
  return w;
}

Weights Weights::zeros() { return Weights{}; }

std::uint64_t weighted(const Counts& counts, const Weights& weights) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < kPrimitiveCount; ++i) {
    total += counts[i] * weights.value[i];
  }
  return total;
}

void CostMeter::begin(OpKind kind) {
  open_.push_back(records_.size());
  records_.push_back(OpRecord{kind, {}});
}

void CostMeter::record(Primitive p, std::uint64_t n) {
  if (open_.empty()) {
    fail(ErrorCode::internal, "cost primitive recorded outside an operation");
  }
  records_[open_.back()].counts[index(p)] += n;
}

void CostMeter::end() {
  if (open_.empty()) fail(ErrorCode::internal, "unbalanced cost scope");
  open_.pop_back();
}

void CostMeter::truncate(std::size_t size) {
  if (size < records_.size()) records_.resize(size);
  while (!open_.empty() && open_.back() >= size) open_.pop_back();
}

std::uint64_t CostMeter::instances(OpKind kind) const {
  std::uint64_t n = 0;
  for (const auto& r : records_) n += r.kind == kind ? 1 : 0;
  return n;
}

Counts CostMeter::counts(OpKind kind) const {
  Counts sum{};
  for (const auto& r : records_) {
    if (r.kind != kind) continue;
    for (std::size_t i = 0; i < kPrimitiveCount; ++i) sum[i] += r.counts[i];
  }
  return sum;
}

std::uint64_t CostMeter::total(OpKind kind, const Weights& weights) const {
  return weighted(counts(kind), weights);
}

double ReportRow::per_instance() const {
  return instances == 0 ? 0.0
                        : static_cast<double>(total) / static_cast<double>(instances);
}

std::optional<double> reduction_percent(double base, double next) {
  if (base <= 0.0) return std::nullopt;
  return (base - next) / base * 100.0;
}

std::string format_percent(const std::optional<double>& pct) {
  if (!pct) return "n/a";
  return fmt::format("{:.1f}%", *pct);
}

Report report(const CostMeter& sft_lock, const CostMeter& baseline,
              const Weights& weights) {
  const std::pair<const CostMeter*, OpKind> required[] = {
      {&baseline, OpKind::mint},
      {&baseline, OpKind::burn},
      {&sft_lock, OpKind::unlock},
      {&sft_lock, OpKind::lock},
  };
  for (const auto& [meter, kind] : required) {
    if (meter->instances(kind) == 0) {
      fail(ErrorCode::incomplete_data,
           "no recorded instance of '" + std::string(to_string(kind)) + "'");
    }
  }
  return tabulate(row(baseline, OpKind::mint, weights),
                  row(baseline, OpKind::burn, weights),
                  row(sft_lock, OpKind::unlock, weights),
                  row(sft_lock, OpKind::lock, weights));
}

Report partial_report(const CostMeter& sft_lock, const CostMeter& baseline,
                      const Weights& weights) {
  return tabulate(row(baseline, OpKind::mint, weights),
                  row(baseline, OpKind::burn, weights),
                  row(sft_lock, OpKind::unlock, weights),
                  row(sft_lock, OpKind::lock, weights));
}

Report report_from_totals(std::uint64_t mint, std::uint64_t burn,
                          std::uint64_t unlock, std::uint64_t lock) {
  return tabulate(ReportRow{OpKind::mint, 1, mint}, ReportRow{OpKind::burn, 1, burn},
                  ReportRow{OpKind::unlock, 1, unlock},
                  ReportRow{OpKind::lock, 1, lock});
}

std::string Report::to_text() const {
  std::string out = fmt::format("{:<8} {:>9} {:>14} {:>14}\n", "op",
                                "instances", "total", "per-op");
  for (const ReportRow* r : {&mint, &burn, &unlock, &lock}) {
    out += fmt::format("{:<8} {:>9} {:>14} {:>14.1f}\n", to_string(r->kind),
                       r->instances, r->total, r->per_instance());
  }
  out += fmt::format("unlock vs mint reduction: {}\n", format_percent(unlock_vs_mint));
  out += fmt::format("lock vs burn reduction:   {}\n", format_percent(lock_vs_burn));
  return out;
}

}  // namespace sftlock::cost
