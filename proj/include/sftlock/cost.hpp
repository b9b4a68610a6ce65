#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sftlock::cost {

enum class Primitive {
  slot_write_new,
  slot_update,
  slot_delete,
  slot_read,
  list_insert,
  list_remove,
  event_emit,
};

inline constexpr std::size_t kPrimitiveCount = 7;
inline constexpr std::array<Primitive, kPrimitiveCount> kAllPrimitives = {
    Primitive::slot_write_new, Primitive::slot_update, Primitive::slot_delete,
    Primitive::slot_read,      Primitive::list_insert, Primitive::list_remove,
    Primitive::event_emit,
};

std::string_view to_string(Primitive p);
std::optional<Primitive> primitive_from_string(std::string_view name);

/// Operation kinds the accountant distinguishes. `mint`/`burn` are per-NFT
/// operations of the hybrid baseline; `lock`/`unlock` are per-SNFST
/// transitions.
enum class OpKind {
  mint_nfst,
  reclaim_nfst,
  stake,
  lock,
  unlock,
  set_lock_order,
  set_unlock_order,
  transfer,
  mint_rnfst,
  set_user,
  hybrid_transfer,
  mint,
  burn,
};

std::string_view to_string(OpKind op);

using Counts = std::array<std::uint64_t, kPrimitiveCount>;

struct Weights {
  std::array<std::uint64_t, kPrimitiveCount> value{};

  std::uint64_t& operator[](Primitive p) { return value[static_cast<std::size_t>(p)]; }
  std::uint64_t operator[](Primitive p) const { return value[static_cast<std::size_t>(p)]; }

  /// EVM-flavoured magnitudes. A model for relative ordering only, not a gas
  /// oracle.
  static Weights defaults();
  static Weights zeros();
};

/// Per-instance primitive counts for one recorded operation.
struct OpRecord {
  OpKind kind;
  Counts counts{};
};

std::uint64_t weighted(const Counts& counts, const Weights& weights);

/// Counts storage primitives per operation instance. An instance is opened
/// with begin(), filled through record(), and closed with end().
class CostMeter {
 public:
  void begin(OpKind kind);
  void record(Primitive p, std::uint64_t n = 1);
  void end();

  /// Drops every record after `size` (used when a command rolls back).
  void truncate(std::size_t size);

  const std::vector<OpRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  std::uint64_t instances(OpKind kind) const;
  Counts counts(OpKind kind) const;
  std::uint64_t total(OpKind kind, const Weights& weights) const;

 private:
  std::vector<OpRecord> records_;
  std::vector<std::size_t> open_;
};

/// RAII scope for one operation instance. A null meter makes it a no-op.
class Scope {
 public:
  Scope(CostMeter* meter, OpKind kind) : meter_(meter) {
    if (meter_) meter_->begin(kind);
  }
  ~Scope() {
    if (meter_) meter_->end();
  }
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  CostMeter* meter_;
};

inline void tick(CostMeter* meter, Primitive p, std::uint64_t n = 1) {
  if (meter) meter->record(p, n);
}

struct ReportRow {
  OpKind kind;
  std::uint64_t instances = 0;
  std::uint64_t total = 0;
  /// total / instances, kept as an exact ratio for rendering.
  double per_instance() const;
};

/// Mint-vs-unlock and burn-vs-lock comparison. Percentages are
/// (base - new) / base * 100 on per-instance costs; absent when the base is
/// zero.
struct Report {
  ReportRow mint;
  ReportRow burn;
  ReportRow unlock;
  ReportRow lock;
  std::optional<double> unlock_vs_mint;
  std::optional<double> lock_vs_burn;

  std::string to_text() const;
};

/// Throws LedgerError(incomplete_data) naming the first missing kind.
Report report(const CostMeter& sft_lock, const CostMeter& baseline,
              const Weights& weights);

/// Same table without the completeness check; missing kinds show zero
/// instances and undefined reductions.
Report partial_report(const CostMeter& sft_lock, const CostMeter& baseline,
                      const Weights& weights);

/// Builds the same table from externally supplied per-operation costs.
Report report_from_totals(std::uint64_t mint, std::uint64_t burn,
                          std::uint64_t unlock, std::uint64_t lock);

std::optional<double> reduction_percent(double base, double next);

/// "67.1%" style, one decimal; "n/a" when undefined.
std::string format_percent(const std::optional<double>& pct);

}  // namespace sftlock::cost
