#ifndef RACKRS_HARNESS_HPP
#define RACKRS_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rackrs/constructions.hpp"
#include "rackrs/repair.hpp"

namespace rackrs {

enum class Format { Csv, Json };
Format parse_format(const std::string& text);

struct ExperimentConfig {
  Mode mode = Mode::C1;
  std::uint32_t q = 3;
  std::size_t u = 2;
  std::size_t nbar = 3;
  std::uint64_t rbar = 0;
  std::vector<std::uint64_t> primes;
  std::size_t v = 0;
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  Format format = Format::Csv;

  /// Full parameter validation; throws std::invalid_argument before any field is built.
  SchemeParams params() const;
};

enum class RepairStatus { Ok, Failed, Skipped };

struct ReportRow {
  Mode mode = Mode::C1;
  std::uint32_t q = 0;
  std::size_t u = 0;
  std::size_t nbar = 0;
  std::uint64_t rbar = 0;
  std::uint64_t rbar_eff = 0;
  std::uint32_t l = 0;
  std::size_t rack = 0;
  /// 1-based flat node index (e-1)u + m.
  std::size_t node = 0;
  std::size_t b = 0;
  Rational b_min;
  /// Enforced bound, or the informational value when none is enforced.
  std::optional<Rational> upper;
  std::string case_tag;
  Rational ratio;
  RepairStatus repair = RepairStatus::Skipped;
  bool rank_ok = false;
  /// Not printed: b at or above b_min, below any enforced bound.
  bool bounds_ok = false;
};

struct SweepResult {
  std::vector<ReportRow> rows;
  std::size_t audit_failures = 0;
  /// Serialized transcripts / diagnostics of every failure.
  std::vector<std::string> failure_dumps;
};

/// Builds the instance once, then for every node: rank check, `trials` random repairs, audit.
SweepResult run_sweep(const ExperimentConfig& config);
SweepResult run_sweep(const Instance& inst, std::size_t trials, std::uint64_t seed);

struct Summary {
  Rational max_ratio;
  Rational min_ratio;
  std::size_t bound_violations = 0;
};
Summary summarize(const std::vector<ReportRow>& rows);

inline constexpr const char* kCsvHeader =
    "mode,q,u,nbar,rbar,rbar_eff,l,rack,node,b,b_min,upper,case,ratio,repair_ok,rank_ok";

/// CSV (header, one line per row, then a '#'-prefixed summary line) or a JSON object
/// {"rows": [...], "summary": {...}}. Throws on empty input.
std::string emit_report(const std::vector<ReportRow>& rows, Format format);

/// C1 at fixed rbar for nbar = 3..nbar_max. Also reports per-nbar maximum ratio.
struct NbarSweepResult {
  SweepResult sweep;
  std::vector<std::pair<std::size_t, Rational>> max_ratio_by_nbar;
  bool max_ratio_non_increasing = true;
};
NbarSweepResult run_nbar_sweep(const ExperimentConfig& config, std::size_t nbar_max);

}  // namespace rackrs

#endif
