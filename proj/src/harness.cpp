#include "rackrs/harness.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rackrs/serialize.hpp"

namespace rackrs {

Format parse_format(const std::string& text) {
  if (text == "csv" || text == "CSV") return Format::Csv;
  if (text == "json" || text == "JSON") return Format::Json;
  throw std::invalid_argument("unknown format '" + text + "' (expected csv or json)");
}

SchemeParams ExperimentConfig::params() const {
  switch (mode) {
    case Mode::C1: {
      if (u == 1) throw std::invalid_argument("C1 with u = 1 is the homogeneous mode; pass --mode homogeneous");
      return SchemeParams::make_c1(q, u, nbar, rbar, v);
    }
    case Mode::Homogeneous:
      if (u != 1) throw std::invalid_argument("homogeneous mode requires u = 1");
      return SchemeParams::make_homogeneous(q, nbar, rbar);
    case Mode::C2:
    case Mode::C2Remainder:
      if (rbar != 0) {
        std::uint64_t prod = 1;
        for (auto p : primes) prod *= p;
        if (prod != rbar) throw std::invalid_argument("--rbar does not equal the product of --primes");
      }
      return SchemeParams::make_c2(q, u, nbar, primes, v);
    case Mode::PrimeRbar: return SchemeParams::make_prime_rbar(q, u, nbar, rbar, v);
  }
  throw std::logic_error("unknown mode");
}

namespace {

ReportRow base_row(const Instance& inst, NodeId node) {
  const SchemeParams& p = inst.params;
  ReportRow row;
  row.mode = p.mode;
  row.q = p.q;
  row.u = p.u;
  row.nbar = p.nbar;
  row.rbar = p.rbar;
  row.rbar_eff = p.rbar_eff;
  row.l = p.l;
  row.rack = node.rack;
  row.node = inst.code.flat_index(node) + 1;
  return row;
}

}  // namespace

SweepResult run_sweep(const Instance& inst, std::size_t trials, std::uint64_t seed) {
  SweepResult result;
  std::mt19937_64 rng(seed);
  for (std::size_t flat = 0; flat < inst.code.n(); ++flat) {
    const NodeId node = inst.code.node_at(flat);
    ReportRow row = base_row(inst, node);
    RepairScheme scheme = repair_family(inst, node);
    const BoundSet bs = bounds(inst.params, node);
    row.b_min = bs.b_min;
    row.upper = bs.upper ? bs.upper : bs.informational_upper;
    row.case_tag = bs.case_tag;

    std::optional<RepairPlan> plan;
    try {
      plan.emplace(inst, scheme);
    } catch (const RepairError& err) {
      row.rank_ok = false;
      row.repair = RepairStatus::Skipped;
      ++result.audit_failures;
      result.failure_dumps.push_back(err.what());
      result.rows.push_back(row);
      continue;
    }
    row.rank_ok = plan->rank_check().ok && check_degree_bound(inst, plan->scheme());
    const BandwidthReport skeleton = plan->bandwidth();
    row.b = skeleton.b;
    row.ratio = skeleton.ratio;
    row.bounds_ok = skeleton.lower_ok && skeleton.upper_ok;
    if (!row.rank_ok) ++result.audit_failures;

    if (trials > 0) row.repair = RepairStatus::Ok;
    std::optional<std::size_t> first_payload;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const Codeword word = encode(random_polynomial(inst.field, inst.code.k(), rng), inst.code);
      try {
        const RepairOutcome outcome = execute_repair(*plan, word);
        const AuditResult verdict = audit(outcome.transcript, outcome.report);
        bool consistent = true;
        if (!first_payload) first_payload = outcome.report.payload_count;
        consistent = *first_payload == outcome.report.payload_count;
        if (!verdict.ok || !consistent) {
          row.repair = RepairStatus::Failed;
          ++result.audit_failures;
          std::string dump = "audit failure at node " + std::to_string(row.node) + ":";
          for (const auto& f : verdict.findings) dump += "\n  " + f;
          if (!consistent) dump += "\n  payload count changed between codewords";
          dump += "\n" + transcript_to_json(outcome.transcript).dump(2);
          result.failure_dumps.push_back(std::move(dump));
        }
      } catch (const RepairError& err) {
        row.repair = RepairStatus::Failed;
        ++result.audit_failures;
        result.failure_dumps.push_back(err.what());
      }
    }
    result.rows.push_back(row);
  }
  return result;
}

SweepResult run_sweep(const ExperimentConfig& config) {
  const SchemeParams params = config.params();
  const Instance inst = build_instance(params);
  return run_sweep(inst, config.trials, config.seed);
}

Summary summarize(const std::vector<ReportRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("summarize: no rows");
  Summary s;
  s.max_ratio = s.min_ratio = rows.front().ratio;
  for (const ReportRow& row : rows) {
    s.max_ratio = std::max(s.max_ratio, row.ratio);
    s.min_ratio = std::min(s.min_ratio, row.ratio);
    if (!row.bounds_ok) ++s.bound_violations;
  }
  return s;
}

namespace {

std::string status_text(RepairStatus s) {
  switch (s) {
    case RepairStatus::Ok: return "true";
    case RepairStatus::Failed: return "false";
    case RepairStatus::Skipped: return "skipped";
  }
  return "?";
}

}  // namespace

std::string emit_report(const std::vector<ReportRow>& rows, Format format) {
  if (rows.empty()) throw std::invalid_argument("emit_report: no rows to report");
  const Summary s = summarize(rows);
  if (format == Format::Csv) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const ReportRow& r : rows) {
      out << to_string(r.mode) << ',' << r.q << ',' << r.u << ',' << r.nbar << ',' << r.rbar << ',' << r.rbar_eff
          << ',' << r.l << ',' << r.rack << ',' << r.node << ',' << r.b << ',' << to_decimal(r.b_min) << ','
          << (r.upper ? to_decimal(*r.upper) : std::string("none")) << ',' << r.case_tag << ','
          << to_decimal(r.ratio) << ',' << status_text(r.repair) << ',' << (r.rank_ok ? "true" : "false") << '\n';
    }
    out << "# max_ratio=" << to_decimal(s.max_ratio) << " min_ratio=" << to_decimal(s.min_ratio)
        << " bound_violations=" << s.bound_violations << '\n';
    return out.str();
  }
  nlohmann::json list = nlohmann::json::array();
  for (const ReportRow& r : rows) {
    list.push_back({{"mode", to_string(r.mode)},
                    {"q", r.q},
                    {"u", r.u},
                    {"nbar", r.nbar},
                    {"rbar", r.rbar},
                    {"rbar_eff", r.rbar_eff},
                    {"l", r.l},
                    {"rack", r.rack},
                    {"node", r.node},
                    {"b", r.b},
                    {"b_min", to_decimal(r.b_min)},
                    {"upper", r.upper ? nlohmann::json(to_decimal(*r.upper)) : nlohmann::json(nullptr)},
                    {"case", r.case_tag},
                    {"ratio", to_decimal(r.ratio)},
                    {"repair_ok", status_text(r.repair)},
                    {"rank_ok", r.rank_ok}});
  }
  nlohmann::json doc{{"rows", list},
                     {"summary",
                      {{"max_ratio", to_decimal(s.max_ratio)},
                       {"min_ratio", to_decimal(s.min_ratio)},
                       {"bound_violations", s.bound_violations}}}};
  return doc.dump(2) + "\n";
}

NbarSweepResult run_nbar_sweep(const ExperimentConfig& config, std::size_t nbar_max) {
  if (config.mode != Mode::C1 && config.mode != Mode::Homogeneous)
    throw std::invalid_argument("nbar-sweep runs c1 mode only");
  NbarSweepResult out;
  for (std::size_t nbar = 3; nbar <= nbar_max; ++nbar) {
    ExperimentConfig cfg = config;
    cfg.nbar = nbar;
    if (cfg.rbar >= nbar) continue;
    SweepResult part = run_sweep(cfg);
    const Summary s = summarize(part.rows);
    if (!out.max_ratio_by_nbar.empty() && s.max_ratio > out.max_ratio_by_nbar.back().second)
      out.max_ratio_non_increasing = false;
    out.max_ratio_by_nbar.emplace_back(nbar, s.max_ratio);
    out.sweep.rows.insert(out.sweep.rows.end(), part.rows.begin(), part.rows.end());
    out.sweep.audit_failures += part.audit_failures;
    out.sweep.failure_dumps.insert(out.sweep.failure_dumps.end(), part.failure_dumps.begin(), part.failure_dumps.end());
  }
  if (out.sweep.rows.empty()) throw std::invalid_argument("nbar-sweep: no admissible nbar in [3, nbar_max]");
  return out;
}

}  // namespace rackrs
