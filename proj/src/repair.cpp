#include "rackrs/repair.hpp"

#include <algorithm>
#include <sstream>

#include "rackrs/serialize.hpp"

namespace rackrs {

std::string to_decimal(const Rational& x, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = x < 0;
  const Rational a = negative ? -x : x;
  // round half up on the absolute value
  const std::int64_t scaled = (a.numerator() * scale * 2 + a.denominator()) / (2 * a.denominator());
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return (negative ? "-" : "") + std::to_string(scaled / scale) + (places > 0 ? "." + frac : "");
}

// ----------------------------------------------------------------- bounds

namespace {

// Upper bounds for the multi-base scheme by the failed rack's block index w.
std::pair<Rational, std::string> multi_base_case(std::int64_t nbar, std::int64_t rbar, std::int64_t m,
                                                 std::int64_t l, std::size_t w, std::size_t nprime) {
  if (w + 1 == nprime) return {Rational((nbar - 1) + (m + 1) * rbar + 2, rbar) * l, "iii"};
  if (w + 2 == nprime) return {Rational((nbar - 1) + (m + 3) * rbar + 4, rbar) * l, "ii"};
  return {Rational((nbar - 1) + 3 * rbar + 3 * m + 1, rbar) * l, w == 0 ? "i-w0" : "i"};
}

}  // namespace

BoundSet bounds(const SchemeParams& p, NodeId failed) {
  BoundSet out;
  const auto nbar = static_cast<std::int64_t>(p.nbar);
  const auto l = static_cast<std::int64_t>(p.l);
  out.b_min = Rational((nbar - 1) * l, static_cast<std::int64_t>(p.rbar));
  if (!p.multi_base()) {
    out.upper = Rational((nbar + 1) * l, static_cast<std::int64_t>(p.rbar));
    out.case_tag = "c1";
    return out;
  }
  const auto rbar_eff = static_cast<std::int64_t>(p.rbar_eff);
  if (p.mode == Mode::PrimeRbar) out.b_min_eff = Rational((nbar - 1) * l, rbar_eff);
  const RackCoord rc = rack_coord(p, failed.rack);
  auto [value, tag] = multi_base_case(nbar, rbar_eff, static_cast<std::int64_t>(p.m), l,
                                      std::min(rc.w, p.nprime - 1), p.nprime);
  if (p.h == 0) {
    out.upper = value;
    out.case_tag = tag;
  } else {
    out.informational_upper = value;
    out.case_tag = "info-" + tag;
  }
  return out;
}

// -------------------------------------------------------------- bandwidth

std::size_t per_rack_bandwidth(const Instance& inst, const RepairScheme& scheme, std::size_t rack) {
  if (rack == scheme.failed.rack)
    throw std::invalid_argument("per_rack_bandwidth: b_e is undefined for the host rack");
  std::vector<FieldElement> values;
  for (std::size_t j = 1; j <= inst.params.u; ++j) {
    auto vals = evaluate_family(inst, scheme, inst.code.point({rack, j}));
    values.insert(values.end(), vals.begin(), vals.end());
  }
  return rank_of(values);
}

RepairPlan::RepairPlan(const Instance& inst, RepairScheme scheme) : inst_(&inst), scheme_(std::move(scheme)) {
  rank_ = verify_rank_condition(inst, scheme_);
  if (!rank_.ok)
    throw RepairError("rank condition fails for node (" + std::to_string(scheme_.failed.rack) + "," +
                      std::to_string(scheme_.failed.slot) + "): rank " + std::to_string(rank_.rank) + " < l = " +
                      std::to_string(inst.params.l));
  if (!check_slot_independence(inst, scheme_))
    throw RepairError("repair polynomial values differ across slots of a rack");
  lambda_ = dual_weights(inst.code);

  for (std::size_t e = 1; e <= inst.params.nbar; ++e) {
    if (e == scheme_.failed.rack) continue;
    Helper helper;
    helper.rack = e;
    const auto values = evaluate_family(inst, scheme_, inst.code.point({e, 1}));
    helper.profile = rank_over_base(values);
    for (std::size_t idx : helper.profile.independent) helper.basis.push_back(values[idx]);
    helper.rank_all_slots = per_rack_bandwidth(inst, scheme_, e);
    helpers_.push_back(std::move(helper));
  }
  for (std::size_t j = 1; j <= inst.params.u; ++j) {
    if (j == scheme_.failed.slot) continue;
    host_values_.emplace_back(j, evaluate_family(inst, scheme_, inst.code.point({scheme_.failed.rack, j})));
  }
  dual_ = dual_basis(evaluate_family(inst, scheme_, inst.code.point(scheme_.failed)));
}

BandwidthReport RepairPlan::bandwidth() const {
  BandwidthReport report;
  report.failed = scheme_.failed;
  for (const Helper& h : helpers_) {
    report.per_rack.push_back({h.rack, h.rank_all_slots});
    report.b += h.rank_all_slots;
  }
  report.bounds = bounds(inst_->params, scheme_.failed);
  report.ratio = Rational(static_cast<std::int64_t>(report.b)) / report.bounds.b_min;
  report.lower_ok = Rational(static_cast<std::int64_t>(report.b)) >= report.bounds.b_min;
  report.upper_ok = !report.bounds.upper || Rational(static_cast<std::int64_t>(report.b)) < *report.bounds.upper;
  return report;
}

FieldElement reconstruct(const RepairPlan& plan, const RepairTranscript& transcript) {
  const Instance& inst = plan.instance();
  const PrimeField& B = inst.field->base();
  const std::size_t l = inst.params.l;
  // sums[j] = sum over every surviving node t of tr(lambda_t g_j(alpha_t) c_t)
  std::vector<Residue> sums(l, 0);
  for (const RackMessage& msg : transcript.messages) {
    if (msg.recombination.size() != l) throw RepairError("reconstruct: recombination table has wrong size");
    for (std::size_t j = 0; j < l; ++j) {
      const auto& coord = msg.recombination[j];
      if (coord.size() != msg.payload.size()) throw RepairError("reconstruct: payload length mismatch");
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < coord.size(); ++w) acc += B.mul(coord[w], msg.payload[w]);
      sums[j] = B.add(sums[j], static_cast<Residue>(acc % B.q()));
    }
  }
  for (const HostSymbol& hs : transcript.host_symbols) {
    const auto it = std::find_if(plan.host_values().begin(), plan.host_values().end(),
                                 [&](const auto& kv) { return kv.first == hs.node.slot; });
    if (it == plan.host_values().end() || hs.node.rack != transcript.failed.rack)
      throw RepairError("reconstruct: unexpected host symbol");
    const FieldElement weighted = plan.lambda()[inst.code.flat_index(hs.node)] * hs.symbol;
    for (std::size_t j = 0; j < l; ++j) sums[j] = B.add(sums[j], trace(it->second[j] * weighted));
  }
  // tr(g_j(alpha_i) * lambda_i c_i) = -sums[j]
  for (Residue& s : sums) s = B.neg(s);
  const FieldElement lambda_c = expand_in_dual_basis(sums, plan.failed_dual());
  return lambda_c / plan.lambda()[inst.code.flat_index(transcript.failed)];
}

RepairOutcome execute_repair(const RepairPlan& plan, const Codeword& codeword) {
  const Instance& inst = plan.instance();
  const NodeId failed = plan.scheme().failed;
  if (codeword.size() != inst.code.n()) throw std::invalid_argument("execute_repair: codeword length mismatch");

  RepairOutcome out;
  RepairTranscript& tr = out.transcript;
  tr.failed = failed;
  tr.expected = codeword[inst.code.flat_index(failed)];

  for (const RepairPlan::Helper& h : plan.helpers()) {
    RackMessage msg;
    msg.rack = h.rack;
    FieldElement mu = inst.field->zero();
    for (std::size_t j = 1; j <= inst.params.u; ++j) {
      const std::size_t idx = inst.code.flat_index({h.rack, j});
      mu += plan.lambda()[idx] * codeword[idx];
    }
    msg.basis = h.basis;
    for (const FieldElement& beta : h.basis) msg.payload.push_back(trace(beta * mu));
    msg.recombination = h.profile.coords;
    tr.messages.push_back(std::move(msg));
  }
  for (const auto& [slot, values] : plan.host_values()) {
    const NodeId node{failed.rack, slot};
    tr.host_symbols.push_back({node, codeword[inst.code.flat_index(node)]});
  }
  tr.recovered = reconstruct(plan, tr);

  BandwidthReport& report = out.report;
  report = plan.bandwidth();
  for (const RackMessage& msg : tr.messages) report.payload_count += msg.payload.size();
  report.accounting_ok = report.payload_count == report.b;
  report.repair_ok = tr.recovered == tr.expected;
  if (!report.accounting_ok)
    throw RepairError("payload count " + std::to_string(report.payload_count) + " differs from rank sum " +
                      std::to_string(report.b) + "\n" + transcript_to_json(tr).dump(2));
  if (!report.repair_ok) throw RepairError("recovered symbol differs from the erased one\n" + transcript_to_json(tr).dump(2));
  return out;
}

AuditResult audit(const RepairTranscript& transcript, const BandwidthReport& report) {
  AuditResult out;
  auto fail = [&](std::string what) {
    out.ok = false;
    out.findings.push_back(std::move(what));
  };
  std::size_t payload_total = 0;
  for (const RackMessage& msg : transcript.messages) {
    payload_total += msg.payload.size();
    if (msg.rack == transcript.failed.rack) fail("host rack " + std::to_string(msg.rack) + " sent a counted message");
    const auto it = std::find_if(report.per_rack.begin(), report.per_rack.end(),
                                 [&](const RackBandwidth& rb) { return rb.rack == msg.rack; });
    if (it == report.per_rack.end()) {
      fail("rack " + std::to_string(msg.rack) + " missing from the report");
      continue;
    }
    if (msg.payload.size() != it->b_e)
      fail("rack " + std::to_string(msg.rack) + " sent " + std::to_string(msg.payload.size()) +
           " symbols but its rank is " + std::to_string(it->b_e));
    if (msg.basis.size() != msg.payload.size())
      fail("rack " + std::to_string(msg.rack) + " basis size differs from payload size");
  }
  if (transcript.messages.size() != report.per_rack.size()) fail("message count differs from helper rack count");
  std::size_t rank_sum = 0;
  for (const RackBandwidth& rb : report.per_rack) rank_sum += rb.b_e;
  if (rank_sum != report.b) fail("report b differs from the sum of its b_e");
  if (payload_total != report.b)
    fail("transcript carries " + std::to_string(payload_total) + " symbols, rank sum is " + std::to_string(report.b));
  const Rational b(static_cast<std::int64_t>(report.b));
  if (b < report.bounds.b_min) fail("b below the cut-set bound");
  if (report.bounds.upper && !(b < *report.bounds.upper)) fail("b not below the " + report.bounds.case_tag + " bound");
  if (!(transcript.recovered == transcript.expected)) fail("recovered symbol differs from the erased symbol");
  return out;
}

}  // namespace rackrs
