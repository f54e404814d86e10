#include "rackrs/serialize.hpp"

namespace rackrs {

using nlohmann::json;

json element_to_json(const FieldElement& a) {
  return json(std::vector<Residue>(a.coeffs().begin(), a.coeffs().end()));
}

json field_to_json(const ExtField& field) {
  return json{{"q", field.q()}, {"l", field.degree()}, {"modulus", field.modulus()},
              {"zeta", element_to_json(field.zeta())}};
}

json plan_to_json(const Instance& inst) {
  const SchemeParams& p = inst.params;
  json params{{"q", p.q},       {"u", p.u},       {"nbar", p.nbar}, {"rbar", p.rbar}, {"rbar_eff", p.rbar_eff},
              {"primes", p.primes}, {"m", p.m},   {"h", p.h},       {"nprime", p.nprime}, {"l", p.l},
              {"n", p.n},       {"k", p.k},       {"k_eff", p.k_eff}, {"v", p.v},     {"kbar", p.kbar}};
  json nodes = json::array();
  for (std::size_t flat = 0; flat < inst.code.n(); ++flat) {
    const NodeId node = inst.code.node_at(flat);
    nodes.push_back({{"rack", node.rack}, {"slot", node.slot}, {"point", element_to_json(inst.code.points()[flat])}});
  }
  return json{{"mode", to_string(p.mode)},
              {"params", params},
              {"field", field_to_json(*inst.field)},
              {"alpha", inst.plan.alpha},
              {"rack_zeta_exponent", inst.plan.rack_exponent},
              {"nodes", nodes}};
}

json transcript_to_json(const RepairTranscript& tr) {
  json messages = json::array();
  for (const RackMessage& msg : tr.messages) {
    json basis = json::array();
    for (const FieldElement& b : msg.basis) basis.push_back(element_to_json(b));
    messages.push_back({{"rack", msg.rack}, {"basis", basis}, {"payload", msg.payload}});
  }
  json host = json::array();
  for (const HostSymbol& hs : tr.host_symbols)
    host.push_back({{"rack", hs.node.rack}, {"slot", hs.node.slot}, {"symbol", element_to_json(hs.symbol)}});
  json out{{"failed", {{"rack", tr.failed.rack}, {"slot", tr.failed.slot}}},
           {"messages", messages},
           {"host_symbols", host}};
  if (tr.recovered.field()) out["recovered"] = element_to_json(tr.recovered);
  if (tr.expected.field()) out["expected"] = element_to_json(tr.expected);
  return out;
}

json bandwidth_to_json(const BandwidthReport& r) {
  json racks = json::array();
  for (const RackBandwidth& rb : r.per_rack) racks.push_back({{"rack", rb.rack}, {"b_e", rb.b_e}});
  json out{{"failed", {{"rack", r.failed.rack}, {"slot", r.failed.slot}}},
           {"per_rack", racks},
           {"b", r.b},
           {"payload_count", r.payload_count},
           {"b_min", to_decimal(r.bounds.b_min)},
           {"case", r.bounds.case_tag},
           {"ratio", to_decimal(r.ratio)},
           {"lower_ok", r.lower_ok},
           {"upper_ok", r.upper_ok},
           {"accounting_ok", r.accounting_ok},
           {"repair_ok", r.repair_ok}};
  if (r.bounds.upper) out["upper"] = to_decimal(*r.bounds.upper);
  if (r.bounds.informational_upper) out["informational_upper"] = to_decimal(*r.bounds.informational_upper);
  if (r.bounds.b_min_eff) out["b_min_eff"] = to_decimal(*r.bounds.b_min_eff);
  return out;
}

std::string codeword_to_text(const Codeword& word) {
  std::string out;
  for (const FieldElement& sym : word) {
    for (std::size_t i = 0; i < sym.coeffs().size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(sym[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace rackrs
