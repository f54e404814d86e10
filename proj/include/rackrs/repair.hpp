#ifndef RACKRS_REPAIR_HPP
#define RACKRS_REPAIR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "rackrs/base_linalg.hpp"
#include "rackrs/constructions.hpp"

namespace rackrs {

using Rational = boost::rational<std::int64_t>;

/// Decimal rendering with exactly `places` digits after the point, rounded half up.
std::string to_decimal(const Rational& x, int places = 6);

/// Raised when a repair cannot run or does not reproduce the erased symbol.
class RepairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What one helper rack sends across the rack boundary.
struct RackMessage {
  std::size_t rack = 0;
  /// beta_1..beta_{b_e}: independent over B, spanning the rack's evaluated polynomials.
  std::vector<FieldElement> basis;
  /// tr(beta_w * mu_e) with mu_e = sum_m lambda_{e,m} c_{e,m}. The only counted symbols.
  std::vector<Residue> payload;
  /// B-coordinates of g_{t,s}(alpha_{e,.}) in the basis, one row per term. Metadata.
  std::vector<std::vector<Residue>> recombination;
};

struct HostSymbol {
  NodeId node;
  FieldElement symbol;
};

struct RepairTranscript {
  NodeId failed;
  std::vector<RackMessage> messages;
  /// Full symbols of the host rack survivors; intra-rack traffic is not counted.
  std::vector<HostSymbol> host_symbols;
  FieldElement recovered;
  /// The erased symbol, held back by the experiment for checking.
  FieldElement expected;
};

struct BoundSet {
  /// (nbar - 1) l / rbar with the code's true rbar.
  Rational b_min;
  /// Upper bound that b must stay strictly below, when one applies.
  std::optional<Rational> upper;
  /// Case-formula value reported without being enforced (remainder layouts).
  std::optional<Rational> informational_upper;
  /// c1, i, i-w0, ii, iii, or info-<case>.
  std::string case_tag;
  /// (nbar - 1) l / rbar' for the prime-rbar mode.
  std::optional<Rational> b_min_eff;
};

BoundSet bounds(const SchemeParams& params, NodeId failed);

struct RackBandwidth {
  std::size_t rack = 0;
  std::size_t b_e = 0;
};

struct BandwidthReport {
  NodeId failed;
  /// Rank-based b_e per helper rack, ascending rack order.
  std::vector<RackBandwidth> per_rack;
  /// Sum of the rank-based b_e.
  std::size_t b = 0;
  /// Number of base-field symbols in the transcript.
  std::size_t payload_count = 0;
  BoundSet bounds;
  Rational ratio;
  bool lower_ok = false;
  bool upper_ok = false;
  bool accounting_ok = false;
  bool repair_ok = false;
};

/// rank_B {g_{t,s}(alpha_{e,m}) : m in [u], (t,s) in scheme}. Throws std::invalid_argument
/// for the host rack.
std::size_t per_rack_bandwidth(const Instance& inst, const RepairScheme& scheme, std::size_t rack);

/// Everything about repairing one node that does not depend on the codeword.
class RepairPlan {
 public:
  /// Throws RepairError if the rank condition fails.
  RepairPlan(const Instance& inst, RepairScheme scheme);

  const Instance& instance() const noexcept { return *inst_; }
  const RepairScheme& scheme() const noexcept { return scheme_; }
  const RankCheck& rank_check() const noexcept { return rank_; }
  const std::vector<FieldElement>& lambda() const noexcept { return lambda_; }

  /// Rank-based report skeleton (no repair yet).
  BandwidthReport bandwidth() const;

  struct Helper {
    std::size_t rack;
    RankProfile profile;
    std::vector<FieldElement> basis;
    std::size_t rank_all_slots;
  };
  const std::vector<Helper>& helpers() const noexcept { return helpers_; }
  const DualBasisPair& failed_dual() const noexcept { return dual_; }
  /// g values at each host-rack survivor, keyed by slot.
  const std::vector<std::pair<std::size_t, std::vector<FieldElement>>>& host_values() const noexcept {
    return host_values_;
  }

 private:
  const Instance* inst_;
  RepairScheme scheme_;
  RankCheck rank_;
  std::vector<FieldElement> lambda_;
  std::vector<Helper> helpers_;
  std::vector<std::pair<std::size_t, std::vector<FieldElement>>> host_values_;
  DualBasisPair dual_;
};

struct RepairOutcome {
  RepairTranscript transcript;
  BandwidthReport report;
};

/// Runs the trace repair of plan.scheme().failed on a full codeword (the failed symbol is
/// only read to fill `expected`). Throws RepairError when the recovered symbol differs or
/// the two bandwidth counts disagree; the message carries the serialized transcript.
RepairOutcome execute_repair(const RepairPlan& plan, const Codeword& codeword);

/// Receiver side only: rebuilds the failed symbol from a transcript's payloads and host
/// symbols.
FieldElement reconstruct(const RepairPlan& plan, const RepairTranscript& transcript);

struct AuditResult {
  bool ok = true;
  std::vector<std::string> findings;
};

AuditResult audit(const RepairTranscript& transcript, const BandwidthReport& report);

}  // namespace rackrs

#endif
