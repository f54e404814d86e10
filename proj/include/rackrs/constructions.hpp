#ifndef RACKRS_CONSTRUCTIONS_HPP
#define RACKRS_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rackrs/ext_field.hpp"
#include "rackrs/radix.hpp"
#include "rackrs/rs_code.hpp"

namespace rackrs {

/// Which evaluation-point family and repair polynomials an instance uses.
///  - C1: rbar-ary exponents, l = rbar^nbar.
///  - C2: multi-base exponents d_{w,y}, m | nbar.
///  - C2Remainder: multi-base with h = nbar mod m != 0.
///  - PrimeRbar: prime rbar >= 5 repaired with the C2 scheme for rbar' = rbar - 1.
///  - Homogeneous: C1 with one node per rack.
enum class Mode { C1, C2, C2Remainder, PrimeRbar, Homogeneous };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Largest sub-packetization accepted; field construction cost grows quickly past this.
inline constexpr std::uint64_t kMaxSubpacketization = 1024;

/// Validated integer parameters of an instance. Construct through the make_* functions.
struct SchemeParams {
  Mode mode = Mode::C1;
  std::uint32_t q = 0;
  std::size_t u = 1;
  std::size_t nbar = 0;
  /// nbar - kbar for the code actually built.
  std::uint64_t rbar = 0;
  /// rbar used by the repair scheme (rbar - 1 for PrimeRbar, rbar otherwise).
  std::uint64_t rbar_eff = 0;
  /// Prime factors of rbar_eff, ascending (C2/PrimeRbar); {rbar} for C1.
  std::vector<std::uint64_t> primes;
  std::size_t m = 1;
  std::size_t h = 0;
  /// floor(nbar / m).
  std::size_t nprime = 0;
  std::uint32_t l = 0;
  std::size_t v = 0;
  std::size_t kbar = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  /// Dimension whose repair scheme is reused: k' for PrimeRbar, k otherwise.
  std::size_t k_eff = 0;

  std::size_t r() const noexcept { return n - k; }
  bool multi_base() const noexcept { return mode == Mode::C2 || mode == Mode::C2Remainder || mode == Mode::PrimeRbar; }

  static SchemeParams make_c1(std::uint32_t q, std::size_t u, std::size_t nbar, std::uint64_t rbar, std::size_t v = 0);
  static SchemeParams make_homogeneous(std::uint32_t q, std::size_t nbar, std::uint64_t rbar);
  static SchemeParams make_c2(std::uint32_t q, std::size_t u, std::size_t nbar, std::vector<std::uint64_t> primes,
                              std::size_t v = 0);
  static SchemeParams make_prime_rbar(std::uint32_t q, std::size_t u, std::size_t nbar, std::uint64_t rbar,
                                std::size_t v = 0);
};

struct EvaluationPlan {
  /// Element of B with multiplicative order u.
  Residue alpha = 1;
  /// Exponent of zeta for each rack (index 0 = rack 1): rbar^(i-1) or d_{w,y}.
  std::vector<std::uint64_t> rack_exponent;
};

/// A constructed code together with the data its repair schemes need.
struct Instance {
  SchemeParams params;
  FieldPtr field;
  /// rbar-ary system (C1) or multi-base system (C2 family) over [0, l-1].
  RadixSystem digits;
  EvaluationPlan plan;
  CodeSpec code;
};

Instance build_construction1(const SchemeParams& params);
Instance build_construction2(const SchemeParams& params);
Instance build_prime_rbar(const SchemeParams& params);
/// Dispatches on params.mode.
Instance build_instance(const SchemeParams& params);

/// Rack (w, y) of a multi-base instance, w 0-based, y in [1, m]; flat rack index is wm + y.
struct RackCoord {
  std::size_t w = 0;
  std::size_t y = 1;
};
RackCoord rack_coord(const SchemeParams& params, std::size_t rack);

/// g_{t,s}(x) = zeta^(u t) x^(u s).
struct RepairTerm {
  std::uint64_t t = 0;
  std::uint64_t s = 0;
  bool operator==(const RepairTerm&) const = default;
};

struct RepairScheme {
  NodeId failed;
  std::vector<std::uint64_t> index_set;
  std::vector<std::size_t> zero_positions;
  std::uint64_t rbar_eff = 0;
  std::size_t u = 1;
  /// Some zero position of T wrapped past the last digit.
  bool wrapped = false;
  /// (t, s) in enumeration order: t ascending, then s ascending.
  std::vector<RepairTerm> terms;

  std::size_t max_degree() const;
};

RepairScheme repair_family(const Instance& inst, NodeId failed);

/// The polynomial zeta^(ut) x^(us) in dense form.
Polynomial term_polynomial(const Instance& inst, std::size_t u, const RepairTerm& term);

/// Values of every term of the scheme at x, in term order.
std::vector<FieldElement> evaluate_family(const Instance& inst, const RepairScheme& scheme, const FieldElement& x);

struct RankCheck {
  bool ok = false;
  std::size_t rank = 0;
  /// C1 family only: the evaluated set equals {(zeta^u)^a : a in [0, l-1]}.
  std::optional<bool> c1_power_identity;
};

RankCheck verify_rank_condition(const Instance& inst, const RepairScheme& scheme);

/// g_{t,s}(alpha_{e,j}) is the same for every slot j of every rack e.
bool check_slot_independence(const Instance& inst, const RepairScheme& scheme);

/// Exponents t + s*weight(failed rack), sorted. The rank argument needs them to be
/// step*[0, l-1] for some step (step 1 when nothing wraps).
std::vector<std::uint64_t> failed_rack_exponents(const Instance& inst, const RepairScheme& scheme);
std::optional<std::uint64_t> exponent_cover_step(const Instance& inst, const RepairScheme& scheme);

/// Every term has degree <= u*rbar_eff - u <= n - k_eff - 1 <= r - 1.
bool check_degree_bound(const Instance& inst, const RepairScheme& scheme);

}  // namespace rackrs

#endif
