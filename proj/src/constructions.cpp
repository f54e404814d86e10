#include "rackrs/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "rackrs/base_linalg.hpp"

namespace rackrs {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::C1: return "C1";
    case Mode::C2: return "C2";
    case Mode::C2Remainder: return "C2-remainder";
    case Mode::PrimeRbar: return "prime-rbar";
    case Mode::Homogeneous: return "homogeneous";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "c1") return Mode::C1;
  if (s == "c2") return Mode::C2;
  if (s == "c2-remainder") return Mode::C2Remainder;
  if (s == "prime" || s == "prime-rbar") return Mode::PrimeRbar;
  if (s == "homogeneous") return Mode::Homogeneous;
  throw std::invalid_argument("unknown mode '" + text + "' (expected c1, c2, prime or homogeneous)");
}

// ------------------------------------------------------------ SchemeParams

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > kMaxSubpacketization) break;
    out *= base;
  }
  return out;
}

void fill_code_dims(SchemeParams& p, std::uint64_t rbar_for_k_eff) {
  if (p.u < 1) throw std::invalid_argument("u must be >= 1");
  if ((p.q - 1) % p.u != 0)
    throw std::invalid_argument("u = " + std::to_string(p.u) + " must divide q - 1 = " + std::to_string(p.q - 1));
  if (p.rbar >= p.nbar)
    throw std::invalid_argument("need kbar = nbar - rbar >= 1 (nbar = " + std::to_string(p.nbar) +
                                ", rbar = " + std::to_string(p.rbar) + ")");
  if (p.v >= p.u) throw std::invalid_argument("v must lie in [0, u - 1]");
  p.kbar = p.nbar - p.rbar;
  p.n = p.nbar * p.u;
  p.k = p.kbar * p.u + p.v;
  p.k_eff = (p.nbar - rbar_for_k_eff) * p.u + p.v;
  if (p.k < p.u) throw std::invalid_argument("need k >= u");
}

void check_l(std::uint64_t l) {
  if (l > kMaxSubpacketization)
    throw std::invalid_argument("sub-packetization exceeds the supported maximum of " +
                                std::to_string(kMaxSubpacketization));
}

void fill_multi_base(SchemeParams& p) {
  p.m = p.primes.size();
  for (std::uint64_t prime : p.primes)
    if (!is_prime_u64(prime)) throw std::invalid_argument("entry " + std::to_string(prime) + " of primes is not prime");
  if (p.m < 2) throw std::invalid_argument("the multi-base construction needs m >= 2 primes");
  p.nprime = p.nbar / p.m;
  p.h = p.nbar % p.m;
  if (p.nprime < 2) throw std::invalid_argument("need n' = floor(nbar / m) >= 2");
  p.rbar_eff = 1;
  for (std::uint64_t prime : p.primes) p.rbar_eff *= prime;
  std::uint64_t l = checked_pow(p.rbar_eff, p.nprime);
  for (std::size_t j = 0; j < p.h && l <= kMaxSubpacketization; ++j) l *= p.primes[j];
  check_l(l);
  p.l = static_cast<std::uint32_t>(l);
}

}  // namespace

SchemeParams SchemeParams::make_c1(std::uint32_t q, std::size_t u, std::size_t nbar, std::uint64_t rbar, std::size_t v) {
  PrimeField check(q);
  SchemeParams p;
  p.mode = u == 1 ? Mode::Homogeneous : Mode::C1;
  p.q = q;
  p.u = u;
  p.nbar = nbar;
  p.rbar = p.rbar_eff = rbar;
  p.v = v;
  if (rbar < 2) throw std::invalid_argument("rbar must be >= 2");
  p.primes = {rbar};
  p.m = 1;
  p.nprime = nbar;
  fill_code_dims(p, rbar);
  const std::uint64_t l = checked_pow(rbar, nbar);
  check_l(l);
  p.l = static_cast<std::uint32_t>(l);
  return p;
}

SchemeParams SchemeParams::make_homogeneous(std::uint32_t q, std::size_t nbar, std::uint64_t rbar) {
  return make_c1(q, 1, nbar, rbar, 0);
}

SchemeParams SchemeParams::make_c2(std::uint32_t q, std::size_t u, std::size_t nbar, std::vector<std::uint64_t> primes,
                                   std::size_t v) {
  PrimeField check(q);
  SchemeParams p;
  p.q = q;
  p.u = u;
  p.nbar = nbar;
  p.v = v;
  p.primes = std::move(primes);
  fill_multi_base(p);
  p.rbar = p.rbar_eff;
  p.mode = p.h == 0 ? Mode::C2 : Mode::C2Remainder;
  fill_code_dims(p, p.rbar);
  return p;
}

SchemeParams SchemeParams::make_prime_rbar(std::uint32_t q, std::size_t u, std::size_t nbar, std::uint64_t rbar,
                                     std::size_t v) {
  PrimeField check(q);
  if (rbar == 2 || rbar == 3)
    throw std::invalid_argument("rbar = " + std::to_string(rbar) + " is too small for the prime-rbar scheme; use C1");
  if (!is_prime_u64(rbar))
    throw std::invalid_argument("rbar = " + std::to_string(rbar) + " is not prime; use C2 with its prime factors");
  SchemeParams p;
  p.mode = Mode::PrimeRbar;
  p.q = q;
  p.u = u;
  p.nbar = nbar;
  p.v = v;
  p.rbar = rbar;
  p.primes = factor_small(rbar - 1);
  fill_multi_base(p);
  fill_code_dims(p, p.rbar_eff);
  return p;
}

// -------------------------------------------------------------- builders

namespace {

Instance assemble(const SchemeParams& params, RadixSystem digits, std::vector<std::uint64_t> rack_exponent) {
  FieldPtr field = ExtField::create(params.q, params.l);
  const PrimeField& B = field->base();
  EvaluationPlan plan;
  plan.alpha = B.pow(B.primitive_root(), (params.q - 1) / params.u);
  if (B.order(plan.alpha) != params.u) throw std::logic_error("alpha does not have order u");
  plan.rack_exponent = std::move(rack_exponent);

  std::vector<FieldElement> points;
  points.reserve(params.n);
  for (std::uint64_t exp : plan.rack_exponent) {
    const FieldElement base = pow(field->zeta(), exp);
    for (std::size_t j = 1; j <= params.u; ++j) points.push_back(base.scaled(B.pow(plan.alpha, j)));
  }
  // CodeSpec rejects colliding points.
  CodeSpec code(field, std::move(points), params.k, params.nbar, params.u);
  return Instance{params, std::move(field), std::move(digits), std::move(plan), std::move(code)};
}

Instance build_multi_base(const SchemeParams& params) {
  RadixSystem digits = RadixSystem::multi_base(params.primes, params.nbar);
  if (digits.capacity() != params.l) throw std::logic_error("multi-base capacity differs from l");
  std::vector<std::uint64_t> exps;
  for (std::size_t pos = 1; pos <= params.nbar; ++pos) exps.push_back(digits.weight(pos));
  return assemble(params, std::move(digits), std::move(exps));
}

}  // namespace

Instance build_construction1(const SchemeParams& params) {
  if (params.mode != Mode::C1 && params.mode != Mode::Homogeneous)
    throw std::invalid_argument("build_construction1: parameters are not in C1 mode");
  RadixSystem digits = RadixSystem::uniform(params.rbar, params.nbar);
  std::vector<std::uint64_t> exps;
  for (std::size_t i = 1; i <= params.nbar; ++i) exps.push_back(digits.weight(i));
  return assemble(params, std::move(digits), std::move(exps));
}

Instance build_construction2(const SchemeParams& params) {
  if (params.mode != Mode::C2 && params.mode != Mode::C2Remainder)
    throw std::invalid_argument("build_construction2: parameters are not in C2 mode");
  return build_multi_base(params);
}

Instance build_prime_rbar(const SchemeParams& params) {
  if (params.mode != Mode::PrimeRbar) throw std::invalid_argument("build_prime_rbar: parameters are not in prime-rbar mode");
  return build_multi_base(params);
}

Instance build_instance(const SchemeParams& params) {
  switch (params.mode) {
    case Mode::C1:
    case Mode::Homogeneous: return build_construction1(params);
    case Mode::C2:
    case Mode::C2Remainder: return build_construction2(params);
    case Mode::PrimeRbar: return build_prime_rbar(params);
  }
  throw std::logic_error("build_instance: unknown mode");
}

RackCoord rack_coord(const SchemeParams& params, std::size_t rack) {
  if (rack < 1 || rack > params.nbar) throw std::out_of_range("rack_coord: rack outside [1, nbar]");
  return RackCoord{(rack - 1) / params.m, (rack - 1) % params.m + 1};
}

// --------------------------------------------------------- repair family

std::size_t RepairScheme::max_degree() const {
  std::uint64_t s_max = 0;
  for (const auto& term : terms) s_max = std::max(s_max, term.s);
  return u * s_max;
}

RepairScheme repair_family(const Instance& inst, NodeId failed) {
  const SchemeParams& p = inst.params;
  inst.code.flat_index(failed);  // range check
  RepairScheme scheme;
  scheme.failed = failed;
  scheme.u = p.u;
  scheme.rbar_eff = p.rbar_eff;
  if (p.multi_base()) {
    const RackCoord rc = rack_coord(p, failed.rack);
    scheme.zero_positions = zero_positions_c2(rc.w, rc.y, p.m, inst.digits.positions());
    for (std::size_t k = 0; k < p.m; ++k)
      if (scheme.zero_positions[k] != failed.rack + k) scheme.wrapped = true;
    scheme.index_set = index_set_c2(rc.w, rc.y, p.primes, p.nbar);
  } else {
    scheme.zero_positions = {failed.rack};
    scheme.index_set = index_set_c1(failed.rack, p.nbar, p.rbar);
  }
  for (std::uint64_t t : scheme.index_set)
    for (std::uint64_t s = 0; s < scheme.rbar_eff; ++s) scheme.terms.push_back({t, s});
  if (scheme.terms.size() != p.l) throw std::logic_error("repair_family: |T| * rbar differs from l");
  return scheme;
}

Polynomial term_polynomial(const Instance& inst, std::size_t u, const RepairTerm& term) {
  Polynomial g(u * term.s + 1, inst.field->zero());
  g.back() = pow(inst.field->zeta(), std::uint64_t{u * term.t});
  return g;
}

std::vector<FieldElement> evaluate_family(const Instance& inst, const RepairScheme& scheme, const FieldElement& x) {
  const FieldElement zeta_u = pow(inst.field->zeta(), std::uint64_t{scheme.u});
  const FieldElement x_u = pow(x, std::uint64_t{scheme.u});
  std::vector<FieldElement> x_pow{inst.field->one()};
  for (std::uint64_t s = 1; s < scheme.rbar_eff; ++s) x_pow.push_back(x_pow.back() * x_u);

  std::vector<FieldElement> out;
  out.reserve(scheme.terms.size());
  // terms are grouped by ascending t; walk zeta^(ut) forward
  FieldElement zeta_ut = inst.field->one();
  std::uint64_t cur_t = 0;
  for (const RepairTerm& term : scheme.terms) {
    if (term.t < cur_t) {
      zeta_ut = inst.field->one();
      cur_t = 0;
    }
    for (; cur_t < term.t; ++cur_t) zeta_ut *= zeta_u;
    out.push_back(zeta_ut * x_pow[term.s]);
  }
  return out;
}

RankCheck verify_rank_condition(const Instance& inst, const RepairScheme& scheme) {
  const auto values = evaluate_family(inst, scheme, inst.code.point(scheme.failed));
  RankCheck out;
  out.rank = rank_of(values);
  out.ok = out.rank == inst.params.l;
  if (!inst.params.multi_base()) {
    const FieldElement zeta_u = pow(inst.field->zeta(), std::uint64_t{inst.params.u});
    std::vector<FieldElement> powers{inst.field->one()};
    for (std::uint32_t a = 1; a < inst.params.l; ++a) powers.push_back(powers.back() * zeta_u);
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::sort(powers.begin(), powers.end());
    out.c1_power_identity = sorted == powers;
  }
  return out;
}

bool check_slot_independence(const Instance& inst, const RepairScheme& scheme) {
  for (std::size_t e = 1; e <= inst.params.nbar; ++e) {
    const auto first = evaluate_family(inst, scheme, inst.code.point({e, 1}));
    for (std::size_t j = 2; j <= inst.params.u; ++j)
      if (evaluate_family(inst, scheme, inst.code.point({e, j})) != first) return false;
  }
  return true;
}

std::vector<std::uint64_t> failed_rack_exponents(const Instance& inst, const RepairScheme& scheme) {
  const std::uint64_t weight = inst.plan.rack_exponent.at(scheme.failed.rack - 1);
  std::vector<std::uint64_t> out;
  out.reserve(scheme.terms.size());
  for (const RepairTerm& term : scheme.terms) out.push_back(term.t + term.s * weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> exponent_cover_step(const Instance& inst, const RepairScheme& scheme) {
  const auto exps = failed_rack_exponents(inst, scheme);
  if (exps.size() < 2 || exps[0] != 0) return std::nullopt;
  const std::uint64_t step = exps[1];
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != step * i) return std::nullopt;
  return step;
}

bool check_degree_bound(const Instance& inst, const RepairScheme& scheme) {
  const std::size_t limit = inst.params.n - inst.params.k_eff - 1;
  return scheme.max_degree() <= inst.params.u * inst.params.rbar_eff - inst.params.u &&
         scheme.max_degree() <= limit && limit <= inst.params.r() - 1;
}

}  // namespace rackrs
