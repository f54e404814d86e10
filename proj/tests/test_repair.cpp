#include "doctest.h"

#include <random>
#include <set>

#include "rackrs/repair.hpp"

using namespace rackrs;

namespace {

std::vector<Residue> key(const FieldElement& a) {
  const auto c = a.coeffs();
  return {c.begin(), c.end()};
}

std::size_t span_dimension(const std::vector<FieldElement>& gens, const FieldPtr& F) {
  std::set<std::vector<Residue>> span{key(F->zero())};
  std::vector<FieldElement> members{F->zero()};
  for (const auto& g : gens) {
    if (span.count(key(g))) continue;
    std::vector<FieldElement> next = members;
    for (const auto& s : members)
      for (Residue c = 1; c < F->q(); ++c) {
        const auto x = s + g.scaled(c);
        if (span.insert(key(x)).second) next.push_back(x);
      }
    members = std::move(next);
  }
  std::size_t dim = 0;
  for (std::size_t size = span.size(); size > 1; size /= F->q()) ++dim;
  return dim;
}

Codeword random_codeword(const Instance& inst, std::mt19937_64& rng) {
  return encode(random_polynomial(inst.field, inst.params.k, rng), inst.code);
}

}  // namespace

TEST_CASE("exact decimal rendering") {
  CHECK(to_decimal(Rational(3, 2)) == "1.500000");
  CHECK(to_decimal(Rational(17, 12)) == "1.416667");
  CHECK(to_decimal(Rational(4)) == "4.000000");
}

TEST_CASE("bound values") {
  const auto c1 = SchemeParams::make_c1(3, 2, 3, 2);
  const auto b1 = bounds(c1, {1, 1});
  CHECK(b1.b_min == Rational(8));
  CHECK(b1.upper == Rational(16));
  CHECK(b1.case_tag == "c1");

  const auto c2 = SchemeParams::make_c2(3, 2, 6, {2, 2});
  CHECK(bounds(c2, {1, 1}).b_min == Rational(80));
  CHECK(bounds(c2, {1, 1}).case_tag == "i-w0");
  CHECK(bounds(c2, {2, 2}).upper == Rational(384));
  CHECK(bounds(c2, {3, 1}).case_tag == "ii");
  CHECK(bounds(c2, {4, 1}).upper == Rational(464));
  CHECK(bounds(c2, {5, 1}).case_tag == "iii");
  CHECK(bounds(c2, {6, 2}).upper == Rational(304));

  const auto rem = SchemeParams::make_c2(3, 2, 5, {2, 2});
  const auto br = bounds(rem, {5, 1});
  CHECK(br.b_min == Rational(32));
  CHECK_FALSE(br.upper);
  CHECK(br.informational_upper);
  CHECK(br.case_tag.rfind("info-", 0) == 0);

  const auto cor = SchemeParams::make_prime_rbar(3, 2, 6, 5);
  const auto bc = bounds(cor, {2, 1});
  CHECK(bc.b_min == Rational(64));
  REQUIRE(bc.b_min_eff);
  CHECK(*bc.b_min_eff / bc.b_min == Rational(5, 4));
}

TEST_CASE("per-rack bandwidth matches brute-force span dimension (C1, l = 8)") {
  const auto inst = build_instance(SchemeParams::make_c1(3, 2, 3, 2));
  for (std::size_t i = 1; i <= 3; ++i) {
    const auto scheme = repair_family(inst, {i, 1});
    CHECK_THROWS_AS(per_rack_bandwidth(inst, scheme, i), std::invalid_argument);
    for (std::size_t e = 1; e <= 3; ++e) {
      if (e == i) continue;
      std::vector<FieldElement> vals;
      for (std::size_t j = 1; j <= 2; ++j)
        for (const auto& v : evaluate_family(inst, scheme, inst.code.point({e, j}))) vals.push_back(v);
      const auto b_e = per_rack_bandwidth(inst, scheme, e);
      CHECK(b_e == span_dimension(vals, inst.field));
      CHECK(b_e >= 4);
      CHECK(b_e <= 6);
    }
  }
}

TEST_CASE("per-rack bandwidth on C1: distinct-exponent count below i, analytic caps everywhere") {
  for (std::size_t nbar : {3u, 4u, 5u}) {
    const auto inst = build_instance(SchemeParams::make_c1(3, 2, nbar, 2));
    const std::uint64_t l = inst.params.l, rbar = 2;
    for (std::size_t i = 1; i <= nbar; ++i) {
      const auto scheme = repair_family(inst, {i, 1});
      for (std::size_t e = 1; e <= nbar; ++e) {
        if (e == i) continue;
        const auto b_e = per_rack_bandwidth(inst, scheme, e);
        const std::uint64_t we = inst.plan.rack_exponent[e - 1];
        std::set<std::uint64_t> exps;
        for (const auto& term : scheme.terms) exps.insert(term.t + term.s * we);
        std::uint64_t pow_r = 1;
        if (e < i) {
          CHECK(b_e == exps.size());
          for (std::size_t j = 0; j < i - e + 1; ++j) pow_r *= rbar;
        } else {
          CHECK(b_e <= exps.size());
          for (std::size_t j = 0; j < nbar - e + 2; ++j) pow_r *= rbar;
        }
        CHECK(b_e <= l / rbar + (rbar - 1) * l / pow_r);
      }
    }
  }
}

TEST_CASE("repair recovers every node exactly and the audit passes") {
  std::mt19937_64 rng(1);
  const auto inst = build_instance(SchemeParams::make_c1(3, 2, 3, 2));
  for (std::size_t rack = 1; rack <= 3; ++rack)
    for (std::size_t slot = 1; slot <= 2; ++slot) {
      const RepairPlan plan(inst, repair_family(inst, {rack, slot}));
      const auto skeleton = plan.bandwidth();
      for (int trial = 0; trial < 5; ++trial) {
        const auto c = random_codeword(inst, rng);
        const auto out = execute_repair(plan, c);
        CHECK(out.transcript.recovered == c[inst.code.flat_index({rack, slot})]);
        CHECK(out.report.repair_ok);
        CHECK(out.report.accounting_ok);
        CHECK(out.report.payload_count == out.report.b);
        CHECK(out.report.b == skeleton.b);
        CHECK(out.transcript.host_symbols.size() == 1);
        CHECK(reconstruct(plan, out.transcript) == out.transcript.recovered);
        CHECK(audit(out.transcript, out.report).ok);
      }
    }
}

TEST_CASE("all-zero codeword sends zero payloads and recovers zero") {
  const auto inst = build_instance(SchemeParams::make_c1(3, 2, 3, 2));
  const RepairPlan plan(inst, repair_family(inst, {2, 1}));
  const Codeword zero(inst.params.n, inst.field->zero());
  const auto out = execute_repair(plan, zero);
  for (const auto& msg : out.transcript.messages)
    for (auto p : msg.payload) CHECK(p == 0);
  CHECK(out.transcript.recovered.is_zero());
}

TEST_CASE("repair identities: every repair polynomial yields a dual codeword") {
  std::mt19937_64 rng(8);
  const auto inst = build_instance(SchemeParams::make_c2(3, 2, 5, {2, 2}));
  const auto scheme = repair_family(inst, {5, 1});
  const RepairPlan plan(inst, scheme);
  const auto c = random_codeword(inst, rng);
  for (std::size_t idx = 0; idx < scheme.terms.size(); idx += 7) {
    const auto g = term_polynomial(inst, scheme.u, scheme.terms[idx]);
    CHECK(inner_product(c, dual_codeword(g, inst.code, plan.lambda())).is_zero());
  }
}

TEST_CASE("audit catches tampering") {
  std::mt19937_64 rng(4);
  const auto inst = build_instance(SchemeParams::make_c1(3, 2, 3, 2));
  const RepairPlan plan(inst, repair_family(inst, {1, 2}));
  const auto out = execute_repair(plan, random_codeword(inst, rng));
  REQUIRE(audit(out.transcript, out.report).ok);

  auto dropped = out.transcript;
  dropped.messages[0].payload.pop_back();
  const auto a1 = audit(dropped, out.report);
  CHECK_FALSE(a1.ok);
  CHECK_FALSE(a1.findings.empty());

  auto perturbed = out.transcript;
  perturbed.recovered = perturbed.recovered + inst.field->one();
  CHECK_FALSE(audit(perturbed, out.report).ok);

  auto missing = out.transcript;
  missing.messages.pop_back();
  CHECK_FALSE(audit(missing, out.report).ok);
}

TEST_CASE("a rank-deficient family is refused before any repair") {
  const auto inst = build_instance(SchemeParams::make_c1(3, 2, 3, 2));
  auto scheme = repair_family(inst, {3, 1});
  scheme.terms.pop_back();
  CHECK_THROWS_AS(RepairPlan(inst, scheme), RepairError);
}

TEST_CASE("bandwidth is independent of the data") {
  std::mt19937_64 rng(12);
  for (const auto& params : {SchemeParams::make_c2(3, 2, 5, {2, 2}), SchemeParams::make_homogeneous(3, 3, 2)}) {
    const auto inst = build_instance(params);
    for (std::size_t rack = 1; rack <= params.nbar; ++rack) {
      const RepairPlan plan(inst, repair_family(inst, {rack, 1}));
      std::set<std::size_t> counts;
      for (int trial = 0; trial < 10; ++trial) {
        const auto c = random_codeword(inst, rng);
        const auto out = execute_repair(plan, c);
        CHECK(out.report.repair_ok);
        counts.insert(out.report.payload_count);
        std::vector<std::size_t> per_msg;
        for (const auto& msg : out.transcript.messages) per_msg.push_back(msg.payload.size());
        for (std::size_t h = 0; h < per_msg.size(); ++h) CHECK(per_msg[h] == out.report.per_rack[h].b_e);
      }
      CHECK(counts.size() == 1);
      CHECK(*counts.begin() >= boost::rational_cast<double>(bounds(params, {rack, 1}).b_min));
    }
  }
}
