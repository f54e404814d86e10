#include "doctest.h"

#include <random>
#include <set>

#include "rackrs/base_linalg.hpp"
#include "rackrs/rs_code.hpp"

using namespace rackrs;

namespace {

std::vector<Residue> key(const FieldElement& a) {
  const auto c = a.coeffs();
  return {c.begin(), c.end()};
}

// Size of the B-span, found by closing {0} under adding every multiple of every generator.
std::size_t span_size(const std::vector<FieldElement>& gens, const FieldPtr& F) {
  std::set<std::vector<Residue>> span{key(F->zero())};
  std::vector<FieldElement> members{F->zero()};
  for (const auto& g : gens) {
    std::vector<FieldElement> next = members;
    for (const auto& s : members)
      for (Residue c = 1; c < F->q(); ++c) {
        const auto x = s + g.scaled(c);
        if (span.insert(key(x)).second) next.push_back(x);
      }
    members = std::move(next);
  }
  return span.size();
}

std::size_t log_q(std::size_t size, std::uint32_t q) {
  std::size_t e = 0;
  while (size > 1) {
    size /= q;
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("small matrix inverse") {
  const PrimeField B(3);
  BaseMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 1;
  m(1, 1) = 1;
  const auto inv = invert(m, B);
  REQUIRE(inv);
  BaseMatrix id(2, 2);
  id(0, 0) = id(1, 1) = 1;
  CHECK(multiply(m, *inv, B) == id);
  m(1, 1) = 2;
  CHECK_FALSE(invert(m, B));
}

TEST_CASE("rank of structured sets") {
  const auto F = ExtField::create(3, 8);
  std::vector<FieldElement> none;
  CHECK(rank_of(none) == 0);
  std::vector<FieldElement> zeros(3, F->zero());
  CHECK(rank_of(zeros) == 0);
  std::vector<FieldElement> powers, squares;
  for (std::uint64_t a = 0; a < 8; ++a) {
    powers.push_back(pow(F->zeta(), a));
    squares.push_back(pow(F->zeta(), 2 * a));
  }
  CHECK(rank_of(powers) == 8);
  CHECK(rank_of(squares) == 8);
  powers.push_back(powers[0] + powers[3].scaled(2));
  CHECK(rank_of(powers) == 8);
  std::vector<FieldElement> repeated{F->one(), F->constant(2), F->zeta(), F->zeta().scaled(2) + F->one()};
  const auto prof = rank_over_base(repeated);
  CHECK(prof.rank == 2);
  CHECK(prof.independent == std::vector<std::size_t>{0, 2});
}

TEST_CASE("rank agrees with brute-force span enumeration for q^l <= 81") {
  std::mt19937_64 rng(2024);
  const std::pair<std::uint32_t, std::uint32_t> fields[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                            {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}};
  for (auto [q, l] : fields) {
    const auto F = ExtField::create(q, l);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t count = 1 + rng() % (l + 2);
      std::vector<FieldElement> xs;
      for (std::size_t i = 0; i < count; ++i) {
        // mix random elements with multiples of earlier ones so dependencies occur
        if (!xs.empty() && rng() % 3 == 0)
          xs.push_back(xs[rng() % xs.size()].scaled(static_cast<Residue>(rng() % q)) + xs[rng() % xs.size()]);
        else
          xs.push_back(random_element(F, rng));
      }
      const auto prof = rank_over_base(xs);
      CAPTURE(q);
      CAPTURE(l);
      CHECK(prof.rank == log_q(span_size(xs, F), q));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        FieldElement sum = F->zero();
        for (std::size_t j = 0; j < prof.rank; ++j) sum += xs[prof.independent[j]].scaled(prof.coords[i][j]);
        CHECK(sum == xs[i]);
      }
    }
  }
}

TEST_CASE("dual basis of {1, x} in GF(3^2) modulo x^2 + 1") {
  const auto F = ExtField::with_modulus(3, {1, 0, 1});
  const std::vector<FieldElement> basis{F->one(), F->monomial(1)};
  const auto pair = dual_basis(basis);
  CHECK(pair.mu_basis[0] == F->constant(2));
  CHECK(pair.mu_basis[1] == F->monomial(1));
  CHECK(is_dual_pair(pair));
  const std::vector<Residue> traces{2, 0};
  CHECK(expand_in_dual_basis(traces, pair) == F->one());
}

TEST_CASE("dual basis property on random bases") {
  std::mt19937_64 rng(77);
  for (auto F : {ExtField::create(3, 8), ExtField::create(2, 6), ExtField::create(3, 64)}) {
    std::vector<FieldElement> basis;
    while (basis.size() < F->degree()) {
      basis.push_back(random_element(F, rng));
      if (rank_of(basis) < basis.size()) basis.pop_back();
    }
    const auto pair = dual_basis(basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) CHECK(trace(pair.zeta_basis[i] * pair.mu_basis[j]) == (i == j ? 1u : 0u));
    for (int t = 0; t < 10; ++t) {
      const auto a = random_element(F, rng);
      std::vector<Residue> traces;
      for (const auto& b : basis) traces.push_back(trace(a * b));
      CHECK(expand_in_dual_basis(traces, pair) == a);
    }
    std::vector<Residue> zeros(F->degree(), 0);
    CHECK(expand_in_dual_basis(zeros, pair).is_zero());
  }
}

TEST_CASE("dual basis rejects non-bases") {
  const auto F = ExtField::create(3, 4);
  std::vector<FieldElement> short_basis{F->one(), F->zeta()};
  CHECK_THROWS_AS(dual_basis(short_basis), std::invalid_argument);
  std::vector<FieldElement> dependent{F->one(), F->zeta(), F->zeta() + F->one(), F->constant(2)};
  CHECK_THROWS_AS(dual_basis(dependent), std::invalid_argument);
}
