#include "doctest.h"

#include <functional>
#include <random>

#include "rackrs/rs_code.hpp"

using namespace rackrs;

namespace {

// All 8 nonzero points of GF(3^2), grouped as 4 racks of 2.
CodeSpec gf9_code(std::size_t k) {
  const auto F = ExtField::with_modulus(3, {1, 0, 1});
  std::vector<FieldElement> pts;
  for (std::uint64_t i = 1; i < 9; ++i) pts.push_back(F->from_index(i));
  return CodeSpec(F, pts, k, 4, 2);
}

CodeSpec gf3_8_code(std::size_t nbar, std::size_t u, std::size_t k) {
  const auto F = ExtField::create(3, 8);
  std::vector<FieldElement> pts;
  for (std::size_t i = 0; i < nbar * u; ++i) pts.push_back(pow(F->zeta(), std::uint64_t{3 * i + 1}));
  return CodeSpec(F, pts, k, nbar, u);
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TEST_CASE("dual weights for two points of GF(3)") {
  const auto F = ExtField::create(3, 1);
  const CodeSpec code(F, {F->constant(1), F->constant(2)}, 1, 2, 1);
  const auto lambda = dual_weights(code);
  CHECK(lambda[0] == F->constant(2));
  CHECK(lambda[1] == F->constant(1));
}

TEST_CASE("node numbering") {
  const auto code = gf3_8_code(3, 2, 2);
  CHECK(code.flat_index({1, 1}) == 0);
  CHECK(code.flat_index({2, 2}) == 3);
  CHECK(code.node_at(5) == NodeId{3, 2});
  CHECK_THROWS(code.flat_index({4, 1}));
  CHECK_THROWS(code.flat_index({1, 3}));
}

TEST_CASE("encoding basics") {
  const auto code = gf3_8_code(3, 2, 4);
  const auto F = code.field();
  const auto c = F->zeta() + F->constant(2);
  for (const auto& s : encode({c}, code)) CHECK(s == c);
  CHECK(encode({F->zero(), F->one()}, code) == code.points());
  CHECK(degree({F->zero(), F->zero()}) == -1);
  CHECK(degree({F->one(), F->zero(), F->zeta()}) == 2);
  CHECK_THROWS_AS(encode(Polynomial(5, F->one()), code), std::invalid_argument);
}

TEST_CASE("code validation") {
  const auto F = ExtField::create(3, 2);
  CHECK_THROWS_AS(CodeSpec(F, {F->one(), F->one()}, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(F, {F->one(), F->zeta()}, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(F, {F->one(), F->zeta()}, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(F, {F->one(), F->zeta()}, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("dual codewords are orthogonal to codewords") {
  std::mt19937_64 rng(99);
  for (const auto& code : {gf3_8_code(3, 2, 2), gf3_8_code(4, 3, 5), gf9_code(4)}) {
    const auto F = code.field();
    const auto lambda = dual_weights(code);
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random_polynomial(F, code.k(), rng);
      const auto g = random_polynomial(F, code.r(), rng);
      const auto c = encode(f, code);
      const auto d = dual_codeword(g, code, lambda);
      CHECK(inner_product(c, d).is_zero());
    }
    CHECK(dual_codeword({F->one()}, code) == lambda);
    for (const auto& s : dual_codeword({F->zero()}, code)) CHECK(s.is_zero());
    CHECK_THROWS_AS(dual_codeword(Polynomial(code.r() + 1, F->one()), code), std::invalid_argument);
  }
}

TEST_CASE("MDS: every k-subset recovers the message") {
  std::mt19937_64 rng(3);
  for (const auto& code : {gf3_8_code(3, 2, 2), gf3_8_code(3, 2, 4), gf9_code(4), gf9_code(2)}) {
    const auto F = code.field();
    const auto f = random_polynomial(F, code.k(), rng);
    const auto c = encode(f, code);
    std::size_t subsets = 0;
    for_each_subset(code.n(), code.k(), [&](const std::vector<std::size_t>& idx) {
      std::vector<std::pair<std::size_t, FieldElement>> partial;
      for (auto i : idx) partial.emplace_back(i, c[i]);
      CHECK(erasure_decode(partial, code) == f);
      ++subsets;
    });
    CHECK(subsets > 0);
  }
}

TEST_CASE("erasure decoding edge cases") {
  const auto code = gf3_8_code(3, 2, 2);
  const auto F = code.field();
  std::vector<std::pair<std::size_t, FieldElement>> zeros{{1, F->zero()}, {4, F->zero()}};
  for (const auto& a : erasure_decode(zeros, code)) CHECK(a.is_zero());
  std::vector<std::pair<std::size_t, FieldElement>> dup{{1, F->one()}, {1, F->one()}};
  CHECK_THROWS_AS(erasure_decode(dup, code), std::invalid_argument);
  std::vector<std::pair<std::size_t, FieldElement>> too_few{{1, F->one()}};
  CHECK_THROWS_AS(erasure_decode(too_few, code), std::invalid_argument);
}
