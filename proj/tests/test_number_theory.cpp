#include "doctest.h"

#include "rackrs/number_theory.hpp"

using namespace rackrs;

namespace {

BigInt product(const std::vector<BigInt>& xs) {
  BigInt p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}

std::vector<BigInt> big(std::initializer_list<unsigned long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("field order factorizations") {
  CHECK(factor_field_order(3, 1) == big({2}));
  CHECK(factor_field_order(3, 8) == big({2, 2, 2, 2, 2, 5, 41}));
  CHECK(factor_field_order(2, 4) == big({3, 5}));
  CHECK(factor_field_order(2, 1).empty());  // 2^1 - 1 = 1
}

TEST_CASE("factorization multiplies back and every factor is prime") {
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {{3, 16}, {3, 32}, {3, 64}, {2, 60}, {5, 12}, {7, 9}};
  for (auto [q, l] : cases) {
    CAPTURE(q);
    CAPTURE(l);
    const auto fs = factor_field_order(q, l);
    CHECK(product(fs) == ipow(BigInt(q), l) - 1);
    for (const auto& p : fs) CHECK(is_probable_prime(p));
    CHECK(std::is_sorted(fs.begin(), fs.end()));
  }
}

TEST_CASE("cyclotomic values") {
  CHECK(cyclotomic_value(1, 3) == 2);
  CHECK(cyclotomic_value(2, 3) == 4);
  CHECK(cyclotomic_value(4, 3) == 10);
  CHECK(cyclotomic_value(8, 3) == 82);
  CHECK(cyclotomic_value(6, 2) == 3);
  CHECK(cyclotomic_value(64, 3) == ipow(BigInt(3), 32) + 1);
  for (std::uint64_t l : {1, 6, 12, 30, 64}) {
    BigInt prod = 1;
    for (auto d : divisors(l)) prod *= cyclotomic_value(d, 3);
    CHECK(prod == ipow(BigInt(3), l) - 1);
  }
}

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 3000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) trial = false;
    CHECK(is_prime_u64(n) == trial);
    CHECK(is_probable_prime(BigInt(n)) == trial);
  }
  CHECK(is_probable_prime(BigInt("1000000000000000003")));
  CHECK_FALSE(is_probable_prime(BigInt(1000003) * 1000033));
}

TEST_CASE("Pollard-Brent splits semiprimes beyond trial range") {
  const BigInt a("1000003"), b("1000033"), c("2147483647");
  CHECK(factor(a * b) == std::vector<BigInt>{a, b});
  CHECK(factor(b * c * c) == std::vector<BigInt>{b, c, c});
  CHECK(factor(BigInt(1)).empty());
  CHECK_THROWS_AS(factor(BigInt(0)), std::invalid_argument);
}

TEST_CASE("divisors and small factorization") {
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(factor_small(4) == std::vector<std::uint64_t>{2, 2});
  CHECK(factor_small(6) == std::vector<std::uint64_t>{2, 3});
  CHECK(factor_small(97) == std::vector<std::uint64_t>{97});
  CHECK(distinct(big({2, 2, 5, 41, 2})) == big({2, 5, 41}));
}
