#include "rackrs/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

namespace rackrs {

namespace {

constexpr std::uint64_t kTrialBound = 100000;

int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor of
// the odd composite n.
BigInt pollard_brent(const BigInt& n) {
  for (BigInt c = 1;; ++c) {
    BigInt y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::size_t m = 128;
    std::size_t r = 1;
    auto step = [&](const BigInt& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = (q * (x > y ? x - y : y - x)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < kTrialBound) return is_prime_u64(n.convert_to<std::uint64_t>());
  boost::random::mt19937 gen(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> factor_small(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

BigInt cyclotomic_value(std::uint64_t d, const BigInt& x) {
  if (d == 0) throw std::invalid_argument("cyclotomic_value: d must be positive");
  BigInt num = 1, den = 1;
  for (std::uint64_t e : divisors(d)) {
    int mu = moebius(d / e);
    if (mu == 1) num *= ipow(x, e) - 1;
    if (mu == -1) den *= ipow(x, e) - 1;
  }
  if (num % den != 0) throw std::logic_error("cyclotomic_value: inexact division");
  return num / den;
}

std::vector<BigInt> factor(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factor: n must be positive");
  std::vector<BigInt> out;
  BigInt rest = n;
  for (std::uint64_t p = 2; p < kTrialBound && BigInt(p) * p <= rest; ++p) {
    while (rest % p == 0) {
      out.emplace_back(p);
      rest /= p;
    }
  }
  factor_into(rest, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> factor_field_order(std::uint64_t q, std::uint64_t l) {
  if (q < 2 || l < 1) throw std::invalid_argument("factor_field_order: need q >= 2, l >= 1");
  std::vector<BigInt> out;
  for (std::uint64_t d : divisors(l)) {
    auto piece = factor(cyclotomic_value(d, BigInt(q)));
    out.insert(out.end(), piece.begin(), piece.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> distinct(std::vector<BigInt> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

}  // namespace rackrs
