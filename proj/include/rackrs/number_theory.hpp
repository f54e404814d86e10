#ifndef RACKRS_NUMBER_THEORY_HPP
#define RACKRS_NUMBER_THEORY_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rackrs {

/// Unbounded integer used for exponents and group orders (q^l - 1 overflows 64 bits).
using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Miller-Rabin with a fixed base set; deterministic for n < 3.3e24.
bool is_probable_prime(const BigInt& n);

/// Trial division primality for small integers.
bool is_prime_u64(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Prime factors of n with multiplicity, ascending.
std::vector<std::uint64_t> factor_small(std::uint64_t n);

/// Value of the d-th cyclotomic polynomial at x, via the Moebius product of (x^e - 1).
BigInt cyclotomic_value(std::uint64_t d, const BigInt& x);

/// Prime factors of n with multiplicity, ascending. Trial division up to a small
/// bound, then Pollard-Brent on whatever composite remains.
std::vector<BigInt> factor(const BigInt& n);

/// Prime factorization of q^l - 1 with multiplicity, ascending. Splits q^l - 1 into
/// the cyclotomic values Phi_d(q), d | l, before factoring each piece.
std::vector<BigInt> factor_field_order(std::uint64_t q, std::uint64_t l);

std::vector<BigInt> distinct(std::vector<BigInt> primes);

}  // namespace rackrs

#endif
