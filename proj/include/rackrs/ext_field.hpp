#ifndef RACKRS_EXT_FIELD_HPP
#define RACKRS_EXT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rackrs/number_theory.hpp"

namespace rackrs {

/// Element of the base field B = GF(q), always reduced into [0, q-1].
using Residue = std::uint32_t;

/// Polynomial over GF(q), coefficient of x^0 first.
using BasePoly = std::vector<Residue>;

/// The prime field GF(q). Primality is checked on construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  Residue reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(q_);
    return static_cast<Residue>(r < 0 ? r + q_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept { return (a + b) % q_; }
  Residue sub(Residue a, Residue b) const noexcept { return (a + q_ - b) % q_; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  Residue inv(Residue a) const;

  /// Smallest generator of GF(q)*.
  Residue primitive_root() const;
  std::uint64_t order(Residue a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t q_;
};

/// Monic irreducible polynomial of degree l over GF(q). Candidates x^l + c(x) are
/// enumerated with c read as a base-q integer (low coefficient first), starting at 0;
/// the first one passing the Rabin test is returned.
BasePoly find_irreducible(std::uint32_t q, std::uint32_t l);

/// Rabin test: x^(q^l) = x mod f and gcd(x^(q^d) - x, f) = 1 for every proper divisor d of l.
bool is_irreducible(const PrimeField& base, const BasePoly& f);

class ExtField;
using FieldPtr = std::shared_ptr<const ExtField>;

/// Element of F = GF(q^l) as a length-l coefficient vector over B, low degree first.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Residue> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  Residue operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  /// Multiplication by an element of B.
  FieldElement scaled(Residue c) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Lexicographic order on coefficient vectors, for sorting and set comparison.
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.coeffs_ < b.coeffs_; }

 private:
  void require_same_field(const FieldElement& other) const;

  FieldPtr field_;
  std::vector<Residue> coeffs_;
};

FieldElement pow(const FieldElement& a, const BigInt& e);
FieldElement pow(const FieldElement& a, std::uint64_t e);
FieldElement inverse(const FieldElement& a);

/// Least e >= 1 with a^e = 1, found by stripping primes of q^l - 1 using the stored factorization.
BigInt element_order(const FieldElement& a);

/// tr_{F/B}(a) = a + a^q + ... + a^(q^(l-1)), via the B-linear trace table.
Residue trace(const FieldElement& a);

/// The same trace computed straight from the Frobenius sum. Throws std::logic_error if
/// the sum lands outside B.
Residue trace_by_frobenius(const FieldElement& a);

/// GF(q^l) with an irreducible modulus and a certified primitive element. Immutable once
/// created; share through FieldPtr.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  /// Deterministic construction: first irreducible modulus in enumeration order, then the
  /// first primitive element in index order.
  static FieldPtr create(std::uint32_t q, std::uint32_t l);
  static FieldPtr with_modulus(std::uint32_t q, BasePoly modulus);

  const PrimeField& base() const noexcept { return base_; }
  std::uint32_t q() const noexcept { return base_.q(); }
  std::uint32_t degree() const noexcept { return l_; }
  const BasePoly& modulus() const noexcept { return modulus_; }
  const FieldElement& zeta() const noexcept { return zeta_; }
  /// q^l - 1.
  const BigInt& group_order() const noexcept { return group_order_; }
  /// Prime factors of q^l - 1 with multiplicity, ascending.
  const std::vector<BigInt>& order_factorization() const noexcept { return order_factors_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(Residue c) const;
  /// x^i for i < l.
  FieldElement monomial(std::uint32_t i) const;
  FieldElement from_coeffs(std::vector<Residue> coeffs) const;
  /// Element whose coefficient vector is the base-q expansion of index, low digit first.
  FieldElement from_index(std::uint64_t index) const;

  /// True iff a^((q^l-1)/p) != 1 for every prime p | q^l - 1.
  bool is_primitive(const FieldElement& a) const;

  /// a^q.
  FieldElement frobenius(const FieldElement& a) const;

  /// tr(x^i) for i in [0, l).
  const std::vector<Residue>& trace_table() const noexcept { return trace_table_; }

  /// Product of coefficient vectors reduced by the modulus.
  std::vector<Residue> multiply(std::span<const Residue> a, std::span<const Residue> b) const;

  bool same_as(const ExtField& other) const noexcept;

 private:
  ExtField(PrimeField base, BasePoly modulus);
  static FieldPtr finish(std::shared_ptr<ExtField> field);

  PrimeField base_;
  std::uint32_t l_;
  BasePoly modulus_;
  BigInt group_order_;
  std::vector<BigInt> order_factors_;
  FieldElement zeta_;
  std::vector<Residue> trace_table_;
};

/// Finds the primitive element used by ExtField::create: smallest index >= 1 whose element
/// passes is_primitive.
FieldElement find_primitive_element(const FieldPtr& field);

}  // namespace rackrs

#endif
