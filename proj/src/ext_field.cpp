#include "rackrs/ext_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace rackrs {

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1u << 16)) throw std::invalid_argument("PrimeField: q must be below 2^16");
  if (!is_prime_u64(q)) throw std::invalid_argument("PrimeField: q = " + std::to_string(q) + " is not prime");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % q_;
  Residue base = a % q_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % q_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, q_ - 2);
}

std::uint64_t PrimeField::order(Residue a) const {
  if (a % q_ == 0) throw std::domain_error("PrimeField: order of zero");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t p : factor_small(q_ - 1))
    if (pow(a, ord / p) == 1) ord /= p;
  return ord;
}

Residue PrimeField::primitive_root() const {
  for (Residue g = 1; g < q_; ++g)
    if (order(g) == q_ - 1) return g;
  throw std::logic_error("PrimeField: no primitive root");
}

// ------------------------------------------------------- polynomials over B

namespace {

void trim(BasePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BasePoly poly_mod(BasePoly a, const BasePoly& f, const PrimeField& B) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const Residue lead_inv = B.inv(f.back());
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const Residue c = B.mul(a.back(), lead_inv);
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = B.sub(a[shift + i], B.mul(c, f[i]));
    trim(a);
  }
  return a;
}

BasePoly poly_mulmod(const BasePoly& a, const BasePoly& b, const BasePoly& f, const PrimeField& B) {
  if (a.empty() || b.empty()) return {};
  BasePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = B.add(prod[i + j], B.mul(a[i], b[j]));
  return poly_mod(std::move(prod), f, B);
}

BasePoly poly_pow_q(const BasePoly& a, const BasePoly& f, const PrimeField& B) {
  BasePoly result{1};
  BasePoly base = a;
  for (std::uint64_t e = B.q(); e > 0; e >>= 1) {
    if (e & 1) result = poly_mulmod(result, base, f, B);
    base = poly_mulmod(base, base, f, B);
  }
  return result;
}

BasePoly poly_gcd(BasePoly a, BasePoly b, const PrimeField& B) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    BasePoly r = poly_mod(a, b, B);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(const PrimeField& B, const BasePoly& f_in) {
  BasePoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint64_t l = f.size() - 1;
  if (l == 1) return true;
  const std::vector<std::uint64_t> divs = divisors(l);
  // frob[d] = x^(q^d) mod f
  BasePoly h = poly_mod({0, 1}, f, B);
  for (std::uint64_t d = 1; d <= l; ++d) {
    h = poly_pow_q(h, f, B);
    const bool proper = d < l && std::find(divs.begin(), divs.end(), d) != divs.end();
    BasePoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = B.sub(diff[1], 1);
    trim(diff);
    if (proper) {
      BasePoly g = poly_gcd(f, diff, B);
      if (g.size() != 1) return false;
    } else if (d == l) {
      return diff.empty();
    }
  }
  return false;
}

BasePoly find_irreducible(std::uint32_t q, std::uint32_t l) {
  if (l < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
  const PrimeField B(q);
  for (std::uint64_t c = 0;; ++c) {
    BasePoly f(l + 1, 0);
    f[l] = 1;
    std::uint64_t rest = c;
    for (std::uint32_t i = 0; i < l && rest > 0; ++i) {
      f[i] = static_cast<Residue>(rest % q);
      rest /= q;
    }
    if (rest > 0) throw std::logic_error("find_irreducible: candidates exhausted");
    if (l > 1 && f[0] == 0) continue;  // divisible by x
    if (is_irreducible(B, f)) return f;
  }
}

// ------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr field, std::vector<Residue> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  if (coeffs_.size() != field_->degree())
    throw std::invalid_argument("FieldElement: expected " + std::to_string(field_->degree()) + " coefficients");
  for (Residue c : coeffs_)
    if (c >= field_->q()) throw std::invalid_argument("FieldElement: coefficient out of range");
}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

bool FieldElement::is_one() const noexcept {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Residue c) { return c == 0; });
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!field_ || !other.field_) throw std::invalid_argument("FieldElement: uninitialised element");
  if (field_ != other.field_ && !field_->same_as(*other.field_))
    throw std::invalid_argument("FieldElement: operands belong to different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  const PrimeField& B = field_->base();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = B.add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  const PrimeField& B = field_->base();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = B.sub(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  coeffs_ = field_->multiply(coeffs_, rhs.coeffs_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  return *this *= inverse(rhs);
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (Residue& c : out.coeffs_) c = field_->base().neg(c);
  return out;
}

FieldElement FieldElement::scaled(Residue c) const {
  FieldElement out = *this;
  for (Residue& v : out.coeffs_) v = field_->base().mul(v, c);
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_ && !(a.field_ && b.field_ && a.field_->same_as(*b.field_))) return false;
  return a.coeffs_ == b.coeffs_;
}

FieldElement pow(const FieldElement& a, const BigInt& e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  FieldElement result = a.field()->one();
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result *= a;
  }
  return result;
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  FieldElement result = a.field()->one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("FieldElement: division by zero");
  return pow(a, BigInt(a.field()->group_order() - 1));
}

BigInt element_order(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("element_order: zero has no multiplicative order");
  BigInt ord = a.field()->group_order();
  for (const BigInt& p : a.field()->order_factorization()) {
    if (ord % p == 0 && pow(a, BigInt(ord / p)).is_one()) ord /= p;
  }
  return ord;
}

Residue trace(const FieldElement& a) {
  const auto& table = a.field()->trace_table();
  const PrimeField& B = a.field()->base();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < table.size(); ++i) acc += static_cast<std::uint64_t>(a[i]) * table[i] % B.q();
  return static_cast<Residue>(acc % B.q());
}

Residue trace_by_frobenius(const FieldElement& a) {
  const ExtField& F = *a.field();
  FieldElement sum = a;
  FieldElement conj = a;
  for (std::uint32_t i = 1; i < F.degree(); ++i) {
    conj = F.frobenius(conj);
    sum += conj;
  }
  for (std::uint32_t i = 1; i < F.degree(); ++i)
    if (sum[i] != 0) throw std::logic_error("trace_by_frobenius: trace left the base field");
  return sum[0];
}

// ------------------------------------------------------------------ ExtField

ExtField::ExtField(PrimeField base, BasePoly modulus) : base_(base), modulus_(std::move(modulus)) {
  trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw std::invalid_argument("ExtField: modulus must be monic of degree >= 1");
  l_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  if (!is_irreducible(base_, modulus_)) throw std::invalid_argument("ExtField: modulus is reducible");
  group_order_ = ipow(BigInt(base_.q()), l_) - 1;
}

FieldPtr ExtField::create(std::uint32_t q, std::uint32_t l) {
  return with_modulus(q, find_irreducible(q, l));
}

FieldPtr ExtField::with_modulus(std::uint32_t q, BasePoly modulus) {
  auto field = std::shared_ptr<ExtField>(new ExtField(PrimeField(q), std::move(modulus)));
  return finish(std::move(field));
}

FieldPtr ExtField::finish(std::shared_ptr<ExtField> field) {
  field->order_factors_ = factor_field_order(field->q(), field->l_);
  BigInt check = 1;
  for (const BigInt& p : field->order_factors_) check *= p;
  if (check != field->group_order_) throw std::logic_error("ExtField: factorization does not multiply back");

  // Trace table from the Frobenius definition; trace() is linear in the coefficients.
  field->trace_table_.assign(field->l_, 0);
  for (std::uint32_t i = 0; i < field->l_; ++i) field->trace_table_[i] = trace_by_frobenius(field->monomial(i));

  field->zeta_ = find_primitive_element(field);
  return field;
}

FieldElement ExtField::zero() const { return FieldElement(shared_from_this(), std::vector<Residue>(l_, 0)); }

FieldElement ExtField::one() const { return constant(1); }

FieldElement ExtField::constant(Residue c) const {
  std::vector<Residue> v(l_, 0);
  v[0] = c % q();
  return FieldElement(shared_from_this(), std::move(v));
}

FieldElement ExtField::monomial(std::uint32_t i) const {
  if (i >= l_) throw std::out_of_range("ExtField::monomial: power must be below the degree");
  std::vector<Residue> v(l_, 0);
  v[i] = 1;
  return FieldElement(shared_from_this(), std::move(v));
}

FieldElement ExtField::from_coeffs(std::vector<Residue> coeffs) const {
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement ExtField::from_index(std::uint64_t index) const {
  std::vector<Residue> v(l_, 0);
  for (std::uint32_t i = 0; i < l_ && index > 0; ++i) {
    v[i] = static_cast<Residue>(index % q());
    index /= q();
  }
  if (index > 0) throw std::out_of_range("ExtField::from_index: index exceeds field size");
  return FieldElement(shared_from_this(), std::move(v));
}

bool ExtField::is_primitive(const FieldElement& a) const {
  if (a.is_zero()) return false;
  for (const BigInt& p : distinct(order_factors_))
    if (pow(a, BigInt(group_order_ / p)).is_one()) return false;
  return true;
}

FieldElement ExtField::frobenius(const FieldElement& a) const { return pow(a, std::uint64_t{q()}); }

std::vector<Residue> ExtField::multiply(std::span<const Residue> a, std::span<const Residue> b) const {
  const std::uint64_t q64 = q();
  std::vector<std::uint64_t> acc(2 * l_ - 1, 0);
  for (std::uint32_t i = 0; i < l_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < l_; ++j) acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  // x^l = -(m_0 + ... + m_{l-1} x^{l-1})
  for (std::size_t d = acc.size(); d-- > l_;) {
    const std::uint64_t c = acc[d] % q64;
    if (c == 0) continue;
    const std::size_t shift = d - l_;
    for (std::uint32_t j = 0; j < l_; ++j) acc[shift + j] += c * ((q64 - modulus_[j]) % q64);
  }
  std::vector<Residue> out(l_);
  for (std::uint32_t i = 0; i < l_; ++i) out[i] = static_cast<Residue>(acc[i] % q64);
  return out;
}

bool ExtField::same_as(const ExtField& other) const noexcept {
  return base_ == other.base_ && modulus_ == other.modulus_;
}

FieldElement find_primitive_element(const FieldPtr& field) {
  for (std::uint64_t index = 1;; ++index) {
    FieldElement cand = field->from_index(index);
    if (field->is_primitive(cand)) return cand;
  }
}

}  // namespace rackrs
