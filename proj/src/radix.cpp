#include "rackrs/radix.hpp"

#include <limits>
#include <stdexcept>

namespace rackrs {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("radix: capacity exceeds 64 bits");
  return a * b;
}

std::vector<std::uint64_t> filter_zero(const RadixSystem& sys, const std::vector<std::size_t>& zero_pos) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < sys.capacity(); ++t) {
    bool keep = true;
    for (std::size_t pos : zero_pos)
      if ((t / sys.weight(pos)) % sys.radix(pos) != 0) {
        keep = false;
        break;
      }
    if (keep) out.push_back(t);
  }
  return out;
}

}  // namespace

RadixSystem::RadixSystem(std::vector<std::uint64_t> radices) : radices_(std::move(radices)) {
  weights_.reserve(radices_.size());
  for (std::uint64_t r : radices_) {
    if (r < 2) throw std::invalid_argument("RadixSystem: every radix must be >= 2");
    weights_.push_back(capacity_);
    capacity_ = checked_mul(capacity_, r);
  }
}

RadixSystem RadixSystem::uniform(std::uint64_t radix, std::size_t positions) {
  return RadixSystem(std::vector<std::uint64_t>(positions, radix));
}

RadixSystem RadixSystem::multi_base(const std::vector<std::uint64_t>& primes, std::size_t nbar) {
  if (primes.empty()) throw std::invalid_argument("RadixSystem::multi_base: empty prime list");
  std::vector<std::uint64_t> radices;
  for (std::size_t i = 0; i < nbar; ++i) radices.push_back(primes[i % primes.size()]);
  return RadixSystem(std::move(radices));
}

DigitVector encode(std::uint64_t a, const RadixSystem& sys) {
  if (a >= sys.capacity())
    throw std::out_of_range("encode: " + std::to_string(a) + " outside [0, " + std::to_string(sys.capacity() - 1) + "]");
  DigitVector d;
  d.digits.reserve(sys.positions());
  for (std::uint64_t r : sys.radices()) {
    d.digits.push_back(a % r);
    a /= r;
  }
  return d;
}

std::uint64_t decode(const DigitVector& d, const RadixSystem& sys) {
  if (d.digits.size() != sys.positions()) throw std::invalid_argument("decode: digit count mismatch");
  std::uint64_t value = 0;
  for (std::size_t pos = 1; pos <= sys.positions(); ++pos) {
    if (d.at(pos) >= sys.radix(pos))
      throw std::out_of_range("decode: digit at position " + std::to_string(pos) + " exceeds its radix");
    value += d.at(pos) * sys.weight(pos);
  }
  return value;
}

std::string to_string(const DigitVector& d) {
  std::string out;
  for (std::size_t i = 0; i < d.digits.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(d.digits[i]);
  }
  return out;
}

std::uint64_t weight_dwy(std::uint64_t w, std::size_t y, const std::vector<std::uint64_t>& primes) {
  if (y < 1 || y > primes.size()) throw std::out_of_range("weight_dwy: y must lie in [1, m]");
  std::uint64_t rbar = 1;
  for (std::uint64_t p : primes) {
    if (p < 2) throw std::invalid_argument("weight_dwy: primes must be >= 2");
    rbar = checked_mul(rbar, p);
  }
  std::uint64_t d = 1;
  for (std::uint64_t i = 0; i < w; ++i) d = checked_mul(d, rbar);
  for (std::size_t j = 0; j + 1 < y; ++j) d = checked_mul(d, primes[j]);
  return d;
}

std::vector<std::uint64_t> index_set_c1(std::size_t i, std::size_t nbar, std::uint64_t rbar) {
  if (i < 1 || i > nbar) throw std::out_of_range("index_set_c1: rack index outside [1, nbar]");
  return filter_zero(RadixSystem::uniform(rbar, nbar), {i});
}

std::vector<std::size_t> zero_positions_c2(std::size_t w, std::size_t y, std::size_t m, std::size_t positions) {
  if (m < 1 || y < 1 || y > m) throw std::out_of_range("zero_positions_c2: y must lie in [1, m]");
  const std::size_t start = w * m + y;
  if (start > positions) throw std::out_of_range("zero_positions_c2: rack beyond the digit system");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t x = start + k;
    out.push_back(x <= positions ? x : (x - 1) % m + 1);
  }
  return out;
}

std::vector<std::uint64_t> index_set_c2(std::size_t w, std::size_t y, const std::vector<std::uint64_t>& primes,
                                        std::size_t nbar) {
  const std::size_t m = primes.size();
  if (m < 1 || nbar / m < 2) throw std::invalid_argument("index_set_c2: need floor(nbar/m) >= 2");
  const RadixSystem sys = RadixSystem::multi_base(primes, nbar);
  return filter_zero(sys, zero_positions_c2(w, y, m, sys.positions()));
}

}  // namespace rackrs
