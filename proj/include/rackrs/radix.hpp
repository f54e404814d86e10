#ifndef RACKRS_RADIX_HPP
#define RACKRS_RADIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rackrs {

/// Mixed-radix digit system (rho_1, ..., rho_N). Positions are 1-based: position i has
/// radix rho_i and weight rho_1 * ... * rho_{i-1}.
class RadixSystem {
 public:
  explicit RadixSystem(std::vector<std::uint64_t> radices);

  /// N copies of a single radix (the plain r-ary expansion).
  static RadixSystem uniform(std::uint64_t radix, std::size_t positions);

  /// Multi-base system over the primes (p_1..p_m): the block (p_1..p_m) repeated
  /// floor(nbar/m) times, followed by (p_1..p_h) with h = nbar mod m.
  static RadixSystem multi_base(const std::vector<std::uint64_t>& primes, std::size_t nbar);

  std::size_t positions() const noexcept { return radices_.size(); }
  std::uint64_t capacity() const noexcept { return capacity_; }
  std::uint64_t radix(std::size_t pos) const { return radices_.at(pos - 1); }
  std::uint64_t weight(std::size_t pos) const { return weights_.at(pos - 1); }
  const std::vector<std::uint64_t>& radices() const noexcept { return radices_; }

 private:
  std::vector<std::uint64_t> radices_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t capacity_ = 1;
};

/// Digits (t_1, ..., t_N), stored position 1 first.
struct DigitVector {
  std::vector<std::uint64_t> digits;

  std::uint64_t at(std::size_t pos) const { return digits.at(pos - 1); }
  bool operator==(const DigitVector&) const = default;
};

DigitVector encode(std::uint64_t a, const RadixSystem& sys);
std::uint64_t decode(const DigitVector& d, const RadixSystem& sys);

/// Comma-separated digits, position 1 first.
std::string to_string(const DigitVector& d);

/// d_{w,y} = rbar^w * p_0 * p_1 * ... * p_{y-1} with p_0 = 1 and rbar = prod p_j.
std::uint64_t weight_dwy(std::uint64_t w, std::size_t y, const std::vector<std::uint64_t>& primes);

/// All t in [0, rbar^nbar - 1] whose i-th rbar-ary digit is 0 (i is 1-based).
std::vector<std::uint64_t> index_set_c1(std::size_t i, std::size_t nbar, std::uint64_t rbar);

/// The m digit positions that T_{w,y} forces to zero: wm+y, ..., wm+y+m-1, where a
/// position x past the last one wraps to ((x-1) mod m) + 1, the first-block position
/// with the same prime. For m | nbar this is the (y+y') mod m rule.
std::vector<std::size_t> zero_positions_c2(std::size_t w, std::size_t y, std::size_t m, std::size_t positions);

/// T_{w,y} over the multi-base system of (primes, nbar).
std::vector<std::uint64_t> index_set_c2(std::size_t w, std::size_t y, const std::vector<std::uint64_t>& primes,
                                        std::size_t nbar);

}  // namespace rackrs

#endif
