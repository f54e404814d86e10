#ifndef RACKRS_RS_CODE_HPP
#define RACKRS_RS_CODE_HPP

#include <cstddef>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "rackrs/ext_field.hpp"

namespace rackrs {

/// Polynomial over F, coefficient of x^0 first.
using Polynomial = std::vector<FieldElement>;
/// n symbols, stored rack-major: (1,1)..(1,u),(2,1)..(nbar,u).
using Codeword = std::vector<FieldElement>;

/// Node (e, m): the m-th node of rack e, both 1-based.
struct NodeId {
  std::size_t rack = 1;
  std::size_t slot = 1;
  bool operator==(const NodeId&) const = default;
};

/// RS(A, k) over F with its rack layout.
class CodeSpec {
 public:
  /// Validates n = nbar*u, pairwise-distinct points, u <= k <= n.
  CodeSpec(FieldPtr field, std::vector<FieldElement> points, std::size_t k, std::size_t nbar, std::size_t u);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return points_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t r() const noexcept { return n() - k_; }
  std::size_t nbar() const noexcept { return nbar_; }
  std::size_t u() const noexcept { return u_; }
  std::size_t kbar() const noexcept { return k_ / u_; }
  std::size_t v() const noexcept { return k_ % u_; }
  const std::vector<FieldElement>& points() const noexcept { return points_; }

  /// 0-based position of node (e, m) in the codeword: (e-1)u + (m-1).
  std::size_t flat_index(NodeId node) const;
  NodeId node_at(std::size_t flat) const;
  const FieldElement& point(NodeId node) const { return points_[flat_index(node)]; }

 private:
  FieldPtr field_;
  std::vector<FieldElement> points_;
  std::size_t k_, nbar_, u_;
};

/// Horner evaluation.
FieldElement evaluate(const Polynomial& f, const FieldElement& x);

/// Degree of f, or -1 for the zero polynomial.
long degree(const Polynomial& f);

Codeword encode(const Polynomial& f, const CodeSpec& code);

/// lambda_i = prod_{j != i} (alpha_i - alpha_j)^{-1}.
std::vector<FieldElement> dual_weights(const CodeSpec& code);

/// (lambda_1 g(alpha_1), ..., lambda_n g(alpha_n)); requires deg g <= n - k - 1.
Codeword dual_codeword(const Polynomial& g, const CodeSpec& code, std::span<const FieldElement> lambda);
Codeword dual_codeword(const Polynomial& g, const CodeSpec& code);

FieldElement inner_product(std::span<const FieldElement> a, std::span<const FieldElement> b);

/// Lagrange interpolation through k (flat position, symbol) pairs; returns the k
/// coefficients of the message polynomial.
Polynomial erasure_decode(std::span<const std::pair<std::size_t, FieldElement>> partial, const CodeSpec& code);

FieldElement random_element(const FieldPtr& field, std::mt19937_64& rng);
/// `count` uniformly random coefficients.
Polynomial random_polynomial(const FieldPtr& field, std::size_t count, std::mt19937_64& rng);

}  // namespace rackrs

#endif
