#include "rackrs/rs_code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rackrs {

CodeSpec::CodeSpec(FieldPtr field, std::vector<FieldElement> points, std::size_t k, std::size_t nbar, std::size_t u)
    : field_(std::move(field)), points_(std::move(points)), k_(k), nbar_(nbar), u_(u) {
  if (u_ < 1 || nbar_ < 1) throw std::invalid_argument("CodeSpec: nbar and u must be positive");
  if (points_.size() != nbar_ * u_) throw std::invalid_argument("CodeSpec: n must equal nbar * u");
  if (k_ < u_ || k_ > points_.size()) throw std::invalid_argument("CodeSpec: need u <= k <= n");
  std::set<FieldElement> seen;
  for (const FieldElement& p : points_) {
    if (!(p.field() == field_ || p.field()->same_as(*field_)))
      throw std::invalid_argument("CodeSpec: evaluation point from another field");
    if (!seen.insert(p).second) throw std::invalid_argument("CodeSpec: evaluation points are not distinct");
  }
}

std::size_t CodeSpec::flat_index(NodeId node) const {
  if (node.rack < 1 || node.rack > nbar_ || node.slot < 1 || node.slot > u_)
    throw std::out_of_range("CodeSpec: node (" + std::to_string(node.rack) + "," + std::to_string(node.slot) +
                            ") outside the rack layout");
  return (node.rack - 1) * u_ + (node.slot - 1);
}

NodeId CodeSpec::node_at(std::size_t flat) const {
  if (flat >= n()) throw std::out_of_range("CodeSpec: flat index out of range");
  return NodeId{flat / u_ + 1, flat % u_ + 1};
}

FieldElement evaluate(const Polynomial& f, const FieldElement& x) {
  FieldElement acc = x.field()->zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long degree(const Polynomial& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (!f[i].is_zero()) return static_cast<long>(i);
  return -1;
}

Codeword encode(const Polynomial& f, const CodeSpec& code) {
  if (degree(f) > static_cast<long>(code.k()) - 1)
    throw std::invalid_argument("encode: message polynomial degree exceeds k - 1");
  Codeword out;
  out.reserve(code.n());
  for (const FieldElement& a : code.points()) out.push_back(evaluate(f, a));
  return out;
}

std::vector<FieldElement> dual_weights(const CodeSpec& code) {
  const auto& pts = code.points();
  std::vector<FieldElement> lambda;
  lambda.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    FieldElement prod = code.field()->one();
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) prod *= pts[i] - pts[j];
    lambda.push_back(inverse(prod));
  }
  return lambda;
}

Codeword dual_codeword(const Polynomial& g, const CodeSpec& code, std::span<const FieldElement> lambda) {
  if (degree(g) > static_cast<long>(code.r()) - 1)
    throw std::invalid_argument("dual_codeword: deg g = " + std::to_string(degree(g)) + " exceeds n - k - 1 = " +
                                std::to_string(static_cast<long>(code.r()) - 1));
  if (lambda.size() != code.n()) throw std::invalid_argument("dual_codeword: weight count mismatch");
  Codeword out;
  out.reserve(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) out.push_back(lambda[i] * evaluate(g, code.points()[i]));
  return out;
}

Codeword dual_codeword(const Polynomial& g, const CodeSpec& code) {
  const auto lambda = dual_weights(code);
  return dual_codeword(g, code, lambda);
}

FieldElement inner_product(std::span<const FieldElement> a, std::span<const FieldElement> b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("inner_product: length mismatch");
  FieldElement acc = a.front().field()->zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Polynomial erasure_decode(std::span<const std::pair<std::size_t, FieldElement>> partial, const CodeSpec& code) {
  const std::size_t k = code.k();
  if (partial.size() != k) throw std::invalid_argument("erasure_decode: need exactly k symbols");
  std::set<std::size_t> positions;
  for (const auto& [pos, sym] : partial) {
    if (pos >= code.n()) throw std::out_of_range("erasure_decode: position out of range");
    if (!positions.insert(pos).second) throw std::invalid_argument("erasure_decode: duplicate position");
  }
  const FieldPtr& F = code.field();
  Polynomial result(k, F->zero());
  for (std::size_t i = 0; i < k; ++i) {
    const FieldElement& xi = code.points()[partial[i].first];
    // basis = prod_{j != i} (x - x_j), built up by coefficient shifting
    Polynomial basis{F->one()};
    FieldElement denom = F->one();
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const FieldElement& xj = code.points()[partial[j].first];
      Polynomial next(basis.size() + 1, F->zero());
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xj;
      }
      basis = std::move(next);
      denom *= xi - xj;
    }
    const FieldElement scale = partial[i].second / denom;
    for (std::size_t t = 0; t < k; ++t) result[t] += basis[t] * scale;
  }
  return result;
}

FieldElement random_element(const FieldPtr& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> digit(0, field->q() - 1);
  std::vector<Residue> v(field->degree());
  for (Residue& c : v) c = digit(rng);
  return field->from_coeffs(std::move(v));
}

Polynomial random_polynomial(const FieldPtr& field, std::size_t count, std::mt19937_64& rng) {
  Polynomial f;
  f.reserve(count);
  for (std::size_t i = 0; i < count; ++i) f.push_back(random_element(field, rng));
  return f;
}

}  // namespace rackrs
