#ifndef RACKRS_BASE_LINALG_HPP
#define RACKRS_BASE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rackrs/ext_field.hpp"

namespace rackrs {

/// Dense matrix over GF(q), row-major.
class BaseMatrix {
 public:
  BaseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const BaseMatrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Residue> data_;
};

BaseMatrix multiply(const BaseMatrix& a, const BaseMatrix& b, const PrimeField& B);

/// Gauss-Jordan inverse; std::nullopt when singular.
std::optional<BaseMatrix> invert(const BaseMatrix& m, const PrimeField& B);

/// Result of eliminating a list of field elements viewed as vectors in B^l.
struct RankProfile {
  std::size_t rank = 0;
  /// Indices (into the input) of the first maximal independent subset, in input order.
  std::vector<std::size_t> independent;
  /// For every input element, its coordinates over B in the `independent` subset.
  std::vector<std::vector<Residue>> coords;
};

/// rank_B of the elements, processed in input order.
RankProfile rank_over_base(std::span<const FieldElement> elems);

/// Convenience: rank only.
std::size_t rank_of(std::span<const FieldElement> elems);

/// Two B-bases of F with tr(zeta_basis[i] * mu_basis[j]) = [i == j].
struct DualBasisPair {
  std::vector<FieldElement> zeta_basis;
  std::vector<FieldElement> mu_basis;
};

/// Inverts the trace Gram matrix G[i][j] = tr(b_i b_j) and forms mu_j = sum_k Ginv[j][k] b_k.
/// Throws std::invalid_argument when the input is not a basis.
DualBasisPair dual_basis(std::span<const FieldElement> basis);

/// a = sum_i traces[i] * mu_i.
FieldElement expand_in_dual_basis(std::span<const Residue> traces, const DualBasisPair& pair);

/// Checks the Kronecker condition exactly.
bool is_dual_pair(const DualBasisPair& pair);

}  // namespace rackrs

#endif
