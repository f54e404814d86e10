#include "rackrs/base_linalg.hpp"

#include <stdexcept>

namespace rackrs {

BaseMatrix multiply(const BaseMatrix& a, const BaseMatrix& b, const PrimeField& B) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  BaseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = B.add(out(i, j), B.mul(aik, b(k, j)));
    }
  return out;
}

std::optional<BaseMatrix> invert(const BaseMatrix& m, const PrimeField& B) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix must be square");
  const std::size_t n = m.rows();
  BaseMatrix a = m;
  BaseMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Residue s = B.inv(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = B.mul(a(col, j), s);
      inv(col, j) = B.mul(inv(col, j), s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Residue f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = B.sub(a(r, j), B.mul(f, a(col, j)));
        inv(r, j) = B.sub(inv(r, j), B.mul(f, inv(col, j)));
      }
    }
  }
  return inv;
}

RankProfile rank_over_base(std::span<const FieldElement> elems) {
  RankProfile out;
  if (elems.empty()) return out;
  const FieldPtr& F = elems.front().field();
  const PrimeField& B = F->base();
  const std::size_t l = F->degree();

  // Echelon rows, each normalised to 1 at its pivot and already reduced against the
  // earlier rows. combo[s] expresses the row in the selected elements.
  struct Row {
    std::vector<Residue> vec;
    std::size_t pivot;
    std::vector<Residue> combo;
  };
  std::vector<Row> rows;
  std::vector<std::vector<Residue>> raw_coords;

  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    if (!(elems[idx].field() == F || elems[idx].field()->same_as(*F)))
      throw std::invalid_argument("rank_over_base: elements from different fields");
    std::vector<Residue> v(elems[idx].coeffs().begin(), elems[idx].coeffs().end());
    std::vector<Residue> used(rows.size(), 0);  // v_orig = residual + sum used[j] * row_j
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const Residue c = v[rows[j].pivot];
      if (c == 0) continue;
      used[j] = c;
      for (std::size_t t = 0; t < l; ++t) v[t] = B.sub(v[t], B.mul(c, rows[j].vec[t]));
    }
    const std::size_t nsel = out.independent.size();
    std::vector<Residue> coord(nsel, 0);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (used[j] == 0) continue;
      for (std::size_t s = 0; s < rows[j].combo.size(); ++s)
        coord[s] = B.add(coord[s], B.mul(used[j], rows[j].combo[s]));
    }
    std::size_t pivot = 0;
    while (pivot < l && v[pivot] == 0) ++pivot;
    if (pivot == l) {
      raw_coords.push_back(std::move(coord));
      continue;
    }
    // residual = e_new - coord, normalised by its pivot entry.
    const Residue s = B.inv(v[pivot]);
    for (Residue& x : v) x = B.mul(x, s);
    std::vector<Residue> combo(nsel + 1, 0);
    for (std::size_t t = 0; t < nsel; ++t) combo[t] = B.mul(B.neg(coord[t]), s);
    combo[nsel] = s;
    rows.push_back(Row{std::move(v), pivot, std::move(combo)});
    out.independent.push_back(idx);
    std::vector<Residue> unit(nsel + 1, 0);
    unit[nsel] = 1;
    raw_coords.push_back(std::move(unit));
  }
  out.rank = out.independent.size();
  for (auto& c : raw_coords) c.resize(out.rank, 0);
  out.coords = std::move(raw_coords);
  return out;
}

std::size_t rank_of(std::span<const FieldElement> elems) { return rank_over_base(elems).rank; }

DualBasisPair dual_basis(std::span<const FieldElement> basis) {
  if (basis.empty()) throw std::invalid_argument("dual_basis: empty basis");
  const FieldPtr& F = basis.front().field();
  const std::size_t l = F->degree();
  if (basis.size() != l || rank_of(basis) != l)
    throw std::invalid_argument("dual_basis: input is not a basis of F over B");
  BaseMatrix gram(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i; j < l; ++j) gram(i, j) = gram(j, i) = trace(basis[i] * basis[j]);
  auto ginv = invert(gram, F->base());
  if (!ginv) throw std::logic_error("dual_basis: trace form degenerate");
  DualBasisPair pair;
  pair.zeta_basis.assign(basis.begin(), basis.end());
  for (std::size_t j = 0; j < l; ++j) {
    FieldElement mu = F->zero();
    for (std::size_t k = 0; k < l; ++k)
      if ((*ginv)(j, k) != 0) mu += basis[k].scaled((*ginv)(j, k));
    pair.mu_basis.push_back(std::move(mu));
  }
  return pair;
}

FieldElement expand_in_dual_basis(std::span<const Residue> traces, const DualBasisPair& pair) {
  if (traces.size() != pair.mu_basis.size())
    throw std::invalid_argument("expand_in_dual_basis: trace count does not match basis size");
  FieldElement out = pair.mu_basis.front().field()->zero();
  for (std::size_t i = 0; i < traces.size(); ++i)
    if (traces[i] != 0) out += pair.mu_basis[i].scaled(traces[i]);
  return out;
}

bool is_dual_pair(const DualBasisPair& pair) {
  const std::size_t l = pair.zeta_basis.size();
  if (pair.mu_basis.size() != l) return false;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (trace(pair.zeta_basis[i] * pair.mu_basis[j]) != (i == j ? 1u : 0u)) return false;
  return true;
}

}  // namespace rackrs
