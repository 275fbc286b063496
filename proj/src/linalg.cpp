#include "genpos/linalg.hpp"

#include "genpos/errors.hpp"

namespace genpos {

SparseRow to_sparse(const std::vector<Scalar>& dense) {
  SparseRow out;
  for (std::size_t c = 0; c < dense.size(); ++c) {
    if (!dense[c].is_zero()) out.emplace_back(c, dense[c]);
  }
  return out;
}

SparseRow EchelonBasis::reduce(const SparseRow& row) const {
  std::map<std::size_t, Scalar> acc(row.begin(), row.end());
  auto it = acc.begin();
  while (it != acc.end()) {
    const auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Scalar factor = it->second;
    // Pivot rows only touch columns >= col, so entries already passed stay clean.
    for (const auto& [c, v] : pivot->second) {
      if (c == col) continue;
      auto [slot, inserted] = acc.try_emplace(c, field_.zero());
      slot->second -= factor * v;
      if (slot->second.is_zero()) acc.erase(slot);
    }
    acc.erase(col);
    it = acc.upper_bound(col);
  }
  return {acc.begin(), acc.end()};
}

bool EchelonBasis::insert(const SparseRow& row) {
  SparseRow r = reduce(row);
  if (r.empty()) return false;
  const Scalar inv = r.front().second.inverse();
  for (auto& entry : r) entry.second *= inv;
  const std::size_t pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::size_t matrix_rank(const std::vector<std::vector<Scalar>>& rows, const Field& field) {
  EchelonBasis basis(field);
  for (const auto& row : rows) basis.insert(to_sparse(row));
  return basis.rank();
}

std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& rows, std::size_t ncols,
                                           const Field& field) {
  std::vector<std::vector<Scalar>> m = rows;
  for (const auto& r : m) {
    if (r.size() != ncols) throw DomainError("nullspace: ragged matrix");
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < m.size(); ++col) {
    std::size_t sel = lead;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[lead]);
    const Scalar inv = m[lead][col].inverse();
    for (auto& v : m[lead]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][col].is_zero()) continue;
      const Scalar f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[lead][c];
    }
    pivot_cols.push_back(col);
    ++lead;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(ncols, field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace genpos
