#pragma once

// Exact row reduction over a Field. Rows are sparse: (column, value) pairs
// sorted by column, zero values never stored.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "genpos/field.hpp"

namespace genpos {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

SparseRow to_sparse(const std::vector<Scalar>& dense);

/// Incrementally built semi-echelon basis of a row space. Every stored row
/// is monic at its pivot, and the pivot is the row's smallest column, so
/// pivots are pairwise distinct. Callers choose a column numbering; with
/// columns sorted by ascending degree, the pivot of a row is in its
/// lowest-degree part.
class EchelonBasis {
 public:
  explicit EchelonBasis(Field field) : field_(field) {}

  /// Subtracts stored rows until no entry sits in a pivot column.
  SparseRow reduce(const SparseRow& row) const;
  /// Adds `row` if it is independent of the current span; returns whether it was.
  bool insert(const SparseRow& row);
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  std::size_t rank() const noexcept { return rows_.size(); }
  const Field& field() const noexcept { return field_; }
  /// Rows keyed by pivot column.
  const std::map<std::size_t, SparseRow>& rows() const noexcept { return rows_; }

 private:
  Field field_;
  std::map<std::size_t, SparseRow> rows_;
};

/// Rank of a dense matrix given as rows.
std::size_t matrix_rank(const std::vector<std::vector<Scalar>>& rows, const Field& field);

/// Basis of { c : M c = 0 } for the dense matrix M (rows x ncols), via
/// reduced row echelon form. Each basis vector has a 1 in its free column.
std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& rows, std::size_t ncols,
                                           const Field& field);

}  // namespace genpos
