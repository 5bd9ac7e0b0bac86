#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jacobi/rational.hpp"

namespace jacobi {

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column, no zeros

/// Incremental row echelon form over the integers.
///
/// Each stored row is primitive and its pivot is its largest column, so the
/// free columns left at the end are the smallest ones the row space allows.
/// finalize() then expresses every column through the free columns by exact
/// rational back-substitution.
class Eliminator {
 public:
  explicit Eliminator(int columns);

  int columns() const { return columns_; }
  /// Returns true when the row was independent of the rows already added.
  bool add(const SparseRow& row);
  int rank() const { return rank_; }

  void finalize();
  bool finalized() const { return finalized_; }
  /// Free columns in increasing order (valid after finalize()).
  const std::vector<int>& free_columns() const { return free_; }
  /// Coordinates of column c in the free-column basis (valid after finalize()).
  const Coordinates& column(int c) const { return coords_[c]; }

 private:
  using IntRow = std::vector<std::pair<int, BigInt>>;
  IntRow reduce(IntRow row) const;

  int columns_;
  int rank_ = 0;
  bool finalized_ = false;
  std::vector<std::optional<IntRow>> pivots_;
  std::vector<int> free_;
  std::vector<Coordinates> coords_;
};

/// Rank of a dense rational matrix.
int matrix_rank(std::vector<Coordinates> rows);

/// Basis of the null space {x : A x = 0} of a dense matrix with `cols` columns.
std::vector<Coordinates> null_space(const std::vector<Coordinates>& a, int cols);

/// Solves A x = b; nothing when inconsistent. Free variables are set to 0.
std::optional<Coordinates> solve(const std::vector<Coordinates>& a, const Coordinates& b, int cols);

}  // namespace jacobi
