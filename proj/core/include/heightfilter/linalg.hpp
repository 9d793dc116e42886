#pragma once

#include <optional>
#include <vector>

#include "heightfilter/rational.hpp"

namespace heightfilter {

// Exact solver for the small dense systems that come up when expanding
// roots over a candidate base.  The columns are fixed integer vectors;
// construction performs one Gauss-Jordan elimination over the rationals
// and stores the row transform with cleared denominators, so that each
// right-hand side afterwards costs a single integer matrix-vector
// product.
//
// With T the stored transform, T*A is in reduced row echelon form; when
// the columns are independent its top block is the identity, so for a
// consistent b the solution is just the top of T*b and the bottom rows
// of T*b must vanish.  The bottom rows of T also span the annihilator of
// the column space, which gives the span-membership test for free.
class ColumnSolver {
 public:
  ColumnSolver(int dim, const std::vector<std::vector<int>>& columns);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int columns() const { return cols_; }
  bool full_column_rank() const { return rank_ == cols_; }

  // Is b in the rational span of the columns?
  bool in_span(const std::vector<int>& b) const;

  // Exact solution of A x = b, or nullopt when inconsistent.
  // Requires full column rank.
  std::optional<std::vector<Rational>> solve(const std::vector<int>& b) const;

 private:
  int dim_;
  int cols_;
  int rank_;
  std::vector<int> pivot_col_;            // pivot column of row i, i < rank_
  std::vector<std::vector<BigInt>> t_;    // dim_ x dim_ integer transform
  std::vector<BigInt> t_den_;             // row i of the transform is t_[i] / t_den_[i]
};

}  // namespace heightfilter
