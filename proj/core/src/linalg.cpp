#include "heightfilter/linalg.hpp"

#include <stdexcept>

#include "heightfilter/errors.hpp"

namespace heightfilter {

ColumnSolver::ColumnSolver(int dim, const std::vector<std::vector<int>>& columns)
    : dim_(dim), cols_(static_cast<int>(columns.size())), rank_(0) {
  // Working copy of the dim x cols matrix A and the transform T = I.
  std::vector<std::vector<Rational>> a(dim_, std::vector<Rational>(cols_, Rational(0)));
  std::vector<std::vector<Rational>> t(dim_, std::vector<Rational>(dim_, Rational(0)));
  for (int j = 0; j < cols_; ++j) {
    if (static_cast<int>(columns[j].size()) != dim_)
      throw std::invalid_argument("ColumnSolver: column dimension mismatch");
    for (int i = 0; i < dim_; ++i) a[i][j] = columns[j][i];
  }
  for (int i = 0; i < dim_; ++i) t[i][i] = 1;

  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = rank_; r < dim_; ++r) {
      if (a[r][c] != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;  // dependent column
    std::swap(a[pivot], a[rank_]);
    std::swap(t[pivot], t[rank_]);
    const Rational inv = Rational(1) / a[rank_][c];
    for (int j = 0; j < cols_; ++j) a[rank_][j] *= inv;
    for (int j = 0; j < dim_; ++j) t[rank_][j] *= inv;
    for (int r = 0; r < dim_; ++r) {
      if (r == rank_ || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (int j = 0; j < cols_; ++j) a[r][j] -= f * a[rank_][j];
      for (int j = 0; j < dim_; ++j) t[r][j] -= f * t[rank_][j];
    }
    pivot_col_.push_back(c);
    ++rank_;
  }

  // Clear denominators per row so that solves are integer dot products.
  t_.assign(dim_, std::vector<BigInt>(dim_));
  t_den_.assign(dim_, BigInt(1));
  for (int i = 0; i < dim_; ++i) {
    BigInt l = 1;
    for (int j = 0; j < dim_; ++j) l = boost::multiprecision::lcm(l, denominator(t[i][j]));
    t_den_[i] = l;
    for (int j = 0; j < dim_; ++j) {
      const Rational scaled = t[i][j] * Rational(l);
      if (!is_integer(scaled)) throw internal_error("ColumnSolver: denominator clearing failed");
      t_[i][j] = numerator(scaled);
    }
  }
}

bool ColumnSolver::in_span(const std::vector<int>& b) const {
  if (static_cast<int>(b.size()) != dim_)
    throw std::invalid_argument("ColumnSolver: vector dimension mismatch");
  for (int i = rank_; i < dim_; ++i) {
    BigInt dot = 0;
    for (int j = 0; j < dim_; ++j)
      if (b[j] != 0) dot += t_[i][j] * b[j];
    if (dot != 0) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> ColumnSolver::solve(const std::vector<int>& b) const {
  if (!full_column_rank()) throw internal_error("ColumnSolver::solve requires independent columns");
  if (!in_span(b)) return std::nullopt;
  std::vector<Rational> x(cols_, Rational(0));
  for (int i = 0; i < rank_; ++i) {
    BigInt dot = 0;
    for (int j = 0; j < dim_; ++j)
      if (b[j] != 0) dot += t_[i][j] * b[j];
    x[pivot_col_[i]] = Rational(dot, t_den_[i]);
  }
  return x;
}

}  // namespace heightfilter
