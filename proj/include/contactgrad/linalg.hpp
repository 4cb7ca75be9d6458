#pragma once

#include <stdexcept>
#include <vector>

#include "contactgrad/rational.hpp"

namespace contactgrad {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RVecQ = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row; zero rows are moved to the bottom.
std::vector<int> rref_in_place(MatQ& m);

int rank_of(MatQ m);

/// Canonical basis of {x : m x = 0}, one solution per row.
MatQ kernel_of(MatQ m);

/// Canonical (RREF) basis of the row space, zero rows dropped.
MatQ row_space(MatQ m);

/// A linear subspace of Q^n held in canonical reduced-echelon form, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient);
  /// Span of the rows of `vectors`.
  static Subspace span(const MatQ& vectors);
  static Subspace span_of(const std::vector<VecQ>& vectors, int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.rows()); }
  const MatQ& basis() const { return rows_; }
  VecQ basis_vector(int i) const { return rows_.row(i).transpose(); }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Residual of v after eliminating against the echelon basis; zero iff
  /// v lies in the subspace.
  VecQ reduce(VecQ v) const;
  bool contains(const VecQ& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  /// {x : x . gram . basis^T = 0}; with gram the matrix of a nondegenerate
  /// bilinear form this is the orthogonal complement.
  Subspace orthogonal(const MatQ& gram) const;

 private:
  int ambient_ = 0;
  MatQ rows_;                // dim x ambient, reduced echelon, no zero rows
  std::vector<int> pivots_;  // pivot column per row
};

/// One solution x of m x = rhs; throws std::runtime_error if inconsistent.
VecQ solve_linear(const MatQ& m, const VecQ& rhs);

}  // namespace contactgrad
