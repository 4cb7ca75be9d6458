#include "contactgrad/linalg.hpp"

#include <algorithm>

namespace contactgrad {

std::vector<int> rref_in_place(MatQ& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Rat inv = 1 / Rat(m(r, c));
    for (int j = c; j < cols; ++j) m(r, j) = Rat(m(r, j) * inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rat factor = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = Rat(m(i, j) - factor * m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank_of(MatQ m) { return static_cast<int>(rref_in_place(m).size()); }

MatQ kernel_of(MatQ m) {
  const int cols = static_cast<int>(m.cols());
  const std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  const int null_dim = cols - static_cast<int>(pivots.size());
  MatQ basis = MatQ::Zero(null_dim, cols);
  int row = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = 1;
    for (size_t p = 0; p < pivots.size(); ++p)
      basis(row, pivots[p]) = Rat(-m(static_cast<int>(p), free));
    ++row;
  }
  return basis;
}

MatQ row_space(MatQ m) {
  const std::vector<int> pivots = rref_in_place(m);
  return m.topRows(static_cast<int>(pivots.size()));
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = MatQ::Zero(0, ambient);
  return s;
}

Subspace Subspace::span(const MatQ& vectors) {
  Subspace s;
  s.ambient_ = static_cast<int>(vectors.cols());
  MatQ m = vectors;
  s.pivots_ = rref_in_place(m);
  s.rows_ = m.topRows(static_cast<int>(s.pivots_.size()));
  return s;
}

Subspace Subspace::span_of(const std::vector<VecQ>& vectors, int ambient) {
  MatQ m = MatQ::Zero(static_cast<int>(vectors.size()), ambient);
  for (size_t i = 0; i < vectors.size(); ++i)
    m.row(static_cast<int>(i)) = vectors[i].transpose();
  return span(m);
}

Subspace Subspace::full(int ambient) {
  MatQ id = MatQ::Zero(ambient, ambient);
  for (int i = 0; i < ambient; ++i) id(i, i) = 1;
  return span(id);
}

VecQ Subspace::reduce(VecQ v) const {
  for (int i = 0; i < dim(); ++i) {
    const Rat coeff = v(pivots_[i]);
    if (is_zero(coeff)) continue;
    for (int j = 0; j < ambient_; ++j) v(j) = Rat(v(j) - coeff * rows_(i, j));
  }
  return v;
}

bool Subspace::contains(const VecQ& v) const {
  const VecQ r = reduce(v);
  for (int j = 0; j < ambient_; ++j)
    if (!is_zero(r(j))) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("subspace sum: ambient dimension mismatch");
  MatQ m(dim() + other.dim(), ambient_);
  m.topRows(dim()) = rows_;
  m.bottomRows(other.dim()) = other.rows_;
  return span(m);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("subspace intersect: ambient dimension mismatch");
  // x in both spans: x = a^T A = b^T B; solve A^T a - B^T b = 0.
  const int ka = dim();
  const int kb = other.dim();
  if (ka == 0 || kb == 0) return zero(ambient_);
  MatQ m = MatQ::Zero(ambient_, ka + kb);
  m.leftCols(ka) = rows_.transpose();
  m.rightCols(kb) = -other.rows_.transpose();
  const MatQ null_basis = kernel_of(m);
  MatQ vectors = MatQ::Zero(null_basis.rows(), ambient_);
  for (int i = 0; i < null_basis.rows(); ++i)
    vectors.row(i) = null_basis.row(i).head(ka) * rows_;
  return span(vectors);
}

bool Subspace::operator==(const Subspace& other) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  return rows_ == other.rows_;
}

Subspace Subspace::orthogonal(const MatQ& gram) const {
  if (dim() == 0) return full(ambient_);
  MatQ conditions = rows_ * gram;  // rows are functionals x -> B(b_i, x)
  return span(kernel_of(conditions));
}

VecQ solve_linear(const MatQ& m, const VecQ& rhs) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  MatQ aug(rows, cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = rhs;
  const std::vector<int> pivots = rref_in_place(aug);
  VecQ x = VecQ::Zero(cols);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols)
      throw std::runtime_error("solve_linear: inconsistent system");
    x(pivots[i]) = aug(static_cast<int>(i), cols);
  }
  return x;
}

}  // namespace contactgrad
