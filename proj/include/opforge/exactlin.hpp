#pragma once

// Dense exact linear algebra over a field scalar (in practice opforge::Rat).
// Every routine is pure; subspaces are stored canonically as RREF bases so
// equality of subspaces is equality of their basis matrices.

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>
#include <vector>

namespace opforge {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

// In-place Gauss-Jordan on `m`; returns pivot columns. Rows past the rank are
// left zero.
template <class Scalar>
std::vector<Index> gauss_jordan(Matrix<Scalar>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Reduced row-echelon form with zero rows dropped.
template <class Derived>
Matrix<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> work = m;
  const auto pivots = detail::gauss_jordan(work);
  return work.topRows(static_cast<Index>(pivots.size()));
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> work = m;
  return static_cast<Index>(detail::gauss_jordan(work).size());
}

/// Basis of {v : m v = 0}, one vector per row, in RREF.
template <class Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> work = m;
  const auto pivots = detail::gauss_jordan(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Index> free_cols;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(static_cast<Index>(free_cols.size()), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    basis(static_cast<Index>(k), f) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(static_cast<Index>(k), pivots[r]) = -work(static_cast<Index>(r), f);
  }
  return rref(basis);
}

/// A linear subspace of Scalar^ambient held as its canonical RREF basis.
template <class Scalar>
class Subspace {
 public:
  explicit Subspace(Index ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `rows`.
  template <class Derived>
  static Subspace from_rows(const Eigen::MatrixBase<Derived>& rows) {
    Subspace s(rows.cols());
    Matrix<Scalar> work = rows;
    s.pivots_ = detail::gauss_jordan(work);
    s.basis_ = work.topRows(static_cast<Index>(s.pivots_.size()));
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Matrix<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  Vector<Scalar> basis_vector(Index i) const { return basis_.row(i).transpose(); }

  /// Canonical representative of v modulo this subspace: pivot coordinates
  /// are eliminated, so two vectors are congruent iff their reductions agree.
  Vector<Scalar> reduce(const Vector<Scalar>& v) const {
    check_ambient(v.size());
    Vector<Scalar> r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Scalar c = r(pivots_[i]);
      if (c == 0) continue;
      r -= c * basis_.row(static_cast<Index>(i)).transpose();
    }
    return r;
  }

  bool contains(const Vector<Scalar>& v) const {
    const Vector<Scalar> r = reduce(v);
    for (Index i = 0; i < r.size(); ++i)
      if (r(i) != 0) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    check_ambient(other.ambient_dim());
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
           a.basis_ == b.basis_;
  }

 private:
  void check_ambient(Index n) const {
    if (n != ambient_) throw std::invalid_argument("subspace: ambient dimension mismatch");
  }

  Index ambient_;
  Matrix<Scalar> basis_;
  std::vector<Index> pivots_;
};

template <class Derived>
Subspace<typename Derived::Scalar> span(const Eigen::MatrixBase<Derived>& rows) {
  return Subspace<typename Derived::Scalar>::from_rows(rows);
}

template <class Scalar>
Subspace<Scalar> span(const std::vector<Vector<Scalar>>& vectors, Index ambient_dim) {
  Matrix<Scalar> rows(static_cast<Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim)
      throw std::invalid_argument("span: vector length differs from ambient dimension");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return Subspace<Scalar>::from_rows(rows);
}

template <class Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  Matrix<Scalar> rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return Subspace<Scalar>::from_rows(rows);
}

/// a ∩ b via the kernel of [A; -B]^T: pairs (u, w) with uA = wB.
template <class Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace<Scalar>(a.ambient_dim());
  Matrix<Scalar> stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis(), -b.basis();
  const Matrix<Scalar> kernel = nullspace(stacked.transpose());
  const Matrix<Scalar> coeffs = kernel.leftCols(a.dim());
  return Subspace<Scalar>::from_rows(coeffs * a.basis());
}

}  // namespace opforge
