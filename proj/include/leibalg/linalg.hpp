#pragma once

#include "leibalg/scalars.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace leibalg {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using ColVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <class S>
bool is_zero(const S& x) { return x == S(0); }

/// Reduces m to its unique reduced row echelon form, returning the rank.
template <class S>
int rref_in_place(DenseMatrix<S>& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) m.row(r).swap(m.row(piv));
    if (!(m(r, c) == S(1))) m.row(r) = (m.row(r) * inv(m(r, c))).eval();
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      m.row(i) -= f * m.row(r);
    }
    ++r;
  }
  return r;
}

template <class S>
std::pair<DenseMatrix<S>, int> rref(DenseMatrix<S> m) {
  int r = rref_in_place(m);
  return {std::move(m), r};
}

template <class S>
int rank(const DenseMatrix<S>& m) {
  DenseMatrix<S> c = m;
  return rref_in_place(c);
}

/// Incrementally maintained RREF of a growing row set. Rows that are
/// linearly dependent on earlier ones are discarded on insertion, which
/// keeps large constraint systems at most rank x cols in size.
template <class S>
class EchelonAccumulator {
public:
  explicit EchelonAccumulator(int cols) : cols_(cols) {}

  /// Returns true when the row increased the rank.
  bool add_row(RowVector<S> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const S c = v(piv_[k]);
      if (!is_zero(c)) v -= c * rows_[k];
    }
    int pc = -1;
    for (int j = 0; j < cols_; ++j)
      if (!is_zero(v(j))) { pc = j; break; }
    if (pc < 0) return false;
    if (!(v(pc) == S(1))) v = (v * inv(v(pc))).eval();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const S c = rows_[k](pc);
      if (!is_zero(c)) rows_[k] -= c * v;
    }
    std::size_t pos = 0;
    while (pos < piv_.size() && piv_[pos] < pc) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    piv_.insert(piv_.begin() + pos, pc);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  /// The accumulated rows as an RREF matrix (no zero rows).
  DenseMatrix<S> matrix() const {
    DenseMatrix<S> m(rows_.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) m.row(i) = rows_[i];
    return m;
  }

private:
  int cols_;
  std::vector<RowVector<S>> rows_;
  std::vector<int> piv_;
};

template <class S>
std::vector<int> pivot_columns(const DenseMatrix<S>& rref_m) {
  std::vector<int> piv;
  for (int i = 0; i < rref_m.rows(); ++i) {
    int pc = -1;
    for (int j = 0; j < rref_m.cols(); ++j)
      if (!is_zero(rref_m(i, j))) { pc = j; break; }
    if (pc >= 0) piv.push_back(pc);
  }
  return piv;
}

template <class S>
class Subspace;

template <class S>
Subspace<S> nullspace(const DenseMatrix<S>& m);

/// A linear subspace of K^n with its canonical RREF basis (zero rows
/// removed). Equality of subspaces is entry-wise basis equality.
template <class S>
class Subspace {
public:
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Canonicalizes an arbitrary spanning row set.
  static Subspace span(int ambient, DenseMatrix<S> rows) {
    if (rows.cols() != ambient) throw std::invalid_argument("spanning rows have wrong width");
    int r = rref_in_place(rows);
    Subspace s(ambient);
    s.basis_ = rows.topRows(r);
    return s;
  }

  static Subspace zero(int ambient) { return Subspace(ambient); }

  static Subspace full(int ambient) {
    Subspace s(ambient);
    s.basis_ = DenseMatrix<S>::Identity(ambient, ambient);
    return s;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const DenseMatrix<S>& basis() const { return basis_; }
  ColVector<S> basis_vector(int i) const { return basis_.row(i).transpose(); }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_.rows() == o.basis_.rows() && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const ColVector<S>& v) const {
    check_ambient(static_cast<int>(v.size()));
    RowVector<S> w = v.transpose();
    auto piv = pivot_columns(basis_);
    for (std::size_t k = 0; k < piv.size(); ++k) {
      const S c = w(piv[k]);
      if (!is_zero(c)) w -= c * basis_.row(k);
    }
    for (int j = 0; j < w.size(); ++j)
      if (!is_zero(w(j))) return false;
    return true;
  }

  bool leq(const Subspace& o) const {
    check_same(o);
    for (int i = 0; i < dim(); ++i)
      if (!o.contains(basis_vector(i))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    check_same(o);
    DenseMatrix<S> rows(dim() + o.dim(), ambient_);
    rows.topRows(dim()) = basis_;
    rows.bottomRows(o.dim()) = o.basis_;
    return span(ambient_, std::move(rows));
  }

  Subspace intersect(const Subspace& o) const {
    check_same(o);
    // x in both iff x = B1^T u = B2^T v: kernel of [B1^T | -B2^T].
    const int d1 = dim(), d2 = o.dim();
    if (d1 == 0 || d2 == 0) return zero(ambient_);
    DenseMatrix<S> m(ambient_, d1 + d2);
    m.leftCols(d1) = basis_.transpose();
    m.rightCols(d2) = -o.basis_.transpose();
    Subspace<S> ker = nullspace(m);
    DenseMatrix<S> rows(ker.dim(), ambient_);
    for (int i = 0; i < ker.dim(); ++i)
      rows.row(i) = (basis_.transpose() * ker.basis().row(i).head(d1).transpose()).transpose();
    return span(ambient_, std::move(rows));
  }

  /// Rows C with x in this subspace iff C x = 0.
  DenseMatrix<S> constraint_matrix() const {
    if (dim() == ambient_) return DenseMatrix<S>(0, ambient_);
    return nullspace(basis_).basis();
  }

private:
  void check_ambient(int n) const {
    if (n != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  }
  void check_same(const Subspace& o) const { check_ambient(o.ambient_); }

  int ambient_;
  DenseMatrix<S> basis_;
};

/// Kernel {x : m x = 0} with canonical basis.
template <class S>
Subspace<S> nullspace(const DenseMatrix<S>& m) {
  const int cols = static_cast<int>(m.cols());
  auto [r, rank_m] = rref(m);
  auto piv = pivot_columns(r);
  std::vector<bool> is_piv(cols, false);
  for (int p : piv) is_piv[p] = true;
  DenseMatrix<S> rows(cols - rank_m, cols);
  rows.setConstant(S(0));
  int out = 0;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_piv[fc]) continue;
    rows(out, fc) = S(1);
    for (int i = 0; i < rank_m; ++i) rows(out, piv[i]) = -r(i, fc);
    ++out;
  }
  return Subspace<S>::span(cols, std::move(rows));
}

/// Kernel of an already-accumulated constraint system.
template <class S>
Subspace<S> nullspace(const EchelonAccumulator<S>& acc) {
  return nullspace(acc.matrix());
}

/// Projection of nullspace(m) onto a contiguous coordinate block.
template <class S>
Subspace<S> solve_and_project(const DenseMatrix<S>& m, int keep_begin, int keep_count) {
  const int cols = static_cast<int>(m.cols());
  if (keep_begin < 0 || keep_count < 0 || keep_begin + keep_count > cols)
    throw std::invalid_argument("solve_and_project: invalid coordinate range");
  Subspace<S> ker = nullspace(m);
  DenseMatrix<S> rows = ker.basis().middleCols(keep_begin, keep_count);
  return Subspace<S>::span(keep_count, std::move(rows));
}

/// Exact inverse; empty when singular.
template <class S>
std::optional<DenseMatrix<S>> inverse(const DenseMatrix<S>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = static_cast<int>(m.rows());
  DenseMatrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = DenseMatrix<S>::Identity(n, n);
  if (rref_in_place(aug) != n) return std::nullopt;
  if (!(aug.leftCols(n) == DenseMatrix<S>::Identity(n, n))) return std::nullopt;
  return aug.rightCols(n).eval();
}

/// One particular solution of A x = b, if any.
template <class S>
std::optional<ColVector<S>> linear_solve(const DenseMatrix<S>& a, const ColVector<S>& b) {
  const int cols = static_cast<int>(a.cols());
  DenseMatrix<S> aug(a.rows(), cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  int r = rref_in_place(aug);
  auto piv = pivot_columns(aug.topRows(r).eval());
  for (int p : piv)
    if (p == cols) return std::nullopt;
  ColVector<S> x = ColVector<S>::Constant(cols, S(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x(piv[i]) = aug(static_cast<int>(i), cols);
  return x;
}

/// Kronecker product in row-major block layout: result((i,k),(j,l)) = a(i,j) b(k,l).
template <class S>
DenseMatrix<S> kron(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  DenseMatrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace leibalg
