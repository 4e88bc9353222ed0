#pragma once

#include "leibalg/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibalg {

/// Witness of a failed identity on basis triples.
struct IdentityFailure {
  std::string identity;
  int i = -1, j = -1, k = -1;
};

/// Dense structure constants [e_i, e_j] = sum_k c(i,j,k) e_k, stored as the
/// family of left multiplication matrices (column j of left(i) is [e_i, e_j]).
template <class S>
class StructureTable {
public:
  explicit StructureTable(int dim, std::vector<std::string> names = {})
      : dim_(dim), names_(std::move(names)), left_(dim, DenseMatrix<S>::Constant(dim, dim, S(0))) {
    if (names_.empty())
      for (int i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
    if (static_cast<int>(names_.size()) != dim)
      throw std::invalid_argument("basis name count does not match dimension");
  }

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  void set_basis_names(std::vector<std::string> n) {
    if (static_cast<int>(n.size()) != dim_) throw std::invalid_argument("bad name count");
    names_ = std::move(n);
  }

  const S& c(int i, int j, int k) const { return left_[i](k, j); }
  void set_c(int i, int j, int k, S v) { left_[i](k, j) = std::move(v); }
  void set_product(int i, int j, const ColVector<S>& result) { left_[i].col(j) = result; }

  /// Matrix of y -> [e_i, y].
  const DenseMatrix<S>& left_mult(int i) const { return left_[i]; }
  ColVector<S> product_basis(int i, int j) const { return left_[i].col(j); }

  /// Matrix of y -> [x, y].
  DenseMatrix<S> left_mult(const ColVector<S>& x) const {
    DenseMatrix<S> m = DenseMatrix<S>::Constant(dim_, dim_, S(0));
    for (int i = 0; i < dim_; ++i)
      if (!is_zero(x(i))) m += x(i) * left_[i];
    return m;
  }

  /// Matrix of y -> [y, x].
  DenseMatrix<S> right_mult(const ColVector<S>& x) const {
    DenseMatrix<S> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) m.col(j) = left_[j] * x;
    return m;
  }

  ColVector<S> product(const ColVector<S>& x, const ColVector<S>& y) const {
    return left_mult(x) * y;
  }

  bool operator==(const StructureTable& o) const {
    return dim_ == o.dim_ && left_ == o.left_;
  }

private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<DenseMatrix<S>> left_;
};

/// Checks the Leibniz identity [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis
/// triples; returns the first failing triple, if any.
template <class S>
std::optional<IdentityFailure> check_leibniz(const StructureTable<S>& t) {
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ColVector<S> lhs = t.left_mult(i) * t.product_basis(j, k);
        ColVector<S> rhs = t.product(t.product_basis(i, j), ColVector<S>::Unit(n, k)) -
                           t.product(t.product_basis(i, k), ColVector<S>::Unit(n, j));
        if (lhs != rhs) return IdentityFailure{"leibniz", i, j, k};
      }
  return std::nullopt;
}

/// A structure table certified to satisfy the Leibniz identity.
template <class S>
class LeibnizAlgebra {
public:
  explicit LeibnizAlgebra(StructureTable<S> t) : table_(std::move(t)) {
    if (auto fail = check_leibniz(table_))
      throw std::invalid_argument("table violates the Leibniz identity at triple (" +
                                  std::to_string(fail->i) + "," + std::to_string(fail->j) + "," +
                                  std::to_string(fail->k) + ")");
  }

  int dim() const { return table_.dim(); }
  const StructureTable<S>& table() const { return table_; }

  ColVector<S> bracket(const ColVector<S>& x, const ColVector<S>& y) const {
    return table_.product(x, y);
  }
  ColVector<S> lie_bracket(const ColVector<S>& x, const ColVector<S>& y) const {
    return bracket(x, y) + bracket(y, x);
  }

  /// Matrix of y -> [e_i, y]_Lie; by symmetry also the matrix of y -> [y, e_i]_Lie.
  DenseMatrix<S> lie_left_mult(int i) const {
    DenseMatrix<S> m = table_.left_mult(i);
    const int n = dim();
    for (int j = 0; j < n; ++j) m.col(j) += table_.product_basis(j, i);
    return m;
  }
  DenseMatrix<S> lie_left_mult(const ColVector<S>& x) const {
    DenseMatrix<S> m = DenseMatrix<S>::Constant(dim(), dim(), S(0));
    for (int i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * lie_left_mult(i);
    return m;
  }

  bool operator==(const LeibnizAlgebra& o) const { return table_ == o.table_; }

private:
  StructureTable<S> table_;
};

/// Certified commutative associative algebra, with an optional unit vector.
template <class S>
class AssocCommAlgebra {
public:
  explicit AssocCommAlgebra(StructureTable<S> t, std::optional<ColVector<S>> unit = std::nullopt)
      : table_(std::move(t)), unit_(std::move(unit)) {
    const int n = table_.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (table_.product_basis(i, j) != table_.product_basis(j, i))
          throw std::invalid_argument("table is not commutative at pair (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          ColVector<S> lhs = table_.product(table_.product_basis(i, j), ColVector<S>::Unit(n, k));
          ColVector<S> rhs = table_.left_mult(i) * table_.product_basis(j, k);
          if (lhs != rhs)
            throw std::invalid_argument("table is not associative at triple (" + std::to_string(i) +
                                        "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
    if (unit_) {
      for (int i = 0; i < n; ++i)
        if (table_.product(*unit_, ColVector<S>::Unit(n, i)) != ColVector<S>::Unit(n, i))
          throw std::invalid_argument("claimed unit fails on basis vector " + std::to_string(i));
    }
  }

  int dim() const { return table_.dim(); }
  const StructureTable<S>& table() const { return table_; }
  const std::optional<ColVector<S>>& unit() const { return unit_; }

private:
  StructureTable<S> table_;
  std::optional<ColVector<S>> unit_;
};

template <class S>
struct Ideal {
  Subspace<S> carrier;
};

/// Two-sided ideal test: both [h, e_j] and [e_j, h] stay in the carrier.
template <class S>
bool is_two_sided_ideal(const LeibnizAlgebra<S>& g, const Subspace<S>& w) {
  for (int i = 0; i < w.dim(); ++i) {
    ColVector<S> h = w.basis_vector(i);
    for (int j = 0; j < g.dim(); ++j) {
      ColVector<S> ej = ColVector<S>::Unit(g.dim(), j);
      if (!w.contains(g.bracket(h, ej)) || !w.contains(g.bracket(ej, h))) return false;
    }
  }
  return true;
}

template <class S>
Ideal<S> make_ideal(const LeibnizAlgebra<S>& g, Subspace<S> w) {
  if (!is_two_sided_ideal(g, w)) throw std::invalid_argument("subspace is not a two-sided ideal");
  return Ideal<S>{std::move(w)};
}

template <class S>
Ideal<S> full_ideal(const LeibnizAlgebra<S>& g) {
  return Ideal<S>{Subspace<S>::full(g.dim())};
}
template <class S>
Ideal<S> zero_ideal(const LeibnizAlgebra<S>& g) {
  return Ideal<S>{Subspace<S>::zero(g.dim())};
}

/// Span of all squares [x,x]; by polarization (1/2 in K) this is the span of
/// the basis Lie brackets.
template <class S>
Subspace<S> ann_subspace(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  DenseMatrix<S> rows(n * (n + 1) / 2, n);
  int r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      rows.row(r++) = g.lie_bracket(ColVector<S>::Unit(n, i), ColVector<S>::Unit(n, j)).transpose();
  return Subspace<S>::span(n, std::move(rows));
}

/// Two-sided ideal generated by the Lie brackets of two ideals, closed under
/// left and right bracketing with the ambient basis.
template <class S>
Ideal<S> lie_commutator_ideal(const LeibnizAlgebra<S>& g, const Ideal<S>& m, const Ideal<S>& n) {
  const int dim = g.dim();
  DenseMatrix<S> rows(m.carrier.dim() * n.carrier.dim(), dim);
  int r = 0;
  for (int a = 0; a < m.carrier.dim(); ++a)
    for (int b = 0; b < n.carrier.dim(); ++b)
      rows.row(r++) = g.lie_bracket(m.carrier.basis_vector(a), n.carrier.basis_vector(b)).transpose();
  Subspace<S> cur = Subspace<S>::span(dim, std::move(rows));
  for (;;) {
    DenseMatrix<S> more(cur.dim() * (1 + 2 * dim), dim);
    int t = 0;
    for (int a = 0; a < cur.dim(); ++a) {
      ColVector<S> h = cur.basis_vector(a);
      more.row(t++) = h.transpose();
      for (int j = 0; j < dim; ++j) {
        ColVector<S> ej = ColVector<S>::Unit(dim, j);
        more.row(t++) = g.bracket(h, ej).transpose();
        more.row(t++) = g.bracket(ej, h).transpose();
      }
    }
    Subspace<S> next = Subspace<S>::span(dim, std::move(more));
    if (next == cur) break;
    cur = next;
  }
  return Ideal<S>{cur};
}

template <class S>
struct Centres {
  Subspace<S> z_lie;
  Subspace<S> z_left;
  Subspace<S> z_right;
  Subspace<S> z;
};

template <class S>
Centres<S> centres(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  DenseMatrix<S> lie_rows(n * n, n), right_rows(n * n, n), left_rows(n * n, n);
  for (int i = 0; i < n; ++i) {
    lie_rows.middleRows(i * n, n) = g.lie_left_mult(i);
    right_rows.middleRows(i * n, n) = g.table().left_mult(i);                    // z -> [e_i, z]
    left_rows.middleRows(i * n, n) = g.table().right_mult(ColVector<S>::Unit(n, i));  // z -> [z, e_i]
  }
  Centres<S> c{nullspace(lie_rows), nullspace(left_rows), nullspace(right_rows),
               Subspace<S>::zero(n)};
  c.z = c.z_left.intersect(c.z_right);
  return c;
}

/// {x : [x, m]_Lie in N for all m in M}.
template <class S>
Subspace<S> lie_centraliser(const LeibnizAlgebra<S>& g, const Ideal<S>& m, const Ideal<S>& n) {
  const int dim = g.dim();
  DenseMatrix<S> cn = n.carrier.constraint_matrix();
  EchelonAccumulator<S> acc(dim);
  for (int a = 0; a < m.carrier.dim(); ++a) {
    DenseMatrix<S> lb = g.lie_left_mult(m.carrier.basis_vector(a));
    DenseMatrix<S> block = cn * lb;
    for (int r = 0; r < block.rows(); ++r) acc.add_row(block.row(r));
  }
  return nullspace(acc);
}

/// gamma_1 = N, gamma_i = [gamma_{i-1}, g]_Lie, until stabilization.
template <class S>
std::vector<Subspace<S>> lower_central_series(const LeibnizAlgebra<S>& g, const Ideal<S>& n) {
  std::vector<Subspace<S>> series{n.carrier};
  Ideal<S> cur = n;
  for (;;) {
    Ideal<S> next = lie_commutator_ideal(g, cur, full_ideal(g));
    series.push_back(next.carrier);
    if (next.carrier == cur.carrier) break;
    cur = next;
    if (cur.carrier.dim() == 0) break;
  }
  return series;
}

/// Class c when gamma_{c+1} = 0 != gamma_c; empty when the series stabilizes
/// at a nonzero term.
template <class S>
std::optional<int> nilpotency_class(const LeibnizAlgebra<S>& g, const Ideal<S>& n) {
  auto series = lower_central_series(g, n);
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series[i].dim() == 0) return static_cast<int>(i);  // gamma_{i+1} is series[i]
  return std::nullopt;
}

template <class S>
Subspace<S> lie_gamma2(const LeibnizAlgebra<S>& g) {
  return lie_commutator_ideal(g, full_ideal(g), full_ideal(g)).carrier;
}

template <class S>
struct QuotientResult {
  LeibnizAlgebra<S> algebra;
  DenseMatrix<S> projection;  // q x n
  DenseMatrix<S> lift;        // n x q, section of the projection on complement coordinates
};

/// Quotient on the complement of the ideal's pivot coordinates.
template <class S>
QuotientResult<S> quotient(const LeibnizAlgebra<S>& g, const Ideal<S>& ideal) {
  const int n = g.dim();
  const DenseMatrix<S>& b = ideal.carrier.basis();
  auto piv = pivot_columns(b);
  std::vector<bool> is_piv(n, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> comp;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) comp.push_back(j);
  const int q = static_cast<int>(comp.size());

  auto project = [&](ColVector<S> x) {
    for (std::size_t r = 0; r < piv.size(); ++r) {
      const S c = x(piv[r]);
      if (!is_zero(c)) x -= c * b.row(r).transpose();
    }
    ColVector<S> y(q);
    for (int a = 0; a < q; ++a) y(a) = x(comp[a]);
    return y;
  };

  std::vector<std::string> names;
  for (int a = 0; a < q; ++a) names.push_back(g.table().basis_names()[comp[a]]);
  StructureTable<S> t(q, names);
  for (int a = 0; a < q; ++a)
    for (int c = 0; c < q; ++c)
      t.set_product(a, c, project(g.table().product_basis(comp[a], comp[c])));
  DenseMatrix<S> pi(q, n);
  for (int j = 0; j < n; ++j) pi.col(j) = project(ColVector<S>::Unit(n, j));
  DenseMatrix<S> lift = DenseMatrix<S>::Constant(n, q, S(0));
  for (int a = 0; a < q; ++a) lift(comp[a], a) = S(1);
  return QuotientResult<S>{LeibnizAlgebra<S>(std::move(t)), std::move(pi), std::move(lift)};
}

template <class S>
StructureTable<S> direct_sum_table(const StructureTable<S>& a, const StructureTable<S>& b) {
  const int n1 = a.dim(), n2 = b.dim(), n = n1 + n2;
  std::vector<std::string> names;
  for (auto& s : a.basis_names()) names.push_back(s + ".1");
  for (auto& s : b.basis_names()) names.push_back(s + ".2");
  StructureTable<S> t(n, names);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      ColVector<S> v = ColVector<S>::Constant(n, S(0));
      v.head(n1) = a.product_basis(i, j);
      t.set_product(i, j, v);
    }
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) {
      ColVector<S> v = ColVector<S>::Constant(n, S(0));
      v.tail(n2) = b.product_basis(i, j);
      t.set_product(n1 + i, n1 + j, v);
    }
  return t;
}

template <class S>
LeibnizAlgebra<S> direct_sum(const LeibnizAlgebra<S>& a, const LeibnizAlgebra<S>& b) {
  return LeibnizAlgebra<S>(direct_sum_table(a.table(), b.table()));
}

/// The Lie algebra g / ann, certified antisymmetric on basis pairs.
template <class S>
LeibnizAlgebra<S> liesation(const LeibnizAlgebra<S>& g) {
  Ideal<S> ann = make_ideal(g, ann_subspace(g));
  auto q = quotient(g, ann);
  const int m = q.algebra.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (q.algebra.table().product_basis(i, j) != (-q.algebra.table().product_basis(j, i)).eval())
        throw std::logic_error("liesation quotient is not antisymmetric");
  return q.algebra;
}

}  // namespace leibalg
