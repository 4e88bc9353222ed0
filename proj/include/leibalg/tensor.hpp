#pragma once

#include "leibalg/spaces.hpp"

namespace leibalg {

/// The tensor product Leibniz algebra of a commutative associative algebra A
/// (dim m) and a Leibniz algebra g (dim n), with basis a_i (x) g_k at index
/// i*n + k (A index major).
template <class S>
struct TensorAlgebra {
  AssocCommAlgebra<S> a;
  LeibnizAlgebra<S> g;
  LeibnizAlgebra<S> product;
};

template <class S>
TensorAlgebra<S> tensor_algebra(const AssocCommAlgebra<S>& a, const LeibnizAlgebra<S>& g) {
  const int m = a.dim(), n = g.dim();
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k)
      names.push_back(a.table().basis_names()[i] + "(x)" + g.table().basis_names()[k]);
  StructureTable<S> t(m * n, names);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < n; ++l) {
          ColVector<S> pa = a.table().product_basis(i, j);
          ColVector<S> pg = g.table().product_basis(k, l);
          ColVector<S> out = ColVector<S>::Constant(m * n, S(0));
          for (int r = 0; r < m; ++r)
            if (!is_zero(pa(r))) out.segment(r * n, n) += pa(r) * pg;
          t.set_product(i * n + k, j * n + l, out);
        }
  return TensorAlgebra<S>{a, g, LeibnizAlgebra<S>(std::move(t))};
}

/// Centroid of a commutative associative algebra: f(ab) = f(a)b = a f(b).
template <class S>
OperatorSpace<S> assoc_centroid(const AssocCommAlgebra<S>& a) {
  const int m = a.dim();
  EchelonAccumulator<S> acc(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      ColVector<S> w = a.table().product_basis(i, j);
      std::vector<std::tuple<int, int, DenseMatrix<S>>> fw;
      for (int k = 0; k < m; ++k)
        if (!is_zero(w(k))) fw.emplace_back(0, k, (w(k) * DenseMatrix<S>::Identity(m, m)).eval());
      auto t1 = fw;
      t1.emplace_back(0, j, (-a.table().left_mult(i)).eval());
      detail::add_condition(acc, m, 1, t1);
      auto t2 = fw;
      t2.emplace_back(0, i, (-a.table().left_mult(j)).eval());
      detail::add_condition(acc, m, 1, t2);
    }
  return OperatorSpace<S>(m, nullspace(acc));
}

/// f (x)~ phi acting on the fixed A-major basis order.
template <class S>
DenseMatrix<S> embed_tensor_operator(const DenseMatrix<S>& f, const DenseMatrix<S>& phi) {
  return kron(f, phi);
}

template <class S>
struct TensorCentroidReport {
  OperatorSpace<S> gamma;          // Gamma^Lie(A (x) g), solved directly
  OperatorSpace<S> embedded;       // span of Gamma(A) (x) Gamma^Lie(g)
  OperatorSpace<S> psi_embedded;   // A (x) Psi + End(A) (x) Der_z^Lie(g)
  bool embedded_included = false;
  bool psi_included = false;
  bool unital = false;
  bool gamma2_nonzero = false;
  bool centroid_scalar = false;
  bool equality_expected = false;  // unital, gamma2 != 0, Gamma^Lie(g) scalar
  bool equality = false;
  std::optional<DenseMatrix<S>> strict_witness;  // gamma element outside embedded
};

template <class S>
TensorCentroidReport<S> tensor_centroid_compare(const TensorAlgebra<S>& t) {
  const int m = t.a.dim(), n = t.g.dim(), mn = m * n;
  OperatorSpace<S> gamma_a = assoc_centroid(t.a);
  OperatorSpace<S> gamma_g = centroid_lie(t.g);
  OperatorSpace<S> gamma = centroid_lie(t.product);

  std::vector<DenseMatrix<S>> emb;
  for (int i = 0; i < gamma_a.dim(); ++i)
    for (int j = 0; j < gamma_g.dim(); ++j)
      emb.push_back(embed_tensor_operator(gamma_a.basis_matrix(i), gamma_g.basis_matrix(j)));
  OperatorSpace<S> embedded =
      emb.empty() ? OperatorSpace<S>::zero(mn) : OperatorSpace<S>::span_matrices(mn, emb);

  auto decomp = centroid_decomposition(t.g);
  std::vector<DenseMatrix<S>> psi_emb;
  for (int i = 0; i < m; ++i)
    for (const auto& psi : decomp.psi_basis)
      psi_emb.push_back(embed_tensor_operator(t.a.table().left_mult(i), psi));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      for (const auto& d : decomp.der_z_basis) {
        DenseMatrix<S> e = DenseMatrix<S>::Constant(m, m, S(0));
        e(r, c) = S(1);
        psi_emb.push_back(embed_tensor_operator(e, d));
      }
  OperatorSpace<S> psi_embedded =
      psi_emb.empty() ? OperatorSpace<S>::zero(mn) : OperatorSpace<S>::span_matrices(mn, psi_emb);

  TensorCentroidReport<S> rep{gamma, embedded, psi_embedded};
  rep.embedded_included = embedded.leq(gamma);
  rep.psi_included = psi_embedded.leq(gamma);
  rep.unital = t.a.unit().has_value();
  rep.gamma2_nonzero = lie_gamma2(t.g).dim() > 0;
  OperatorSpace<S> scalars = OperatorSpace<S>::span_matrices(
      n, {DenseMatrix<S>::Identity(n, n)});
  rep.centroid_scalar = gamma_g == scalars;
  rep.equality_expected = rep.unital && rep.gamma2_nonzero && rep.centroid_scalar;
  rep.equality = gamma == embedded;
  if (!rep.equality)
    for (int i = 0; i < gamma.dim(); ++i)
      if (!embedded.contains(gamma.basis_matrix(i))) {
        rep.strict_witness = gamma.basis_matrix(i);
        break;
      }
  return rep;
}

/// Fibre components of phi in Gamma^Lie(A (x) g) for unital A:
/// phi(1 (x) g_k) = sum_i a_i (x) phi_i(g_k); each phi_i certified to lie in
/// Gamma^Lie(g).
template <class S>
std::vector<DenseMatrix<S>> tensor_fiber_components(const TensorAlgebra<S>& t,
                                                    const DenseMatrix<S>& phi) {
  const int m = t.a.dim(), n = t.g.dim();
  if (!t.a.unit()) throw std::invalid_argument("fibre components need a unital A");
  if (!centroid_lie(t.product).contains(phi))
    throw std::invalid_argument("map is not in the Lie-centroid of the tensor product");
  const ColVector<S>& u = *t.a.unit();
  std::vector<DenseMatrix<S>> comps(m, DenseMatrix<S>(n, n));
  for (int k = 0; k < n; ++k) {
    ColVector<S> src = ColVector<S>::Constant(m * n, S(0));
    for (int i = 0; i < m; ++i) src(i * n + k) = u(i);
    ColVector<S> img = phi * src;
    for (int i = 0; i < m; ++i) comps[i].col(k) = img.segment(i * n, n);
  }
  OperatorSpace<S> gamma_g = centroid_lie(t.g);
  for (const auto& c : comps)
    if (!gamma_g.contains(c)) throw std::logic_error("fibre component escapes the Lie-centroid");
  return comps;
}

/// gamma_2 of the tensor product, computed both via the series on the product
/// and as the block span A (x) gamma_2(g); equality asserted.
template <class S>
Subspace<S> tensor_gamma2(const TensorAlgebra<S>& t) {
  const int m = t.a.dim(), n = t.g.dim();
  Subspace<S> direct = lie_gamma2(t.product);
  Subspace<S> g2 = lie_gamma2(t.g);
  DenseMatrix<S> rows = DenseMatrix<S>::Constant(m * g2.dim(), m * n, S(0));
  for (int i = 0; i < m; ++i)
    for (int b = 0; b < g2.dim(); ++b)
      rows.row(i * g2.dim() + b).segment(i * n, n) = g2.basis().row(b);
  Subspace<S> block = Subspace<S>::span(m * n, std::move(rows));
  if (direct != block) throw std::logic_error("tensor gamma_2 block formula fails");
  return direct;
}

/// Evaluation f -> f(1) on the centroid of a unital A; bijectivity reported
/// as the rank of the evaluation matrix.
template <class S>
bool assoc_centroid_unital_iso(const AssocCommAlgebra<S>& a) {
  if (!a.unit()) return false;
  OperatorSpace<S> gamma = assoc_centroid(a);
  if (gamma.dim() != a.dim()) return false;
  DenseMatrix<S> ev(gamma.dim(), a.dim());
  for (int i = 0; i < gamma.dim(); ++i)
    ev.row(i) = (gamma.basis_matrix(i) * *a.unit()).transpose();
  return rank(ev) == a.dim();
}

}  // namespace leibalg
