#pragma once

#include "leibalg/algebra.hpp"

#include <cstdint>
#include <random>
#include <tuple>

namespace leibalg {

/// Column-major vectorization of an n x n matrix (the image of e_1 first).
template <class S>
RowVector<S> vec(const DenseMatrix<S>& m) {
  const int n = static_cast<int>(m.rows());
  RowVector<S> v(n * m.cols());
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < n; ++r) v(c * n + r) = m(r, c);
  return v;
}

template <class S>
DenseMatrix<S> unvec(const RowVector<S>& v, int n) {
  DenseMatrix<S> m(n, static_cast<int>(v.size()) / n);
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < n; ++r) m(r, c) = v(c * n + r);
  return m;
}

/// A linear subspace of End(K^n), canonicalized as the RREF of the
/// column-major vectorizations of its elements.
template <class S>
class OperatorSpace {
public:
  OperatorSpace(int n, Subspace<S> vecs) : n_(n), vecs_(std::move(vecs)) {
    if (vecs_.ambient_dim() != n * n) throw std::invalid_argument("operator space ambient mismatch");
  }

  static OperatorSpace span_matrices(int n, const std::vector<DenseMatrix<S>>& mats) {
    DenseMatrix<S> rows(mats.size(), n * n);
    for (std::size_t i = 0; i < mats.size(); ++i) rows.row(i) = vec(mats[i]);
    return OperatorSpace(n, Subspace<S>::span(n * n, std::move(rows)));
  }

  static OperatorSpace zero(int n) { return OperatorSpace(n, Subspace<S>::zero(n * n)); }
  static OperatorSpace full(int n) { return OperatorSpace(n, Subspace<S>::full(n * n)); }

  int op_dim() const { return n_; }
  int dim() const { return vecs_.dim(); }
  const Subspace<S>& vec_space() const { return vecs_; }
  DenseMatrix<S> basis_matrix(int i) const { return unvec<S>(vecs_.basis().row(i), n_); }
  std::vector<DenseMatrix<S>> basis_matrices() const {
    std::vector<DenseMatrix<S>> out;
    for (int i = 0; i < dim(); ++i) out.push_back(basis_matrix(i));
    return out;
  }

  bool contains(const DenseMatrix<S>& m) const { return vecs_.contains(vec(m).transpose()); }
  bool leq(const OperatorSpace& o) const { return vecs_.leq(o.vecs_); }
  OperatorSpace intersect(const OperatorSpace& o) const {
    return OperatorSpace(n_, vecs_.intersect(o.vecs_));
  }
  OperatorSpace sum(const OperatorSpace& o) const { return OperatorSpace(n_, vecs_.sum(o.vecs_)); }
  bool operator==(const OperatorSpace& o) const { return n_ == o.n_ && vecs_ == o.vecs_; }
  bool operator!=(const OperatorSpace& o) const { return !(*this == o); }

  /// Conjugated space P^{-1} S P, canonicalized.
  OperatorSpace conjugate(const DenseMatrix<S>& p_inv, const DenseMatrix<S>& p) const {
    std::vector<DenseMatrix<S>> mats;
    for (int i = 0; i < dim(); ++i) mats.push_back(p_inv * basis_matrix(i) * p);
    return span_matrices(n_, mats);
  }

private:
  int n_;
  Subspace<S> vecs_;
};

namespace detail {

/// Adds the rows of the linear condition sum_k M_k u_{b_k}(e_{k}) = 0 on
/// block-structured matrix unknowns (each block an n x n matrix, vectorized
/// column-major, blocks laid out consecutively).
template <class S>
void add_condition(EchelonAccumulator<S>& acc, int n, int blocks,
                   const std::vector<std::tuple<int, int, DenseMatrix<S>>>& terms) {
  if (terms.empty()) return;
  const int rows = static_cast<int>(std::get<2>(terms.front()).rows());
  DenseMatrix<S> cond = DenseMatrix<S>::Constant(rows, blocks * n * n, S(0));
  for (const auto& [block, k, m] : terms)
    cond.middleCols(block * n * n + k * n, n) += m;
  for (int r = 0; r < rows; ++r) acc.add_row(cond.row(r));
}

template <class S>
std::vector<DenseMatrix<S>> lie_mults(const LeibnizAlgebra<S>& g) {
  std::vector<DenseMatrix<S>> lb;
  for (int i = 0; i < g.dim(); ++i) lb.push_back(g.lie_left_mult(i));
  return lb;
}

}  // namespace detail

/// Lie-derivations: d([x,y]_Lie) = [d(x),y]_Lie + [x,d(y)]_Lie.
template <class S>
EchelonAccumulator<S> der_lie_system(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  auto lb = detail::lie_mults(g);
  EchelonAccumulator<S> acc(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ColVector<S> w = lb[i].col(j);
      std::vector<std::tuple<int, int, DenseMatrix<S>>> terms;
      for (int k = 0; k < n; ++k)
        if (!is_zero(w(k))) terms.emplace_back(0, k, (w(k) * DenseMatrix<S>::Identity(n, n)).eval());
      terms.emplace_back(0, i, (-lb[j]).eval());
      terms.emplace_back(0, j, (-lb[i]).eval());
      detail::add_condition(acc, n, 1, terms);
    }
  return acc;
}

template <class S>
OperatorSpace<S> der_lie(const LeibnizAlgebra<S>& g) {
  return OperatorSpace<S>(g.dim(), nullspace(der_lie_system(g)));
}

/// Lie-centroid: d([x,y]_Lie) = [d(x),y]_Lie = [x,d(y)]_Lie.
template <class S>
OperatorSpace<S> centroid_lie(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  auto lb = detail::lie_mults(g);
  EchelonAccumulator<S> acc(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ColVector<S> w = lb[i].col(j);
      std::vector<std::tuple<int, int, DenseMatrix<S>>> dw;
      for (int k = 0; k < n; ++k)
        if (!is_zero(w(k))) dw.emplace_back(0, k, (w(k) * DenseMatrix<S>::Identity(n, n)).eval());
      auto t1 = dw;
      t1.emplace_back(0, i, (-lb[j]).eval());
      detail::add_condition(acc, n, 1, t1);
      auto t2 = dw;
      t2.emplace_back(0, j, (-lb[i]).eval());
      detail::add_condition(acc, n, 1, t2);
    }
  return OperatorSpace<S>(n, nullspace(acc));
}

/// Quasi-Lie-centroid: [d(x),y]_Lie = [x,d(y)]_Lie.
template <class S>
OperatorSpace<S> qcentroid_lie(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  auto lb = detail::lie_mults(g);
  EchelonAccumulator<S> acc(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      detail::add_condition<S>(acc, n, 1, {{0, i, lb[j]}, {0, j, (-lb[i]).eval()}});
  return OperatorSpace<S>(n, nullspace(acc));
}

/// Quasi-Lie-derivations: nullspace over the witness pair (f, f'),
/// projected onto f.
template <class S>
OperatorSpace<S> qder_lie(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  auto lb = detail::lie_mults(g);
  EchelonAccumulator<S> acc(2 * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ColVector<S> w = lb[i].col(j);
      std::vector<std::tuple<int, int, DenseMatrix<S>>> terms{
          {0, i, lb[j]}, {0, j, lb[i]}};
      for (int k = 0; k < n; ++k)
        if (!is_zero(w(k))) terms.emplace_back(1, k, (-w(k) * DenseMatrix<S>::Identity(n, n)).eval());
      detail::add_condition(acc, n, 2, terms);
    }
  return OperatorSpace<S>(n, solve_and_project(acc.matrix(), 0, n * n));
}

/// Witness f' with [f(x),y]_Lie + [x,f(y)]_Lie = f'([x,y]_Lie), if one exists.
template <class S>
std::optional<DenseMatrix<S>> qder_witness(const LeibnizAlgebra<S>& g, const DenseMatrix<S>& f) {
  const int n = g.dim();
  auto lb = detail::lie_mults(g);
  const int pairs = n * (n + 1) / 2;
  DenseMatrix<S> a = DenseMatrix<S>::Constant(pairs * n, n * n, S(0));
  ColVector<S> b(pairs * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ColVector<S> w = lb[i].col(j);
      ColVector<S> rhs = lb[j] * f.col(i) + lb[i] * f.col(j);
      for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) a(row + r, k * n + r) = w(k);
        b(row + r) = rhs(r);
      }
      row += n;
    }
  auto x = linear_solve(a, b);
  if (!x) return std::nullopt;
  return unvec<S>(x->transpose(), n);
}

/// Generalised Lie-derivations: nullspace over (f, f', f''), projected onto f.
template <class S>
OperatorSpace<S> gender_lie(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  auto lb = detail::lie_mults(g);
  EchelonAccumulator<S> acc(3 * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ColVector<S> w = lb[i].col(j);
      std::vector<std::tuple<int, int, DenseMatrix<S>>> terms{
          {0, i, lb[j]}, {2, j, lb[i]}};
      for (int k = 0; k < n; ++k)
        if (!is_zero(w(k))) terms.emplace_back(1, k, (-w(k) * DenseMatrix<S>::Identity(n, n)).eval());
      detail::add_condition(acc, n, 3, terms);
    }
  return OperatorSpace<S>(n, solve_and_project(acc.matrix(), 0, n * n));
}

/// Witness pair (f', f'') for membership of f in the generalised
/// Lie-derivations, if one exists.
template <class S>
std::optional<std::pair<DenseMatrix<S>, DenseMatrix<S>>> gender_witness(const LeibnizAlgebra<S>& g,
                                                                        const DenseMatrix<S>& f) {
  const int n = g.dim();
  auto lb = detail::lie_mults(g);
  DenseMatrix<S> a = DenseMatrix<S>::Constant(n * n * n, 2 * n * n, S(0));
  ColVector<S> b(n * n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ColVector<S> w = lb[i].col(j);
      ColVector<S> rhs = -(lb[j] * f.col(i));
      for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) a(row + r, k * n + r) = -w(k);      // f' block
        for (int s = 0; s < n; ++s) a(row + r, n * n + j * n + s) = lb[i](r, s);  // f'' block
        b(row + r) = rhs(r);
      }
      row += n;
    }
  auto x = linear_solve(a, b);
  if (!x) return std::nullopt;
  return std::make_pair(unvec<S>(x->head(n * n).transpose(), n),
                        unvec<S>(x->tail(n * n).transpose(), n));
}

/// Maps with every basis image inside a fixed subspace.
template <class S>
OperatorSpace<S> maps_into(int n, const Subspace<S>& target) {
  DenseMatrix<S> c = target.constraint_matrix();
  EchelonAccumulator<S> acc(n * n);
  for (int i = 0; i < n; ++i) detail::add_condition<S>(acc, n, 1, {{0, i, c}});
  return OperatorSpace<S>(n, nullspace(acc));
}

/// Maps vanishing on a subspace.
template <class S>
OperatorSpace<S> maps_killing(int n, const Subspace<S>& kill) {
  EchelonAccumulator<S> acc(n * n);
  for (int a = 0; a < kill.dim(); ++a) {
    ColVector<S> v = kill.basis_vector(a);
    std::vector<std::tuple<int, int, DenseMatrix<S>>> terms;
    for (int k = 0; k < n; ++k)
      if (!is_zero(v(k))) terms.emplace_back(0, k, (v(k) * DenseMatrix<S>::Identity(n, n)).eval());
    detail::add_condition(acc, n, 1, terms);
  }
  return OperatorSpace<S>(n, nullspace(acc));
}

/// Lie-central derivations: Lie-derivations with image in the Lie-centre.
template <class S>
OperatorSpace<S> der_z_lie(const LeibnizAlgebra<S>& g) {
  return der_lie(g).intersect(maps_into(g.dim(), centres(g).z_lie));
}

/// The equivalent description {d : d(gamma_2) = 0, im d in Z_Lie}.
template <class S>
OperatorSpace<S> der_z_closed_form(const LeibnizAlgebra<S>& g) {
  return maps_killing(g.dim(), lie_gamma2(g)).intersect(maps_into(g.dim(), centres(g).z_lie));
}

template <class S>
struct MultOperators {
  std::vector<DenseMatrix<S>> left;
  std::vector<DenseMatrix<S>> right;
};

template <class S>
MultOperators<S> mult_operators(const LeibnizAlgebra<S>& g) {
  MultOperators<S> m;
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    m.left.push_back(g.table().left_mult(i));
    m.right.push_back(g.table().right_mult(ColVector<S>::Unit(n, i)));
  }
  return m;
}

template <class S>
OperatorSpace<S> rl_span(const LeibnizAlgebra<S>& g) {
  auto m = mult_operators(g);
  std::vector<DenseMatrix<S>> sums;
  for (std::size_t i = 0; i < m.left.size(); ++i) sums.push_back(m.right[i] + m.left[i]);
  return OperatorSpace<S>::span_matrices(g.dim(), sums);
}

/// Inner Lie-derivations span{[e_i, -]_Lie}; only defined when
/// [[x,y]_Lie, z] = 0 (equivalently gamma_2 in Z). Returns the violating
/// triple otherwise.
template <class S>
std::pair<std::optional<OperatorSpace<S>>, std::optional<IdentityFailure>> ider_lie(
    const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ColVector<S> w = g.lie_bracket(ColVector<S>::Unit(n, i), ColVector<S>::Unit(n, j));
      const ColVector<S> zero = ColVector<S>::Constant(n, S(0));
      for (int k = 0; k < n; ++k) {
        ColVector<S> ek = ColVector<S>::Unit(n, k);
        if (g.bracket(w, ek) != zero)
          return {std::nullopt, IdentityFailure{"[[x,y]_Lie,z] = 0", i, j, k}};
        if (g.bracket(ek, w) != zero)
          return {std::nullopt, IdentityFailure{"[z,[x,y]_Lie] = 0", i, j, k}};
      }
    }
  auto lb = detail::lie_mults(g);
  OperatorSpace<S> space = OperatorSpace<S>::span_matrices(n, lb);
  OperatorSpace<S> ders = der_lie(g);
  for (const auto& d : lb)
    if (!ders.contains(d)) throw std::logic_error("inner map is not a Lie-derivation");
  return {space, std::nullopt};
}

/// Certificate of the sample-then-verify scheme behind the almost inner
/// Lie-derivation (and T_c) computations.
struct PointwiseCertificate {
  std::uint64_t seed = 0;
  int sample_count = 0;
  int refinement_rounds = 0;
  std::vector<std::pair<std::int64_t, bool>> prime_results;  // (p, exhaustive pass)
  bool exhaustive = false;  // false = sampled-only (dimension too large)
  bool passed() const {
    if (!exhaustive) return false;
    for (auto& [p, ok] : prime_results)
      if (!ok) return false;
    return !prime_results.empty();
  }
};

namespace detail {

/// Adds the constraint d(x) in [x, g]_Lie for one sample point x.
template <class S>
void add_pointwise_sample(EchelonAccumulator<S>& acc, const LeibnizAlgebra<S>& g,
                          const ColVector<S>& x, const Subspace<S>& target) {
  const int n = g.dim();
  DenseMatrix<S> c = target.constraint_matrix();
  if (c.rows() == 0) return;
  std::vector<std::tuple<int, int, DenseMatrix<S>>> terms;
  for (int k = 0; k < n; ++k)
    if (!is_zero(x(k))) terms.emplace_back(0, k, (x(k) * c).eval());
  add_condition(acc, n, 1, terms);
}

template <class S>
Subspace<S> lie_image_of(const LeibnizAlgebra<S>& g, const ColVector<S>& x) {
  return Subspace<S>::span(g.dim(), g.lie_left_mult(x).transpose().eval());
}

}  // namespace detail

/// Linear maps vanishing on `kill` with image in `into` (i.e. the full Hom
/// space from the quotient by `kill` into the target, carried by n x n
/// matrices on g).
template <class S>
OperatorSpace<S> hom_space(const LeibnizAlgebra<S>& g, const Ideal<S>& kill,
                           const Subspace<S>& into) {
  return maps_killing(g.dim(), kill.carrier).intersect(maps_into(g.dim(), into));
}

template <class S>
struct CentroidDecomposition {
  std::vector<DenseMatrix<S>> der_z_basis;
  std::vector<DenseMatrix<S>> psi_basis;
};

/// Gamma = Der_z + Psi with Psi a maximal subset of the centroid basis whose
/// restrictions to gamma_2 are linearly independent; the direct-sum property
/// is asserted.
template <class S>
CentroidDecomposition<S> centroid_decomposition(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  OperatorSpace<S> gamma = centroid_lie(g);
  OperatorSpace<S> derz = der_z_lie(g);
  Subspace<S> g2 = lie_gamma2(g);
  CentroidDecomposition<S> out;
  out.der_z_basis = derz.basis_matrices();
  EchelonAccumulator<S> restr(n * g2.dim() == 0 ? 1 : n * g2.dim());
  for (int i = 0; i < gamma.dim(); ++i) {
    DenseMatrix<S> phi = gamma.basis_matrix(i);
    if (g2.dim() == 0) break;
    DenseMatrix<S> on_g2(n, g2.dim());
    for (int a = 0; a < g2.dim(); ++a) on_g2.col(a) = phi * g2.basis_vector(a);
    if (restr.add_row(vec(on_g2))) out.psi_basis.push_back(phi);
  }
  if (static_cast<int>(out.der_z_basis.size() + out.psi_basis.size()) != gamma.dim())
    throw std::logic_error("centroid decomposition dimensions do not add up");
  if (!out.psi_basis.empty()) {
    OperatorSpace<S> psi = OperatorSpace<S>::span_matrices(n, out.psi_basis);
    if (psi.intersect(derz).dim() != 0)
      throw std::logic_error("centroid decomposition is not direct");
  }
  return out;
}

/// Unique induced map on the quotient for any f preserving the ideal;
/// empty when f does not preserve it.
template <class S>
std::optional<DenseMatrix<S>> pushforward(const LeibnizAlgebra<S>& g, const Ideal<S>& ideal,
                                          const QuotientResult<S>& q, const DenseMatrix<S>& f) {
  for (int a = 0; a < ideal.carrier.dim(); ++a)
    if (!ideal.carrier.contains((f * ideal.carrier.basis_vector(a)).eval())) return std::nullopt;
  return (q.projection * f * q.lift).eval();
}

template <class S>
struct CentroidPushforwardReport {
  bool rl_span_onto = false;          // (a) pushforward of R+L spans R+L of the quotient
  bool images_in_centroid = false;    // (b) pushforwards land in the quotient Lie-centroid
  int preserved_count = 0;            // centroid elements preserving the ideal
  int centroid_dim = 0;
  bool all_preserve = false;          // (d), meaningful when I = Z_Lie
  bool kernel_annihilates_gamma2 = false;  // (ii), when I in Z_Lie and pushforward = 0
};

template <class S>
CentroidPushforwardReport<S> centroid_pushforward(const LeibnizAlgebra<S>& g,
                                                  const Ideal<S>& ideal) {
  auto q = quotient(g, ideal);
  const LeibnizAlgebra<S>& h = q.algebra;
  CentroidPushforwardReport<S> rep;

  std::vector<DenseMatrix<S>> pushed_rl;
  auto m = mult_operators(g);
  for (std::size_t i = 0; i < m.left.size(); ++i) {
    auto bar = pushforward(g, ideal, q, (m.right[i] + m.left[i]).eval());
    if (!bar) throw std::logic_error("R+L operator does not preserve a two-sided ideal");
    pushed_rl.push_back(*bar);
  }
  rep.rl_span_onto =
      OperatorSpace<S>::span_matrices(h.dim(), pushed_rl) == rl_span(h);

  OperatorSpace<S> gamma = centroid_lie(g);
  OperatorSpace<S> gamma_h = centroid_lie(h);
  Subspace<S> g2 = lie_gamma2(g);
  bool in_z = ideal.carrier.leq(centres(g).z_lie);
  rep.centroid_dim = gamma.dim();
  rep.images_in_centroid = true;
  rep.kernel_annihilates_gamma2 = true;
  for (int i = 0; i < gamma.dim(); ++i) {
    DenseMatrix<S> phi = gamma.basis_matrix(i);
    auto bar = pushforward(g, ideal, q, phi);
    if (!bar) continue;
    ++rep.preserved_count;
    if (!gamma_h.contains(*bar)) rep.images_in_centroid = false;
    if (in_z && *bar == DenseMatrix<S>::Constant(h.dim(), h.dim(), S(0)).eval()) {
      for (int a = 0; a < g2.dim(); ++a)
        if ((phi * g2.basis_vector(a)).eval() != ColVector<S>::Constant(g.dim(), S(0)).eval())
          rep.kernel_annihilates_gamma2 = false;
    }
  }
  rep.all_preserve = rep.preserved_count == rep.centroid_dim;
  return rep;
}

/// Gram matrices G with f([a,c]_Lie, b) + f(a, [b,c]_Lie) = 0, i.e.
/// Lb_k^T G + G Lb_k = 0 for every basis index k.
template <class S>
OperatorSpace<S> invariant_bilinear_forms(const LeibnizAlgebra<S>& g) {
  const int n = g.dim();
  auto lb = detail::lie_mults(g);
  EchelonAccumulator<S> acc(n * n);
  for (int k = 0; k < n; ++k) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        RowVector<S> row = RowVector<S>::Constant(n * n, S(0));
        for (int s = 0; s < n; ++s) {
          row(c * n + s) += lb[k](s, r);  // coefficient of G(s,c)
          row(s * n + r) += lb[k](s, c);  // coefficient of G(r,s)
        }
        acc.add_row(row);
      }
  }
  return OperatorSpace<S>(n, nullspace(acc));
}

/// f(phi(x), b) = f(x, phi(b)) for x in gamma_2 and all b.
template <class S>
bool check_form_symmetry(const LeibnizAlgebra<S>& g, const DenseMatrix<S>& phi,
                         const DenseMatrix<S>& gram) {
  Subspace<S> g2 = lie_gamma2(g);
  DenseMatrix<S> diff = phi.transpose() * gram - gram * phi;
  for (int a = 0; a < g2.dim(); ++a)
    if ((g2.basis_vector(a).transpose() * diff).eval() !=
        RowVector<S>::Constant(g.dim(), S(0)).eval())
      return false;
  return true;
}

template <class S>
struct IdempotentSplit {
  Subspace<S> kernel;
  Subspace<S> image;
};

/// Splits h along a centroid idempotent: h = ker(phi) + im(phi), both
/// certified two-sided ideals intersecting trivially.
template <class S>
IdempotentSplit<S> idempotent_split(const LeibnizAlgebra<S>& h, const DenseMatrix<S>& phi) {
  const int n = h.dim();
  if ((phi * phi).eval() != phi) throw std::invalid_argument("map is not idempotent");
  if (!centroid_lie(h).contains(phi))
    throw std::invalid_argument("idempotent is not in the Lie-centroid");
  IdempotentSplit<S> out{nullspace<S>(phi), Subspace<S>::span(n, phi.transpose().eval())};
  if (!is_two_sided_ideal(h, out.kernel) || !is_two_sided_ideal(h, out.image))
    throw std::logic_error("idempotent split parts are not two-sided ideals");
  if (out.kernel.intersect(out.image).dim() != 0 ||
      out.kernel.sum(out.image) != Subspace<S>::full(n))
    throw std::logic_error("idempotent split is not a direct decomposition");
  return out;
}

}  // namespace leibalg
