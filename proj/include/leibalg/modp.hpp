#pragma once

#include "leibalg/algebra.hpp"

#include <cstdint>
#include <functional>

namespace leibalg {

/// Reduction Q -> F_p; empty when the denominator vanishes mod p.
inline std::optional<Fp> reduce_mod_p(const Rational& q, std::int64_t p) {
  using boost::multiprecision::mpz_int;
  mpz_int num = boost::multiprecision::numerator(q);
  mpz_int den = boost::multiprecision::denominator(q);
  mpz_int dp = den % p;
  if (dp == 0) return std::nullopt;
  mpz_int np = num % p;
  Fp n(static_cast<std::int64_t>(np), p);
  Fp d(static_cast<std::int64_t>(dp), p);
  return n / d;
}

template <class Derived>
std::optional<DenseMatrix<Fp>> reduce_mod_p(const Eigen::MatrixBase<Derived>& m, std::int64_t p) {
  DenseMatrix<Fp> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      auto r = reduce_mod_p(Rational(m(i, j)), p);
      if (!r) return std::nullopt;
      out(i, j) = *r;
    }
  return out;
}

inline std::optional<StructureTable<Fp>> reduce_mod_p(const StructureTable<Rational>& t,
                                                      std::int64_t p) {
  StructureTable<Fp> out(t.dim(), t.basis_names());
  for (int i = 0; i < t.dim(); ++i) {
    auto m = reduce_mod_p(t.left_mult(i), p);
    if (!m) return std::nullopt;
    for (int j = 0; j < t.dim(); ++j) out.set_product(i, j, m->col(j));
  }
  return out;
}

inline std::optional<LeibnizAlgebra<Fp>> reduce_mod_p(const LeibnizAlgebra<Rational>& g,
                                                      std::int64_t p) {
  auto t = reduce_mod_p(g.table(), p);
  if (!t) return std::nullopt;
  return LeibnizAlgebra<Fp>(std::move(*t));
}

/// Calls fn for every vector of F_p^n.
inline void for_each_fp_vector(int n, std::int64_t p,
                               const std::function<void(const ColVector<Fp>&)>& fn) {
  ColVector<Fp> v(n);
  std::vector<std::int64_t> digits(n, 0);
  for (;;) {
    for (int i = 0; i < n; ++i) v(i) = Fp(digits[i], p);
    fn(v);
    int i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) break;
  }
}

/// The defining identity of each operator space, checked at every point of
/// F_p^n x F_p^n. These are the exhaustive soundness oracles for the
/// basis-pair solvers.
enum class SpaceIdentity { der, centroid, qcentroid, qder, gender };

inline bool check_identity_everywhere(const LeibnizAlgebra<Fp>& g, std::int64_t p,
                                      SpaceIdentity kind, const DenseMatrix<Fp>& f,
                                      const DenseMatrix<Fp>* f1 = nullptr,
                                      const DenseMatrix<Fp>* f2 = nullptr) {
  const int n = g.dim();
  bool ok = true;
  for_each_fp_vector(n, p, [&](const ColVector<Fp>& x) {
    if (!ok) return;
    for_each_fp_vector(n, p, [&](const ColVector<Fp>& y) {
      if (!ok) return;
      ColVector<Fp> w = g.lie_bracket(x, y);
      ColVector<Fp> dx_y = g.lie_bracket((f * x).eval(), y);
      ColVector<Fp> x_dy = g.lie_bracket(x, (f * y).eval());
      switch (kind) {
        case SpaceIdentity::der:
          ok = (f * w).eval() == (dx_y + x_dy).eval();
          break;
        case SpaceIdentity::centroid:
          ok = (f * w).eval() == dx_y && dx_y == x_dy;
          break;
        case SpaceIdentity::qcentroid:
          ok = dx_y == x_dy;
          break;
        case SpaceIdentity::qder:
          ok = f1 && (dx_y + x_dy).eval() == (*f1 * w).eval();
          break;
        case SpaceIdentity::gender:
          ok = f1 && f2 &&
               (dx_y + g.lie_bracket(x, (*f2 * y).eval())).eval() == (*f1 * w).eval();
          break;
      }
    });
  });
  return ok;
}

/// Membership d(x) in [x, g]_Lie at every x of F_p^n. Returns the first
/// failing point through `witness` when provided.
inline bool check_pointwise_everywhere(const LeibnizAlgebra<Fp>& g, std::int64_t p,
                                       const DenseMatrix<Fp>& d,
                                       ColVector<Fp>* witness = nullptr) {
  const int n = g.dim();
  bool ok = true;
  for_each_fp_vector(n, p, [&](const ColVector<Fp>& x) {
    if (!ok) return;
    Subspace<Fp> img = Subspace<Fp>::span(n, g.lie_left_mult(x).transpose().eval());
    if (!img.contains((d * x).eval())) {
      ok = false;
      if (witness) *witness = x;
    }
  });
  return ok;
}

/// Brute-force centres by exhaustive enumeration, for cross-checking the
/// nullspace computations at small dimension.
inline Centres<Fp> centres_brute_force(const LeibnizAlgebra<Fp>& g, std::int64_t p) {
  const int n = g.dim();
  std::vector<RowVector<Fp>> zl, zle, zr;
  const ColVector<Fp> zero = ColVector<Fp>::Constant(n, Fp(0, p));
  for_each_fp_vector(n, p, [&](const ColVector<Fp>& z) {
    bool lie = true, left = true, right = true;
    for_each_fp_vector(n, p, [&](const ColVector<Fp>& x) {
      if (lie && g.lie_bracket(x, z) != zero) lie = false;
      if (right && g.bracket(x, z) != zero) right = false;
      if (left && g.bracket(z, x) != zero) left = false;
    });
    if (lie) zl.push_back(z.transpose());
    if (left) zle.push_back(z.transpose());
    if (right) zr.push_back(z.transpose());
  });
  auto to_space = [&](const std::vector<RowVector<Fp>>& rows) {
    DenseMatrix<Fp> m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i];
    return Subspace<Fp>::span(n, std::move(m));
  };
  Centres<Fp> c{to_space(zl), to_space(zle), to_space(zr), Subspace<Fp>::zero(n)};
  c.z = c.z_left.intersect(c.z_right);
  return c;
}

}  // namespace leibalg
