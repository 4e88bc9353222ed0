#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibalg/catalog.hpp"
#include "leibalg/pointwise.hpp"

using namespace leibalg;

namespace {

const std::vector<std::string> kLeibniz = {"L1",  "L2",    "L1p",   "N2b",  "N2c",
                                           "OM5", "ABEL1", "ABEL2", "ABEL3"};

DenseMatrix<Rational> mat2(int a, int b, int c, int d) {
  DenseMatrix<Rational> m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

}  // namespace

TEST_CASE("golden bases on L1") {
  auto g = catalog::leibniz("L1");
  OperatorSpace<Rational> der = der_lie(g);
  OperatorSpace<Rational> gamma = centroid_lie(g);
  OperatorSpace<Rational> qgamma = qcentroid_lie(g);
  OperatorSpace<Rational> qder = qder_lie(g);
  OperatorSpace<Rational> gender = gender_lie(g);

  CHECK(der.dim() == 1);
  CHECK(gamma.dim() == 1);
  CHECK(gamma.contains(mat2(1, 0, 0, 1)));
  CHECK(qgamma.dim() == 3);
  // the (a b / c a) family
  CHECK(qgamma.contains(mat2(1, 0, 0, 1)));
  CHECK(qgamma.contains(mat2(0, 1, 0, 0)));
  CHECK(qgamma.contains(mat2(0, 0, 1, 0)));
  CHECK_FALSE(qgamma.contains(mat2(1, 0, 0, 0)));

  CHECK(qder.dim() == 2);
  CHECK(qder.contains(mat2(0, 0, 0, 1)));
  CHECK_FALSE(der.contains(mat2(0, 0, 0, 1)));

  CHECK(gender.dim() == 4);
  CHECK(gender.contains(mat2(1, 1, 0, 0)));
  CHECK_FALSE(qder.contains(mat2(1, 1, 0, 0)));
}

TEST_CASE("golden bases on L2") {
  auto g = catalog::leibniz("L2");
  OperatorSpace<Rational> der = der_lie(g);
  CHECK(der.dim() == 2);
  CHECK(der == OperatorSpace<Rational>::span_matrices(2, {mat2(2, 0, 0, 1), mat2(0, 1, 0, 0)}));
  OperatorSpace<Rational> derz = der_z_lie(g);
  CHECK(derz.dim() == 1);
  CHECK(derz.contains(mat2(0, 1, 0, 0)));
  OperatorSpace<Rational> gamma = centroid_lie(g);
  CHECK(gamma.dim() == 2);
  CHECK(gamma == OperatorSpace<Rational>::span_matrices(2, {mat2(1, 0, 0, 1), mat2(0, 1, 0, 0)}));
}

TEST_CASE("OM5 golden values") {
  auto g = catalog::leibniz("OM5");
  Subspace<Rational> g2 = lie_gamma2(g);
  DenseMatrix<Rational> expect(2, 5);
  expect.setConstant(Rational(0));
  expect(0, 3) = Rational(1);
  expect(1, 4) = Rational(1);
  CHECK(g2 == Subspace<Rational>::span(5, expect));
  OperatorSpace<Rational> gamma = centroid_lie(g);
  CHECK(gamma.dim() == 1);
  CHECK(gamma.contains(DenseMatrix<Rational>::Identity(5, 5).eval()));
}

TEST_CASE("tower inclusions over the catalog") {
  for (const auto& name : kLeibniz) {
    CAPTURE(name);
    auto g = catalog::leibniz(name);
    OperatorSpace<Rational> der = der_lie(g);
    OperatorSpace<Rational> gamma = centroid_lie(g);
    OperatorSpace<Rational> qgamma = qcentroid_lie(g);
    OperatorSpace<Rational> qder = qder_lie(g);
    OperatorSpace<Rational> gender = gender_lie(g);
    CHECK(der.leq(qder));
    CHECK(gamma.leq(qgamma));
    CHECK(gamma.leq(qder));
    CHECK(qder.leq(gender));
    CHECK(qgamma.leq(gender));
    CHECK(der_z_lie(g) == der.intersect(gamma));
  }
}

TEST_CASE("qder and gender witnesses satisfy their identities on basis pairs") {
  for (const auto& name : {"L1", "L2", "N2b", "OM5"}) {
    CAPTURE(name);
    auto g = catalog::leibniz(name);
    const int n = g.dim();
    auto check_qder = [&](const DenseMatrix<Rational>& f, const DenseMatrix<Rational>& f1) {
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          ColVector<Rational> x = ColVector<Rational>::Unit(n, i);
          ColVector<Rational> y = ColVector<Rational>::Unit(n, j);
          ColVector<Rational> lhs =
              g.lie_bracket((f * x).eval(), y) + g.lie_bracket(x, (f * y).eval());
          CHECK(lhs == (f1 * g.lie_bracket(x, y)).eval());
        }
    };
    OperatorSpace<Rational> qder = qder_lie(g);
    for (int k = 0; k < qder.dim(); ++k) {
      auto w = qder_witness(g, qder.basis_matrix(k));
      REQUIRE(w.has_value());
      check_qder(qder.basis_matrix(k), *w);
    }
    OperatorSpace<Rational> gender = gender_lie(g);
    for (int k = 0; k < gender.dim(); ++k) {
      DenseMatrix<Rational> f = gender.basis_matrix(k);
      auto w = gender_witness(g, f);
      REQUIRE(w.has_value());
      auto [f1, f2] = *w;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          ColVector<Rational> x = ColVector<Rational>::Unit(n, i);
          ColVector<Rational> y = ColVector<Rational>::Unit(n, j);
          ColVector<Rational> lhs =
              g.lie_bracket((f * x).eval(), y) + g.lie_bracket(x, (f2 * y).eval());
          CHECK(lhs == (f1 * g.lie_bracket(x, y)).eval());
        }
    }
  }
}

TEST_CASE("equivariance under basis change") {
  const std::vector<std::string> which = {"der",  "der-z",  "centroid", "qcentroid",
                                          "qder", "gender", "ider"};
  for (const auto& name : kLeibniz) {
    auto g = catalog::leibniz(name);
    auto base_ider = ider_lie(g);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      CAPTURE(name);
      CAPTURE(seed);
      auto v = catalog::random_variant(g, seed);
      CHECK(der_lie(v.algebra) == der_lie(g).conjugate(v.p_inv, v.p));
      CHECK(der_z_lie(v.algebra) == der_z_lie(g).conjugate(v.p_inv, v.p));
      CHECK(centroid_lie(v.algebra) == centroid_lie(g).conjugate(v.p_inv, v.p));
      CHECK(qcentroid_lie(v.algebra) == qcentroid_lie(g).conjugate(v.p_inv, v.p));
      CHECK(qder_lie(v.algebra) == qder_lie(g).conjugate(v.p_inv, v.p));
      CHECK(gender_lie(v.algebra) == gender_lie(g).conjugate(v.p_inv, v.p));
      auto var_ider = ider_lie(v.algebra);
      CHECK(base_ider.first.has_value() == var_ider.first.has_value());
      if (base_ider.first && var_ider.first)
        CHECK(*var_ider.first == base_ider.first->conjugate(v.p_inv, v.p));
    }
  }
}

TEST_CASE("inner Lie-derivations") {
  auto [ider_l1, fail_l1] = ider_lie(catalog::leibniz("L1"));
  CHECK_FALSE(ider_l1.has_value());
  REQUIRE(fail_l1.has_value());

  auto [ider_n2b, fail_n2b] = ider_lie(catalog::leibniz("N2b"));
  REQUIRE(ider_n2b.has_value());
  CHECK(ider_n2b->dim() == 1);
  CHECK(ider_n2b->leq(der_lie(catalog::leibniz("N2b"))));
}

TEST_CASE("almost inner Lie-derivations and T_c") {
  auto n2b = catalog::leibniz("N2b");
  auto rc = der_c_lie(n2b);
  CHECK(rc.space.dim() == 1);
  CHECK(rc.certificate.passed());
  CHECK(der_z_lie(n2b).dim() == 4);
  CHECK(rc.space.leq(der_z_lie(n2b)));

  auto n2c = catalog::leibniz("N2c");
  auto rc2 = der_c_lie(n2c);
  CHECK(rc2.space.dim() == 2);
  CHECK(rc2.certificate.passed());
  CHECK(rc2.space == der_z_lie(n2c));

  CHECK(t_c_space(n2b).space.dim() == 1);
  CHECK(t_c_space(n2c).space.dim() == 2);
  auto l2 = catalog::leibniz("L2");
  CHECK(t_c_space(l2).space.dim() == 1);
  CHECK(der_c_lie(l2).space.dim() == 1);
}

TEST_CASE("der_c is seed-independent on the catalog") {
  for (const auto& name : {"L2", "N2b", "N2c"}) {
    auto g = catalog::leibniz(name);
    auto a = der_c_lie(g, 0);
    auto b = der_c_lie(g, 98765);
    CHECK(a.space == b.space);
  }
}

TEST_CASE("centroid decomposition, pushforward, idempotents, forms") {
  auto l2 = catalog::leibniz("L2");
  auto dec = centroid_decomposition(l2);
  CHECK(dec.der_z_basis.size() == 1);
  CHECK(dec.psi_basis.size() == 1);

  auto rep = centroid_pushforward(l2, make_ideal(l2, centres(l2).z_lie));
  CHECK(rep.rl_span_onto);
  CHECK(rep.images_in_centroid);
  CHECK(rep.all_preserve);
  CHECK(rep.kernel_annihilates_gamma2);

  auto l1 = catalog::leibniz("L1");
  OperatorSpace<Rational> forms = invariant_bilinear_forms(l1);
  CHECK(forms.dim() == 1);
  for (int i = 0; i < forms.dim(); ++i)
    CHECK(check_form_symmetry(l1, centroid_lie(l1).basis_matrix(0), forms.basis_matrix(i)));

  auto split = idempotent_split(l1, DenseMatrix<Rational>::Identity(2, 2).eval());
  CHECK(split.kernel.dim() == 0);
  CHECK(split.image.dim() == 2);
}

TEST_CASE("qder intersect qcentroid strictly exceeds the centroid iff maps into "
          "a nonzero Lie-centre can move gamma_2") {
  auto l2 = catalog::leibniz("L2");
  OperatorSpace<Rational> inter = qder_lie(l2).intersect(qcentroid_lie(l2));
  OperatorSpace<Rational> gamma = centroid_lie(l2);
  // diag(1,0) maps into Z_Lie = span{e} without killing gamma_2 = span{e}
  DenseMatrix<Rational> d = mat2(1, 0, 0, 0);
  CHECK(qder_lie(l2).contains(d));
  CHECK(qcentroid_lie(l2).contains(d));
  CHECK_FALSE(gamma.contains(d));
  CHECK(gamma.leq(inter));
  CHECK(inter == gamma.sum(maps_into(2, centres(l2).z_lie)));

  for (const auto& name : kLeibniz) {
    CAPTURE(name);
    auto g = catalog::leibniz(name);
    OperatorSpace<Rational> i2 = qder_lie(g).intersect(qcentroid_lie(g));
    CHECK(i2 == centroid_lie(g).sum(maps_into(g.dim(), centres(g).z_lie)));
    if (centres(g).z_lie.dim() == 0 || lie_gamma2(g).dim() == 0)
      CHECK(i2 == centroid_lie(g));
  }
}
