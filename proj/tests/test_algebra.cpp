#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibalg/catalog.hpp"
#include "leibalg/modp.hpp"

using namespace leibalg;

namespace {

const std::vector<std::string> kLeibniz = {"L1",  "L2",    "L1p",   "N2b",  "N2c",
                                           "OM5", "ABEL1", "ABEL2", "ABEL3"};

}  // namespace

TEST_CASE("catalog Leibniz entries satisfy the Leibniz identity") {
  for (const auto& name : kLeibniz) {
    auto g = catalog::leibniz(name);
    CHECK_FALSE(check_leibniz(g.table()).has_value());
  }
}

TEST_CASE("catalog associative entries validate") {
  for (const auto& name : {"A4", "TK2", "TK3", "TK4", "B4"}) {
    auto a = catalog::assoc(name);
    CHECK(a.dim() > 0);
  }
  CHECK(catalog::assoc("A4").unit().has_value());
  CHECK_FALSE(catalog::assoc("B4").unit().has_value());
}

TEST_CASE("check_leibniz rejects a broken table") {
  StructureTable<Rational> t(2);
  t.set_c(0, 0, 1, Rational(1));  // [e1,e1] = e2 violates the identity
  t.set_c(1, 0, 0, Rational(1));
  auto fail = check_leibniz(t);
  REQUIRE(fail.has_value());
  CHECK(fail->identity == "leibniz");
}

TEST_CASE("centre dimensions over the catalog") {
  auto zdim = [](const std::string& n) { return centres(catalog::leibniz(n)).z_lie.dim(); };
  CHECK(zdim("L1") == 0);
  CHECK(zdim("L2") == 1);
  CHECK(zdim("L1p") == 0);
  CHECK(zdim("N2b") == 2);
  CHECK(zdim("N2c") == 1);
  CHECK(zdim("OM5") == 0);
  CHECK(zdim("ABEL3") == 3);
}

TEST_CASE("centres agree with brute force over F_5") {
  for (const auto& name : {"L1", "L2", "N2b", "N2c"}) {
    auto g = catalog::leibniz(name);
    auto gp = reduce_mod_p(g, 5);
    REQUIRE(gp.has_value());
    auto fast = centres(*gp);
    auto brute = centres_brute_force(*gp, 5);
    CHECK(fast.z_lie == brute.z_lie);
    CHECK(fast.z_left == brute.z_left);
    CHECK(fast.z_right == brute.z_right);
    CHECK(fast.z == brute.z);
  }
}

TEST_CASE("lower central series and nilpotency classes") {
  auto cls = [](const std::string& n) {
    auto g = catalog::leibniz(n);
    return nilpotency_class(g, full_ideal(g));
  };
  CHECK(cls("L2") == 2);
  CHECK(cls("N2b") == 2);
  CHECK(cls("N2c") == 2);
  CHECK(cls("ABEL2") == 1);
  CHECK_FALSE(cls("L1").has_value());
  CHECK_FALSE(cls("OM5").has_value());

  auto g = catalog::leibniz("OM5");
  auto series = lower_central_series(g, full_ideal(g));
  REQUIRE(series.size() >= 2);
  CHECK(series[0].dim() == 5);
  CHECK(series[1].dim() == 2);
  CHECK(series.back().dim() == 2);
}

TEST_CASE("gamma_2 equals the annihilator span on the catalog") {
  for (const auto& name : kLeibniz)
    CHECK(lie_gamma2(catalog::leibniz(name)) == ann_subspace(catalog::leibniz(name)));
}

TEST_CASE("liesation is a Lie algebra of the right dimension") {
  auto g = catalog::leibniz("OM5");
  auto lies = liesation(g);  // antisymmetry asserted inside
  CHECK(lies.dim() == 3);
  CHECK(liesation(catalog::leibniz("L1")).dim() == 1);
  CHECK(liesation(catalog::leibniz("ABEL3")).dim() == 3);
}

TEST_CASE("quotient by the Lie-centre") {
  auto g = catalog::leibniz("L2");
  auto c = centres(g);
  auto q = quotient(g, make_ideal(g, c.z_lie));
  CHECK(q.algebra.dim() == 1);
  // projection then lift is the identity on the quotient
  CHECK((q.projection * q.lift).eval() == DenseMatrix<Rational>::Identity(1, 1).eval());
}

TEST_CASE("direct sum has block structure") {
  auto a = catalog::leibniz("L1");
  auto b = catalog::leibniz("L2");
  auto s = direct_sum(a, b);
  CHECK(s.dim() == 4);
  CHECK_FALSE(check_leibniz(s.table()).has_value());
  // cross terms vanish
  ColVector<Rational> x = ColVector<Rational>::Unit(4, 0);
  ColVector<Rational> y = ColVector<Rational>::Unit(4, 3);
  CHECK(s.bracket(x, y) == ColVector<Rational>::Constant(4, Rational(0)).eval());
  CHECK(centres(s).z_lie.dim() == centres(a).z_lie.dim() + centres(b).z_lie.dim());
}

TEST_CASE("random basis variants stay Leibniz and isomorphism-invariant") {
  for (const auto& name : {"L1", "L2", "N2b", "OM5"}) {
    auto g = catalog::leibniz(name);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto v = catalog::random_variant(g, seed);
      CHECK_FALSE(check_leibniz(v.algebra.table()).has_value());
      CHECK(centres(v.algebra).z_lie.dim() == centres(g).z_lie.dim());
      CHECK(lie_gamma2(v.algebra).dim() == lie_gamma2(g).dim());
    }
  }
}

TEST_CASE("two-sided ideal detection") {
  auto g = catalog::leibniz("L2");
  CHECK(is_two_sided_ideal(g, centres(g).z_lie));
  CHECK(is_two_sided_ideal(g, lie_gamma2(g)));
  // span{f} is not an ideal: [f,f] = 2e escapes
  Subspace<Rational> f = Subspace<Rational>::span(
      2, (DenseMatrix<Rational>(1, 2) << Rational(0), Rational(1)).finished());
  CHECK_FALSE(is_two_sided_ideal(g, f));
}
