// Acceptance gate: eleven golden-value and property criteria, one pass/fail
// line each. Exits nonzero when any criterion fails.

#include "leibalg/catalog.hpp"
#include "leibalg/pointwise.hpp"
#include "leibalg/tensor.hpp"
#include "leibalg/theorems.hpp"

#include <chrono>
#include <iostream>

using namespace leibalg;

namespace {

const std::vector<std::string> kLeibniz = {"L1",  "L2",    "L1p",   "N2b",  "N2c",
                                           "OM5", "ABEL1", "ABEL2", "ABEL3"};

int failures = 0;

void report(int n, const std::string& what, bool ok) {
  std::cout << "criterion " << n << " (" << what << "): " << (ok ? "pass" : "FAIL") << "\n";
  if (!ok) ++failures;
}

DenseMatrix<Rational> mat2(int a, int b, int c, int d) {
  DenseMatrix<Rational> m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

bool criterion1() {
  auto l1 = catalog::leibniz("L1");
  OperatorSpace<Rational> g1 = centroid_lie(l1);
  bool ok = g1.dim() == 1 && g1.contains(DenseMatrix<Rational>::Identity(2, 2).eval());

  auto l2 = catalog::leibniz("L2");
  OperatorSpace<Rational> g2 = centroid_lie(l2);
  ok = ok && g2.dim() == 2;
  ok = ok && g2.basis_matrix(0) == DenseMatrix<Rational>::Identity(2, 2).eval();
  ok = ok && g2.basis_matrix(1) == mat2(0, 1, 0, 0);
  return ok;
}

bool criterion2() {
  auto l2 = catalog::leibniz("L2");
  OperatorSpace<Rational> expect =
      OperatorSpace<Rational>::span_matrices(2, {mat2(2, 0, 0, 1), mat2(0, 1, 0, 0)});
  bool ok = der_lie(l2) == expect;
  OperatorSpace<Rational> derz = der_z_lie(l2);
  ok = ok && derz.dim() == 1 && derz.contains(mat2(0, 1, 0, 0));
  return ok;
}

bool criterion3() {
  auto l1 = catalog::leibniz("L1");
  OperatorSpace<Rational> qgamma = qcentroid_lie(l1);
  bool ok = qgamma.dim() == 3 && qgamma.contains(mat2(1, 0, 0, 1)) &&
            qgamma.contains(mat2(0, 1, 0, 0)) && qgamma.contains(mat2(0, 0, 1, 0)) &&
            !qgamma.contains(mat2(1, 0, 0, 0));
  OperatorSpace<Rational> qder = qder_lie(l1);
  ok = ok && qder.contains(mat2(0, 0, 0, 1)) && !der_lie(l1).contains(mat2(0, 0, 0, 1));
  OperatorSpace<Rational> gender = gender_lie(l1);
  ok = ok && gender.contains(mat2(1, 1, 0, 0)) && !qder.contains(mat2(1, 1, 0, 0));
  return ok;
}

bool criterion4() {
  auto g = catalog::leibniz("OM5");
  DenseMatrix<Rational> rows = DenseMatrix<Rational>::Constant(2, 5, Rational(0));
  rows(0, 3) = Rational(1);
  rows(1, 4) = Rational(1);
  bool ok = lie_gamma2(g) == Subspace<Rational>::span(5, rows);
  OperatorSpace<Rational> gamma = centroid_lie(g);
  ok = ok && gamma.dim() == 1 && gamma.contains(DenseMatrix<Rational>::Identity(5, 5).eval());
  return ok;
}

bool criterion5() {
  auto t = tensor_algebra(catalog::assoc("A4"), catalog::leibniz("L1p"));
  OperatorSpace<Rational> gamma = centroid_lie(t.product);
  DenseMatrix<Rational> mu = DenseMatrix<Rational>::Constant(4, 4, Rational(0));
  mu(2, 0) = Rational(1);
  mu(3, 1) = Rational(1);
  OperatorSpace<Rational> expect = OperatorSpace<Rational>::span_matrices(
      4, {DenseMatrix<Rational>::Identity(4, 4), mu});
  return gamma == expect;
}

bool criterion6() {
  auto start = std::chrono::steady_clock::now();
  auto t = tensor_algebra(catalog::assoc("TK3"), catalog::leibniz("OM5"));
  auto rep = tensor_centroid_compare(t);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = rep.gamma.dim() == 3 && rep.equality && rep.equality_expected;
  if (secs >= 10.0) {
    std::cout << "  (tensor solve took " << secs << " s)\n";
    ok = false;
  }
  return ok;
}

bool criterion7() {
  auto t = tensor_algebra(catalog::assoc("B4"), catalog::leibniz("OM5"));
  auto rep = tensor_centroid_compare(t);
  bool ok = rep.gamma.dim() > rep.embedded.dim() && rep.strict_witness.has_value();
  if (ok) {
    ok = rep.gamma.contains(*rep.strict_witness) && !rep.embedded.contains(*rep.strict_witness);
    // the witness satisfies the centroid identity on basis pairs
    const int n = t.product.dim();
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        ColVector<Rational> x = ColVector<Rational>::Unit(n, i);
        ColVector<Rational> y = ColVector<Rational>::Unit(n, j);
        ColVector<Rational> fw = *rep.strict_witness * t.product.lie_bracket(x, y);
        ok = fw == t.product.lie_bracket((*rep.strict_witness * x).eval(), y) &&
             fw == t.product.lie_bracket(x, (*rep.strict_witness * y).eval());
      }
  }
  return ok;
}

bool criterion8() {
  auto n2c = catalog::leibniz("N2c");
  auto rc2 = der_c_lie(n2c);
  bool ok = rc2.space.dim() == 2 && rc2.space == der_z_lie(n2c);

  auto n2b = catalog::leibniz("N2b");
  auto rcb = der_c_lie(n2b);
  ok = ok && rcb.space.dim() == 1 && der_z_lie(n2b).dim() == 4;

  for (const auto* cert : {&rc2.certificate, &rcb.certificate}) {
    ok = ok && cert->exhaustive && cert->prime_results.size() == 3;
    std::vector<std::int64_t> want = {3, 5, 7};
    for (std::size_t i = 0; i < cert->prime_results.size() && ok; ++i)
      ok = cert->prime_results[i].first == want[i] && cert->prime_results[i].second;
  }
  return ok;
}

bool check_properties(const LeibnizAlgebra<Rational>& g) {
  const int n = g.dim();
  OperatorSpace<Rational> der = der_lie(g);
  OperatorSpace<Rational> derz = der_z_lie(g);
  OperatorSpace<Rational> gamma = centroid_lie(g);
  OperatorSpace<Rational> qgamma = qcentroid_lie(g);
  OperatorSpace<Rational> qder = qder_lie(g);
  OperatorSpace<Rational> gender = gender_lie(g);
  auto c = centres(g);
  Subspace<Rational> g2 = lie_gamma2(g);

  bool ok = der.leq(qder) && qder.leq(gender) && gamma.leq(qgamma) && qgamma.leq(gender);
  ok = ok && derz == der.intersect(gamma);

  // Gamma = QDer cap QGamma whenever the hypothesis Z_Lie = 0 or gamma_2 = 0
  // holds; in general the intersection is Gamma + Hom(g, Z_Lie).
  OperatorSpace<Rational> inter = qder.intersect(qgamma);
  ok = ok && gamma.leq(inter);
  ok = ok && inter == gamma.sum(maps_into(n, c.z_lie));
  if (c.z_lie.dim() == 0 || g2.dim() == 0) ok = ok && inter == gamma;

  auto bracket_span = [&](const OperatorSpace<Rational>& a, const OperatorSpace<Rational>& b) {
    std::vector<DenseMatrix<Rational>> mats;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j)
        mats.push_back(a.basis_matrix(i) * b.basis_matrix(j) -
                       b.basis_matrix(j) * a.basis_matrix(i));
    return mats.empty() ? OperatorSpace<Rational>::zero(n)
                        : OperatorSpace<Rational>::span_matrices(n, mats);
  };
  ok = ok && bracket_span(der, gamma).leq(gamma);
  ok = ok && bracket_span(qgamma, qder).leq(qgamma);
  ok = ok && bracket_span(qgamma, qgamma).leq(qder);
  ok = ok && gamma.leq(qder);
  ok = ok && qder.sum(qgamma).leq(gender);
  ok = ok && bracket_span(gamma, qgamma).leq(maps_into(n, c.z_lie));

  for (int i = 0; i < gamma.dim() && ok; ++i)
    for (int j = 0; j < gamma.dim() && ok; ++j) {
      DenseMatrix<Rational> d = gamma.basis_matrix(i) * gamma.basis_matrix(j) -
                                gamma.basis_matrix(j) * gamma.basis_matrix(i);
      for (int a = 0; a < g2.dim() && ok; ++a)
        ok = (d * g2.basis_vector(a)).eval() == ColVector<Rational>::Constant(n, Rational(0)).eval();
    }

  ok = ok && ann_subspace(g) == g2;

  const ColVector<Rational> zero = ColVector<Rational>::Constant(n, Rational(0));
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k) {
        ColVector<Rational> yz = g.lie_bracket(ColVector<Rational>::Unit(n, j).eval(),
                                               ColVector<Rational>::Unit(n, k).eval());
        ok = g.bracket(ColVector<Rational>::Unit(n, i).eval(), yz) == zero;
      }
  return ok;
}

bool criterion9() {
  for (const auto& name : kLeibniz) {
    auto g = catalog::leibniz(name);
    if (!check_properties(g)) {
      std::cout << "  (property failure on " << name << ")\n";
      return false;
    }
    auto base_ider = ider_lie(g);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto v = catalog::random_variant(g, seed);
      if (!check_properties(v.algebra)) {
        std::cout << "  (property failure on " << name << " variant " << seed << ")\n";
        return false;
      }
      bool eq = der_lie(v.algebra) == der_lie(g).conjugate(v.p_inv, v.p) &&
                der_z_lie(v.algebra) == der_z_lie(g).conjugate(v.p_inv, v.p) &&
                centroid_lie(v.algebra) == centroid_lie(g).conjugate(v.p_inv, v.p) &&
                qcentroid_lie(v.algebra) == qcentroid_lie(g).conjugate(v.p_inv, v.p) &&
                qder_lie(v.algebra) == qder_lie(g).conjugate(v.p_inv, v.p) &&
                gender_lie(v.algebra) == gender_lie(g).conjugate(v.p_inv, v.p);
      auto var_ider = ider_lie(v.algebra);
      eq = eq && base_ider.first.has_value() == var_ider.first.has_value();
      if (base_ider.first && var_ider.first)
        eq = eq && *var_ider.first == base_ider.first->conjugate(v.p_inv, v.p);
      if (!eq) {
        std::cout << "  (equivariance failure on " << name << " variant " << seed << ")\n";
        return false;
      }
    }
  }
  return true;
}

bool criterion10() {
  auto verdict = [](const std::vector<TheoremReport>& rs, const std::string& id) {
    for (const auto& r : rs)
      if (r.id == id) return r.verdict;
    return std::string("missing");
  };
  auto l1 = run_pair_suite(catalog::leibniz("L1"), catalog::leibniz("L1"));
  bool ok = verdict(l1, "lemma-lemma2-i") == "verified";
  for (const char* id : {"lemma-lemma2-ii-a", "lemma-lemma2-ii-b", "lemma-lemma2-ii-c",
                         "lemma-lemma2-ii-d", "lemma-lemma2-ii-e"})
    ok = ok && verdict(l1, id) == "verified";
  auto l2 = run_pair_suite(catalog::leibniz("L2"), catalog::leibniz("L2"));
  ok = ok && verdict(l2, "lemma-lemma2-i") == "verified";
  ok = ok && verdict(l2, "lemma-lemma2-ii-a") == "skipped";
  ok = ok && !any_refuted(l1) && !any_refuted(l2);
  return ok;
}

bool criterion11() {
  const std::int64_t p = 5;
  for (const auto& name : {"L1", "L2", "N2b", "N2c"}) {
    auto g = catalog::leibniz(name);
    auto gp = reduce_mod_p(g, p);
    if (!gp) return false;
    auto all = [&](const OperatorSpace<Rational>& sp, SpaceIdentity kind) {
      for (int i = 0; i < sp.dim(); ++i) {
        auto fp = reduce_mod_p(sp.basis_matrix(i), p);
        if (!fp || !check_identity_everywhere(*gp, p, kind, *fp)) return false;
      }
      return true;
    };
    if (!all(der_lie(g), SpaceIdentity::der)) return false;
    if (!all(centroid_lie(g), SpaceIdentity::centroid)) return false;
    if (!all(qcentroid_lie(g), SpaceIdentity::qcentroid)) return false;
    OperatorSpace<Rational> qder = qder_lie(g);
    for (int i = 0; i < qder.dim(); ++i) {
      auto w = qder_witness(g, qder.basis_matrix(i));
      auto fp = reduce_mod_p(qder.basis_matrix(i), p);
      auto wp = w ? reduce_mod_p(*w, p) : std::nullopt;
      if (!w || !fp || !wp) return false;
      if (!check_identity_everywhere(*gp, p, SpaceIdentity::qder, *fp, &*wp)) return false;
    }
    OperatorSpace<Rational> gender = gender_lie(g);
    for (int i = 0; i < gender.dim(); ++i) {
      auto w = gender_witness(g, gender.basis_matrix(i));
      auto fp = reduce_mod_p(gender.basis_matrix(i), p);
      if (!w || !fp) return false;
      auto f1 = reduce_mod_p(w->first, p);
      auto f2 = reduce_mod_p(w->second, p);
      if (!f1 || !f2) return false;
      if (!check_identity_everywhere(*gp, p, SpaceIdentity::gender, *fp, &*f1, &*f2)) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  report(1, "golden centroid bases L1, L2", criterion1());
  report(2, "golden derivation bases L2", criterion2());
  report(3, "quasi spaces on L1 with separating members", criterion3());
  report(4, "OM5 gamma_2 and scalar centroid", criterion4());
  report(5, "tensor centroid of A4 (x) L1p", criterion5());
  report(6, "TK3 (x) OM5 centroid equality under 10 s", criterion6());
  report(7, "non-unital strictness for B4 (x) OM5 with re-verified witness", criterion7());
  report(8, "almost inner dichotomy on N2c / N2b with exhaustive certificates", criterion8());
  report(9, "property suite over the catalog and 20 basis variants each", criterion9());
  report(10, "direct-sum suite on (L1, L1) and (L2, L2)", criterion10());
  report(11, "exhaustive F_5 identity oracle for computed bases", criterion11());
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 11 criteria passed\n";
  return 0;
}
