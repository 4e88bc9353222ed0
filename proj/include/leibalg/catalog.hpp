#pragma once

#include "leibalg/io.hpp"

#include <random>

namespace leibalg {
namespace catalog {

namespace detail {

inline AlgebraDocument::Entry entry(int i, int j,
                                    std::vector<std::pair<int, std::string>> result) {
  return AlgebraDocument::Entry{i, j, std::move(result)};
}

inline AlgebraDocument leibniz_doc(std::string name, std::vector<std::string> basis,
                                   std::vector<AlgebraDocument::Entry> table) {
  AlgebraDocument d;
  d.name = std::move(name);
  d.kind = "leibniz";
  d.dim = static_cast<int>(basis.size());
  d.basis = std::move(basis);
  d.table = std::move(table);
  return d;
}

/// K[t]/(t^M): basis 1, t, ..., t^{M-1}, unital.
inline AlgebraDocument truncated_polynomials(int m) {
  AlgebraDocument d;
  d.name = "TK" + std::to_string(m);
  d.kind = "associative";
  d.dim = m;
  for (int i = 0; i < m; ++i) d.basis.push_back(i == 0 ? "1" : "t^" + std::to_string(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i + j < m) d.table.push_back(entry(i, j, {{i + j, "1"}}));
  std::vector<std::string> u(m, "0");
  u[0] = "1";
  d.unit = std::move(u);
  return d;
}

/// tK[t]/(t^M): basis t, ..., t^{M-1}, no unit.
inline AlgebraDocument truncated_maximal_ideal(int m) {
  AlgebraDocument d;
  d.name = "B" + std::to_string(m);
  d.kind = "associative";
  d.dim = m - 1;
  for (int i = 1; i < m; ++i) d.basis.push_back("t^" + std::to_string(i));
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j)
      if (i + j < m) d.table.push_back(entry(i - 1, j - 1, {{i + j - 1, "1"}}));
  return d;
}

inline AlgebraDocument abelian(int n) {
  return leibniz_doc("ABEL" + std::to_string(n),
                     [n] {
                       std::vector<std::string> b;
                       for (int i = 1; i <= n; ++i) b.push_back("e" + std::to_string(i));
                       return b;
                     }(),
                     {});
}

}  // namespace detail

inline std::vector<AlgebraDocument> documents() {
  using detail::entry;
  std::vector<AlgebraDocument> out;
  out.push_back(detail::leibniz_doc("L1", {"e", "f"}, {entry(0, 1, {{0, "1"}})}));
  out.push_back(detail::leibniz_doc("L2", {"e", "f"}, {entry(1, 1, {{0, "2"}})}));
  out.push_back(detail::leibniz_doc("L1p", {"a1", "a2"}, {entry(0, 1, {{0, "1"}})}));
  out.push_back(detail::leibniz_doc("N2b", {"a1", "a2", "a3"}, {entry(2, 2, {{0, "1"}})}));
  out.push_back(detail::leibniz_doc("N2c", {"a1", "a2", "a3"},
                                    {entry(1, 1, {{0, "1"}}), entry(2, 2, {{0, "1"}})}));
  out.push_back(detail::leibniz_doc(
      "OM5", {"a1", "a2", "a3", "a4", "a5"},
      {entry(1, 0, {{2, "-1"}}), entry(0, 1, {{2, "1"}}), entry(0, 2, {{0, "-2"}}),
       entry(2, 0, {{0, "2"}}), entry(2, 1, {{1, "-2"}}), entry(1, 2, {{1, "2"}}),
       entry(4, 0, {{3, "1"}}), entry(3, 1, {{4, "1"}}), entry(3, 2, {{3, "-1"}}),
       entry(4, 2, {{4, "1"}})}));
  {
    AlgebraDocument a4;
    a4.name = "A4";
    a4.kind = "associative";
    a4.dim = 2;
    a4.basis = {"e1", "e2"};
    a4.table = {entry(0, 0, {{0, "1"}}), entry(0, 1, {{1, "1"}}), entry(1, 0, {{1, "1"}})};
    a4.unit = std::vector<std::string>{"1", "0"};
    out.push_back(std::move(a4));
  }
  out.push_back(detail::truncated_polynomials(2));
  out.push_back(detail::truncated_polynomials(3));
  out.push_back(detail::truncated_polynomials(4));
  out.push_back(detail::truncated_maximal_ideal(4));
  out.push_back(detail::abelian(1));
  out.push_back(detail::abelian(2));
  out.push_back(detail::abelian(3));
  return out;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& d : documents()) out.push_back(d.name);
  return out;
}

inline AlgebraDocument document(const std::string& name) {
  for (auto& d : documents())
    if (d.name == name) return d;
  throw DocumentError("unknown catalog algebra '" + name + "'");
}

inline LeibnizAlgebra<Rational> leibniz(const std::string& name) {
  return document_leibniz(document(name));
}

inline AssocCommAlgebra<Rational> assoc(const std::string& name) {
  return document_assoc(document(name));
}

/// Seeded random basis change: g' with [x,y]' = P^{-1}[Px, Py]; entries of P
/// drawn from [-3,3], redrawn until invertible.
template <class S = Rational>
struct BasisVariant {
  LeibnizAlgebra<S> algebra;
  DenseMatrix<S> p;
  DenseMatrix<S> p_inv;
};

inline BasisVariant<Rational> random_variant(const LeibnizAlgebra<Rational>& g,
                                             std::uint64_t seed) {
  const int n = g.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    DenseMatrix<Rational> p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) = Rational(coef(rng));
    auto p_inv = inverse(p);
    if (!p_inv) continue;
    StructureTable<Rational> t(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t.set_product(i, j, *p_inv * g.bracket(p.col(i), p.col(j)));
    return BasisVariant<Rational>{LeibnizAlgebra<Rational>(std::move(t)), std::move(p),
                                  std::move(*p_inv)};
  }
}

}  // namespace catalog
}  // namespace leibalg
