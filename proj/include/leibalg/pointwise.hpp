#pragma once

#include "leibalg/modp.hpp"
#include "leibalg/spaces.hpp"

namespace leibalg {

struct PointwiseSpaceResult {
  OperatorSpace<Rational> space;
  PointwiseCertificate certificate;
};

namespace detail {

inline ColVector<Rational> random_rational_vector(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 7);
  ColVector<Rational> v(n);
  for (int i = 0; i < n; ++i) v(i) = Rational(num(rng)) / Rational(den(rng));
  return v;
}

/// Sample-stabilize-certify engine shared by the almost inner derivation and
/// T_c computations: the pointwise condition d(x) in [x,g]_Lie is imposed at
/// a growing sample set, then every candidate basis element is exhaustively
/// verified modulo the three smallest usable odd primes. A mod-p failure
/// whose witness yields a new independent rational constraint triggers a
/// refinement round.
inline PointwiseSpaceResult pointwise_constrained_space(const LeibnizAlgebra<Rational>& g,
                                                        EchelonAccumulator<Rational> acc,
                                                        std::uint64_t seed) {
  const int n = g.dim();
  PointwiseCertificate cert;
  cert.seed = seed;
  std::mt19937_64 rng(seed);

  auto sample = [&](const ColVector<Rational>& x) {
    detail::add_pointwise_sample(acc, g, x, detail::lie_image_of(g, x));
    ++cert.sample_count;
  };
  for (int i = 0; i < n; ++i) sample(ColVector<Rational>::Unit(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      sample((ColVector<Rational>::Unit(n, i) + ColVector<Rational>::Unit(n, j)).eval());
  for (int k = 0; k < 2 * n * n; ++k) sample(random_rational_vector(n, rng));

  int dim = nullspace(acc).dim();
  for (;;) {
    int before = dim;
    for (int k = 0; k < n; ++k) sample(random_rational_vector(n, rng));
    dim = nullspace(acc).dim();
    if (dim == before) break;
  }

  auto current_space = [&] { return OperatorSpace<Rational>(n, nullspace(acc)); };
  OperatorSpace<Rational> space = current_space();

  cert.exhaustive = n <= 6;
  if (cert.exhaustive) {
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 3; static_cast<int>(primes.size()) < 3 && p < 100; p += 2) {
      if (!is_prime(p)) continue;
      if (!reduce_mod_p(g, p)) continue;
      bool basis_reduces = true;
      for (int i = 0; i < space.dim() && basis_reduces; ++i)
        if (!reduce_mod_p(space.basis_matrix(i), p)) basis_reduces = false;
      if (basis_reduces) primes.push_back(p);
    }
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      std::int64_t p = primes[pi];
      bool pass = true;
      for (int attempt = 0; attempt < 10; ++attempt) {
        auto gp = reduce_mod_p(g, p);
        pass = true;
        std::optional<ColVector<Fp>> failing;
        for (int i = 0; i < space.dim() && pass; ++i) {
          auto dp = reduce_mod_p(space.basis_matrix(i), p);
          if (!dp) { pass = false; break; }
          ColVector<Fp> w(n);
          if (!check_pointwise_everywhere(*gp, p, *dp, &w)) {
            pass = false;
            failing = w;
          }
        }
        if (pass || !failing) break;
        // lift the failing point and see whether it cuts the candidate
        ColVector<Rational> lifted(n);
        for (int i = 0; i < n; ++i) lifted(i) = Rational((*failing)(i).value());
        int before = space.dim();
        sample(lifted);
        space = current_space();
        if (space.dim() == before) break;  // spurious mod-p failure, no new constraint
        ++cert.refinement_rounds;
        pi = static_cast<std::size_t>(-1);  // restart certification over all primes
        cert.prime_results.clear();
        break;
      }
      if (pi == static_cast<std::size_t>(-1)) continue;
      cert.prime_results.emplace_back(p, pass);
    }
  }
  return PointwiseSpaceResult{std::move(space), std::move(cert)};
}

}  // namespace detail

/// Almost inner Lie-derivations: Lie-derivations with d(x) in [x,g]_Lie for
/// every x, via sampling plus exhaustive finite-field certification.
inline PointwiseSpaceResult der_c_lie(const LeibnizAlgebra<Rational>& g, std::uint64_t seed = 0) {
  return detail::pointwise_constrained_space(g, der_lie_system(g), seed);
}

/// T_c(g/Z_Lie, gamma_2): maps killing the Lie-centre with image in gamma_2
/// and f(x + Z_Lie) in [x,g]_Lie pointwise.
inline PointwiseSpaceResult t_c_space(const LeibnizAlgebra<Rational>& g, std::uint64_t seed = 0) {
  const int n = g.dim();
  Subspace<Rational> z = centres(g).z_lie;
  Subspace<Rational> g2 = lie_gamma2(g);
  EchelonAccumulator<Rational> acc(n * n);
  for (int a = 0; a < z.dim(); ++a) {
    ColVector<Rational> v = z.basis_vector(a);
    std::vector<std::tuple<int, int, DenseMatrix<Rational>>> terms;
    for (int k = 0; k < n; ++k)
      if (!is_zero(v(k)))
        terms.emplace_back(0, k, (v(k) * DenseMatrix<Rational>::Identity(n, n)).eval());
    detail::add_condition(acc, n, 1, terms);
  }
  DenseMatrix<Rational> c = g2.constraint_matrix();
  for (int i = 0; i < n; ++i) detail::add_condition<Rational>(acc, n, 1, {{0, i, c}});
  return detail::pointwise_constrained_space(g, std::move(acc), seed);
}

}  // namespace leibalg
