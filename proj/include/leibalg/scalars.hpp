#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leibalg {

/// Exact arbitrary-precision rational, always kept canonical by GMP.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q" or an integer literal into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(boost::multiprecision::mpz_int(std::string(text)));
  boost::multiprecision::mpz_int num{std::string(text.substr(0, slash))};
  boost::multiprecision::mpz_int den{std::string(text.substr(slash + 1))};
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + std::string(text));
  return Rational(num) / Rational(den);
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Element of a prime field F_p, p an odd prime. A modulus of 0 marks a
/// field-neutral integer (arising from scalar literals like S(1)); the
/// modulus is promoted on the first mixed operation.
class Fp {
public:
  Fp() : v_(0), p_(0) {}
  explicit Fp(std::int64_t v) : v_(v), p_(0) {}
  Fp(std::int64_t v, std::int64_t p) : v_(v), p_(p) { reduce(); }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto p = merge(a, b);
    return Fp(a.v_ + b.v_, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    auto p = merge(a, b);
    return Fp(a.v_ - b.v_, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto p = merge(a, b);
    return Fp(a.v_ * b.v_, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto p = merge(a, b);
    if (p == 0) return a.v_ == b.v_;
    return ((a.v_ - b.v_) % p + p) % p == 0;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("inverse of field-neutral integer without modulus");
    }
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0, p_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

private:
  void reduce() {
    if (p_ != 0) v_ = ((v_ % p_) + p_) % p_;
  }
  static std::int64_t merge(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw std::domain_error("mixed prime-field moduli");
    return a.p_ != 0 ? a.p_ : b.p_;
  }
  std::int64_t v_;
  std::int64_t p_;
};

/// Field inverse, uniform over the supported scalar kinds.
inline Rational inv(const Rational& x) { return Rational(1) / x; }
inline Fp inv(const Fp& x) { return x.inverse(); }

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

/// Runtime descriptor of the ground field K. Characteristic 2 is rejected
/// because halving is used throughout.
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::int64_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::int64_t p) {
    if (!is_prime(p) || p < 3)
      throw std::invalid_argument("prime field requires an odd prime p >= 3");
    return {Kind::prime, p};
  }
  bool operator==(const FieldSpec&) const = default;
};

}  // namespace leibalg

namespace Eigen {
template <>
struct NumTraits<leibalg::Fp> {
  using Real = leibalg::Fp;
  using NonInteger = leibalg::Fp;
  using Nested = leibalg::Fp;
  using Literal = leibalg::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline leibalg::Fp epsilon() { return leibalg::Fp(0); }
  static inline leibalg::Fp dummy_precision() { return leibalg::Fp(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
