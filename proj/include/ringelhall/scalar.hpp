#pragma once

// Exact arithmetic in Q(sqrt q), the coefficient field of the Hall algebras.
//
// A Scalar is a + b*v with rational a, b and v^2 = q. Rational constants carry
// no radicand (q() == 0) and combine with Scalars of any q; two irrational
// Scalars must agree on q.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ringelhall {

class GroundField {
 public:
  explicit GroundField(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  friend bool operator==(const GroundField&, const GroundField&) = default;

 private:
  std::uint64_t q_;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}  // NOLINT: implicit integer constants read naturally
  Scalar(const mpq_class& a) : a_(a) { a_.canonicalize(); }  // NOLINT
  Scalar(const mpq_class& a, const mpq_class& b, std::uint64_t q);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  /// Radicand, or 0 when the value is rational.
  std::uint64_t q() const { return q_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  /// Multiplicative inverse; v^-1 = v/q. Throws DomainError on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// "a+b*v" with exact rationals, e.g. "3/2-1/2*v".
  std::string to_string() const;

 private:
  void normalize();
  static std::uint64_t common_q(const Scalar& x, const Scalar& y);

  mpq_class a_{0};
  mpq_class b_{0};
  std::uint64_t q_ = 0;
};

/// v^n with v = sqrt(q), reduced by v^2 = q.
Scalar v_pow(long n, std::uint64_t q);

/// Quantum integer [n]_{v^eps} = (v_i^n - v_i^-n) / (v_i - v_i^-1), v_i = v^eps.
Scalar q_int(long n, long eps, std::uint64_t q);

/// Quantum factorial [n]_{v^eps}!.
Scalar q_factorial(long n, long eps, std::uint64_t q);

/// Quantum binomial [m choose n]_{v^eps}; DomainError if n > m or n < 0.
Scalar q_binom(long m, long n, long eps, std::uint64_t q);

/// Sign of a + b*sqrt(q) under the real embedding with sqrt(q) > 0.
bool is_positive(const Scalar& x);

}  // namespace ringelhall
