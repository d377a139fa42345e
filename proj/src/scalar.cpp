#include "ringelhall/scalar.hpp"

#include <cmath>

#include "ringelhall/errors.hpp"

namespace ringelhall {

namespace {

// floor(sqrt(n)), exact for 64-bit inputs.
std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

mpz_class to_mpz(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return z;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroundField::GroundField(std::uint64_t q) : q_(q) {
  if (!is_prime(q)) throw DomainError("q must be prime (got " + std::to_string(q) + ")");
}

Scalar::Scalar(const mpq_class& a, const mpq_class& b, std::uint64_t q) : a_(a), b_(b), q_(q) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0 && q == 0) throw DomainError("irrational part requires a radicand");
  normalize();
}

void Scalar::normalize() {
  if (sgn(b_) != 0) {
    std::uint64_t r = isqrt(q_);
    if (r * r == q_) {
      a_ += b_ * to_mpz(r);
      b_ = 0;
    }
  }
  if (sgn(b_) == 0) q_ = 0;
}

std::uint64_t Scalar::common_q(const Scalar& x, const Scalar& y) {
  if (x.q_ == 0) return y.q_;
  if (y.q_ == 0 || y.q_ == x.q_) return x.q_;
  throw DomainError("scalars over different radicands");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  q_ = common_q(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  q_ = common_q(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint64_t q = common_q(*this, o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class na = a_ * o.a_ + b_ * o.b_ * to_mpz(q);
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  q_ = q;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  if (sgn(b_) == 0) return Scalar(mpq_class(1) / a_);
  mpq_class norm = a_ * a_ - b_ * b_ * to_mpz(q_);
  return Scalar(a_ / norm, -b_ / norm, q_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const {
  std::string s = a_.get_str();
  if (sgn(b_) >= 0) s += "+";
  s += b_.get_str();
  s += "*v";
  return s;
}

Scalar v_pow(long n, std::uint64_t q) {
  long half = n >= 0 ? n / 2 : -((-n + 1) / 2);  // floor(n / 2)
  long odd = n - 2 * half;                        // 0 or 1
  mpz_class qp;
  mpz_pow_ui(qp.get_mpz_t(), to_mpz(q).get_mpz_t(), static_cast<unsigned long>(half >= 0 ? half : -half));
  mpq_class base = half >= 0 ? mpq_class(qp) : mpq_class(1) / mpq_class(qp);
  base.canonicalize();
  if (odd == 0) return Scalar(base);
  return Scalar(mpq_class(0), base, q);
}

Scalar q_int(long n, long eps, std::uint64_t q) {
  if (eps < 1) throw DomainError("symmetrizer exponent must be positive");
  if (n < 0) return -q_int(-n, eps, q);
  // [n]_t = t^{n-1} + t^{n-3} + ... + t^{1-n}, t = v^eps
  Scalar sum;
  for (long k = 0; k < n; ++k) sum += v_pow(eps * (n - 1 - 2 * k), q);
  return sum;
}

Scalar q_factorial(long n, long eps, std::uint64_t q) {
  Scalar r(1);
  for (long k = 1; k <= n; ++k) r *= q_int(k, eps, q);
  return r;
}

Scalar q_binom(long m, long n, long eps, std::uint64_t q) {
  if (n < 0 || n > m) throw DomainError("q_binom requires 0 <= n <= m");
  return q_factorial(m, eps, q) / (q_factorial(m - n, eps, q) * q_factorial(n, eps, q));
}

bool is_positive(const Scalar& x) {
  int sa = sgn(x.a()), sb = sgn(x.b());
  if (sb == 0) return sa > 0;
  if (sa >= 0 && sb > 0) return true;
  if (sa <= 0 && sb < 0) return false;
  mpq_class a2 = x.a() * x.a();
  mpq_class qb2 = x.b() * x.b() * to_mpz(x.q());
  // exactly one of a, b is negative
  return sa > 0 ? a2 > qb2 : qb2 > a2;
}

}  // namespace ringelhall
