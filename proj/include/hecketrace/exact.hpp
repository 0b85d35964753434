#ifndef HECKETRACE_EXACT_HPP
#define HECKETRACE_EXACT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "hecketrace/errors.hpp"

namespace hecketrace {

using Integer = mpz_class;

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (zero base raises ArithmeticError).
  Rational pow(long e) const;
  Rational abs() const;
  double to_double() const { return q_.get_d(); }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class Embedding { v1, v2 };
enum class Sign { negative = -1, zero = 0, positive = 1 };

/// True when |d| has no repeated prime factor and d is not 0 or 1.
bool is_valid_quadratic_seed(std::int64_t d);
/// Splits a positive integer n = s^2 * f with f squarefree; returns {s, f}.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

/// Element a + b*sqrt(d) of Q(sqrt(d)).
class QuadElem {
 public:
  QuadElem(std::int64_t d, Rational a, Rational b = Rational(0));

  std::int64_t d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadElem conj() const { return QuadElem(d_, a_, -b_, Unchecked{}); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  Rational trace() const { return a_ + a_; }

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  QuadElem operator-() const { return QuadElem(d_, -a_, -b_, Unchecked{}); }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Exact sign under a real embedding. Requires d > 0.
  Sign sign(Embedding v) const;

  /// "a+b*sqrt(d)" with explicit sign on the irrational part.
  std::string to_string() const;
  /// Accepts "a+b*sqrt(d)", "a-b*sqrt(d)", "b*sqrt(d)", "sqrt(d)" and plain rationals
  /// (the latter only when `d` is supplied).
  static QuadElem parse(std::string_view text, std::int64_t d = 0);

 private:
  struct Unchecked {};
  QuadElem(std::int64_t d, Rational a, Rational b, Unchecked)
      : d_(d), a_(std::move(a)), b_(std::move(b)) {}
  void require_same_field(const QuadElem& o) const;

  std::int64_t d_;
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

QuadElem quad_conj(const QuadElem& x);
Sign quad_sign(const QuadElem& x, Embedding v);

// Generic helpers so character formulas can be written once for both scalar domains.

inline Rational one_like(const Rational&) { return Rational(1); }
inline QuadElem one_like(const QuadElem& x) { return QuadElem(x.d(), Rational(1)); }
inline Rational lift_like(const Rational&, const Rational& r) { return r; }
inline QuadElem lift_like(const QuadElem& x, const Rational& r) { return QuadElem(x.d(), r); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadElem& x) { return x.is_zero(); }

/// Integer power by squaring; negative exponents go through exact division.
template <class S>
S pow_int(const S& x, long e) {
  if (e < 0) {
    if (is_zero(x)) throw ArithmeticError("zero raised to a negative power");
    return one_like(x) / pow_int(x, -e);
  }
  S result = one_like(x);
  S base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace hecketrace

#endif  // HECKETRACE_EXACT_HPP
