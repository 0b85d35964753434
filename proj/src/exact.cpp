#include "hecketrace/exact.hpp"

#include <cctype>
#include <ostream>

namespace hecketrace {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::pow(long e) const { return pow_int(*this, e); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0) throw ParseError("denominator must be positive: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

bool is_valid_quadratic_seed(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  std::uint64_t n = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
  if (n <= 0) throw DomainError("squarefree_decompose needs a positive integer");
  Integer rest = n;
  Integer square_root = 1;
  Integer free = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square_root *= p;
    if (e % 2 == 1) free *= p;
  }
  free *= rest;
  return {square_root, free};
}

QuadElem::QuadElem(std::int64_t d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (!is_valid_quadratic_seed(d))
    throw DomainError("quadratic field seed must be squarefree and not 0 or 1, got " + std::to_string(d));
}

void QuadElem::require_same_field(const QuadElem& o) const {
  if (d_ != o.d_)
    throw DomainError("mixing Q(sqrt(" + std::to_string(d_) + ")) with Q(sqrt(" + std::to_string(o.d_) + "))");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_field(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  require_same_field(o);
  if (o.is_zero()) throw ArithmeticError("division by zero in Q(sqrt(" + std::to_string(d_) + "))");
  // x / y = x * conj(y) / N(y)
  const Rational n = o.norm();
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

Sign QuadElem::sign(Embedding v) const {
  if (d_ < 0) throw DomainError("Q(sqrt(" + std::to_string(d_) + ")) has no real embedding");
  const int sa = a_.sign();
  const int sb = (v == Embedding::v1 ? 1 : -1) * b_.sign();
  auto as_sign = [](int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); };
  if (sb == 0) return as_sign(sa);
  if (sa == 0 || sa == sb) return as_sign(sb);
  // Opposite signs: the larger of a^2 and d*b^2 wins. Equality is impossible for d squarefree.
  const auto c = a_ * a_ <=> Rational(d_) * b_ * b_;
  if (c == std::strong_ordering::equal) return Sign::zero;
  return as_sign(c == std::strong_ordering::greater ? sa : sb);
}

std::string QuadElem::to_string() const {
  std::string out = a_.to_string();
  out += b_.sign() < 0 ? "-" : "+";
  out += b_.abs().to_string();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

QuadElem QuadElem::parse(std::string_view text, std::int64_t d) {
  text = trim(text);
  const auto sq = text.find("sqrt(");
  if (sq == std::string_view::npos) {
    if (d == 0) throw ParseError("rational '" + std::string(text) + "' needs an explicit field");
    return QuadElem(d, Rational::parse(text));
  }
  const auto close = text.find(')', sq);
  if (close == std::string_view::npos || !trim(text.substr(close + 1)).empty())
    throw ParseError("malformed quadratic element '" + std::string(text) + "'");
  const Integer dz = parse_integer(trim(text.substr(sq + 5, close - sq - 5)));
  if (!dz.fits_slong_p()) throw ParseError("field seed out of range");
  const std::int64_t dd = dz.get_si();
  if (d != 0 && dd != d)
    throw DomainError("element of Q(sqrt(" + std::to_string(dd) + ")) where Q(sqrt(" + std::to_string(d) +
                      ")) was expected");

  // Coefficient part: everything before "sqrt(", optionally ending in '*'.
  std::string_view head = trim(text.substr(0, sq));
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  // Split head into "a" and "+b"/"-b" at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a(0);
  std::string_view coeff = head;
  if (split != std::string_view::npos) {
    a = Rational::parse(head.substr(0, split));
    coeff = trim(head.substr(split));
  }
  Rational b(1);
  if (coeff == "+" || coeff.empty()) {
    b = Rational(1);
  } else if (coeff == "-") {
    b = Rational(-1);
  } else {
    b = Rational::parse(coeff);
  }
  return QuadElem(dd, a, b);
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

QuadElem quad_conj(const QuadElem& x) { return x.conj(); }

Sign quad_sign(const QuadElem& x, Embedding v) { return x.sign(v); }

}  // namespace hecketrace
