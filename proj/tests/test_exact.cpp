#include "doctest.h"

#include <numeric>
#include <cmath>
#include <random>

#include "hecketrace/exact.hpp"

using namespace hecketrace;

namespace {

// Naive pair-of-integers rational used as an independent reference.
struct NaiveRat {
  __int128 p, q;
  static NaiveRat make(__int128 p, __int128 q) {
    if (q < 0) p = -p, q = -q;
    __int128 a = p < 0 ? -p : p, b = q;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a == 0) a = 1;
    return {p / a, q / a};
  }
  NaiveRat operator+(const NaiveRat& o) const { return make(p * o.q + o.p * q, q * o.q); }
  NaiveRat operator-(const NaiveRat& o) const { return make(p * o.q - o.p * q, q * o.q); }
  NaiveRat operator*(const NaiveRat& o) const { return make(p * o.p, q * o.q); }
  NaiveRat operator/(const NaiveRat& o) const { return make(p * o.q, q * o.p); }
};

bool same(const Rational& r, const NaiveRat& n) {
  return r.num() == Integer(static_cast<long>(n.p)) && r.den() == Integer(static_cast<long>(n.q));
}

}  // namespace

TEST_CASE("rational arithmetic matches a naive reference on random inputs") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int i = 0; i < 1000; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    const NaiveRat nx = NaiveRat::make(a, b), ny = NaiveRat::make(c, d);
    REQUIRE(same(x, nx));
    CHECK(same(x + y, nx + ny));
    CHECK(same(x - y, nx - ny));
    CHECK(same(x * y, nx * ny));
    if (c != 0) CHECK(same(x / y, nx / ny));
    CHECK(x.den() > 0);
    CHECK(gcd(abs(Integer(x.num())), Integer(x.den())) == 1);
  }
}

TEST_CASE("rational edge cases") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
  CHECK_THROWS_AS(Rational(0).pow(-1), ArithmeticError);
  CHECK(Rational::parse(" -22/8 ") == Rational(-11, 4));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("quad_arith examples") {
  const QuadElem x(5, 1, 1), y(5, 1, -1);
  CHECK(x * y == QuadElem(5, -4));
  CHECK((QuadElem(5, 3, 2) + QuadElem(5, -3, -2)).is_zero());
  const QuadElem s(2, 1, 1);
  CHECK(s * s == QuadElem(2, 3, 2));
  CHECK((x / y) * y == x);
}

TEST_CASE("quad_arith errors") {
  CHECK_THROWS_AS(QuadElem(5, 1) + QuadElem(2, 1), DomainError);
  CHECK_THROWS_AS(QuadElem(5, 1) / QuadElem(5, 0), ArithmeticError);
  CHECK_THROWS_AS(QuadElem(4, 1), DomainError);
  CHECK_THROWS_AS(QuadElem(1, 1), DomainError);
  CHECK_THROWS_AS(QuadElem(0, 1), DomainError);
  CHECK_NOTHROW(QuadElem(-3, 1, 1));
}

TEST_CASE("quad_conj") {
  CHECK(quad_conj(QuadElem(5, 3, 2)) == QuadElem(5, 3, -2));
  CHECK(quad_conj(QuadElem(5, 7)) == QuadElem(5, 7));
  CHECK(quad_conj(quad_conj(QuadElem(2, 1, -1))) == QuadElem(2, 1, -1));
}

TEST_CASE("quad_sign") {
  CHECK(quad_sign(QuadElem(2, 1, -1), Embedding::v1) == Sign::negative);
  CHECK(quad_sign(QuadElem(2, 1, -1), Embedding::v2) == Sign::positive);
  CHECK(quad_sign(QuadElem(2, 0), Embedding::v1) == Sign::zero);
  CHECK(quad_sign(QuadElem(3, 2, -1), Embedding::v1) == Sign::positive);  // 2 - 1.732
  CHECK(quad_sign(QuadElem(3, -2, 1), Embedding::v1) == Sign::negative);
  CHECK_THROWS_AS(quad_sign(QuadElem(-1, 1, 1), Embedding::v1), DomainError);
}

TEST_CASE("Galois conjugation is a field automorphism; sign and norm properties") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-30, 30), den(1, 9);
  for (std::int64_t d : {2, 3, 5, 13, 7}) {
    for (int i = 0; i < 200; ++i) {
      const QuadElem x(d, Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)));
      const QuadElem y(d, Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)));
      CHECK(quad_conj(x * y) == quad_conj(x) * quad_conj(y));
      CHECK(quad_conj(x + y) == quad_conj(x) + quad_conj(y));
      CHECK(quad_sign(x, Embedding::v1) == quad_sign(quad_conj(x), Embedding::v2));
      const QuadElem n = x * quad_conj(x);
      CHECK(n.is_rational());
      CHECK(n.a() == x.norm());
      CHECK(x.trace() == (x + quad_conj(x)).a());
      CHECK((quad_conj(x) == x) == x.is_rational());
      // Exact sign agrees with a floating evaluation away from zero.
      const double v = x.a().to_double() + x.b().to_double() * std::sqrt(static_cast<double>(d));
      if (std::abs(v) > 1e-9) CHECK((v > 0) == (quad_sign(x, Embedding::v1) == Sign::positive));
    }
  }
}

TEST_CASE("text rendering and parsing") {
  CHECK(QuadElem(5, 3, 2).to_string() == "3+2*sqrt(5)");
  CHECK(QuadElem(5, Rational(1, 2), Rational(-1, 2)).to_string() == "1/2-1/2*sqrt(5)");
  CHECK(QuadElem(2, 0, 0).to_string() == "0+0*sqrt(2)");
  CHECK(QuadElem::parse("3+2*sqrt(5)") == QuadElem(5, 3, 2));
  CHECK(QuadElem::parse("-1/2-3/4*sqrt(13)") == QuadElem(13, Rational(-1, 2), Rational(-3, 4)));
  CHECK(QuadElem::parse("sqrt(5)") == QuadElem(5, 0, 1));
  CHECK(QuadElem::parse("-sqrt(5)") == QuadElem(5, 0, -1));
  CHECK(QuadElem::parse("7", 5) == QuadElem(5, 7));
  CHECK_THROWS_AS(QuadElem::parse("7"), ParseError);
  CHECK_THROWS_AS(QuadElem::parse("1+sqrt(5)", 2), DomainError);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-50, 50), den(1, 12);
  for (int i = 0; i < 100; ++i) {
    const QuadElem x(13, Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)));
    CHECK(QuadElem::parse(x.to_string()) == x);
    CHECK(Rational::parse(x.a().to_string()) == x.a());
  }
}

TEST_CASE("squarefree helpers") {
  CHECK(is_valid_quadratic_seed(2));
  CHECK(is_valid_quadratic_seed(-1));
  CHECK(!is_valid_quadratic_seed(12));
  CHECK(!is_valid_quadratic_seed(-4));
  const auto [s, f] = squarefree_decompose(Integer(72));
  CHECK(s == 6);
  CHECK(f == 2);
}
