#include "doctest.h"

#include <random>

#include "hecketrace/qseries.hpp"

using namespace hecketrace;

namespace {

QSeries random_series(std::mt19937_64& rng, long prec) {
  std::uniform_int_distribution<long> c(-50, 50), d(1, 6);
  std::vector<Rational> v;
  for (long i = 0; i < prec; ++i) v.emplace_back(c(rng), d(rng));
  return QSeries(std::move(v));
}

}  // namespace

TEST_CASE("truncated product takes the smaller precision") {
  std::mt19937_64 rng(3);
  const auto a = random_series(rng, 10), b = random_series(rng, 7);
  CHECK(multiply(a, b).prec() == 7);
  CHECK((a + b).prec() == 7);
}

TEST_CASE("parallel and serial convolution agree") {
  std::mt19937_64 rng(4);
  for (long prec : {1L, 2L, 17L, 300L, 700L}) {
    const auto a = random_series(rng, prec), b = random_series(rng, prec);
    CHECK(multiply_parallel(a, b) == multiply_serial(a, b));
    CHECK(multiply(a, b) == multiply_serial(a, b));
  }
}

TEST_CASE("product is commutative, associative and distributes; one is neutral") {
  std::mt19937_64 rng(6);
  const auto a = random_series(rng, 40), b = random_series(rng, 40), c = random_series(rng, 40);
  CHECK(multiply(a, b) == multiply(b, a));
  CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  CHECK(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
  CHECK(multiply(a, QSeries::one(40)) == a);
  CHECK(power(a, 3) == multiply(a, multiply(a, a)));
  CHECK(power(a, 0) == QSeries::one(40));
}

TEST_CASE("shift and precision bookkeeping") {
  const QSeries s(std::vector<Rational>{Rational(1), Rational(2)});
  const auto t = s.shifted(2);
  CHECK(t.prec() == 4);
  CHECK(t[2] == Rational(1));
  CHECK(t[0] == Rational(0));
  CHECK_THROWS_AS(t[4], PrecisionError);
  CHECK_THROWS_AS(s.truncated(3), PrecisionError);
}
