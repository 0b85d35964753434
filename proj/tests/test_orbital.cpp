#include "doctest.h"

#include <random>

#include "hecketrace/orbital.hpp"

using namespace hecketrace;

namespace {

RationalElement rat(long a, long b, long c, long d) {
  return RationalElement(Mat2<Rational>{Rational(a), Rational(b), Rational(c), Rational(d)});
}

QuadElem q(std::int64_t d, Rational a, Rational b = Rational(0)) { return QuadElem(d, a, b); }

Mat2<QuadElem> random_invertible(std::mt19937_64& rng, std::int64_t d) {
  std::uniform_int_distribution<long> c(-4, 4);
  for (;;) {
    Mat2<QuadElem> g{q(d, c(rng), c(rng)), q(d, c(rng), c(rng)), q(d, c(rng), c(rng)), q(d, c(rng), c(rng))};
    if (!g.det().is_zero()) return g;
  }
}

}  // namespace

TEST_CASE("classify examples") {
  CHECK(classify(rat(0, -1, 1, 0)).aggregate == Aggregate::totally_elliptic_positive);
  const auto hyp = classify(rat(2, 0, 0, 1));
  CHECK(hyp.aggregate == Aggregate::excluded);
  CHECK(hyp.places == std::vector<PlaceType>{PlaceType::hyperbolic});
  CHECK(classify(rat(1, 1, 0, 1)).aggregate == Aggregate::degenerate);
  CHECK(classify(rat(0, 1, 1, 0)).aggregate == Aggregate::excluded);  // det -1

  // t = sqrt5, n = 1: t^2 - 4n = 1 at both places.
  const QuadraticElement g1(Mat2<QuadElem>{q(5, 0), q(5, -1), q(5, 1), q(5, 0, 1)});
  const auto r1 = classify(g1);
  CHECK(r1.places == std::vector<PlaceType>{PlaceType::hyperbolic, PlaceType::hyperbolic});
  CHECK(r1.aggregate == Aggregate::excluded);

  // t = 1 + sqrt2: hyperbolic at v1, elliptic at v2.
  const auto r2 = classify(companion(q(2, 1, 1), q(2, 1)));
  CHECK(r2.places == std::vector<PlaceType>{PlaceType::hyperbolic, PlaceType::elliptic_positive});
  CHECK(r2.aggregate == Aggregate::excluded);

  // t = (1 + sqrt5)/2: elliptic at both places.
  const auto r3 = classify(companion(q(5, Rational(1, 2), Rational(1, 2)), q(5, 1)));
  CHECK(r3.aggregate == Aggregate::totally_elliptic_positive);

  // t = 2, n = 1 + 0*sqrt(2)... parabolic at both.
  CHECK(classify(companion(q(2, 2), q(2, 1))).aggregate == Aggregate::degenerate);
}

TEST_CASE("group element invariants") {
  CHECK_THROWS_AS(rat(1, 2, 2, 4), DomainError);
  CHECK_THROWS_AS(QuadraticElement(Mat2<QuadElem>{q(5, 1), q(2, 0), q(5, 0), q(5, 1)}), DomainError);
  CHECK_THROWS_AS(QuadraticElement(Mat2<QuadElem>{q(-1, 1), q(-1, 0), q(-1, 0), q(-1, 1)}), DomainError);
}

TEST_CASE("arch_orbital examples") {
  CHECK(arch_orbital(rat(0, -1, 1, 0), WeightVector({12}, 10)) == Rational(2));
  CHECK(arch_orbital(rat(2, 0, 0, 1), WeightVector({12}, 10)) == Rational(0));
  CHECK(arch_orbital(rat(2, 0, 0, 1), WeightVector({4}, 0)) == Rational(0));
  CHECK(arch_orbital(rat(0, -1, 1, 1), WeightVector({4}, 2)) == Rational(0));
}

TEST_CASE("arch_orbital errors") {
  CHECK_THROWS_AS(arch_orbital(rat(1, 1, 0, 1), WeightVector({4}, 0)), DegenerateInputError);
  CHECK_THROWS_AS(arch_orbital(rat(0, -1, 1, 0), WeightVector({4, 4}, 0)), DomainError);
  CHECK_THROWS_AS(WeightVector({4}, 1), AlgebraicityError);
}

TEST_CASE("orbital_equivariance_check examples") {
  const WeightVector sym({6, 6}, 0);
  const auto g = companion(q(5, Rational(1, 2), Rational(1, 2)), q(5, 1));
  CHECK(orbital_equivariance_check(g, sym));
  CHECK(arch_orbital(g, sym).is_rational());

  const auto h = companion(q(5, 1), q(5, 1));
  CHECK(orbital_equivariance_check(h, WeightVector({4, 6}, 0)));
  CHECK(arch_orbital(h, WeightVector({4, 6}, 0)).is_rational());
  CHECK(arch_orbital(h, WeightVector({6, 4}, 0)).is_rational());

  // S_2(phi, 1) = phi and S_8(conj phi, 1) = -1 for the golden ratio phi.
  CHECK(orbital_equivariance_check(g, WeightVector({4, 10}, 0)));
  CHECK(arch_orbital(g, WeightVector({4, 10}, 0)) == q(5, -2, -2));
  CHECK(arch_orbital(g, WeightVector({10, 4}, 0)) == q(5, -2, 2));

  CHECK_THROWS_AS(orbital_equivariance_check(companion(q(2, 1, 1), q(2, 1)), WeightVector({4, 6}, 0)), DomainError);
}

TEST_CASE("vanishing on hyperbolic and negative-determinant elements") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-9, 9);
  int checked = 0;
  while (checked < 200) {
    const Rational n(c(rng));
    if (n.is_zero()) continue;
    const auto g = companion(Rational(c(rng)), n);
    const auto cls = classify(g).aggregate;
    if (cls != Aggregate::excluded) continue;
    ++checked;
    CHECK(arch_orbital(g, WeightVector({12}, 0)).is_zero());
    CHECK(arch_orbital(g, WeightVector({7}, 1)).is_zero());
  }
}

TEST_CASE("conjugation invariance, central twist and equivariance over real quadratic fields") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-8, 8), pos(1, 12), z(1, 5);
  for (std::int64_t d : {2, 3, 5, 13}) {
    int checked = 0;
    while (checked < 100) {
      const QuadElem t = q(d, Rational(c(rng), 2), Rational(c(rng) / 2, 2));
      const QuadElem n = q(d, pos(rng), Rational(c(rng) / 3));
      const auto g = companion(t, n);
      if (classify(g).aggregate != Aggregate::totally_elliptic_positive) continue;
      ++checked;
      const WeightVector kw({4, 10}, 2);
      const QuadElem base = arch_orbital(g, kw);

      const auto x = random_invertible(rng, d);
      const QuadraticElement conj(x * g.matrix() * x.inverse());
      CHECK(arch_orbital(conj, kw) == base);

      const Rational zz(z(rng), z(rng));
      const QuadraticElement twisted(g.matrix().scaled(q(d, zz)));
      CHECK(arch_orbital(twisted, kw) == q(d, zz.pow(kw.w() * 2)) * base);

      CHECK(orbital_equivariance_check(g, kw));
      CHECK(orbital_equivariance_check(g, WeightVector({6, 8}, 0)));
    }
  }
}

TEST_CASE("orbital integrals over Q are rational and twist by z^w") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c(-6, 6), pos(1, 10);
  int checked = 0;
  while (checked < 100) {
    const auto g = companion(Rational(c(rng)), Rational(pos(rng)));
    if (classify(g).aggregate != Aggregate::totally_elliptic_positive) continue;
    ++checked;
    const WeightVector kw({8}, 4);
    const Rational v = arch_orbital(g, kw);
    CHECK(v == Rational(-2) * ch_kw(6, 4, g.trace(), g.det()));
    const RationalElement twisted(g.matrix().scaled(Rational(3)));
    CHECK(arch_orbital(twisted, kw) == Rational(3).pow(4) * v);
  }
}
