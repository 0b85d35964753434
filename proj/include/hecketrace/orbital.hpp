#ifndef HECKETRACE_ORBITAL_HPP
#define HECKETRACE_ORBITAL_HPP

#include <array>
#include <string>
#include <vector>

#include "hecketrace/chars.hpp"
#include "hecketrace/exact.hpp"

namespace hecketrace {

/// 2x2 matrix [[a, b], [c, d]].
template <class S>
struct Mat2 {
  S a, b, c, d;

  S trace() const { return a + d; }
  S det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  Mat2 inverse() const {
    const S n = det();
    if (is_zero(n)) throw ArithmeticError("singular 2x2 matrix");
    return {d / n, -b / n, -c / n, a / n};
  }
  Mat2 scaled(const S& z) const { return {z * a, z * b, z * c, z * d}; }
};

/// Element of GL_2(F) for F = Q (S = Rational) or F = Q(sqrt(d)), d > 0 (S = QuadElem).
template <class S>
class GroupElement {
 public:
  explicit GroupElement(Mat2<S> m);

  const Mat2<S>& matrix() const { return m_; }
  const S& trace() const { return t_; }
  const S& det() const { return n_; }

  /// Number of real places of the base field.
  std::size_t places() const;

 private:
  Mat2<S> m_;
  S t_;
  S n_;
};

using RationalElement = GroupElement<Rational>;
using QuadraticElement = GroupElement<QuadElem>;

enum class PlaceType { elliptic_positive, elliptic_negative_det, hyperbolic, parabolic };
enum class Aggregate { totally_elliptic_positive, degenerate, excluded };

struct EllipticityReport {
  std::vector<PlaceType> places;
  Aggregate aggregate;
};

std::string to_string(PlaceType p);
std::string to_string(Aggregate a);

/// Classification from trace and determinant at every real place.
template <class S>
EllipticityReport classify(const GroupElement<S>& g);

/// Archimedean orbital integral of the weight-k pseudo-coefficient, evaluated through
/// characters: the product over places of -2 ch_{k_v-2,w} at the embedded (t_v, n_v),
/// or 0 when the element is hyperbolic or has negative determinant somewhere.
/// For quadratic fields the value is reported through the embedding v1.
template <class S>
S arch_orbital(const GroupElement<S>& g, const WeightVector& kw);

/// For totally elliptic, totally positive g over Q(sqrt(d)): conj(I_{(k1,k2),w}(g)) == I_{(k2,k1),w}(g).
bool orbital_equivariance_check(const QuadraticElement& g, const WeightVector& kw);

/// Companion matrix [[0, -n], [1, t]] with the given trace and determinant.
template <class S>
GroupElement<S> companion(const S& t, const S& n) {
  return GroupElement<S>(Mat2<S>{lift_like(t, Rational(0)), -n, one_like(t), t});
}

extern template class GroupElement<Rational>;
extern template class GroupElement<QuadElem>;
extern template EllipticityReport classify(const GroupElement<Rational>&);
extern template EllipticityReport classify(const GroupElement<QuadElem>&);
extern template Rational arch_orbital(const GroupElement<Rational>&, const WeightVector&);
extern template QuadElem arch_orbital(const GroupElement<QuadElem>&, const WeightVector&);

}  // namespace hecketrace

#endif  // HECKETRACE_ORBITAL_HPP
