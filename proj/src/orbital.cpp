#include "hecketrace/orbital.hpp"

#include <type_traits>

namespace hecketrace {

namespace {

std::int64_t field_seed(const Rational&) { return 1; }
std::int64_t field_seed(const QuadElem& x) { return x.d(); }

PlaceType place_type(int disc_sign, int det_sign) {
  if (disc_sign == 0) return PlaceType::parabolic;
  if (disc_sign > 0) return PlaceType::hyperbolic;
  // t^2 - 4n < 0 forces n > 0 over R; the negative-determinant elliptic case cannot arise.
  return det_sign > 0 ? PlaceType::elliptic_positive : PlaceType::elliptic_negative_det;
}

int as_int(Sign s) { return static_cast<int>(s); }

}  // namespace

template <class S>
GroupElement<S>::GroupElement(Mat2<S> m) : m_(std::move(m)), t_(m_.trace()), n_(m_.det()) {
  // Mixed fields already throw inside trace()/det(); check the off-diagonal entries too.
  const auto seed = field_seed(m_.a);
  if (field_seed(m_.b) != seed || field_seed(m_.c) != seed || field_seed(m_.d) != seed)
    throw DomainError("matrix entries from different fields");
  if (is_zero(n_)) throw DomainError("singular matrix is not in GL_2");
  if constexpr (std::is_same_v<S, QuadElem>) {
    if (seed < 0) throw DomainError("orbital layer needs a real quadratic field, got d = " + std::to_string(seed));
  }
}

template <class S>
std::size_t GroupElement<S>::places() const {
  return std::is_same_v<S, QuadElem> ? 2 : 1;
}

std::string to_string(PlaceType p) {
  switch (p) {
    case PlaceType::elliptic_positive: return "elliptic_positive";
    case PlaceType::elliptic_negative_det: return "elliptic_negative_det";
    case PlaceType::hyperbolic: return "hyperbolic";
    case PlaceType::parabolic: return "parabolic";
  }
  return "?";
}

std::string to_string(Aggregate a) {
  switch (a) {
    case Aggregate::totally_elliptic_positive: return "totally_elliptic_positive";
    case Aggregate::degenerate: return "degenerate";
    case Aggregate::excluded: return "excluded";
  }
  return "?";
}

template <class S>
EllipticityReport classify(const GroupElement<S>& g) {
  const S disc = g.trace() * g.trace() - lift_like(g.trace(), Rational(4)) * g.det();
  EllipticityReport report;
  if constexpr (std::is_same_v<S, Rational>) {
    report.places.push_back(place_type(disc.sign(), g.det().sign()));
  } else {
    for (Embedding v : {Embedding::v1, Embedding::v2})
      report.places.push_back(place_type(as_int(disc.sign(v)), as_int(g.det().sign(v))));
  }
  report.aggregate = Aggregate::totally_elliptic_positive;
  for (PlaceType p : report.places) {
    if (p == PlaceType::parabolic) {
      report.aggregate = Aggregate::degenerate;
      break;
    }
    if (p != PlaceType::elliptic_positive) report.aggregate = Aggregate::excluded;
  }
  return report;
}

template <class S>
S arch_orbital(const GroupElement<S>& g, const WeightVector& kw) {
  if (kw.places() != g.places())
    throw DomainError("weight vector has " + std::to_string(kw.places()) + " entries but the field has " +
                      std::to_string(g.places()) + " real places");
  const EllipticityReport report = classify(g);
  if (report.aggregate == Aggregate::degenerate)
    throw DegenerateInputError("parabolic element (t^2 = 4n at some real place)");
  const S zero = lift_like(g.trace(), Rational(0));
  if (report.aggregate == Aggregate::excluded) return zero;

  const S minus_two = lift_like(g.trace(), Rational(-2));
  S result = minus_two * ch_kw(kw.k()[0] - 2, kw.w(), g.trace(), g.det());
  if constexpr (std::is_same_v<S, QuadElem>) {
    // The value at v2 is the v1-image of the conjugated character value.
    result *= minus_two * ch_kw(kw.k()[1] - 2, kw.w(), g.trace().conj(), g.det().conj());
  }
  return result;
}

bool orbital_equivariance_check(const QuadraticElement& g, const WeightVector& kw) {
  if (kw.places() != 2) throw DomainError("equivariance check needs a weight vector of length 2");
  if (classify(g).aggregate != Aggregate::totally_elliptic_positive)
    throw DomainError("equivariance check needs a totally elliptic, totally positive element");
  const WeightVector swapped({kw.k()[1], kw.k()[0]}, kw.w());
  return arch_orbital(g, kw).conj() == arch_orbital(g, swapped);
}

template class GroupElement<Rational>;
template class GroupElement<QuadElem>;
template EllipticityReport classify(const GroupElement<Rational>&);
template EllipticityReport classify(const GroupElement<QuadElem>&);
template Rational arch_orbital(const GroupElement<Rational>&, const WeightVector&);
template QuadElem arch_orbital(const GroupElement<QuadElem>&, const WeightVector&);

}  // namespace hecketrace
