#ifndef HECKETRACE_QSERIES_HPP
#define HECKETRACE_QSERIES_HPP

#include <string>
#include <vector>

#include "hecketrace/exact.hpp"

namespace hecketrace {

/// Power series in q truncated at O(q^prec): coefficients of q^0 .. q^{prec-1}.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static QSeries zero(long prec) { return QSeries(std::vector<Rational>(prec, Rational(0))); }
  static QSeries one(long prec);

  long prec() const { return static_cast<long>(coeffs_.size()); }
  /// Coefficient of q^n; reading at or beyond prec throws PrecisionError.
  const Rational& operator[](long n) const;
  Rational& at(long n);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  QSeries truncated(long prec) const;
  /// q^s * f, keeping the precision bookkeeping exact (prec grows by s).
  QSeries shifted(long s) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  QSeries scaled(const Rational& c) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Truncated Cauchy product to min(a.prec, b.prec). The default path splits the
/// output coefficients across OpenMP threads once the series is long enough.
QSeries multiply(const QSeries& a, const QSeries& b);
/// Single-threaded reference for multiply().
QSeries multiply_serial(const QSeries& a, const QSeries& b);
/// Always takes the OpenMP path, regardless of size.
QSeries multiply_parallel(const QSeries& a, const QSeries& b);

QSeries power(const QSeries& a, long e);

}  // namespace hecketrace

#endif  // HECKETRACE_QSERIES_HPP
