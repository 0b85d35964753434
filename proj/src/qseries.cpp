#include "hecketrace/qseries.hpp"

#include <algorithm>

namespace hecketrace {

namespace {

// Below this length thread start-up costs more than the convolution.
constexpr long kParallelThreshold = 256;

}  // namespace

QSeries QSeries::one(long prec) {
  QSeries s = zero(prec);
  if (prec > 0) s.coeffs_[0] = Rational(1);
  return s;
}

const Rational& QSeries::operator[](long n) const {
  if (n < 0 || n >= prec())
    throw PrecisionError("coefficient q^" + std::to_string(n) + " requested from a series known below q^" +
                         std::to_string(prec()));
  return coeffs_[n];
}

Rational& QSeries::at(long n) {
  if (n < 0 || n >= prec())
    throw PrecisionError("coefficient q^" + std::to_string(n) + " outside precision " + std::to_string(prec()));
  return coeffs_[n];
}

QSeries QSeries::truncated(long p) const {
  if (p > prec()) throw PrecisionError("cannot extend a series beyond its known precision");
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + p));
}

QSeries QSeries::shifted(long s) const {
  std::vector<Rational> out(s, Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QSeries(std::move(out));
}

QSeries& QSeries::operator+=(const QSeries& o) {
  coeffs_.resize(std::min(prec(), o.prec()));
  for (long i = 0; i < prec(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  coeffs_.resize(std::min(prec(), o.prec()));
  for (long i = 0; i < prec(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

QSeries QSeries::scaled(const Rational& c) const {
  QSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

QSeries multiply_serial(const QSeries& a, const QSeries& b) {
  const long p = std::min(a.prec(), b.prec());
  std::vector<Rational> out(p, Rational(0));
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (long i = 0; i < p; ++i) {
    if (x[i].is_zero()) continue;
    for (long j = 0; i + j < p; ++j) out[i + j] += x[i] * y[j];
  }
  return QSeries(std::move(out));
}

QSeries multiply_parallel(const QSeries& a, const QSeries& b) {
  const long p = std::min(a.prec(), b.prec());
  std::vector<Rational> out(p, Rational(0));
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  // Each output coefficient is owned by one thread; work grows with n, hence dynamic.
#pragma omp parallel for schedule(dynamic, 16)
  for (long n = 0; n < p; ++n) {
    Rational acc(0);
    for (long i = 0; i <= n; ++i) {
      if (x[i].is_zero() || y[n - i].is_zero()) continue;
      acc += x[i] * y[n - i];
    }
    out[n] = std::move(acc);
  }
  return QSeries(std::move(out));
}

QSeries multiply(const QSeries& a, const QSeries& b) {
  if (std::min(a.prec(), b.prec()) < kParallelThreshold) return multiply_serial(a, b);
  return multiply_parallel(a, b);
}

QSeries power(const QSeries& a, long e) {
  if (e < 0) throw DomainError("negative power of a q-series");
  QSeries result = QSeries::one(a.prec());
  QSeries base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

}  // namespace hecketrace
