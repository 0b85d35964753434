#ifndef HECKETRACE_ORACLE_HPP
#define HECKETRACE_ORACLE_HPP

#include <span>
#include <string>
#include <vector>

#include "hecketrace/exact.hpp"
#include "hecketrace/qseries.hpp"

namespace hecketrace {

/// Dense square matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  Rational trace() const;
  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
  friend RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y);
  RationalMatrix scaled(const Rational& c) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Coefficients c_0 .. c_n of c_0 + c_1 x + ... + c_n x^n.
using IntPolynomial = std::vector<Integer>;

std::string polynomial_to_string(const IntPolynomial& p);

/// Sum of r-th powers of the divisors of n.
Integer divisor_sigma(long n, int r);

/// E_4 = 1 + 240 sum sigma_3(n) q^n, E_6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein(int weight, long prec);

/// Delta = q prod (1 - q^n)^24.
QSeries delta(long prec);

/// Exponents of Delta^a E_4^b E_6^c, with c in {0, 1}.
struct Monomial {
  int a, b, c;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomial basis of S_k(SL_2(Z)): one Delta^a E_4^b E_6^c per a >= 1 with
/// 12a + 4b + 6c = k and c in {0, 1}, ordered by descending a.
std::vector<Monomial> cusp_basis_monomials(int k);
std::vector<QSeries> cusp_basis(int k, long prec);
int cusp_dimension(int k);

/// a_n(T_m f) = sum_{d | gcd(m, n)} d^{k-1} a_{mn/d^2}(f) for n < out_prec.
QSeries hecke_action(const QSeries& f, int k, long m, long out_prec);

/// Working precision used for the matrix of T_m on S_k.
long default_hecke_precision(int k, long m);

/// Builds the monomial basis once and serves Hecke matrices for every m <= m_max.
class HeckeOracle {
 public:
  HeckeOracle(int k, long m_max);
  HeckeOracle(int k, long m_max, long prec);

  int weight() const { return k_; }
  std::size_t dimension() const { return basis_.size(); }
  long precision() const { return prec_; }
  const std::vector<QSeries>& basis() const { return basis_; }

  /// Matrix of T_m in basis coordinates: column j holds the coordinates of T_m(basis[j]).
  RationalMatrix matrix(long m) const;
  /// Coordinates of a cusp form in the basis, verified against every known coefficient.
  std::vector<Rational> coordinates(const QSeries& g) const;

 private:
  int k_;
  long m_max_;
  long prec_;
  std::vector<QSeries> basis_;
};

RationalMatrix hecke_matrix(int k, long m);
RationalMatrix hecke_matrix(int k, long m, long prec);
Rational oracle_trace(int k, long m);
IntPolynomial charpoly(const RationalMatrix& a);
IntPolynomial charpoly(int k, long m);

/// Oracle traces for ks x ms, k-major. Parallel over k with OpenMP; serial reference alongside.
std::vector<Rational> oracle_trace_grid(std::span<const int> ks, std::span<const long> ms);
std::vector<Rational> oracle_trace_grid_serial(std::span<const int> ks, std::span<const long> ms);

}  // namespace hecketrace

#endif  // HECKETRACE_ORACLE_HPP
