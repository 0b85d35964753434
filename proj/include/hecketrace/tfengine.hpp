#ifndef HECKETRACE_TFENGINE_HPP
#define HECKETRACE_TFENGINE_HPP

#include <span>
#include <vector>

#include "hecketrace/classnum.hpp"
#include "hecketrace/exact.hpp"

namespace hecketrace {

/// Geometric side of Tr T_m on S_k(SL_2(Z)), split by conjugacy-class type.
struct TraceBreakdown {
  int k = 0;
  long m = 0;
  Rational identity;
  Rational elliptic;
  Rational hyperbolic;
  Rational total;

  friend bool operator==(const TraceBreakdown&, const TraceBreakdown&) = default;
};

/// Hecke operator T_m as a rational-valued double-coset datum.
struct HeckeDatum {
  long m;
  explicit HeckeDatum(long m_);
  friend bool operator==(const HeckeDatum&, const HeckeDatum&) = default;
};

/// Throws DomainError unless k is even and >= 4 and m >= 1.
void require_engine_domain(int k, long m);

/// -(1/2) sum_{t^2 < 4m} S_{k-2}(t, m) H(4m - t^2).
Rational elliptic_term(int k, long m, const HurwitzCache& cache = shared_hurwitz_cache());

/// (k-1)/12 * m^{(k-2)/2} when m is a square, else 0.
Rational identity_term(int k, long m);

/// -(1/2) sum_{d d' = m} min(d, d')^{k-1} over ordered factorizations.
Rational hyperbolic_term(int k, long m);

TraceBreakdown trace_cusp(int k, long m, const HurwitzCache& cache = shared_hurwitz_cache());

/// Breakdowns for every (k, m) in ks x ms, ordered k-major. The parallel version
/// spreads the grid over OpenMP threads; the serial version is the reference.
std::vector<TraceBreakdown> trace_grid(std::span<const int> ks, std::span<const long> ms);
std::vector<TraceBreakdown> trace_grid_serial(std::span<const int> ks, std::span<const long> ms);

/// Integer square root if n is a perfect square.
bool is_perfect_square(long n, long* root = nullptr);

}  // namespace hecketrace

#endif  // HECKETRACE_TFENGINE_HPP
