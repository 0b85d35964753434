#include "hecketrace/tfengine.hpp"

#include <algorithm>
#include <string>

#include "hecketrace/chars.hpp"

namespace hecketrace {

HeckeDatum::HeckeDatum(long m_) : m(m_) {
  if (m < 1) throw DomainError("Hecke operator T_m needs m >= 1, got " + std::to_string(m));
}

void require_engine_domain(int k, long m) {
  if (k % 2 != 0) throw AlgebraicityError("weight k must be even at level 1 (trivial character), got " + std::to_string(k));
  if (k == 2) throw DomainError("weight 2 needs Eisenstein/residual corrections and is not supported");
  if (k < 4) throw DomainError("weight k must be >= 4, got " + std::to_string(k));
  if (m < 1) throw DomainError("m must be >= 1, got " + std::to_string(m));
}

bool is_perfect_square(long n, long* root) {
  if (n < 0) return false;
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

Rational elliptic_term(int k, long m, const HurwitzCache& cache) {
  require_engine_domain(k, m);
  const Rational det(m);
  Rational sum(0);
  // t and -t contribute equally (k - 2 even), so walk t >= 0 and double.
  for (long t = 0; t * t < 4 * m; ++t) {
    Rational term = sym_char(k - 2, Rational(t), det) * cache.get(4 * m - t * t);
    if (t > 0) term *= Rational(2);
    sum += term;
  }
  return sum * Rational(-1, 2);
}

Rational identity_term(int k, long m) {
  require_engine_domain(k, m);
  long root = 0;
  if (!is_perfect_square(m, &root)) return Rational(0);
  return Rational(k - 1, 12) * Rational(root).pow(k - 2);
}

Rational hyperbolic_term(int k, long m) {
  require_engine_domain(k, m);
  Rational sum(0);
  for (long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    sum += Rational(std::min(d, m / d)).pow(k - 1);
  }
  return sum * Rational(-1, 2);
}

TraceBreakdown trace_cusp(int k, long m, const HurwitzCache& cache) {
  TraceBreakdown out;
  out.k = k;
  out.m = m;
  out.identity = identity_term(k, m);
  out.elliptic = elliptic_term(k, m, cache);
  out.hyperbolic = hyperbolic_term(k, m);
  out.total = out.identity + out.elliptic + out.hyperbolic;
  return out;
}

namespace {

void validate_grid(std::span<const int> ks, std::span<const long> ms) {
  for (int k : ks)
    for (long m : ms) require_engine_domain(k, m);
}

}  // namespace

std::vector<TraceBreakdown> trace_grid_serial(std::span<const int> ks, std::span<const long> ms) {
  validate_grid(ks, ms);
  std::vector<TraceBreakdown> out;
  out.reserve(ks.size() * ms.size());
  for (int k : ks)
    for (long m : ms) out.push_back(trace_cusp(k, m));
  return out;
}

std::vector<TraceBreakdown> trace_grid(std::span<const int> ks, std::span<const long> ms) {
  validate_grid(ks, ms);
  const auto& cache = shared_hurwitz_cache();
  cache.fill();
  const long nk = static_cast<long>(ks.size());
  const long nm = static_cast<long>(ms.size());
  std::vector<TraceBreakdown> out(ks.size() * ms.size());
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (long i = 0; i < nk; ++i)
    for (long j = 0; j < nm; ++j) out[i * nm + j] = trace_cusp(ks[i], ms[j], cache);
  return out;
}

}  // namespace hecketrace
