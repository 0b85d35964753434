#ifndef HECKETRACE_GALOIS_HPP
#define HECKETRACE_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecketrace/chars.hpp"
#include "hecketrace/exact.hpp"
#include "hecketrace/oracle.hpp"
#include "hecketrace/tfengine.hpp"

namespace hecketrace {

/// The action of sigma on the data in scope: the identity on Q, or the nontrivial
/// automorphism of Q(sqrt(d)) together with the induced swap of its two real places.
class SigmaAction {
 public:
  static SigmaAction rationals(std::size_t places = 1);
  static SigmaAction quadratic(std::int64_t d);

  const std::optional<std::int64_t>& field() const { return d_; }
  /// inverse_places()[v] = sigma^{-1}(v).
  const std::vector<std::size_t>& inverse_places() const { return inverse_; }
  bool is_identity() const { return !d_.has_value(); }

  Rational apply(const Rational& x) const { return x; }
  QuadElem apply(const QuadElem& x) const;

 private:
  SigmaAction(std::optional<std::int64_t> d, std::vector<std::size_t> inverse)
      : d_(d), inverse_(std::move(inverse)) {}
  std::optional<std::int64_t> d_;
  std::vector<std::size_t> inverse_;
};

/// (sigma k)_v = k_{sigma^{-1}(v)}; w unchanged.
WeightVector conjugate_weight(const WeightVector& kw, const SigmaAction& sigma);

/// sigma(phi)(x) = sigma(phi(x)). T_m is Q-valued, so it is fixed.
HeckeDatum conjugate_hecke(const HeckeDatum& phi, const SigmaAction& sigma);
std::vector<HeckeDatum> conjugate_hecke(std::span<const HeckeDatum> phis, const SigmaAction& sigma);

struct TraceIdentityEntry {
  TraceBreakdown breakdown;
  /// trace_cusp at the sigma-conjugated weight.
  TraceBreakdown conjugate;
  /// Each term recomputed inside Q(sqrt(audit_d)) has zero irrational part and equals the rational value.
  bool terms_sigma_fixed = false;
  bool identity_holds = false;
  bool total_integral = false;

  bool passed() const { return terms_sigma_fixed && identity_holds && total_integral; }
};

struct TraceIdentityReport {
  std::int64_t audit_field;
  std::vector<TraceIdentityEntry> entries;

  bool passed() const;
  const TraceIdentityEntry* first_failure() const;
};

/// For every (k, m): sigma tr T_m = tr sigma(T_m) at the conjugate weight, and every
/// distribution term is sigma-fixed. Over Q the conjugate weight is k itself.
TraceIdentityReport trace_identity_suite(std::span<const int> ks, std::span<const long> ms,
                                         std::int64_t audit_field = 5);

struct HilbertSuiteConfig {
  std::vector<std::int64_t> fields{2, 3, 5, 13};
  std::vector<std::pair<int, int>> weights{{4, 6}, {4, 10}, {6, 8}};
  std::vector<int> central_exponents{0, 2};
  int elliptic_samples = 100;
  int vanishing_samples = 200;
  std::uint64_t seed = 20241015;
};

struct HilbertFieldResult {
  std::int64_t d;
  int elliptic_checked = 0;
  int elliptic_passed = 0;
  int vanishing_checked = 0;
  int vanishing_zero = 0;
  int hyperbolic_samples = 0;
  int negative_det_samples = 0;

  bool passed() const {
    return elliptic_checked > 0 && elliptic_passed == elliptic_checked && vanishing_zero == vanishing_checked;
  }
};

struct HilbertSuiteReport {
  std::vector<HilbertFieldResult> fields;
  bool passed() const;
};

/// Pseudo-random totally elliptic, totally positive elements over each field; for each
/// weight pair and exponent, checks conj(I_{k,w}) = I_{sigma k,w}. Also draws elements
/// hyperbolic or of negative determinant at some place and checks the integral is exactly 0.
HilbertSuiteReport hilbert_orbital_suite(const HilbertSuiteConfig& config = {});

struct EigensystemReport {
  int k = 0;
  std::size_t dimension = 0;
  long m_max = 0;
  /// Size of each sigma-orbit of Hecke eigensystems.
  std::size_t orbit_size = 0;
  IntPolynomial charpoly_t2;
  Integer discriminant = 0;
  /// Q(sqrt(d)) carrying the eigenvalues when the system is not rational.
  std::optional<std::int64_t> field_d;
  /// Eigenvalues a_1 .. a_{m_max} per system (rational case).
  std::vector<std::vector<Rational>> rational_systems;
  /// Eigenvalues per system as elements of Q(sqrt(d)) (conjugate pair case).
  std::vector<std::vector<QuadElem>> quadratic_systems;
  /// Every T_m acts on each eigenvector by a scalar, with a_1 = 1, sum = trace, product = det.
  bool consistent = false;
  /// conj maps the first system onto the second, termwise.
  bool exchanged_by_conjugation = false;
  /// The conjugated T_2 eigenvalue is a root of the same rational characteristic polynomial.
  bool minpoly_conjugation = false;
  std::vector<std::string> failures;

  bool passed() const;
};

/// Eigensystems of the Hecke algebra on S_k for dim S_k in {1, 2}. Larger spaces throw
/// UnsupportedScopeError.
EigensystemReport eigensystem_orbit_check(int k, long m_max = 20);

}  // namespace hecketrace

#endif  // HECKETRACE_GALOIS_HPP
