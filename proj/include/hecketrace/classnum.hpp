#ifndef HECKETRACE_CLASSNUM_HPP
#define HECKETRACE_CLASSNUM_HPP

#include <optional>
#include <shared_mutex>
#include <vector>

#include "hecketrace/exact.hpp"

namespace hecketrace {

/// Binary quadratic form a x^2 + b xy + c y^2.
struct ReducedForm {
  long a, b, c;

  long discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// All reduced positive-definite forms of discriminant -N, including non-primitive ones.
std::vector<ReducedForm> reduced_forms(long N);

/// Hurwitz class number: H(0) = -1/12, forms proportional to x^2+y^2 count 1/2,
/// forms proportional to x^2+xy+y^2 count 1/3. Computed directly, no cache.
Rational hurwitz(long N);

/// Read-mostly memo of H(N) for N <= bound. Concurrent lookups are safe; a miss
/// fills the slot idempotently. Values beyond the bound are computed on demand.
class HurwitzCache {
 public:
  explicit HurwitzCache(long bound);

  Rational get(long N) const;
  long bound() const { return bound_; }
  /// Fills every slot; afterwards lookups never take the write lock.
  void fill() const;

 private:
  long bound_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::optional<Rational>> table_;
};

/// Default memo bound: 4 * 30 + 1 unless HECKETRACE_HURWITZ_BOUND is set.
long default_hurwitz_bound();

/// Process-wide cache used by the trace engine.
const HurwitzCache& shared_hurwitz_cache();

}  // namespace hecketrace

#endif  // HECKETRACE_CLASSNUM_HPP
