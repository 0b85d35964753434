#include "hecketrace/classnum.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace hecketrace {

std::vector<ReducedForm> reduced_forms(long N) {
  if (N < 1) throw DomainError("reduced_forms needs N >= 1");
  std::vector<ReducedForm> forms;
  if (N % 4 == 1 || N % 4 == 2) return forms;
  // Reduced forms satisfy 3a^2 <= 4ac - b^2 = N.
  for (long a = 1; 3 * a * a <= N; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b + N;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      forms.push_back({a, b, c});
    }
  }
  return forms;
}

Rational hurwitz(long N) {
  if (N < 0) throw DomainError("Hurwitz class number needs N >= 0, got " + std::to_string(N));
  if (N == 0) return Rational(-1, 12);
  Rational h(0);
  for (const ReducedForm& f : reduced_forms(N)) {
    if (f.b == 0 && f.a == f.c)
      h += Rational(1, 2);
    else if (f.a == f.b && f.b == f.c)
      h += Rational(1, 3);
    else
      h += Rational(1);
  }
  return h;
}

HurwitzCache::HurwitzCache(long bound) : bound_(bound), table_(bound >= 0 ? bound + 1 : 0) {}

Rational HurwitzCache::get(long N) const {
  if (N < 0 || N > bound_) return hurwitz(N);
  {
    std::shared_lock lock(mutex_);
    if (table_[N]) return *table_[N];
  }
  Rational value = hurwitz(N);
  std::unique_lock lock(mutex_);
  if (!table_[N]) table_[N] = value;
  return value;
}

void HurwitzCache::fill() const {
  for (long n = 0; n <= bound_; ++n) get(n);
}

long default_hurwitz_bound() {
  if (const char* env = std::getenv("HECKETRACE_HURWITZ_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return v;
  }
  return 4 * 30 + 1;
}

const HurwitzCache& shared_hurwitz_cache() {
  static const HurwitzCache cache(default_hurwitz_bound());
  return cache;
}

}  // namespace hecketrace
