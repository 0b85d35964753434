#include "hecketrace/galois.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <type_traits>

#include "hecketrace/classnum.hpp"
#include "hecketrace/orbital.hpp"

namespace hecketrace {

SigmaAction SigmaAction::rationals(std::size_t places) {
  std::vector<std::size_t> inverse(places);
  for (std::size_t v = 0; v < places; ++v) inverse[v] = v;
  return SigmaAction(std::nullopt, std::move(inverse));
}

SigmaAction SigmaAction::quadratic(std::int64_t d) {
  if (!is_valid_quadratic_seed(d) || d < 0)
    throw DomainError("sigma on weights needs a real quadratic field, got d = " + std::to_string(d));
  return SigmaAction(d, {1, 0});
}

QuadElem SigmaAction::apply(const QuadElem& x) const {
  if (!d_) return x;
  if (x.d() != *d_) throw DomainError("sigma of Q(sqrt(" + std::to_string(*d_) + ")) applied to a foreign element");
  return x.conj();
}

WeightVector conjugate_weight(const WeightVector& kw, const SigmaAction& sigma) {
  const auto& inv = sigma.inverse_places();
  if (inv.size() != kw.places())
    throw DomainError("sigma permutes " + std::to_string(inv.size()) + " places but the weight has " +
                      std::to_string(kw.places()));
  std::vector<int> k(kw.places());
  for (std::size_t v = 0; v < k.size(); ++v) k[v] = kw.k()[inv[v]];
  return WeightVector(std::move(k), kw.w());
}

HeckeDatum conjugate_hecke(const HeckeDatum& phi, const SigmaAction&) { return phi; }

std::vector<HeckeDatum> conjugate_hecke(std::span<const HeckeDatum> phis, const SigmaAction& sigma) {
  std::vector<HeckeDatum> out;
  out.reserve(phis.size());
  for (const auto& phi : phis) out.push_back(conjugate_hecke(phi, sigma));
  return out;
}

namespace {

struct Terms {
  QuadElem identity, elliptic, hyperbolic;
};

// The three distributions evaluated entirely inside Q(sqrt(d)).
Terms terms_in_field(int k, long m, std::int64_t d, const HurwitzCache& cache) {
  auto lift = [d](const Rational& r) { return QuadElem(d, r); };
  const QuadElem det = lift(Rational(m));

  QuadElem elliptic = lift(Rational(0));
  for (long t = -2 * m; t <= 2 * m; ++t) {
    if (t * t >= 4 * m) continue;
    elliptic += sym_char(k - 2, lift(Rational(t)), det) * lift(cache.get(4 * m - t * t));
  }
  elliptic *= lift(Rational(-1, 2));

  QuadElem identity = lift(Rational(0));
  long root = 0;
  if (is_perfect_square(m, &root)) identity = lift(Rational(k - 1, 12)) * pow_int(lift(Rational(root)), k - 2);

  QuadElem hyperbolic = lift(Rational(0));
  for (long e = 1; e <= m; ++e)
    if (m % e == 0) hyperbolic += pow_int(lift(Rational(std::min(e, m / e))), k - 1);
  hyperbolic *= lift(Rational(-1, 2));
  return {identity, elliptic, hyperbolic};
}

bool fixed_and_equal(const QuadElem& x, const Rational& r) {
  return quad_conj(x) == x && x.is_rational() && x.a() == r;
}

// Fields are exact rationals by type; no floating value can enter a breakdown.
static_assert(std::is_same_v<decltype(TraceBreakdown::identity), Rational>);
static_assert(std::is_same_v<decltype(TraceBreakdown::elliptic), Rational>);
static_assert(std::is_same_v<decltype(TraceBreakdown::hyperbolic), Rational>);
static_assert(std::is_same_v<decltype(TraceBreakdown::total), Rational>);

}  // namespace

bool TraceIdentityReport::passed() const { return first_failure() == nullptr && !entries.empty(); }

const TraceIdentityEntry* TraceIdentityReport::first_failure() const {
  for (const auto& e : entries)
    if (!e.passed()) return &e;
  return nullptr;
}

TraceIdentityReport trace_identity_suite(std::span<const int> ks, std::span<const long> ms, std::int64_t audit_field) {
  if (!is_valid_quadratic_seed(audit_field)) throw DomainError("audit field seed must be squarefree");
  const auto grid = trace_grid(ks, ms);
  const auto& cache = shared_hurwitz_cache();
  const SigmaAction sigma = SigmaAction::rationals();

  TraceIdentityReport report{audit_field, std::vector<TraceIdentityEntry>(grid.size())};
  const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const TraceBreakdown& b = grid[i];
    TraceIdentityEntry& e = report.entries[i];
    e.breakdown = b;
    const WeightVector kw({b.k}, 0);
    const WeightVector skw = conjugate_weight(kw, sigma);
    const HeckeDatum phi = conjugate_hecke(HeckeDatum(b.m), sigma);
    e.conjugate = trace_cusp(skw.k()[0], phi.m, cache);

    const Terms t = terms_in_field(b.k, b.m, audit_field, cache);
    e.terms_sigma_fixed = fixed_and_equal(t.identity, b.identity) && fixed_and_equal(t.elliptic, b.elliptic) &&
                          fixed_and_equal(t.hyperbolic, b.hyperbolic) &&
                          b.total == b.identity + b.elliptic + b.hyperbolic;
    e.identity_holds = sigma.apply(b.total) == e.conjugate.total && e.conjugate == b;
    e.total_integral = b.total.is_integer();
  }
  return report;
}

bool HilbertSuiteReport::passed() const {
  if (fields.empty()) return false;
  for (const auto& f : fields)
    if (!f.passed()) return false;
  return true;
}

namespace {

class ElementSampler {
 public:
  ElementSampler(std::int64_t d, std::uint64_t seed) : d_(d), rng_(seed) {}

  QuadElem quad(int lo, int hi, int blo, int bhi, long den = 1) {
    return QuadElem(d_, Rational(uniform(lo, hi), den), Rational(uniform(blo, bhi), den));
  }

  // A conjugate of the companion matrix of (t, n) by a random invertible matrix.
  QuadraticElement draw(const QuadElem& t, const QuadElem& n) {
    Mat2<QuadElem> g{quad(-3, 3, -1, 1), quad(-3, 3, -1, 1), quad(-3, 3, -1, 1), quad(-3, 3, -1, 1)};
    while (g.det().is_zero()) g = {quad(-3, 3, -1, 1), quad(-3, 3, -1, 1), quad(-3, 3, -1, 1), quad(-3, 3, -1, 1)};
    const Mat2<QuadElem> c = companion(t, n).matrix();
    return QuadraticElement(g * c * g.inverse());
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::int64_t d_;
  std::mt19937_64 rng_;
};

constexpr long kMaxAttempts = 1000000;

}  // namespace

HilbertSuiteReport hilbert_orbital_suite(const HilbertSuiteConfig& config) {
  std::vector<WeightVector> weights;
  for (const auto& [k1, k2] : config.weights)
    for (int w : config.central_exponents) weights.emplace_back(std::vector<int>{k1, k2}, w);

  HilbertSuiteReport report;
  for (std::size_t fi = 0; fi < config.fields.size(); ++fi) {
    const std::int64_t d = config.fields[fi];
    if (d < 2 || !is_valid_quadratic_seed(d)) throw DomainError("Hilbert suite needs real quadratic fields");
    ElementSampler sampler(d, config.seed + 7919 * fi);
    HilbertFieldResult result{d};

    long attempts = 0;
    int accepted = 0;
    while (accepted < config.elliptic_samples) {
      if (++attempts > kMaxAttempts) throw std::runtime_error("could not draw enough totally elliptic elements");
      const QuadElem t = sampler.quad(-8, 8, -4, 4, 2);
      const QuadElem n = sampler.quad(1, 16, -4, 4);
      if (n.sign(Embedding::v1) != Sign::positive || n.sign(Embedding::v2) != Sign::positive) continue;
      const QuadraticElement g = sampler.draw(t, n);
      if (classify(g).aggregate != Aggregate::totally_elliptic_positive) continue;
      ++accepted;
      for (const auto& kw : weights) {
        ++result.elliptic_checked;
        if (orbital_equivariance_check(g, kw)) ++result.elliptic_passed;
      }
    }

    attempts = 0;
    accepted = 0;
    while (accepted < config.vanishing_samples) {
      if (++attempts > kMaxAttempts) throw std::runtime_error("could not draw enough vanishing-case elements");
      const QuadElem t = sampler.quad(-8, 8, -4, 4, 2);
      const QuadElem n = sampler.quad(-16, 16, -4, 4);
      if (n.is_zero()) continue;
      const QuadraticElement g = sampler.draw(t, n);
      const EllipticityReport cls = classify(g);
      if (cls.aggregate != Aggregate::excluded) continue;
      ++accepted;
      const bool negative_det =
          g.det().sign(Embedding::v1) == Sign::negative || g.det().sign(Embedding::v2) == Sign::negative;
      if (negative_det)
        ++result.negative_det_samples;
      else
        ++result.hyperbolic_samples;
      for (const auto& kw : weights) {
        ++result.vanishing_checked;
        if (arch_orbital(g, kw).is_zero()) ++result.vanishing_zero;
      }
    }
    report.fields.push_back(result);
  }
  return report;
}

bool EigensystemReport::passed() const {
  if (!failures.empty() || !consistent) return false;
  if (field_d) return exchanged_by_conjugation && minpoly_conjugation && orbit_size == 2;
  return orbit_size == 1;
}

namespace {

template <class S>
S evaluate(const IntPolynomial& p, const S& x) {
  S acc = lift_like(x, Rational(0));
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + lift_like(x, Rational(p[i]));
  return acc;
}

// Eigenvector of the 2x2 matrix a for the eigenvalue lambda, with entries in lambda's domain.
template <class S>
std::pair<S, S> eigenvector(const RationalMatrix& a, const S& lambda) {
  auto lift = [&](const Rational& r) { return lift_like(lambda, r); };
  if (!a(0, 1).is_zero()) return {lift(a(0, 1)), lambda - lift(a(0, 0))};
  if (!a(1, 0).is_zero()) return {lambda - lift(a(1, 1)), lift(a(1, 0))};
  // Diagonal: pick the coordinate axis belonging to lambda.
  if (lift(a(0, 0)) == lambda) return {lift(Rational(1)), lift(Rational(0))};
  return {lift(Rational(0)), lift(Rational(1))};
}

// Eigenvalues of each T_m on the eigenvector v; records a failure if v is not an eigenvector.
template <class S>
std::vector<S> eigenvalues_along(const std::vector<RationalMatrix>& mats, const std::pair<S, S>& v,
                                 std::vector<std::string>& failures) {
  auto lift = [&](const Rational& r) { return lift_like(v.first, r); };
  std::vector<S> out;
  for (std::size_t idx = 0; idx < mats.size(); ++idx) {
    const RationalMatrix& a = mats[idx];
    const S w0 = lift(a(0, 0)) * v.first + lift(a(0, 1)) * v.second;
    const S w1 = lift(a(1, 0)) * v.first + lift(a(1, 1)) * v.second;
    const S lambda = !is_zero(v.first) ? w0 / v.first : w1 / v.second;
    if (!(w0 == lambda * v.first && w1 == lambda * v.second))
      failures.push_back("T_" + std::to_string(idx + 1) + " does not preserve the T_2 eigenline");
    out.push_back(lambda);
  }
  return out;
}

Rational det2(const RationalMatrix& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

bool equals_rational(const Rational& x, const Rational& r) { return x == r; }
bool equals_rational(const QuadElem& x, const Rational& r) { return x.is_rational() && x.a() == r; }

}  // namespace

EigensystemReport eigensystem_orbit_check(int k, long m_max) {
  if (m_max < 2) throw DomainError("eigensystem check needs m_max >= 2");
  const HeckeOracle oracle(k, m_max);
  EigensystemReport r;
  r.k = k;
  r.m_max = m_max;
  r.dimension = oracle.dimension();
  if (r.dimension == 0 || r.dimension > 2)
    throw UnsupportedScopeError("eigensystem check supports dim S_k in {1, 2}; dim S_" + std::to_string(k) + " = " +
                                std::to_string(r.dimension));

  std::vector<RationalMatrix> mats;
  for (long m = 1; m <= m_max; ++m) mats.push_back(oracle.matrix(m));
  const RationalMatrix& t2 = mats[1];
  r.charpoly_t2 = charpoly(t2);

  if (r.dimension == 1) {
    r.orbit_size = 1;
    std::vector<Rational> sys;
    for (const auto& a : mats) sys.push_back(a(0, 0));
    r.consistent = sys[0] == Rational(1);
    // Multiplicativity on coprime indices.
    for (long m = 2; m <= m_max; ++m)
      for (long n = 2; m * n <= m_max; ++n)
        if (std::gcd(m, n) == 1 && sys[m * n - 1] != sys[m - 1] * sys[n - 1])
          r.failures.push_back("a_" + std::to_string(m * n) + " != a_" + std::to_string(m) + " a_" + std::to_string(n));
    r.rational_systems.push_back(std::move(sys));
    r.minpoly_conjugation = true;
    return r;
  }

  const Integer& c1 = r.charpoly_t2[1];
  const Integer& c0 = r.charpoly_t2[0];
  r.discriminant = c1 * c1 - 4 * c0;
  if (r.discriminant < 0) {
    r.failures.push_back("T_2 has non-real eigenvalues");
    return r;
  }

  auto check_sums = [&](const auto& sys_a, const auto& sys_b) {
    bool ok = true;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (!equals_rational(sys_a[i] + sys_b[i], mats[i].trace()) ||
          !equals_rational(sys_a[i] * sys_b[i], det2(mats[i]))) {
        r.failures.push_back("eigenvalues of T_" + std::to_string(i + 1) + " disagree with its trace/determinant");
        ok = false;
      }
    }
    return ok;
  };

  Integer root;
  if (mpz_perfect_square_p(r.discriminant.get_mpz_t())) {
    // Split case: two rational systems, each its own orbit.
    mpz_sqrt(root.get_mpz_t(), r.discriminant.get_mpz_t());
    r.orbit_size = 1;
    const Rational lp = Rational(-c1 + root, 2);
    const Rational lm = Rational(-c1 - root, 2);
    if (lp == lm) {
      r.failures.push_back("T_2 has a repeated eigenvalue; eigenlines are not determined by T_2");
      return r;
    }
    auto sa = eigenvalues_along(mats, eigenvector(t2, lp), r.failures);
    auto sb = eigenvalues_along(mats, eigenvector(t2, lm), r.failures);
    r.consistent = sa[0] == Rational(1) && sb[0] == Rational(1) && check_sums(sa, sb);
    r.minpoly_conjugation = evaluate(r.charpoly_t2, lp).is_zero() && evaluate(r.charpoly_t2, lm).is_zero();
    r.rational_systems = {std::move(sa), std::move(sb)};
    return r;
  }

  const auto [square_part, free_part] = squarefree_decompose(r.discriminant);
  if (!free_part.fits_slong_p()) throw UnsupportedScopeError("eigenvalue field discriminant too large");
  const std::int64_t d = free_part.get_si();
  r.field_d = d;
  r.orbit_size = 2;
  const QuadElem lambda(d, Rational(-c1, Integer(2)), Rational(square_part, Integer(2)));
  const QuadElem lambda_bar = quad_conj(lambda);

  auto sa = eigenvalues_along(mats, eigenvector(t2, lambda), r.failures);
  auto sb = eigenvalues_along(mats, eigenvector(t2, lambda_bar), r.failures);
  const QuadElem one(d, Rational(1));
  r.consistent = sa[0] == one && sb[0] == one && check_sums(sa, sb);
  r.exchanged_by_conjugation = true;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (quad_conj(sa[i]) != sb[i]) r.exchanged_by_conjugation = false;
  r.minpoly_conjugation = evaluate(r.charpoly_t2, lambda).is_zero() && evaluate(r.charpoly_t2, lambda_bar).is_zero() &&
                          !lambda.is_rational();
  r.quadratic_systems = {std::move(sa), std::move(sb)};
  return r;
}

}  // namespace hecketrace
