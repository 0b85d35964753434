#include "hecketrace/oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace hecketrace {

namespace {

void require_oracle_weight(int k) {
  if (k % 2 != 0 || k < 4) throw DomainError("oracle needs an even weight k >= 4, got " + std::to_string(k));
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Rational(1);
  return out;
}

Rational RationalMatrix::trace() const {
  Rational t(0);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.n_ != y.n_) throw DomainError("matrix size mismatch");
  RationalMatrix out(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i)
    for (std::size_t l = 0; l < x.n_; ++l) {
      if (x(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < x.n_; ++j) out(i, j) += x(i, l) * y(l, j);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.n_ != y.n_) throw DomainError("matrix size mismatch");
  RationalMatrix out = x;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += y.data_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

std::string polynomial_to_string(const IntPolynomial& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0 && p.size() > 1) continue;
    const Integer mag = abs(p[i]);
    if (out.empty()) {
      if (p[i] < 0) out += "-";
    } else {
      out += p[i] < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i > 0) out += (mag != 1 ? "*x" : "x");
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Integer divisor_sigma(long n, int r) {
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r));
    s += p;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(r));
      s += p;
    }
  }
  return s;
}

QSeries eisenstein(int weight, long prec) {
  if (prec < 1) throw DomainError("eisenstein needs prec >= 1");
  int r;
  long scale;
  if (weight == 4) {
    r = 3;
    scale = 240;
  } else if (weight == 6) {
    r = 5;
    scale = -504;
  } else {
    throw DomainError("only E_4 and E_6 are provided, got weight " + std::to_string(weight));
  }
  std::vector<Rational> c(prec);
  c[0] = Rational(1);
  for (long n = 1; n < prec; ++n) c[n] = Rational(divisor_sigma(n, r) * scale);
  return QSeries(std::move(c));
}

QSeries delta(long prec) {
  if (prec < 2) throw DomainError("delta needs prec >= 2");
  // Jacobi: prod (1 - q^n)^3 = sum_{j >= 0} (-1)^j (2j + 1) q^{j(j+1)/2}.
  const long p = prec - 1;
  QSeries eta3 = QSeries::zero(p);
  for (long j = 0; j * (j + 1) / 2 < p; ++j)
    eta3.at(j * (j + 1) / 2) = Rational(j % 2 == 0 ? 2 * j + 1 : -(2 * j + 1));
  QSeries s = multiply(eta3, eta3);
  s = multiply(s, s);
  s = multiply(s, s);
  return s.shifted(1);
}

std::vector<Monomial> cusp_basis_monomials(int k) {
  require_oracle_weight(k);
  std::vector<Monomial> out;
  for (int a = k / 12; a >= 1; --a) {
    const int rest = k - 12 * a;
    if (rest == 2) continue;
    const int c = rest % 4 == 0 ? 0 : 1;
    out.push_back({a, (rest - 6 * c) / 4, c});
  }
  return out;
}

int cusp_dimension(int k) { return static_cast<int>(cusp_basis_monomials(k).size()); }

std::vector<QSeries> cusp_basis(int k, long prec) {
  const auto monomials = cusp_basis_monomials(k);
  std::vector<QSeries> out;
  if (monomials.empty()) return out;
  const QSeries d = delta(std::max(prec, 2L)).truncated(prec);
  const QSeries e4 = eisenstein(4, prec);
  const QSeries e6 = eisenstein(6, prec);
  for (const Monomial& mono : monomials) {
    QSeries f = power(d, mono.a);
    if (mono.b > 0) f = multiply(f, power(e4, mono.b));
    if (mono.c > 0) f = multiply(f, e6);
    out.push_back(std::move(f));
  }
  return out;
}

QSeries hecke_action(const QSeries& f, int k, long m, long out_prec) {
  if (m < 1) throw DomainError("T_m needs m >= 1");
  if (out_prec > 0 && m * (out_prec - 1) >= f.prec())
    throw PrecisionError("T_" + std::to_string(m) + " to precision " + std::to_string(out_prec) +
                         " needs the input known below q^" + std::to_string(m * (out_prec - 1) + 1));
  std::vector<Rational> out(out_prec, Rational(0));
  for (long n = 0; n < out_prec; ++n) {
    const long g = std::gcd(m, n);
    for (long d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      out[n] += Rational(d).pow(k - 1) * f[m * n / (d * d)];
    }
  }
  return QSeries(std::move(out));
}

long default_hecke_precision(int k, long m) {
  return static_cast<long>(cusp_dimension(k)) * (m + 1) + 10;
}

HeckeOracle::HeckeOracle(int k, long m_max) : HeckeOracle(k, m_max, default_hecke_precision(k, m_max)) {}

HeckeOracle::HeckeOracle(int k, long m_max, long prec) : k_(k), m_max_(m_max), prec_(prec) {
  require_oracle_weight(k);
  if (m_max < 1) throw DomainError("m_max must be >= 1");
  const long dim = cusp_dimension(k);
  if (prec < dim * (m_max + 1) + 2)
    throw PrecisionError("precision " + std::to_string(prec) + " too small for T_m, m <= " + std::to_string(m_max) +
                         ", in dimension " + std::to_string(dim));
  basis_ = cusp_basis(k, prec);
}

std::vector<Rational> HeckeOracle::coordinates(const QSeries& g) const {
  const std::size_t dim = basis_.size();
  std::vector<Rational> c(dim, Rational(0));
  if (g.prec() <= static_cast<long>(dim)) throw PrecisionError("too few coefficients to solve for coordinates");
  // basis_[i] has leading term q^{dim - i}: forward-substitute from q^1 upward.
  for (std::size_t n = 1; n <= dim; ++n) {
    const std::size_t i = dim - n;
    Rational rhs = g[n];
    for (std::size_t j = i + 1; j < dim; ++j) rhs -= c[j] * basis_[j][n];
    const Rational& pivot = basis_[i][n];
    if (pivot.is_zero()) throw PrecisionError("singular coordinate solve");
    c[i] = rhs / pivot;
  }
  const long check = std::min(g.prec(), prec_);
  for (long n = 0; n < check; ++n) {
    Rational r = g[n];
    for (std::size_t j = 0; j < dim; ++j) r -= c[j] * basis_[j][n];
    if (!r.is_zero())
      throw std::logic_error("series is not in the span of the cusp basis (mismatch at q^" + std::to_string(n) + ")");
  }
  return c;
}

RationalMatrix HeckeOracle::matrix(long m) const {
  if (m < 1) throw DomainError("T_m needs m >= 1");
  if (m > m_max_) throw PrecisionError("oracle built for m <= " + std::to_string(m_max_));
  const std::size_t dim = basis_.size();
  RationalMatrix out(dim);
  const long out_prec = (prec_ - 1) / m + 1;
  for (std::size_t j = 0; j < dim; ++j) {
    const auto c = coordinates(hecke_action(basis_[j], k_, m, out_prec));
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = c[i];
  }
  return out;
}

RationalMatrix hecke_matrix(int k, long m) { return HeckeOracle(k, m).matrix(m); }

RationalMatrix hecke_matrix(int k, long m, long prec) { return HeckeOracle(k, m, prec).matrix(m); }

Rational oracle_trace(int k, long m) { return hecke_matrix(k, m).trace(); }

IntPolynomial charpoly(const RationalMatrix& a) {
  // Faddeev-LeVerrier: exact over Q, no pivoting.
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  RationalMatrix mk(n);
  for (std::size_t step = 1; step <= n; ++step) {
    mk = a * mk + RationalMatrix::identity(n).scaled(c[n - step + 1]);
    c[n - step] = -(a * mk).trace() / Rational(static_cast<long>(step));
  }
  IntPolynomial out;
  for (const auto& x : c) {
    if (!x.is_integer()) throw std::logic_error("Hecke characteristic polynomial with non-integral coefficient");
    out.push_back(x.num());
  }
  return out;
}

IntPolynomial charpoly(int k, long m) { return charpoly(hecke_matrix(k, m)); }

namespace {

long max_of(std::span<const long> ms) {
  long mx = 1;
  for (long m : ms) {
    if (m < 1) throw DomainError("m must be >= 1");
    mx = std::max(mx, m);
  }
  return mx;
}

}  // namespace

std::vector<Rational> oracle_trace_grid_serial(std::span<const int> ks, std::span<const long> ms) {
  const long m_max = max_of(ms);
  std::vector<Rational> out;
  out.reserve(ks.size() * ms.size());
  for (int k : ks) {
    const HeckeOracle oracle(k, m_max);
    for (long m : ms) out.push_back(oracle.matrix(m).trace());
  }
  return out;
}

std::vector<Rational> oracle_trace_grid(std::span<const int> ks, std::span<const long> ms) {
  const long m_max = max_of(ms);
  for (int k : ks) require_oracle_weight(k);
  const long nk = static_cast<long>(ks.size());
  const long nm = static_cast<long>(ms.size());
  std::vector<Rational> out(ks.size() * ms.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < nk; ++i) {
    const HeckeOracle oracle(ks[i], m_max);
    for (long j = 0; j < nm; ++j) out[i * nm + j] = oracle.matrix(ms[j]).trace();
  }
  return out;
}

}  // namespace hecketrace
