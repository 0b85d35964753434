#ifndef HECKETRACE_CHARS_HPP
#define HECKETRACE_CHARS_HPP

#include <string>
#include <vector>

#include "hecketrace/exact.hpp"

namespace hecketrace {

/// Archimedean weights (k_v), one per real place, with central exponent w.
/// Every entry is at least 2 and congruent to w mod 2.
class WeightVector {
 public:
  WeightVector(std::vector<int> k, int w);

  const std::vector<int>& k() const { return k_; }
  int w() const { return w_; }
  std::size_t places() const { return k_.size(); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  std::string to_string() const;

 private:
  std::vector<int> k_;
  int w_;
};

enum class RepKind { DiscreteSeries, AlgebraicRep, PrincipalSeries };

/// Label of an irreducible representation as seen by the pseudo-coefficient trace table.
/// Principal series carry no parameter: every trace in scope vanishes on them.
class RepLabel {
 public:
  static RepLabel discrete_series(int lowest_weight);
  static RepLabel algebraic(int highest_weight);
  static RepLabel principal_series();

  RepKind kind() const { return kind_; }
  int n() const { return n_; }

  friend bool operator==(const RepLabel&, const RepLabel&) = default;

 private:
  RepLabel(RepKind kind, int n) : kind_(kind), n_(n) {}
  RepKind kind_;
  int n_;
};

/// Trace of Sym^k at any 2x2 matrix with trace t and determinant n, via
/// S_j = t*S_{j-1} - n*S_{j-2}, S_0 = 1, S_1 = t.
template <class S>
S sym_char(int k, const S& t, const S& n) {
  if (k < 0) throw DomainError("sym_char needs k >= 0, got " + std::to_string(k));
  S prev = one_like(t);
  if (k == 0) return prev;
  S cur = t;
  for (int j = 2; j <= k; ++j) {
    S next = t * cur - n * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Character of L_{k,w} = Sym^k (x) det^{(w-k)/2}.
template <class S>
S ch_kw(int k, int w, const S& t, const S& n) {
  if (k < 0) throw DomainError("ch_kw needs k >= 0, got " + std::to_string(k));
  if ((k - w) % 2 != 0)
    throw AlgebraicityError("(Alg) violated: k = " + std::to_string(k) + " and w = " + std::to_string(w) +
                            " differ in parity");
  if (is_zero(n)) throw DomainError("ch_kw at a singular matrix (det = 0)");
  return pow_int(n, (w - k) / 2) * sym_char(k, t, n);
}

/// Discrete-series character D_m on an elliptic class: -ch(L_{m-2}).
/// Ellipticity of (t, n) is the caller's responsibility.
template <class S>
S ds_char_elliptic(int m, const S& t, const S& n) {
  if (m < 2) throw DomainError("discrete series needs m >= 2, got " + std::to_string(m));
  return -sym_char(m - 2, t, n);
}

/// tr pi(phi_k): +1 on D_k, -1 on L_{k-2}, 0 otherwise.
int pseudo_coeff_trace(int k, const RepLabel& rep);

/// Central character of D_{k,w} at -1.
int central_parity(int k, int w);

}  // namespace hecketrace

#endif  // HECKETRACE_CHARS_HPP
