#include "hecketrace/chars.hpp"

namespace hecketrace {

WeightVector::WeightVector(std::vector<int> k, int w) : k_(std::move(k)), w_(w) {
  if (k_.empty()) throw DomainError("weight vector needs at least one place");
  for (int kv : k_) {
    if (kv < 2) throw DomainError("weights must be >= 2, got " + std::to_string(kv));
    if ((kv - w_) % 2 != 0)
      throw AlgebraicityError("(Alg) violated: k_v = " + std::to_string(kv) + " and w = " + std::to_string(w_) +
                              " differ in parity");
  }
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(k_[i]);
  }
  return out + "; w=" + std::to_string(w_) + ")";
}

RepLabel RepLabel::discrete_series(int lowest_weight) {
  if (lowest_weight < 2) throw DomainError("discrete series needs lowest weight >= 2");
  return RepLabel(RepKind::DiscreteSeries, lowest_weight);
}

RepLabel RepLabel::algebraic(int highest_weight) {
  if (highest_weight < 0) throw DomainError("algebraic representation needs highest weight >= 0");
  return RepLabel(RepKind::AlgebraicRep, highest_weight);
}

RepLabel RepLabel::principal_series() { return RepLabel(RepKind::PrincipalSeries, 0); }

int pseudo_coeff_trace(int k, const RepLabel& rep) {
  if (k < 2) throw DomainError("pseudo-coefficient needs k >= 2");
  switch (rep.kind()) {
    case RepKind::DiscreteSeries:
      return rep.n() == k ? 1 : 0;
    case RepKind::AlgebraicRep:
      return rep.n() == k - 2 ? -1 : 0;
    case RepKind::PrincipalSeries:
      return 0;
  }
  return 0;
}

int central_parity(int k, int /*w*/) { return k % 2 == 0 ? 1 : -1; }

}  // namespace hecketrace
