#pragma once

#include <compare>
#include <map>
#include <string>

#include "json.hpp"
#include "panhandle/laurent.hpp"
#include "panhandle/young.hpp"

namespace panhandle {

/// Stable two-sided label (R,P): the top representation inside R tensor
/// conjugate(P), independent of the rank. (Phi,Phi) is the scalar and
/// ([1],[1]) the adjoint. The grade of a label with |R| = |P| is |R|.
struct CompositeRep {
  Partition R;
  Partition P;

  friend auto operator<=>(const CompositeRep& a, const CompositeRep& b) = default;
  friend bool operator==(const CompositeRep& a, const CompositeRep& b) = default;

  std::string str() const;
};

/// Rows of (R,P) realized inside sl_N, trailing zeros stripped.
/// Throws RankTooSmall when N < rows(R) + rows(P).
Partition composite_diagram(const CompositeRep& c, int N);

/// Rank-uniform quantum dimension: exactly |R|+|P| numerator {v q^a} atoms
/// over a pure hook denominator. A {v q^a} atom surviving in the denominator
/// means the cancellation guarantee was violated: CancellationFailure.
BracketForm composite_qdim(const CompositeRep& c);

/// Rank-independent part of the Casimir exponent, 2(c(R) + c(P)).
/// Defined for equal grades only; throws GradeMismatch.
int reduced_casimir(const CompositeRep& c);

/// Coefficients of s_lambda(x) * s_mu(1/x) in the composite basis:
/// coeff(A,B) = sum over kappa of lr(lambda;A,kappa) * lr(mu;B,kappa).
std::map<CompositeRep, long long> koike_expand(const Partition& lambda,
                                               const Partition& mu);

nlohmann::json composite_to_json(const CompositeRep& c);
CompositeRep composite_from_json(const nlohmann::json& j);

}  // namespace panhandle
