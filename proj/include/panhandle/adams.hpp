#pragma once

#include <map>

#include "json.hpp"
#include "panhandle/composite.hpp"

namespace panhandle {

/// Composite-basis coefficients of the l-th power of the degree-(m/l) Adams
/// image of the adjoint character. Every label carries equal grades, and the
/// grades are multiples of m/l.
struct AdamsExpansion {
  long long scalar = 0;                     // coefficient of (Phi,Phi)
  std::map<CompositeRep, long long> terms;  // the nonzero rest
};

/// Number of scalar terms: sum_{k=0}^{l} (-1)^{l+k} l!/(l-k)! (m/l)^k.
/// Requires positive m with l | m.
long long zeta(int m, int l);

/// Expand (p_a(x) p_a(1/x) - 1)^l with a = m/l in the composite basis.
/// Requires positive m with l | m.
AdamsExpansion adjoint_adams(int m, int l);

nlohmann::json adams_to_json(const AdamsExpansion& e);

}  // namespace panhandle
