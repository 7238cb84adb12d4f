#pragma once

#include <utility>
#include <vector>

#include "panhandle/laurent.hpp"
#include "panhandle/rosso_jones.hpp"

namespace panhandle {

/// Absolute per-component framings of a reverse 2-cable: the linking number
/// of each antiparallel pair.
using FramingVector = std::vector<int>;

/// Per-unit framing shift acts on the adjoint channel as v^{2*kFramingSigma}.
/// The sign is fixed by the antiparallel twist-region calibration against the
/// skein evaluator; it is not a free parameter.
inline constexpr int kFramingSigma = 1;

/// The framing realized by doubling the standard braid diagram in place:
/// (1 - m/l) n/l on every component.
FramingVector vertical_framing(const TorusParams& tp);

/// z^{2l-1} P(C_2(T(m,n), f)) as a Laurent polynomial in (q, v). P is the
/// canonical convention, (-1)^{cable components - 1} times the value the
/// skein relation assigns. Assembled channel by channel from the adjoint
/// invariants of sublinks; the one division, by {v}, is exact.
LaurentPoly2 reverse_cable_homfly(const TorusParams& tp, const FramingVector& f);

/// Splitting of a vertical-framing cable polynomial into a v-bounded bulk
/// and the geometric-series handle. Both polynomials carry the same z^{2l-1}
/// clearing factor as the input.
struct PanhandleDecomposition {
  LaurentPoly2 full;
  LaurentPoly2 bulk;
  long long handle_coefficient = 0;  // zeta(m, l)
  std::pair<int, int> handle_range;  // v-exponents 2m+1 .. 2n-1; empty when m = n
  int handle_length = 0;             // 2(n-m)/l
};

/// Subtracts zeta(m,l) * z * (v^{2m+1} + ... + v^{2n-1}) and checks the
/// remainder against the v-window [1-2m, 2n(l-1)/l + 2m/l - 1]; the lower
/// endpoint must be attained exactly. ShapeViolation otherwise.
PanhandleDecomposition panhandle_decompose(const LaurentPoly2& p, const TorusParams& tp);

/// Checks [P]_{z^{-1}} = v^{2t} (v - 1/v) ([P(K)]_{z^0})^2 for the 2-cable of
/// a knot, canonical convention; pass z^1 P as produced by
/// reverse_cable_homfly and the base knot's constant z row.
bool z_minus1_identity_check(const UniPoly& base_z0, int t, const LaurentPoly2& cable);

/// ell = 1 + span_v / 2 and theta = t + m, with m read off min deg_v = 1-2m.
/// Requires min deg_v < 0 < max deg_v, both odd; DegreeConditionUnmet tells
/// the caller to re-frame. The polynomial overload takes z^{2l-1} P.
std::pair<int, int> ell_theta(const LaurentPoly2& cable, int t);
std::pair<int, int> ell_theta(const TorusParams& tp, int t);

/// 1 + (max deg_v - min(1, min deg_v of the z^{1-2l} row)) / 2 at absolute
/// framing phi. phi must lie under the corner framing (1-m/l)(n/l) + m/l on
/// every component; InadmissibleFraming otherwise.
int ell_phi(const TorusParams& tp, const FramingVector& phi);

/// Half the v-span plus one: the braid index lower bound.
int mfw_bound(const LaurentPoly2& p);

}  // namespace panhandle
