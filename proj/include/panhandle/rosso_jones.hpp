#pragma once

#include "panhandle/laurent.hpp"

namespace panhandle {

/// Torus link parameters. l = gcd(m, n) is always computed, never supplied.
struct TorusParams {
  int m;
  int n;
  int l;
  TorusParams(int m_, int n_);
};

/// {q}^{2l} times the adjoint invariant of T(m,n) in the vertical framing,
/// all components colored by the adjoint. The bare invariant has a z-pole of
/// order exactly 2l, so this product is a Laurent polynomial in (q, v).
/// Exponent integrality is asserted (NonIntegralExponent signals a bug).
LaurentPoly2 adjoint_homfly_torus(const TorusParams& tp);

/// Normalized fundamental invariant P(T(m,n)); requires gcd(m,n) = 1.
LaurentPoly2 fundamental_homfly_torus(const TorusParams& tp);

}  // namespace panhandle
