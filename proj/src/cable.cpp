#include "panhandle/cable.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "panhandle/adams.hpp"
#include "panhandle/errors.hpp"

namespace panhandle {

namespace {

const LaurentPoly2& v_bracket() {
  static const LaurentPoly2 b = bracket(BracketKind::vq, 0);
  return b;
}

const LaurentPoly2& q_bracket_sq() {
  static const LaurentPoly2 b = bracket(BracketKind::q, 1) * bracket(BracketKind::q, 1);
  return b;
}

void strip_zeros(UniPoly& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0) {
      it = p.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

FramingVector vertical_framing(const TorusParams& tp) {
  const int per = (1 - tp.m / tp.l) * (tp.n / tp.l);
  return FramingVector(static_cast<std::size_t>(tp.l), per);
}

LaurentPoly2 reverse_cable_homfly(const TorusParams& tp, const FramingVector& f) {
  if (static_cast<int>(f.size()) != tp.l) {
    throw LengthMismatch("framing vector has " + std::to_string(f.size()) +
                         " entries for a " + std::to_string(tp.l) +
                         "-component link");
  }
  const FramingVector base = vertical_framing(tp);

  // esym[k] = e_k(v^{2 sigma d_1}, ..., v^{2 sigma d_l}) with d_i the framing
  // excess over the doubled diagram; one k-subset of components per summand.
  std::vector<LaurentPoly2> esym(static_cast<std::size_t>(tp.l) + 1);
  esym[0] = LaurentPoly2::one();
  for (int i = 0; i < tp.l; ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    const int dv = 2 * kFramingSigma * (f[ui] - base[ui]);
    for (int k = std::min(i + 1, tp.l); k >= 1; --k) {
      LaurentPoly2 t = esym[static_cast<std::size_t>(k - 1)];
      t.mul_monomial(Int(1), 0, dv);
      esym[static_cast<std::size_t>(k)] += t;
    }
  }

  // z^{2l-1} {v} P = sum_k {q}^{2(l-k)} * A_k * esym[k] with A_k the cleared
  // adjoint invariant of the k-component sublink (A_0 = 1, trivial channel).
  LaurentPoly2 acc = pow(q_bracket_sq(), static_cast<unsigned>(tp.l));
  for (int k = 1; k <= tp.l; ++k) {
    const TorusParams sub(tp.m / tp.l * k, tp.n / tp.l * k);
    LaurentPoly2 term = adjoint_homfly_torus(sub) * esym[static_cast<std::size_t>(k)];
    term = term * pow(q_bracket_sq(), static_cast<unsigned>(tp.l - k));
    acc += term;
  }
  return acc.divide_exact(v_bracket());
}

PanhandleDecomposition panhandle_decompose(const LaurentPoly2& p, const TorusParams& tp) {
  PanhandleDecomposition d;
  d.full = p;
  d.handle_coefficient = zeta(tp.m, tp.l);
  d.handle_range = {2 * tp.m + 1, 2 * tp.n - 1};
  d.handle_length = 2 * (tp.n - tp.m) / tp.l;

  LaurentPoly2 comb;
  for (int j = 2 * tp.m + 1; j <= 2 * tp.n - 1; j += 2) {
    comb.add_term(0, j, Int(1));
  }
  LaurentPoly2 handle = comb * pow(q_bracket_sq(), static_cast<unsigned>(tp.l));
  handle *= Int(static_cast<long>(d.handle_coefficient));
  d.bulk = p - handle;

  if (d.bulk.is_zero()) {
    throw ShapeViolation("remainder vanished after removing the handle");
  }
  const int lo = d.bulk.min_v();
  const int hi = d.bulk.max_v();
  const int lo_expected = 1 - 2 * tp.m;
  const int hi_bound = 2 * (tp.n / tp.l) * (tp.l - 1) + 2 * (tp.m / tp.l) - 1;
  if (lo != lo_expected || hi > hi_bound) {
    throw ShapeViolation("remainder v-window [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] escapes [" +
                         std::to_string(lo_expected) + ", " +
                         std::to_string(hi_bound) + "]");
  }
  return d;
}

bool z_minus1_identity_check(const UniPoly& base_z0, int t, const LaurentPoly2& cable) {
  const ZVTable tab = to_zv_table(cable, 1);
  const UniPoly row = extract_z_coefficient(tab, -1);

  UniPoly rhs;
  const UniPoly sq = uni_mul(base_z0, base_z0);
  for (const auto& [e, c] : sq) {
    rhs[e + 2 * t + 1] += c;
    rhs[e + 2 * t - 1] -= c;
  }
  strip_zeros(rhs);
  return row == rhs;
}

std::pair<int, int> ell_theta(const LaurentPoly2& cable, int t) {
  if (cable.is_zero()) {
    throw DegreeConditionUnmet("zero polynomial");
  }
  const int lo = cable.min_v();
  const int hi = cable.max_v();
  if (lo >= 0 || hi <= 0 || lo % 2 == 0 || hi % 2 == 0) {
    throw DegreeConditionUnmet("v-degrees [" + std::to_string(lo) + ", " +
                               std::to_string(hi) +
                               "] do not straddle zero at odd exponents");
  }
  const int m = (1 - lo) / 2;
  const int n = (hi + 1) / 2;
  return {m + n, t + m};
}

std::pair<int, int> ell_theta(const TorusParams& tp, int t) {
  if (tp.l != 1) {
    throw NotAKnot("ell and theta are knot invariants; gcd(m, n) must be 1");
  }
  return ell_theta(reverse_cable_homfly(tp, FramingVector{t}), t);
}

int ell_phi(const TorusParams& tp, const FramingVector& phi) {
  if (static_cast<int>(phi.size()) != tp.l) {
    throw LengthMismatch("framing vector has " + std::to_string(phi.size()) +
                         " entries for a " + std::to_string(tp.l) +
                         "-component link");
  }
  const int corner = (1 - tp.m / tp.l) * (tp.n / tp.l) + tp.m / tp.l;
  for (int t : phi) {
    if (t > corner) {
      throw InadmissibleFraming("framing " + std::to_string(t) +
                                " exceeds the corner value " +
                                std::to_string(corner));
    }
  }
  const LaurentPoly2 p = reverse_cable_homfly(tp, phi);
  const ZVTable tab = to_zv_table(p, 2 * tp.l - 1);
  const UniPoly bottom = extract_z_coefficient(tab, 1 - 2 * tp.l);
  const int floor_v = bottom.empty() ? 1 : std::min(1, bottom.begin()->first);
  const int span = p.max_v() - floor_v;
  if (span % 2 != 0) {
    throw DegreeConditionUnmet("degree gap " + std::to_string(span) +
                               " is odd");
  }
  return 1 + span / 2;
}

int mfw_bound(const LaurentPoly2& p) {
  if (p.is_zero()) {
    throw DegreeConditionUnmet("zero polynomial");
  }
  return (p.max_v() - p.min_v()) / 2 + 1;
}

}  // namespace panhandle
