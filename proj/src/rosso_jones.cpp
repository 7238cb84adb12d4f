#include "panhandle/rosso_jones.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "panhandle/adams.hpp"
#include "panhandle/composite.hpp"
#include "panhandle/errors.hpp"
#include "panhandle/young.hpp"

namespace panhandle {

TorusParams::TorusParams(int m_, int n_) : m(m_), n(n_), l(std::gcd(m_, n_)) {
  if (m <= 0 || n <= 0)
    throw Error("torus parameters must be positive, got (" +
                std::to_string(m) + "," + std::to_string(n) + ")");
}

LaurentPoly2 adjoint_homfly_torus(const TorusParams& tp) {
  const AdamsExpansion e = adjoint_adams(tp.m, tp.l);

  BracketSum sum;
  sum.add(BracketForm::one(),
          LaurentPoly2::monomial(Int(static_cast<long>(e.scalar)), 0, 2 * tp.n));
  for (const auto& [c, coeff] : e.terms) {
    const long long grade = static_cast<long long>(c.R.size());
    const long long v_num = 2LL * tp.n * (tp.m - grade);
    const long long q_num = -static_cast<long long>(tp.n) * reduced_casimir(c);
    if (v_num % tp.m != 0)
      throw NonIntegralExponent("framing exponent " + std::to_string(v_num) +
                                "/" + std::to_string(tp.m) + " at " + c.str());
    if (q_num % tp.m != 0)
      throw NonIntegralExponent("twist exponent " + std::to_string(q_num) +
                                "/" + std::to_string(tp.m) + " at " + c.str());
    sum.add(composite_qdim(c),
            LaurentPoly2::monomial(Int(static_cast<long>(coeff)),
                                   static_cast<int>(q_num / tp.m),
                                   static_cast<int>(v_num / tp.m)));
  }

  AtomSet clearing;
  clearing[BracketAtom{false, 1}] = 2 * tp.l;
  return sum.expand(clearing);
}

LaurentPoly2 fundamental_homfly_torus(const TorusParams& tp) {
  if (tp.l != 1)
    throw NotAKnot("T(" + std::to_string(tp.m) + "," + std::to_string(tp.n) +
                   ") has " + std::to_string(tp.l) + " components");

  BracketSum sum;
  for (int r = 0; r < tp.m; ++r) {
    std::vector<int> parts{tp.m - r};
    parts.insert(parts.end(), r, 1);
    sum.add(quantum_dimension(Partition(parts)),
            LaurentPoly2::monomial(Int((r % 2) ? -1 : 1),
                                   -tp.n * (tp.m - 2 * r - 1), 0));
  }

  // Divide the hook sum by {v}/{q}: multiply by one extra {q} upstairs, then
  // split off the surviving {v} exactly.
  AtomSet clearing;
  clearing[BracketAtom{false, 1}] = 1;
  LaurentPoly2 cleared = sum.expand(clearing);

  LaurentPoly2 v_bracket;
  v_bracket.add_term(0, 1, 1);
  v_bracket.add_term(0, -1, -1);
  LaurentPoly2 p = cleared.divide_exact(v_bracket);
  p.mul_monomial(1, 0, (tp.m - 1) * tp.n);
  return p;
}

}  // namespace panhandle
