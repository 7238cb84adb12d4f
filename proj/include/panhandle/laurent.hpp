#pragma once

// Exact bivariate Laurent-polynomial arithmetic in (q, v), products of
// bracket factors {x} = x - 1/x with multiset cancellation, and (z, v)
// coefficient tables, where z = q - 1/q.
//
// Coefficients are arbitrary-precision integers throughout; every division
// in this module is exact and asserted at runtime.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "panhandle/errors.hpp"

namespace panhandle {

using Int = mpz_class;
using Rat = mpq_class;

/// Coefficient map of a univariate Laurent polynomial (exponent -> coeff).
using UniPoly = std::map<int, Int>;

/// Exponents of one monomial q^q_exp * v^v_exp.
/// Canonical order is lexicographic by (v_exp, q_exp); serialization and
/// iteration follow it.
struct QV {
  int q = 0;
  int v = 0;
  friend bool operator==(const QV& a, const QV& b) {
    return a.q == b.q && a.v == b.v;
  }
  friend bool operator<(const QV& a, const QV& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.q < b.q;
  }
};

class LaurentPoly2 {
 public:
  LaurentPoly2() = default;

  static LaurentPoly2 monomial(Int c, int q_exp, int v_exp);
  static const LaurentPoly2& zero();
  static const LaurentPoly2& one();

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Term map, keyed in canonical (v_exp, q_exp) order; no zero coefficients.
  const std::map<QV, Int>& terms() const { return terms_; }
  Int coeff(int q_exp, int v_exp) const;

  void add_term(int q_exp, int v_exp, const Int& c);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2& operator*=(const Int& c);

  /// In-place multiplication by c * q^dq * v^dv.
  void mul_monomial(const Int& c, int dq, int dv);

  // Degree queries; defined only for nonzero polynomials.
  int min_q() const;
  int max_q() const;
  int min_v() const;
  int max_v() const;

  /// q -> 1/q, v -> 1/v on every term: an involution and a ring map.
  LaurentPoly2 mirror() const;
  /// q -> 1/q only.
  LaurentPoly2 invert_q() const;
  /// v -> 1/v only.
  LaurentPoly2 invert_v() const;

  /// Coefficient of v^v_exp, as a Laurent polynomial in q.
  UniPoly v_column(int v_exp) const;
  /// All v-columns, keyed by v-exponent.
  std::map<int, UniPoly> v_columns() const;

  /// Substitute v = q^N: a univariate Laurent polynomial in q.
  UniPoly specialize_v(int N) const;

  /// Exact division by a divisor with exactly two terms.
  /// Throws NonExactDivision when the quotient does not exist.
  LaurentPoly2 divide_exact(const LaurentPoly2& binomial) const;

  std::string str() const;

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<QV, Int> terms_;
};

LaurentPoly2 operator*(const Int& c, const LaurentPoly2& p);
LaurentPoly2 pow(const LaurentPoly2& p, unsigned k);

enum class BracketKind { q, vq };

/// bracket(q, a)  = {q^a}  = q^a - q^-a   (zero when a == 0)
/// bracket(vq, a) = {vq^a} = v q^a - (v q^a)^-1
LaurentPoly2 bracket(BracketKind kind, int a);

/// One bracket factor {q^a} or {v q^a}. Inside a BracketForm, q-kind atoms
/// are normalized to a >= 1 ({q^-a} = -{q^a} folds its sign into the scalar
/// and {q^0} annihilates); vq-kind atoms keep any integer offset a.
struct BracketAtom {
  bool with_v = false;
  int a = 0;
  friend bool operator==(const BracketAtom& x, const BracketAtom& y) {
    return x.with_v == y.with_v && x.a == y.a;
  }
  friend bool operator<(const BracketAtom& x, const BracketAtom& y) {
    if (x.with_v != y.with_v) return !x.with_v;
    return x.a < y.a;
  }
};

LaurentPoly2 bracket(const BracketAtom& atom);

/// Multiset of bracket atoms with multiplicities (all counts positive).
using AtomSet = std::map<BracketAtom, int>;

/// scalar * prod(numerator atoms) / prod(denominator atoms), kept in factored
/// form with exact multiset cancellation. The zero form has empty atom sets
/// and scalar 0.
class BracketForm {
 public:
  BracketForm() = default;
  static BracketForm one();

  bool is_zero() const;
  const Rat& scalar() const { return scalar_; }
  const AtomSet& numerator() const { return num_; }
  const AtomSet& denominator() const { return den_; }

  void mul_scalar(const Rat& c);
  void mul_num(BracketAtom atom, int count = 1);
  void mul_den(BracketAtom atom, int count = 1);
  void mul(const BracketForm& o);

  /// Substitute q -> 1/q: {q^a} picks up a sign, {v q^a} becomes {v q^-a}.
  BracketForm invert_q() const;
  /// Substitute v -> 1/v: {v q^a} becomes -{v q^-a}.
  BracketForm invert_v() const;
  /// Substitute v = q^N: {v q^a} becomes {q^(N+a)}.
  BracketForm specialize_v(int N) const;

  /// Number of vq-kind atoms left in the denominator (0 once a quantum
  /// dimension has cancelled completely).
  int vq_denominator_count() const;

  /// Expand to a Laurent polynomial; every denominator atom must divide
  /// exactly and the scalar must clear, else NonExactDivision.
  LaurentPoly2 expand() const;

  std::string str() const;

  friend bool operator==(const BracketForm& a, const BracketForm& b) {
    return a.scalar_ == b.scalar_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Rat scalar_ = 1;
  AtomSet num_;
  AtomSet den_;
};

/// Accumulates integer-weighted BracketForm terms over one common bracket
/// denominator, with the running numerator kept fully expanded. All
/// divisions happen once, in expand(), and must be exact.
class BracketSum {
 public:
  /// Add weight * f. The scalar of f must be an integer.
  void add(const BracketForm& f, const LaurentPoly2& weight);
  void add(const BracketForm& f);

  const LaurentPoly2& numerator() const { return num_; }
  const AtomSet& denominator() const { return den_; }

  /// (numerator * prod(extra_num)) / prod(denominator); extra numerator
  /// atoms cancel against the denominator before any division runs.
  LaurentPoly2 expand(const AtomSet& extra_num = {}) const;

 private:
  AtomSet den_;
  LaurentPoly2 num_;
};

/// Laurent polynomial in (z, v); z-exponents may be negative.
class ZVPoly {
 public:
  ZVPoly() = default;
  static ZVPoly monomial(Int c, int z_exp, int v_exp);
  static const ZVPoly& zero();
  static const ZVPoly& one();

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
  Int coeff(int z_exp, int v_exp) const;
  void add_term(int z_exp, int v_exp, const Int& c);

  ZVPoly& operator+=(const ZVPoly& o);
  ZVPoly operator+(const ZVPoly& o) const;
  ZVPoly operator-(const ZVPoly& o) const;
  ZVPoly operator*(const ZVPoly& o) const;
  void mul_monomial(const Int& c, int dz, int dv);

  int min_z() const;
  int max_z() const;
  int min_v() const;
  int max_v() const;

  /// Mirror image: z -> -z, v -> 1/v.
  ZVPoly mirror() const;

  /// Substitute z = q - 1/q into z^z_shift * this; requires
  /// z_shift + min_z() >= 0 so the result is Laurent in (q, v).
  LaurentPoly2 to_laurent(int z_shift) const;

  std::string str() const;

  friend bool operator==(const ZVPoly& a, const ZVPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<std::pair<int, int>, Int> terms_;  // (z_exp, v_exp) -> coeff
};

ZVPoly pow(const ZVPoly& p, unsigned k);

/// Coefficient table of a link invariant in the variables (z, v).
/// pole_order r records that the invariant lies in z^-r * Z[z, v, 1/v];
/// entries are keyed by the true (possibly negative) z-exponent.
/// For an l-component invariant every z-exponent is >= 1 - l and congruent
/// to 1 - l mod 2.
struct ZVTable {
  int pole_order = 0;
  std::map<std::pair<int, int>, Int> entries;  // (z_exp, v_exp) -> coeff

  friend bool operator==(const ZVTable& a, const ZVTable& b) {
    return a.pole_order == b.pole_order && a.entries == b.entries;
  }
};

/// Rewrite p = z^pole_order * P per v-column in the basis z^k, greedily from
/// the top q-degree down. Throws NotInZSubring when p is not in the subring
/// generated by z over Z[v, 1/v].
ZVTable to_zv_table(const LaurentPoly2& p, int pole_order);

/// Inverse of to_zv_table: returns z^pole_order * P expanded in (q, v).
LaurentPoly2 from_zv_table(const ZVTable& t);

/// Row of the table at z-exponent k (empty when absent).
UniPoly extract_z_coefficient(const ZVTable& t, int k);

ZVTable to_zv_table(const ZVPoly& p, int pole_order);
ZVPoly zv_poly(const ZVTable& t);

/// Check the component-count constraints on z-exponents
/// (>= 1 - components, parity 1 - components mod 2).
bool zv_exponents_valid(const ZVTable& t, int components);

// UniPoly helpers (used for z-row identities).
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_shift(const UniPoly& a, int dv);
std::string uni_str(const UniPoly& a, const std::string& var);

}  // namespace panhandle
