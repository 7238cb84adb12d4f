#include "panhandle/laurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace panhandle {

// ---------------------------------------------------------------------------
// LaurentPoly2

LaurentPoly2 LaurentPoly2::monomial(Int c, int q_exp, int v_exp) {
  LaurentPoly2 p;
  p.add_term(q_exp, v_exp, c);
  return p;
}

const LaurentPoly2& LaurentPoly2::zero() {
  static const LaurentPoly2 z;
  return z;
}

const LaurentPoly2& LaurentPoly2::one() {
  static const LaurentPoly2 o = monomial(1, 0, 0);
  return o;
}

Int LaurentPoly2::coeff(int q_exp, int v_exp) const {
  auto it = terms_.find({q_exp, v_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::add_term(int q_exp, int v_exp, const Int& c) {
  if (c == 0) return;
  QV key{q_exp, v_exp};
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.q, e.v, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.q, e.v, -c);
  return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r += o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r -= o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  if (is_zero() || o.is_zero()) return r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term(ea.q + eb.q, ea.v + eb.v, ca * cb);
  return r;
}

LaurentPoly2& LaurentPoly2::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly2 operator*(const Int& c, const LaurentPoly2& p) {
  LaurentPoly2 r = p;
  r *= c;
  return r;
}

void LaurentPoly2::mul_monomial(const Int& c, int dq, int dv) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  std::map<QV, Int> shifted;
  for (const auto& [e, coef] : terms_)
    shifted.emplace_hint(shifted.end(), QV{e.q + dq, e.v + dv}, coef * c);
  terms_ = std::move(shifted);
}

namespace {
[[noreturn]] void degree_of_zero() {
  throw Error("degree query on the zero polynomial");
}
}  // namespace

int LaurentPoly2::min_q() const {
  if (is_zero()) degree_of_zero();
  int m = terms_.begin()->first.q;
  for (const auto& [e, c] : terms_) m = std::min(m, e.q);
  return m;
}

int LaurentPoly2::max_q() const {
  if (is_zero()) degree_of_zero();
  int m = terms_.begin()->first.q;
  for (const auto& [e, c] : terms_) m = std::max(m, e.q);
  return m;
}

int LaurentPoly2::min_v() const {
  if (is_zero()) degree_of_zero();
  return terms_.begin()->first.v;
}

int LaurentPoly2::max_v() const {
  if (is_zero()) degree_of_zero();
  return terms_.rbegin()->first.v;
}

LaurentPoly2 LaurentPoly2::mirror() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(QV{-e.q, -e.v}, c);
  return r;
}

LaurentPoly2 LaurentPoly2::invert_q() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(QV{-e.q, e.v}, c);
  return r;
}

LaurentPoly2 LaurentPoly2::invert_v() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(QV{e.q, -e.v}, c);
  return r;
}

UniPoly LaurentPoly2::v_column(int v_exp) const {
  UniPoly col;
  for (auto it = terms_.lower_bound(QV{INT_MIN, v_exp});
       it != terms_.end() && it->first.v == v_exp; ++it)
    col.emplace_hint(col.end(), it->first.q, it->second);
  return col;
}

std::map<int, UniPoly> LaurentPoly2::v_columns() const {
  std::map<int, UniPoly> cols;
  for (const auto& [e, c] : terms_) cols[e.v].emplace_hint(cols[e.v].end(), e.q, c);
  return cols;
}

UniPoly LaurentPoly2::specialize_v(int N) const {
  UniPoly out;
  for (const auto& [e, c] : terms_) {
    int ex = e.q + N * e.v;
    auto [it, inserted] = out.emplace(ex, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

LaurentPoly2 LaurentPoly2::divide_exact(const LaurentPoly2& binomial) const {
  if (binomial.terms_.size() != 2)
    throw Error("divide_exact expects a two-term divisor");
  LaurentPoly2 rem = *this;
  LaurentPoly2 quo;
  if (rem.is_zero()) return quo;

  // Lexicographically (v, q) largest and smallest divisor terms.
  auto hi = std::prev(binomial.terms_.end());
  auto lo = binomial.terms_.begin();
  const QV t1 = hi->first;
  const Int b1 = hi->second;
  const QV t2 = lo->first;
  const Int b2 = lo->second;

  // Coordinate-wise extremal degrees of a product are additive (the extremal
  // slices of the factors cannot cancel), so an exact quotient lives in the
  // box below. A quotient term outside it proves inexactness, and inside it
  // the strictly lex-decreasing leads force termination.
  const int q_lo = min_q() - std::min(t1.q, t2.q);
  const int q_hi = max_q() - std::max(t1.q, t2.q);
  const int v_lo = min_v() - std::min(t1.v, t2.v);
  const int v_hi = max_v() - std::max(t1.v, t2.v);

  while (!rem.terms_.empty()) {
    auto lead = std::prev(rem.terms_.end());
    QV qe{lead->first.q - t1.q, lead->first.v - t1.v};
    if (qe.q < q_lo || qe.q > q_hi || qe.v < v_lo || qe.v > v_hi)
      throw NonExactDivision("quotient support escapes the degree box");
    Int c = lead->second;
    if (!mpz_divisible_p(c.get_mpz_t(), b1.get_mpz_t()))
      throw NonExactDivision("leading coefficient not divisible");
    Int qc;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), b1.get_mpz_t());
    quo.add_term(qe.q, qe.v, qc);
    rem.terms_.erase(lead);
    rem.add_term(qe.q + t2.q, qe.v + t2.v, -qc * b2);
  }
  return quo;
}

std::string LaurentPoly2::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unit = (a == 1) && (e.q != 0 || e.v != 0);
    if (!unit) os << a.get_str();
    bool printed = !unit;
    if (e.q != 0) {
      if (printed) os << "*";
      os << "q^" << e.q;
      printed = true;
    }
    if (e.v != 0) {
      if (printed) os << "*";
      os << "v^" << e.v;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly2 pow(const LaurentPoly2& p, unsigned k) {
  LaurentPoly2 r = LaurentPoly2::one();
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

// ---------------------------------------------------------------------------
// brackets

LaurentPoly2 bracket(BracketKind kind, int a) {
  LaurentPoly2 p;
  if (kind == BracketKind::q) {
    p.add_term(a, 0, 1);
    p.add_term(-a, 0, -1);
  } else {
    p.add_term(a, 1, 1);
    p.add_term(-a, -1, -1);
  }
  return p;
}

LaurentPoly2 bracket(const BracketAtom& atom) {
  return bracket(atom.with_v ? BracketKind::vq : BracketKind::q, atom.a);
}

BracketForm BracketForm::one() { return BracketForm(); }

bool BracketForm::is_zero() const { return scalar_ == 0; }

void BracketForm::mul_scalar(const Rat& c) {
  scalar_ *= c;
  if (scalar_ == 0) {
    num_.clear();
    den_.clear();
  }
}

namespace {
// Returns the normalized atom; flips *sign for each {q^-a} -> -{q^a}.
// A {q^0} numerator atom annihilates, signalled by returning count 0.
bool normalize_atom(BracketAtom& atom, int& sign) {
  if (atom.with_v) return true;
  if (atom.a == 0) return false;
  if (atom.a < 0) {
    atom.a = -atom.a;
    sign = -sign;
  }
  return true;
}

void multiset_add(AtomSet& s, const BracketAtom& atom, int count) {
  auto [it, inserted] = s.emplace(atom, count);
  if (!inserted) it->second += count;
  if (it->second == 0) s.erase(it);
}

// Moves shared atoms out of both multisets.
void multiset_cancel(AtomSet& a, AtomSet& b) {
  for (auto it = a.begin(); it != a.end();) {
    auto jt = b.find(it->first);
    if (jt == b.end()) {
      ++it;
      continue;
    }
    int common = std::min(it->second, jt->second);
    it->second -= common;
    jt->second -= common;
    if (jt->second == 0) b.erase(jt);
    if (it->second == 0)
      it = a.erase(it);
    else
      ++it;
  }
}
}  // namespace

void BracketForm::mul_num(BracketAtom atom, int count) {
  if (is_zero() || count == 0) return;
  if (count < 0) {
    mul_den(atom, -count);
    return;
  }
  int sign = 1;
  if (!normalize_atom(atom, sign)) {
    mul_scalar(0);
    return;
  }
  if ((count % 2 != 0) && sign < 0) scalar_ = -scalar_;
  auto it = den_.find(atom);
  if (it != den_.end()) {
    int common = std::min(count, it->second);
    it->second -= common;
    if (it->second == 0) den_.erase(it);
    count -= common;
  }
  if (count > 0) multiset_add(num_, atom, count);
}

void BracketForm::mul_den(BracketAtom atom, int count) {
  if (count == 0) return;
  if (count < 0) {
    mul_num(atom, -count);
    return;
  }
  int sign = 1;
  if (!normalize_atom(atom, sign))
    throw Error("zero bracket {q^0} in a denominator");
  if (is_zero()) return;
  if ((count % 2 != 0) && sign < 0) scalar_ = -scalar_;
  auto it = num_.find(atom);
  if (it != num_.end()) {
    int common = std::min(count, it->second);
    it->second -= common;
    if (it->second == 0) num_.erase(it);
    count -= common;
  }
  if (count > 0) multiset_add(den_, atom, count);
}

void BracketForm::mul(const BracketForm& o) {
  mul_scalar(o.scalar_);
  for (const auto& [atom, count] : o.num_) mul_num(atom, count);
  for (const auto& [atom, count] : o.den_) mul_den(atom, count);
}

int BracketForm::vq_denominator_count() const {
  int n = 0;
  for (const auto& [atom, count] : den_)
    if (atom.with_v) n += count;
  return n;
}

BracketForm BracketForm::invert_q() const {
  BracketForm r;
  r.scalar_ = scalar_;
  for (const auto& [atom, count] : num_)
    r.mul_num({atom.with_v, -atom.a}, count);
  for (const auto& [atom, count] : den_)
    r.mul_den({atom.with_v, -atom.a}, count);
  return r;
}

BracketForm BracketForm::invert_v() const {
  BracketForm r;
  r.scalar_ = scalar_;
  for (const auto& [atom, count] : num_) {
    if (atom.with_v) {
      r.mul_scalar((count % 2) ? -1 : 1);
      r.mul_num({true, -atom.a}, count);
    } else {
      r.mul_num(atom, count);
    }
  }
  for (const auto& [atom, count] : den_) {
    if (atom.with_v) {
      r.mul_scalar((count % 2) ? -1 : 1);
      r.mul_den({true, -atom.a}, count);
    } else {
      r.mul_den(atom, count);
    }
  }
  return r;
}

BracketForm BracketForm::specialize_v(int N) const {
  BracketForm r;
  r.scalar_ = scalar_;
  for (const auto& [atom, count] : num_)
    r.mul_num({false, atom.with_v ? N + atom.a : atom.a}, count);
  for (const auto& [atom, count] : den_)
    r.mul_den({false, atom.with_v ? N + atom.a : atom.a}, count);
  return r;
}

LaurentPoly2 BracketForm::expand() const {
  if (is_zero()) return LaurentPoly2::zero();
  LaurentPoly2 p = LaurentPoly2::one();
  for (const auto& [atom, count] : num_)
    for (int i = 0; i < count; ++i) p = p * bracket(atom);
  for (const auto& [atom, count] : den_) {
    LaurentPoly2 b = bracket(atom);
    for (int i = 0; i < count; ++i) p = p.divide_exact(b);
  }
  p *= Int(scalar_.get_num());
  const Int d = scalar_.get_den();
  if (d != 1) {
    LaurentPoly2 scaled;
    for (const auto& [e, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
        throw NonExactDivision("scalar denominator does not clear");
      Int qc;
      mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
      scaled.add_term(e.q, e.v, qc);
    }
    p = scaled;
  }
  return p;
}

std::string BracketForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << scalar_.get_str();
  auto put = [&os](const AtomSet& s) {
    for (const auto& [atom, count] : s) {
      os << " {" << (atom.with_v ? "vq^" : "q^") << atom.a << "}";
      if (count != 1) os << "^" << count;
    }
  };
  put(num_);
  if (!den_.empty()) {
    os << " /";
    put(den_);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// BracketSum

void BracketSum::add(const BracketForm& f) { add(f, LaurentPoly2::one()); }

void BracketSum::add(const BracketForm& f, const LaurentPoly2& weight) {
  if (f.is_zero() || weight.is_zero()) return;
  if (f.scalar().get_den() != 1)
    throw Error("BracketSum requires integer scalars");

  // New common denominator: multiset maximum of den_ and f.denominator().
  AtomSet grow;           // atoms to multiply into the running numerator
  AtomSet extra_for_f;    // atoms to multiply into f's numerator
  AtomSet merged = den_;
  for (const auto& [atom, count] : f.denominator()) {
    auto it = merged.find(atom);
    int have = it == merged.end() ? 0 : it->second;
    if (count > have) multiset_add(grow, atom, count - have);
  }
  for (const auto& [atom, count] : grow) multiset_add(merged, atom, count);
  for (const auto& [atom, count] : merged) {
    auto it = f.denominator().find(atom);
    int have = it == f.denominator().end() ? 0 : it->second;
    if (count > have) multiset_add(extra_for_f, atom, count - have);
  }

  for (const auto& [atom, count] : grow)
    for (int i = 0; i < count; ++i) num_ = num_ * bracket(atom);
  den_ = std::move(merged);

  LaurentPoly2 t = weight;
  t *= Int(f.scalar().get_num());
  for (const auto& [atom, count] : f.numerator())
    for (int i = 0; i < count; ++i) t = t * bracket(atom);
  for (const auto& [atom, count] : extra_for_f)
    for (int i = 0; i < count; ++i) t = t * bracket(atom);
  num_ += t;
}

LaurentPoly2 BracketSum::expand(const AtomSet& extra_num) const {
  AtomSet net_extra = extra_num;
  AtomSet net_den = den_;
  multiset_cancel(net_extra, net_den);
  LaurentPoly2 r = num_;
  for (const auto& [atom, count] : net_extra)
    for (int i = 0; i < count; ++i) r = r * bracket(atom);
  for (const auto& [atom, count] : net_den) {
    LaurentPoly2 b = bracket(atom);
    for (int i = 0; i < count; ++i) r = r.divide_exact(b);
  }
  return r;
}

// ---------------------------------------------------------------------------
// ZVPoly

ZVPoly ZVPoly::monomial(Int c, int z_exp, int v_exp) {
  ZVPoly p;
  p.add_term(z_exp, v_exp, c);
  return p;
}

const ZVPoly& ZVPoly::zero() {
  static const ZVPoly z;
  return z;
}

const ZVPoly& ZVPoly::one() {
  static const ZVPoly o = monomial(1, 0, 0);
  return o;
}

Int ZVPoly::coeff(int z_exp, int v_exp) const {
  auto it = terms_.find({z_exp, v_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

void ZVPoly::add_term(int z_exp, int v_exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(z_exp, v_exp), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZVPoly& ZVPoly::operator+=(const ZVPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

ZVPoly ZVPoly::operator+(const ZVPoly& o) const {
  ZVPoly r = *this;
  r += o;
  return r;
}

ZVPoly ZVPoly::operator-(const ZVPoly& o) const {
  ZVPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
  return r;
}

ZVPoly ZVPoly::operator*(const ZVPoly& o) const {
  ZVPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

void ZVPoly::mul_monomial(const Int& c, int dz, int dv) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  std::map<std::pair<int, int>, Int> shifted;
  for (const auto& [e, coef] : terms_)
    shifted.emplace_hint(shifted.end(),
                         std::make_pair(e.first + dz, e.second + dv), coef * c);
  terms_ = std::move(shifted);
}

int ZVPoly::min_z() const {
  if (is_zero()) degree_of_zero();
  return terms_.begin()->first.first;
}

int ZVPoly::max_z() const {
  if (is_zero()) degree_of_zero();
  return terms_.rbegin()->first.first;
}

int ZVPoly::min_v() const {
  if (is_zero()) degree_of_zero();
  int m = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) m = std::min(m, e.second);
  return m;
}

int ZVPoly::max_v() const {
  if (is_zero()) degree_of_zero();
  int m = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) m = std::max(m, e.second);
  return m;
}

ZVPoly ZVPoly::mirror() const {
  ZVPoly r;
  for (const auto& [e, c] : terms_)
    r.add_term(e.first, -e.second, (e.first % 2) ? -c : c);
  return r;
}

ZVPoly pow(const ZVPoly& p, unsigned k) {
  ZVPoly r = ZVPoly::one();
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

LaurentPoly2 ZVPoly::to_laurent(int z_shift) const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) {
    int k = e.first + z_shift;
    if (k < 0) throw Error("z-pole not cleared by the given shift");
    LaurentPoly2 zk = pow(bracket(BracketKind::q, 1), static_cast<unsigned>(k));
    zk.mul_monomial(c, 0, e.second);
    out += zk;
  }
  return out;
}

std::string ZVPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c.get_str() << "*z^" << e.first << "*v^" << e.second;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ZV tables

ZVTable to_zv_table(const LaurentPoly2& p, int pole_order) {
  ZVTable t;
  t.pole_order = pole_order;
  for (auto& [v_exp, col0] : p.v_columns()) {
    UniPoly col = col0;
    while (!col.empty()) {
      auto lead = std::prev(col.end());
      int d = lead->first;
      if (d < 0) throw NotInZSubring("column has no z-expansion");
      Int c = lead->second;
      t.entries[{d - pole_order, v_exp}] = c;
      // subtract c * (q - 1/q)^d
      Int binom = 1;
      for (int i = 0; i <= d; ++i) {
        Int delta = (i % 2 == 0 ? c : -c) * binom;
        auto [it, inserted] = col.emplace(d - 2 * i, -delta);
        if (!inserted) {
          it->second -= delta;
          if (it->second == 0) col.erase(it);
        } else if (it->second == 0) {
          col.erase(it);
        }
        binom = binom * (d - i) / (i + 1);
      }
    }
  }
  return t;
}

LaurentPoly2 from_zv_table(const ZVTable& t) {
  LaurentPoly2 out;
  for (const auto& [e, c] : t.entries) {
    int k = e.first + t.pole_order;
    if (k < 0) throw Error("table entry below its declared pole order");
    LaurentPoly2 zk = pow(bracket(BracketKind::q, 1), static_cast<unsigned>(k));
    zk.mul_monomial(c, 0, e.second);
    out += zk;
  }
  return out;
}

UniPoly extract_z_coefficient(const ZVTable& t, int k) {
  UniPoly row;
  for (auto it = t.entries.lower_bound({k, INT_MIN});
       it != t.entries.end() && it->first.first == k; ++it)
    row.emplace_hint(row.end(), it->first.second, it->second);
  return row;
}

ZVTable to_zv_table(const ZVPoly& p, int pole_order) {
  ZVTable t;
  t.pole_order = pole_order;
  for (const auto& [e, c] : p.terms()) {
    if (e.first < -pole_order)
      throw Error("z-exponent below the declared pole order");
    t.entries.emplace(e, c);
  }
  return t;
}

ZVPoly zv_poly(const ZVTable& t) {
  ZVPoly p;
  for (const auto& [e, c] : t.entries) p.add_term(e.first, e.second, c);
  return p;
}

bool zv_exponents_valid(const ZVTable& t, int components) {
  for (const auto& [e, c] : t.entries) {
    if (e.first < 1 - components) return false;
    if (((e.first - (1 - components)) % 2 + 2) % 2 != 0) return false;
  }
  return true;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto [it, inserted] = r.emplace(ea + eb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

UniPoly uni_shift(const UniPoly& a, int dv) {
  UniPoly r;
  for (const auto& [e, c] : a) r.emplace_hint(r.end(), e + dv, c);
  return r;
}

std::string uni_str(const UniPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a) {
    if (!first) os << " + ";
    os << c.get_str();
    if (e != 0) os << "*" << var << "^" << e;
    first = false;
  }
  return os.str();
}

}  // namespace panhandle
