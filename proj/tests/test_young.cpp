#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "panhandle/errors.hpp"
#include "panhandle/laurent.hpp"
#include "panhandle/young.hpp"

using namespace panhandle;

namespace {

LaurentPoly2 atom_poly(const BracketAtom& a) {
  LaurentPoly2 p;
  if (a.with_v) {
    p.add_term(a.a, 1, 1);
    p.add_term(-a.a, -1, -1);
  } else {
    p.add_term(a.a, 0, 1);
    p.add_term(-a.a, 0, -1);
  }
  return p;
}

LaurentPoly2 atoms_poly(const AtomSet& s) {
  LaurentPoly2 p = LaurentPoly2::one();
  for (const auto& [atom, count] : s)
    for (int i = 0; i < count; ++i) p = p * atom_poly(atom);
  return p;
}

// Equality of bracket forms as rational functions, via cross multiplication.
bool same_fraction(const BracketForm& a, const BracketForm& b) {
  if (!(a.scalar() == b.scalar())) return false;
  return atoms_poly(a.numerator()) * atoms_poly(b.denominator()) ==
         atoms_poly(b.numerator()) * atoms_poly(a.denominator());
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Schur polynomial in kVars variables as a map exponent-vector -> coefficient,
// computed by direct enumeration of semistandard tableaux.
constexpr int kVars = 6;
using Mono = std::array<int, kVars>;
using Poly6 = std::map<Mono, long long>;

void ssyt_fill(const Partition& shape, std::vector<std::vector<int>>& t, int i,
               int j, Mono& mono, Poly6& out) {
  if (i == shape.length()) {
    ++out[mono];
    return;
  }
  if (j == shape.part(i)) {
    ssyt_fill(shape, t, i + 1, 0, mono, out);
    return;
  }
  int lo = 1;
  if (j > 0) lo = std::max(lo, t[i][j - 1]);
  if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
  for (int x = lo; x <= kVars; ++x) {
    t[i][j] = x;
    ++mono[x - 1];
    ssyt_fill(shape, t, i, j + 1, mono, out);
    --mono[x - 1];
  }
}

Poly6 schur(const Partition& shape) {
  Poly6 out;
  std::vector<std::vector<int>> t(shape.length());
  for (int i = 0; i < shape.length(); ++i) t[i].assign(shape.part(i), 0);
  Mono mono{};
  ssyt_fill(shape, t, 0, 0, mono, out);
  return out;
}

Poly6 poly6_mul(const Poly6& a, const Poly6& b) {
  Poly6 out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m;
      for (int i = 0; i < kVars; ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("partition construction and accessors") {
  Partition p{4, 2, 1};
  CHECK(p.size() == 7);
  CHECK(p.length() == 3);
  CHECK(p.part(0) == 4);
  CHECK(p.part(2) == 1);
  CHECK(p.part(3) == 0);
  CHECK(p.part(17) == 0);
  CHECK_FALSE(p.empty());

  Partition empty;
  CHECK(empty.empty());
  CHECK(empty.size() == 0);
  CHECK(empty.length() == 0);

  CHECK(Partition(std::vector<int>{3, 1, 0, 0}) == Partition{3, 1});
  CHECK(Partition(std::vector<int>{0}) == Partition{});
  CHECK_THROWS_AS(Partition({2, 3}), Error);
  CHECK_THROWS_AS(Partition({2, -1}), Error);
  CHECK_THROWS_AS(Partition({0, 1}), Error);

  CHECK(Partition{2, 1} < Partition{3});
  CHECK(Partition{3, 1}.str() == "[3,1]");
  CHECK(Partition{}.str() == "[]");
}

TEST_CASE("transpose fixtures and involution") {
  CHECK(Partition{3, 1}.transpose() == Partition{2, 1, 1});
  CHECK(Partition{2, 2}.transpose() == Partition{2, 2});
  CHECK(Partition{5}.transpose() == Partition{1, 1, 1, 1, 1});
  CHECK(Partition{}.transpose() == Partition{});
  for (int n = 0; n <= 7; ++n)
    for (const auto& r : partitions_of(n)) {
      CHECK(r.transpose().transpose() == r);
      CHECK(r.transpose().size() == n);
    }
}

TEST_CASE("containment") {
  CHECK(Partition{3, 2}.contains(Partition{2, 2}));
  CHECK(Partition{3, 2}.contains(Partition{}));
  CHECK_FALSE(Partition{3, 2}.contains(Partition{1, 1, 1}));
  CHECK_FALSE(Partition{3, 2}.contains(Partition{4}));
  CHECK(Partition{1}.contains(Partition{1}));
}

TEST_CASE("hook multisets") {
  CHECK(hooks(Partition{1}) == std::multiset<int>{1});
  CHECK(hooks(Partition{2, 1}) == std::multiset<int>{3, 1, 1});
  CHECK(hooks(Partition{3, 2}) == std::multiset<int>{4, 3, 1, 2, 1});
  CHECK(hooks(Partition{2, 1, 1}) == std::multiset<int>{4, 1, 2, 1});
  CHECK(hooks(Partition{}) == std::multiset<int>{});
  // hooks are a transpose invariant
  for (const auto& r : partitions_of(6)) CHECK(hooks(r) == hooks(r.transpose()));
}

TEST_CASE("content sums") {
  CHECK(content_sum(Partition{}) == 0);
  CHECK(content_sum(Partition{2}) == 1);
  CHECK(content_sum(Partition{1, 1}) == -1);
  CHECK(content_sum(Partition{2, 1}) == 0);
  CHECK(content_sum(Partition{3}) == 3);
  CHECK(content_sum(Partition{4, 2}) == 6 - 1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& r : partitions_of(n))
      CHECK(content_sum(r) == -content_sum(r.transpose()));
}

TEST_CASE("quantum dimension fixtures") {
  BracketForm d1;
  d1.mul_num({true, 0});
  d1.mul_den({false, 1});
  CHECK(quantum_dimension(Partition{1}) == d1);

  BracketForm d2;
  d2.mul_num({true, 0});
  d2.mul_num({true, 1});
  d2.mul_den({false, 2});
  d2.mul_den({false, 1});
  CHECK(quantum_dimension(Partition{2}) == d2);

  BracketForm d11;
  d11.mul_num({true, 0});
  d11.mul_num({true, -1});
  d11.mul_den({false, 2});
  d11.mul_den({false, 1});
  CHECK(quantum_dimension(Partition{1, 1}) == d11);

  BracketForm d21;
  d21.mul_num({true, 0});
  d21.mul_num({true, 1});
  d21.mul_num({true, -1});
  d21.mul_den({false, 3});
  d21.mul_den({false, 1}, 2);
  CHECK(quantum_dimension(Partition{2, 1}) == d21);

  CHECK(quantum_dimension(Partition{}) == BracketForm::one());
}

TEST_CASE("hook rows of a near-column shape") {
  // For the shape [2,1^(N-2)] the dimension factors as
  // ({q^(N-1)}/{q}) * prod_{i=1..N} {v q^(2-i)} / {q^i}.
  for (int n : {4, 5, 6}) {
    std::vector<int> parts{2};
    for (int i = 0; i < n - 2; ++i) parts.push_back(1);
    BracketForm lhs = quantum_dimension(Partition(parts));

    BracketForm rhs;
    rhs.mul_num({false, n - 1});
    rhs.mul_den({false, 1});
    for (int i = 1; i <= n; ++i) {
      rhs.mul_num({true, 2 - i});
      rhs.mul_den({false, i});
    }
    CHECK(same_fraction(lhs, rhs));
  }
}

TEST_CASE("rank specialization of the square-of-fundamental complement") {
  // [2,1^(N-2)] specialized at v = q^N equals {vq}{v/q}/{q}^2 there.
  for (int n : {3, 4, 5, 7}) {
    std::vector<int> parts{2};
    for (int i = 0; i < n - 2; ++i) parts.push_back(1);
    LaurentPoly2 lhs = quantum_dimension(Partition(parts)).specialize_v(n).expand();

    BracketForm adj;
    adj.mul_num({true, 1});
    adj.mul_num({true, -1});
    adj.mul_den({false, 1}, 2);
    LaurentPoly2 rhs = adj.specialize_v(n).expand();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("column shapes specialize to Gaussian binomials") {
  // D_[1^k] at v = q^N equals the balanced q-binomial: the sum of
  // q^(2|Y| - k(N-k)) over partitions Y inside a k x (N-k) box.
  struct Case {
    int n, k;
  };
  for (Case c : {Case{4, 2}, Case{5, 2}, Case{5, 3}, Case{6, 3}}) {
    std::vector<int> parts(c.k, 1);
    LaurentPoly2 got = quantum_dimension(Partition(parts)).specialize_v(c.n).expand();

    LaurentPoly2 want;
    int box = c.k * (c.n - c.k);
    for (int m = 0; m <= box; ++m)
      for (const auto& y : partitions_of(m))
        if (y.length() <= c.k && y.part(0) <= c.n - c.k)
          want.add_term(2 * m - box, 0, 1);
    CHECK(got == want);
  }
}

TEST_CASE("extreme v-columns of the dimension numerator") {
  // The numerator prod_cells {v q^content} has top v-column q^(content sum)
  // and bottom v-column (-1)^cells * q^(-content sum).
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : partitions_of(n)) {
      LaurentPoly2 num = atoms_poly(quantum_dimension(r).numerator());
      CHECK(num.max_v() == n);
      CHECK(num.min_v() == -n);
      CHECK(num.v_column(n) == UniPoly{{content_sum(r), 1}});
      Int sign = (n % 2) ? -1 : 1;
      CHECK(num.v_column(-n) == UniPoly{{-content_sum(r), sign}});
    }
}

TEST_CASE("dimension symmetry under simultaneous inversion") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : partitions_of(n)) {
      BracketForm d = quantum_dimension(r);
      CHECK(d.invert_q().invert_v() == d);
    }
}

TEST_CASE("dimension transpose symmetry") {
  // Inverting q alone transposes the shape, up to sign (-1)^cells.
  for (int n = 1; n <= 5; ++n)
    for (const auto& r : partitions_of(n)) {
      BracketForm lhs = quantum_dimension(r).invert_q();
      BracketForm rhs = quantum_dimension(r.transpose());
      if (n % 2) rhs.mul_scalar(-1);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("littlewood-richardson fixtures") {
  CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{1, 1}, Partition{1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1, 1}, Partition{}) == 0);
  CHECK(lr_coefficient(Partition{3}, Partition{1}, Partition{1, 1}) == 0);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{2}, Partition{1, 1}) == 0);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{2, 1}, Partition{1}) == 1);
  // the first multiplicity-two coefficient
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) ==
        2);
  // not contained, wrong size
  CHECK(lr_coefficient(Partition{2, 2}, Partition{3}, Partition{1}) == 0);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{1}, Partition{1}) == 0);
}

TEST_CASE("littlewood-richardson against tableau products") {
  // s_mu * s_nu expanded by explicit semistandard tableaux in six variables.
  std::vector<Partition> small;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : partitions_of(n)) small.push_back(p);

  for (const auto& mu : small)
    for (const auto& nu : small) {
      Poly6 direct = poly6_mul(schur(mu), schur(nu));
      Poly6 expanded;
      for (const auto& lam : partitions_of(mu.size() + nu.size())) {
        long long c = lr_coefficient(lam, mu, nu);
        CHECK(c == lr_coefficient(lam, nu, mu));
        if (c == 0) continue;
        for (const auto& [m, k] : schur(lam)) expanded[m] += c * k;
      }
      std::erase_if(expanded, [](const auto& e) { return e.second == 0; });
      CHECK(direct == expanded);
    }
}

TEST_CASE("symmetric group characters") {
  CHECK(mn_character(Partition{1, 1}, Partition{2}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(mn_character(Partition{}, Partition{}) == 1);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), SizeMismatch);

  // trivial character
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      std::vector<int> row{n};
      CHECK(mn_character(Partition(row), mu) == 1);
    }

  // dimension agrees with the hook length formula
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      std::vector<int> ones(n, 1);
      long long dim = factorial(n);
      for (int h : hooks(lam)) dim /= h;
      CHECK(mn_character(lam, Partition(ones)) == dim);
    }

  // sign character pairs with the transpose
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        int sign = 1;
        for (int p : mu.parts()) sign *= (p % 2) ? 1 : -1;
        CHECK(mn_character(lam.transpose(), mu) ==
              sign * mn_character(lam, mu));
      }
}

TEST_CASE("character column orthogonality") {
  for (int n = 1; n <= 6; ++n) {
    auto all = partitions_of(n);
    for (const auto& mu : all)
      for (const auto& nu : all) {
        long long sum = 0;
        for (const auto& lam : all)
          sum += mn_character(lam, mu) * mn_character(lam, nu);
        CHECK(sum == (mu == nu ? centralizer_order(mu) : 0));
      }
  }
}

TEST_CASE("centralizer orders") {
  CHECK(centralizer_order(Partition{}) == 1);
  CHECK(centralizer_order(Partition{3}) == 3);
  CHECK(centralizer_order(Partition{2, 1}) == 2);
  CHECK(centralizer_order(Partition{1, 1, 1}) == 6);
  CHECK(centralizer_order(Partition{2, 2}) == 8);
  CHECK(centralizer_order(Partition{4, 4, 2, 1, 1}) == 4 * 4 * 2 * 2 * 2);
  // class sizes n!/z_mu fill the whole group
  for (int n = 1; n <= 7; ++n) {
    long long sum = 0;
    for (const auto& mu : partitions_of(n)) {
      CHECK(factorial(n) % centralizer_order(mu) == 0);
      sum += factorial(n) / centralizer_order(mu);
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("partition enumeration") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) {
    auto all = partitions_of(n);
    CHECK(static_cast<int>(all.size()) == expected[n]);
    for (const auto& p : all) CHECK(p.size() == n);
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    CHECK(sorted.size() == all.size());
  }
}

TEST_CASE("weights and partitions") {
  CHECK(weight_to_partition({1, 1}) == Partition{2, 1});
  CHECK(weight_to_partition({0, 0, 0}) == Partition{});
  CHECK(weight_to_partition({}) == Partition{});
  CHECK(weight_to_partition({1, 0, 0, 1}) == Partition{2, 1, 1, 1});
  CHECK(weight_to_partition({3}) == Partition{3});
  CHECK_THROWS_AS(weight_to_partition({-1}), Error);
  CHECK_THROWS_AS(weight_to_partition({1, -2, 1}), Error);

  CHECK(partition_to_weight(Partition{2, 1}, 2) == std::vector<int>({1, 1}));
  CHECK(partition_to_weight(Partition{2, 1}, 4) ==
        std::vector<int>({1, 1, 0, 0}));
  CHECK(partition_to_weight(Partition{}, 3) == std::vector<int>({0, 0, 0}));
  CHECK_THROWS_AS(partition_to_weight(Partition{1, 1, 1}, 2), SizeMismatch);

  for (int n = 0; n <= 5; ++n)
    for (const auto& r : partitions_of(n)) {
      if (r.length() > 0)
        CHECK(weight_to_partition(partition_to_weight(r, r.length())) == r);
      CHECK(weight_to_partition(partition_to_weight(r, 6)) == r);
    }
}

TEST_CASE("partition json round trip") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& r : partitions_of(n))
      CHECK(partition_from_json(partition_to_json(r)) == r);
  CHECK(partition_to_json(Partition{3, 1}).dump() == "[3,1]");
}
