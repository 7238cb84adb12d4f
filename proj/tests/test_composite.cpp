#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "panhandle/composite.hpp"
#include "panhandle/errors.hpp"
#include "panhandle/laurent.hpp"
#include "panhandle/young.hpp"

using namespace panhandle;

namespace {

std::vector<Partition> shapes_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

// Re-contract a composite into products of one-sided characters and expand
// each product back; the result must be the composite itself.
std::map<CompositeRep, long long> round_trip(const CompositeRep& c) {
  std::map<CompositeRep, long long> out;
  const int max_k = std::min(c.R.size(), c.P.size());
  for (int k = 0; k <= max_k; ++k)
    for (const auto& y : partitions_of(k)) {
      const Partition yt = y.transpose();
      const long long sign = (y.size() % 2) ? -1 : 1;
      for (const auto& y1 : partitions_of(c.R.size() - k)) {
        const long long n1 = lr_coefficient(c.R, y, y1);
        if (n1 == 0) continue;
        for (const auto& y2 : partitions_of(c.P.size() - k)) {
          const long long n2 = lr_coefficient(c.P, yt, y2);
          if (n2 == 0) continue;
          for (const auto& [comp, coeff] : koike_expand(y1, y2))
            out[comp] += sign * n1 * n2 * coeff;
        }
      }
    }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

LaurentPoly2 dim_at(const Partition& r, int n) {
  return quantum_dimension(r).specialize_v(n).expand();
}

}  // namespace

TEST_CASE("composite diagrams at finite rank") {
  CHECK(composite_diagram({{1}, {1}}, 4) == Partition{2, 1, 1});
  CHECK(composite_diagram({{1}, {1}}, 2) == Partition{2});
  CHECK(composite_diagram({{2}, {2}}, 4) == Partition{4, 2, 2});
  CHECK(composite_diagram({{}, {}}, 3) == Partition{});
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> col(n - 1, 1);
    CHECK(composite_diagram({{}, {1}}, n) == Partition(col));
  }
  // conjugating a row gives a near-rectangle
  CHECK(composite_diagram({{}, {2}}, 4) == Partition{2, 2, 2});
  CHECK(composite_diagram({{2, 1}, {1, 1}}, 5) == Partition{3, 2, 1});
  CHECK_THROWS_AS(composite_diagram({{1}, {1}}, 1), RankTooSmall);
  CHECK_THROWS_AS(composite_diagram({{2, 1}, {1}}, 2), RankTooSmall);
}

TEST_CASE("uniform dimension fixtures") {
  BracketForm adj;
  adj.mul_num({true, 1});
  adj.mul_num({true, -1});
  adj.mul_den({false, 1}, 2);
  CHECK(composite_qdim({{1}, {1}}) == adj);

  BracketForm d22;
  d22.mul_num({true, 0}, 2);
  d22.mul_num({true, 3});
  d22.mul_num({true, -1});
  d22.mul_den({false, 2}, 2);
  d22.mul_den({false, 1}, 2);
  CHECK(composite_qdim({{2}, {2}}) == d22);

  BracketForm d33;
  d33.mul_num({true, 5});
  d33.mul_num({true, 1}, 2);
  d33.mul_num({true, 0}, 2);
  d33.mul_num({true, -1});
  d33.mul_den({false, 3}, 2);
  d33.mul_den({false, 2}, 2);
  d33.mul_den({false, 1}, 2);
  CHECK(composite_qdim({{3}, {3}}) == d33);

  CHECK(composite_qdim({{}, {}}) == BracketForm::one());

  BracketForm fund;
  fund.mul_num({true, 0});
  fund.mul_den({false, 1});
  CHECK(composite_qdim({{1}, {}}) == fund);
  CHECK(composite_qdim({{}, {1}}) == fund);
}

TEST_CASE("uniform dimension shape") {
  // pure hook denominator and one v-atom per cell, whatever the grades
  for (const auto& r : shapes_up_to(3))
    for (const auto& p : shapes_up_to(3)) {
      BracketForm d = composite_qdim({r, p});
      for (const auto& [atom, count] : d.denominator()) CHECK_FALSE(atom.with_v);
      int v_atoms = 0;
      int q_atoms = 0;
      for (const auto& [atom, count] : d.numerator()) {
        if (atom.with_v)
          v_atoms += count;
        else
          q_atoms += count;
      }
      CHECK(v_atoms == r.size() + p.size());
      CHECK(q_atoms == 0);
    }
}

TEST_CASE("uniform dimension specializes to the finite-rank dimension") {
  for (const auto& r : shapes_up_to(3))
    for (const auto& p : shapes_up_to(3)) {
      if (r.size() != p.size()) continue;
      CompositeRep c{r, p};
      BracketForm d = composite_qdim(c);
      for (int n : {6, 7})
        CHECK(d.specialize_v(n).expand() == dim_at(composite_diagram(c, n), n));
    }
}

TEST_CASE("reduced casimir exponents") {
  CHECK(reduced_casimir({{2}, {2}}) == 4);
  CHECK(reduced_casimir({{1, 1}, {1, 1}}) == -4);
  CHECK(reduced_casimir({{1, 1}, {2}}) == 0);
  CHECK(reduced_casimir({{2}, {1, 1}}) == 0);
  CHECK(reduced_casimir({{1}, {1}}) == 0);
  CHECK(reduced_casimir({{}, {}}) == 0);
  CHECK(reduced_casimir({{3}, {2, 1}}) == 6);
  CHECK_THROWS_AS(reduced_casimir({{1}, {}}), GradeMismatch);
  CHECK_THROWS_AS(reduced_casimir({{2, 1}, {1}}), GradeMismatch);
  // transposing both sides flips the exponent
  for (const auto& r : shapes_up_to(3))
    for (const auto& p : shapes_up_to(3)) {
      if (r.size() != p.size()) continue;
      CHECK(reduced_casimir({r, p}) ==
            -reduced_casimir({r.transpose(), p.transpose()}));
    }
}

TEST_CASE("koike expansion fixtures") {
  using Out = std::map<CompositeRep, long long>;
  CHECK(koike_expand({1}, {1}) == Out{{{{}, {}}, 1}, {{{1}, {1}}, 1}});
  CHECK(koike_expand({2}, {}) == Out{{{{2}, {}}, 1}});
  CHECK(koike_expand({2}, {1, 1}) ==
        Out{{{{1}, {1}}, 1}, {{{2}, {1, 1}}, 1}});
  CHECK(koike_expand({}, {}) == Out{{{{}, {}}, 1}});
  CHECK(koike_expand({1}, {2}) == Out{{{{}, {1}}, 1}, {{{1}, {2}}, 1}});
  CHECK(koike_expand({2}, {2}) ==
        Out{{{{}, {}}, 1}, {{{1}, {1}}, 1}, {{{2}, {2}}, 1}});
}

TEST_CASE("koike expansion conserves charge and positivity") {
  for (const auto& lam : shapes_up_to(3))
    for (const auto& mu : shapes_up_to(3))
      for (const auto& [c, coeff] : koike_expand(lam, mu)) {
        CHECK(coeff > 0);
        CHECK(c.R.size() - c.P.size() == lam.size() - mu.size());
        CHECK(c.R.size() <= lam.size());
      }
}

TEST_CASE("koike expansion round trip") {
  for (const auto& r : shapes_up_to(3))
    for (const auto& p : shapes_up_to(3)) {
      CompositeRep c{r, p};
      std::map<CompositeRep, long long> want{{c, 1}};
      CHECK(round_trip(c) == want);
    }
}

TEST_CASE("koike expansion preserves quantum dimension") {
  // s_lambda(x) s_mu(1/x) and its composite expansion must agree as
  // characters of sl_7 evaluated on the principal element.
  const int n = 7;
  for (const auto& lam : shapes_up_to(3))
    for (const auto& mu : shapes_up_to(3)) {
      LaurentPoly2 lhs = dim_at(lam, n) * dim_at(mu, n);
      LaurentPoly2 rhs;
      for (const auto& [c, coeff] : koike_expand(lam, mu)) {
        LaurentPoly2 d = dim_at(composite_diagram(c, n), n);
        d *= Int(static_cast<long>(coeff));
        rhs += d;
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("composite labels as text and json") {
  CompositeRep c{{2}, {1, 1}};
  CHECK(c.str() == "([2],[1,1])");
  CHECK(CompositeRep{{}, {1}}.str() == "([],[1])");
  CHECK(composite_to_json(c).dump() == R"({"P":[1,1],"R":[2]})");
  for (const auto& r : shapes_up_to(2))
    for (const auto& p : shapes_up_to(2)) {
      CompositeRep x{r, p};
      CHECK(composite_from_json(composite_to_json(x)) == x);
    }
}
