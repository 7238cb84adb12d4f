#include "panhandle/composite.hpp"

#include <algorithm>
#include <mutex>
#include <utility>
#include <vector>

#include "panhandle/errors.hpp"

namespace panhandle {

std::string CompositeRep::str() const {
  return "(" + R.str() + "," + P.str() + ")";
}

Partition composite_diagram(const CompositeRep& c, int N) {
  const int lr = c.R.length();
  const int lp = c.P.length();
  if (N < lr + lp)
    throw RankTooSmall("label " + c.str() + " needs rank >= " +
                       std::to_string(lr + lp));
  const int p1 = c.P.part(0);
  std::vector<int> rows;
  rows.reserve(N - 1);
  for (int i = 0; i < lr; ++i) rows.push_back(c.R.part(i) + p1);
  for (int i = 0; i < N - lr - lp; ++i) rows.push_back(p1);
  for (int j = lp - 1; j >= 1; --j) rows.push_back(p1 - c.P.part(j));
  return Partition(rows);
}

BracketForm composite_qdim(const CompositeRep& c) {
  const int lr = c.R.length();
  const int lp = c.P.length();
  BracketForm f = BracketForm::one();
  // dimension of R with v shifted by q^{-lp}
  for (int i = 0; i < lr; ++i)
    for (int j = 0; j < c.R.part(i); ++j) f.mul_num({true, j - i - lp});
  for (int h : hooks(c.R)) f.mul_den({false, h});
  // dimension of P with v shifted by q^{-lr}
  for (int i = 0; i < lp; ++i)
    for (int j = 0; j < c.P.part(i); ++j) f.mul_num({true, j - i - lr});
  for (int h : hooks(c.P)) f.mul_den({false, h});
  // mixed block: one factor per pair of rows of R and P
  for (int i = 0; i < lr; ++i)
    for (int j = 0; j < lp; ++j) {
      f.mul_num({true, c.R.part(i) + c.P.part(j) - 1 - i - j});
      f.mul_den({true, -1 - i - j});
    }

  for (const auto& [atom, count] : f.denominator())
    if (atom.with_v)
      throw CancellationFailure("v-atom left in the denominator of " + c.str());
  int v_atoms = 0;
  for (const auto& [atom, count] : f.numerator())
    if (atom.with_v) v_atoms += count;
  if (v_atoms != c.R.size() + c.P.size())
    throw CancellationFailure("wrong v-atom count for " + c.str());
  return f;
}

int reduced_casimir(const CompositeRep& c) {
  if (c.R.size() != c.P.size())
    throw GradeMismatch("label " + c.str() + " mixes grades");
  return 2 * (content_sum(c.R) + content_sum(c.P));
}

std::map<CompositeRep, long long> koike_expand(const Partition& lambda,
                                               const Partition& mu) {
  static std::mutex guard;
  static std::map<std::pair<Partition, Partition>, std::map<CompositeRep, long long>>
      memo;
  const auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(guard);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
  }

  std::map<CompositeRep, long long> out;
  const int max_k = std::min(lambda.size(), mu.size());
  for (int k = 0; k <= max_k; ++k)
    for (const auto& kappa : partitions_of(k))
      for (const auto& a : partitions_of(lambda.size() - k)) {
        const long long ca = lr_coefficient(lambda, a, kappa);
        if (ca == 0) continue;
        for (const auto& b : partitions_of(mu.size() - k)) {
          const long long cb = lr_coefficient(mu, b, kappa);
          if (cb != 0) out[{a, b}] += ca * cb;
        }
      }

  std::lock_guard<std::mutex> lock(guard);
  return memo.emplace(key, std::move(out)).first->second;
}

nlohmann::json composite_to_json(const CompositeRep& c) {
  return {{"R", partition_to_json(c.R)}, {"P", partition_to_json(c.P)}};
}

CompositeRep composite_from_json(const nlohmann::json& j) {
  return {partition_from_json(j.at("R")), partition_from_json(j.at("P"))};
}

}  // namespace panhandle
