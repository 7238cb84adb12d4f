#include "panhandle/adams.hpp"

#include <mutex>
#include <utility>
#include <vector>

#include "panhandle/errors.hpp"
#include "panhandle/young.hpp"

namespace panhandle {

namespace {

void check_divisor(int m, int l) {
  if (m <= 0 || l <= 0 || m % l != 0)
    throw Error("need positive m with l | m, got m=" + std::to_string(m) +
                " l=" + std::to_string(l));
}

long long binom(int n, int k) {
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

long long zeta(int m, int l) {
  check_divisor(m, l);
  const long long a = m / l;
  long long out = 0;
  long long falling = 1;  // l!/(l-k)!
  long long power = 1;    // a^k
  for (int k = 0; k <= l; ++k) {
    const long long term = falling * power;
    out += ((l + k) % 2) ? -term : term;
    falling *= l - k;
    power *= a;
  }
  return out;
}

AdamsExpansion adjoint_adams(int m, int l) {
  check_divisor(m, l);
  static std::mutex guard;
  static std::map<std::pair<int, int>, AdamsExpansion> memo;
  const auto key = std::make_pair(m, l);
  {
    std::lock_guard<std::mutex> lock(guard);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
  }

  const int a = m / l;
  std::map<CompositeRep, long long> total;
  for (int j = 0; j <= l; ++j) {
    const long long outer = binom(l, j) * (((l - j) % 2) ? -1 : 1);
    const Partition cycles(std::vector<int>(j, a));
    std::vector<std::pair<Partition, long long>> chi;
    for (const auto& lam : partitions_of(a * j)) {
      const long long c = mn_character(lam, cycles);
      if (c != 0) chi.emplace_back(lam, c);
    }
    for (const auto& [lam, cl] : chi)
      for (const auto& [mu, cm] : chi)
        for (const auto& [comp, k] : koike_expand(lam, mu))
          total[comp] += outer * cl * cm * k;
  }

  AdamsExpansion e;
  const CompositeRep unit{};
  if (auto it = total.find(unit); it != total.end()) {
    e.scalar = it->second;
    total.erase(it);
  }
  std::erase_if(total, [](const auto& t) { return t.second == 0; });
  e.terms = std::move(total);

  std::lock_guard<std::mutex> lock(guard);
  return memo.emplace(key, std::move(e)).first->second;
}

nlohmann::json adams_to_json(const AdamsExpansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, coeff] : e.terms) {
    nlohmann::json t = composite_to_json(c);
    t["c"] = coeff;
    terms.push_back(std::move(t));
  }
  return {{"scalar", e.scalar}, {"terms", std::move(terms)}};
}

}  // namespace panhandle
