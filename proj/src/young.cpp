#include "panhandle/young.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "panhandle/errors.hpp"

namespace panhandle {

Partition::Partition(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1])
      throw Error("partition parts must be weakly decreasing");
  }
  parts_ = std::move(p);
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j)
    t[j] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                          [j](int r) { return r > j; }));
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < inner.length(); ++i)
    if (part(i) < inner.part(i)) return false;
  return true;
}

std::string Partition::str() const {
  if (parts_.empty()) return "[]";
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

std::multiset<int> hooks(const Partition& r) {
  std::multiset<int> h;
  Partition t = r.transpose();
  for (int i = 0; i < r.length(); ++i)
    for (int j = 0; j < r.part(i); ++j)
      h.insert(r.part(i) - j + t.part(j) - i - 1);
  return h;
}

int content_sum(const Partition& r) {
  int c = 0;
  for (int i = 0; i < r.length(); ++i)
    for (int j = 0; j < r.part(i); ++j) c += j - i;
  return c;
}

BracketForm quantum_dimension(const Partition& r) {
  BracketForm f = BracketForm::one();
  Partition t = r.transpose();
  for (int i = 0; i < r.length(); ++i)
    for (int j = 0; j < r.part(i); ++j) {
      f.mul_num({true, j - i});
      f.mul_den({false, r.part(i) - j + t.part(j) - i - 1});
    }
  return f;
}

namespace {

// Backtracking count of Littlewood-Richardson fillings of lambda/mu with
// content nu. Cells are visited in the order of the reverse reading word
// (rows top to bottom, right to left), so the lattice condition is a simple
// running-count check.
struct LRCounter {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> grid;  // 0 = outside skew or unfilled
  std::vector<int> counts;
  long long total = 0;

  LRCounter(const Partition& l, const Partition& m, const Partition& n)
      : lambda(l), mu(m), nu(n), counts(n.length() + 1, 0) {
    grid.resize(l.length());
    for (int i = 0; i < l.length(); ++i) grid[i].assign(l.part(i), 0);
  }

  void run(int i, int j) {
    while (i < lambda.length() && j < mu.part(i)) {
      ++i;
      j = i < lambda.length() ? lambda.part(i) - 1 : 0;
    }
    if (i >= lambda.length()) {
      ++total;
      return;
    }
    for (int t = 1; t <= nu.length(); ++t) {
      if (counts[t] >= nu.part(t - 1)) continue;
      if (t > 1 && counts[t] >= counts[t - 1]) continue;
      if (j + 1 < lambda.part(i) && grid[i][j + 1] < t) continue;
      if (i > 0 && j < lambda.part(i - 1) && j >= mu.part(i - 1) &&
          grid[i - 1][j] >= t)
        continue;
      grid[i][j] = t;
      ++counts[t];
      if (j > mu.part(i))
        run(i, j - 1);
      else if (i + 1 < lambda.length())
        run(i + 1, lambda.part(i + 1) - 1);
      else
        run(lambda.length(), 0);
      --counts[t];
      grid[i][j] = 0;
    }
  }
};

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!lambda.contains(mu)) return 0;
  if (nu.empty()) return lambda == mu ? 1 : 0;
  LRCounter counter(lambda, mu, nu);
  int i = 0;
  while (i < lambda.length() && lambda.part(i) == mu.part(i)) ++i;
  if (i >= lambda.length()) return 0;  // sizes differ, so some row is strict
  counter.run(i, lambda.part(i) - 1);
  return counter.total;
}

namespace {

long long chi_rec(const Partition& lam, size_t k, const std::vector<int>& mu,
                  std::map<std::pair<Partition, size_t>, long long>& memo) {
  if (k == mu.size()) return lam.empty() ? 1 : 0;
  auto key = std::make_pair(lam, k);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  int t = mu[k];
  int L = lam.length();
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lam.part(i) + (L - 1 - i);
  long long total = 0;
  for (int idx = 0; idx < L; ++idx) {
    int target = beta[idx] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int e : beta)
      if (e > target && e < beta[idx]) ++height;
    std::vector<int> nb = beta;
    nb[idx] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    int L2 = static_cast<int>(nb.size());
    std::vector<int> parts(L2);
    for (int i = 0; i < L2; ++i) parts[i] = nb[i] - (L2 - 1 - i);
    long long sub = chi_rec(Partition(std::move(parts)), k + 1, mu, memo);
    total += (height % 2 ? -1 : 1) * sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("character needs |lambda| = |mu|: " + lambda.str() +
                       " vs " + mu.str());
  std::map<std::pair<Partition, size_t>, long long> memo;
  return chi_rec(lambda, 0, mu.parts(), memo);
}

Partition weight_to_partition(const std::vector<int>& a) {
  std::vector<int> parts(a.size());
  int tail = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] < 0) throw Error("weights must be nonnegative");
    tail += a[i];
    parts[i] = tail;
  }
  return Partition(std::move(parts));
}

std::vector<int> partition_to_weight(const Partition& r, int n) {
  if (n < r.length())
    throw SizeMismatch("weight vector of length " + std::to_string(n) +
                       " cannot hold " + r.str());
  std::vector<int> a(n, 0);
  for (int i = 0; i < n; ++i) a[i] = r.part(i) - r.part(i + 1);
  return a;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

long long centralizer_order(const Partition& mu) {
  long long z = 1;
  int run = 0, prev = 0;
  for (int p : mu.parts()) {
    z *= p;
    if (p == prev) {
      ++run;
      z *= run;
    } else {
      prev = p;
      run = 1;
    }
  }
  return z;
}

nlohmann::json partition_to_json(const Partition& r) { return r.parts(); }

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error("partition JSON must be an array");
  return Partition(j.get<std::vector<int>>());
}

}  // namespace panhandle
