#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "panhandle/laurent.hpp"

namespace panhandle {

/// Weakly decreasing positive parts; the empty partition is written Phi.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}
  explicit Partition(std::vector<int> p);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const;                      // number of cells
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {                // 0-based, 0 beyond the last row
    return i < length() ? parts_[i] : 0;
  }

  Partition transpose() const;
  bool contains(const Partition& inner) const;

  std::string str() const;

  friend auto operator<=>(const Partition& a, const Partition& b) = default;
  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> parts_;
};

/// Hook length of every cell, as a multiset.
std::multiset<int> hooks(const Partition& r);

/// Sum of j - i over cells (1-based row i, column j).
int content_sum(const Partition& r);

/// D_R = prod over cells of {v q^(j-i)} / {q^h(i,j)}, kept in factored form.
BracketForm quantum_dimension(const Partition& r);

/// Multiplicity of s_lambda in s_mu * s_nu (Littlewood-Richardson number).
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

/// Symmetric-group character chi^lambda(mu) by border-strip removal.
long long mn_character(const Partition& lambda, const Partition& mu);

/// R_i = a_i + a_(i+1) + ... + a_(len) from a highest-weight vector, and back.
Partition weight_to_partition(const std::vector<int>& a);
std::vector<int> partition_to_weight(const Partition& r, int n);

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Order of the centralizer of a permutation of cycle type mu.
long long centralizer_order(const Partition& mu);

nlohmann::json partition_to_json(const Partition& r);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace panhandle
