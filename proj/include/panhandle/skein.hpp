#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "panhandle/laurent.hpp"

namespace panhandle {

inline constexpr int kDefaultCrossingBudget = 24;

/// Oriented crossing in PD form. The under strand runs a -> c, the over
/// strand runs b -> d; sign is +1 at a right-handed crossing.
struct Crossing {
  int a;
  int b;
  int c;
  int d;
  int sign;
};

/// A closed oriented link diagram: crossing records over integer arc ids,
/// plus a count of crossing-free circles. Arc ids must each occur exactly
/// once as an input (a or b) and once as an output (c or d); records are
/// assumed to come from an actual plane diagram.
struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // signed Artin generator indices, 0 < |i| < strands
};

void validate(const PlanarDiagram& d);
int component_count(const PlanarDiagram& d);

/// Pairwise linking numbers, diagonal = per-component writhe. Components are
/// indexed in traversal order (by smallest arc id).
std::vector<std::vector<long long>> linking_matrix(const PlanarDiagram& d);

/// Closure of a braid, all strands oriented upward. A strand that meets no
/// crossing closes into a free loop.
PlanarDiagram from_braid(const BraidWord& b);

/// Doubled-and-reversed satellite of a braid closure: each strand is
/// replaced by an antiparallel pair (odd positions keep the original
/// direction), each letter s_i by s_{2i} s_{2i+1} s_{2i-1} s_{2i}, and per
/// base component twists[i] full antiparallel twists are inserted on that
/// component's pair just before closure. Components are indexed by the
/// smallest braid position they visit. The two cable components of base
/// component i end up with linking number (blackboard writhe) + twists[i].
PlanarDiagram reverse_cable_braid(const BraidWord& b, const std::vector<int>& twists);

PlanarDiagram split_union(const PlanarDiagram& d1, const PlanarDiagram& d2);
PlanarDiagram mirror_diagram(const PlanarDiagram& d);

/// (s_1 ... s_{m-1})^n on m strands; n < 0 uses the inverse block.
BraidWord torus_braid(int m, int n);

/// Accepts "s1 s2 -s1" or plain signed integers "1 2 -1"; separators are
/// whitespace or commas. strands = 0 infers max|i| + 1.
BraidWord parse_braid(const std::string& text, int strands = 0);

/// Map from starting position to ending position (0-based) of each strand.
std::vector<int> braid_permutation(const BraidWord& b);
int braid_component_count(const BraidWord& b);

nlohmann::json pd_to_json(const PlanarDiagram& d);
PlanarDiagram pd_from_json(const nlohmann::json& j);

/// delta^(components-1) with delta = (1/v - v)/z.
ZVPoly unlink_homfly(int components);

/// Skein-relation evaluator with memoization shared across calls:
/// 1/v P(L+) - v P(L-) = z P(L0), P(unknot) = 1.
class SkeinOracle {
 public:
  explicit SkeinOracle(int max_crossings = kDefaultCrossingBudget);

  /// Exact polynomial of the link presented by d.
  ZVPoly homfly(const PlanarDiagram& d);

 private:
  ZVPoly eval(PlanarDiagram d);
  ZVPoly eval_connected(const PlanarDiagram& d);

  int budget_;
  std::unordered_map<std::string, ZVPoly> memo_;
};

/// One-shot convenience wrapper around SkeinOracle.
ZVPoly homfly(const PlanarDiagram& d, int max_crossings = kDefaultCrossingBudget);

}  // namespace panhandle
