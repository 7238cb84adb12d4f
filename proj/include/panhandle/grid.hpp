#pragma once

#include <set>
#include <vector>

#include "json.hpp"
#include "panhandle/rosso_jones.hpp"
#include "panhandle/skein.hpp"

namespace panhandle {

/// Grid diagram: size columns and rows, one X and one O marking in each.
/// x[c-1] / o[c-1] hold the 1-based row of the marking in column c. Vertical
/// segments run from the X to the O of their column and cross over every
/// horizontal segment they meet; horizontal segments run from the O to the X
/// of their row.
struct GridDiagram {
  int size = 0;
  std::vector<int> x;
  std::vector<int> o;
};

/// Throws MalformedDiagram unless x and o are permutations of {1..size}
/// that disagree in every column.
void validate(const GridDiagram& d);

/// Staircase grid of size m+n presenting the (m,n) torus link; requires
/// 1 <= m <= n. mirrored = true gives the same staircase reflected, which
/// presents the mirror link.
GridDiagram standard_torus_grid(int m, int n, bool mirrored = false);

/// Reflection across a vertical axis; presents the mirror link.
GridDiagram mirror_grid(const GridDiagram& d);

/// Columns of each component, in traversal order starting from the
/// component's smallest column. Components are ordered by smallest column.
std::vector<std::vector<int>> grid_components(const GridDiagram& d);

struct TBResult {
  long long total = 0;
  std::vector<long long> per_component;
};

/// Thurston-Bennequin reading of the grid: total = -Z + w where Z counts
/// NW corners and w is the diagram writhe; per-component entries use each
/// component's own corners and self-crossings only.
TBResult tb(const GridDiagram& d);

/// Splits the X marking of the given 1-based column into an L of three
/// markings (one new row and column), inserting an NW/SE corner pair on
/// that component. Grows the grid by one and drops the component's TB by 1.
GridDiagram positive_stabilization(const GridDiagram& d, int column);

/// Oriented link diagram of the grid, vertical strands over horizontal.
/// Components appear in grid_components order.
PlanarDiagram grid_to_diagram(const GridDiagram& d);

/// Grid of a single component, rows and columns of the others deleted.
GridDiagram component_subgrid(const GridDiagram& d, const std::vector<int>& columns);

nlohmann::json grid_to_json(const GridDiagram& d);
GridDiagram grid_from_json(const nlohmann::json& j);

/// -mn+m+n for the (m,n) torus link, mn for its mirror.
long long lambda_torus(int m, int n, bool mirrored);

/// m+n.
int arc_index_torus(int m, int n);

/// Whether (t_1,...,t_l) occurs as the tuple of negated component-wise
/// maximal Thurston-Bennequin invariants of a Legendrian embedding;
/// equivalently, whether the banded link with these framings is strongly
/// quasipositive. Positive links: all t_i >= (1-m/l)(n/l) + m/l. Mirrored
/// non-pure (l < m): all t_i >= (m/l)(n/l). Mirrored pure (l = m, k = n/m):
/// all t_i >= k, or one t_i = u in [1,k) and the rest >= 2k-u.
bool tb_tuple_realizable(const TorusParams& tp, bool mirrored,
                         const std::vector<int>& t);

/// Minimal generators of the realizable set: every realizable tuple
/// dominates one of these componentwise, and no generator is redundant.
std::set<std::vector<int>> corner_framings(const TorusParams& tp, bool mirrored);

/// Braid index of the reverse 2-cable of a knot with arc index a and
/// negated maximal Thurston-Bennequin invariant lambda.
long long braid_index_cable(long long a, long long lambda, long long t);

/// Braid index of the strongly quasipositive banded link at framing t:
/// n + sum(t_i - delta) with delta = (1-m/l)(n/l) for positive links,
/// m+n + sum(t_i - mn/l^2) for mirrored ones. Throws NotRealizable when
/// the framing tuple is not.
long long braid_index_banded(const TorusParams& tp, bool mirrored,
                             const std::vector<int>& t);

/// Top v-degree 2n-1+2*sum(e_i) of the banded link at corrected framing e
/// (real framing delta + e_i). Throws NegativeCorrectedFraming unless all
/// e_i >= 0.
long long banded_max_degree(const TorusParams& tp, const std::vector<int>& e);

/// Strong quasipositivity of the clasped (Whitehead-style) banded link:
/// true exactly when every clasp is positive and the framing tuple is
/// realizable. clasps holds one sign per component; any entry <= 0 counts
/// as a negative clasp.
bool sqp_whitehead_predicate(const TorusParams& tp, bool mirrored,
                             const std::vector<int>& t,
                             const std::vector<int>& clasps);

/// Strong quasipositivity of the plain banded link; by the classification
/// this coincides with Bennequin sharpness.
bool banding_sqp_predicate(const TorusParams& tp, bool mirrored,
                           const std::vector<int>& t);

/// Alias of banding_sqp_predicate: for these bandings, Bennequin sharpness
/// and strong quasipositivity are equivalent.
bool bennequin_sharp_predicate(const TorusParams& tp, bool mirrored,
                               const std::vector<int>& t);

}  // namespace panhandle
