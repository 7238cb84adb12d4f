#include "panhandle/grid.hpp"

#include <algorithm>
#include <numeric>

#include "panhandle/errors.hpp"

namespace panhandle {

namespace {

int sgn(int a) { return (a > 0) - (a < 0); }

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i] - 1] = i + 1;
  return inv;
}

// Component index of every column, numbered by smallest column.
std::vector<int> column_components(const GridDiagram& d,
                                   const std::vector<std::vector<int>>& comps) {
  std::vector<int> of(d.size);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    for (int c : comps[i]) of[c - 1] = i;
  return of;
}

struct GridCrossing {
  int col = 0;
  int row = 0;
  int sign = 0;
};

// All vertical-over-horizontal crossings: column c meets row r when r lies
// strictly inside the column's span and c strictly inside the row's span.
std::vector<GridCrossing> grid_crossings(const GridDiagram& d) {
  const std::vector<int> xcol = inverse_perm(d.x);
  const std::vector<int> ocol = inverse_perm(d.o);
  std::vector<GridCrossing> out;
  for (int c = 1; c <= d.size; ++c) {
    const int clo = std::min(d.x[c - 1], d.o[c - 1]);
    const int chi = std::max(d.x[c - 1], d.o[c - 1]);
    const int dy = sgn(d.o[c - 1] - d.x[c - 1]);
    for (int r = clo + 1; r < chi; ++r) {
      const int rlo = std::min(xcol[r - 1], ocol[r - 1]);
      const int rhi = std::max(xcol[r - 1], ocol[r - 1]);
      if (rlo < c && c < rhi) {
        const int dx = sgn(xcol[r - 1] - ocol[r - 1]);
        out.push_back({c, r, -dy * dx});
      }
    }
  }
  return out;
}

}  // namespace

void validate(const GridDiagram& d) {
  if (d.size < 2) throw MalformedDiagram("grid needs at least two columns");
  if (static_cast<int>(d.x.size()) != d.size ||
      static_cast<int>(d.o.size()) != d.size)
    throw MalformedDiagram("marking arrays must match the grid size");
  std::vector<bool> seen_x(d.size, false), seen_o(d.size, false);
  for (int c = 0; c < d.size; ++c) {
    const int xr = d.x[c], orr = d.o[c];
    if (xr < 1 || xr > d.size || seen_x[xr - 1])
      throw MalformedDiagram("X markings must form a permutation");
    if (orr < 1 || orr > d.size || seen_o[orr - 1])
      throw MalformedDiagram("O markings must form a permutation");
    seen_x[xr - 1] = seen_o[orr - 1] = true;
    if (xr == orr)
      throw MalformedDiagram("X and O collide in column " + std::to_string(c + 1));
  }
}

GridDiagram standard_torus_grid(int m, int n, bool mirrored) {
  if (m < 1 || n < m) throw MalformedDiagram("need 1 <= m <= n");
  const int size = m + n;
  GridDiagram g;
  g.size = size;
  g.x.resize(size);
  g.o.resize(size);
  for (int c = 0; c < size; ++c) {
    g.x[c] = (c + m) % size + 1;
    g.o[c] = c + 1;
  }
  return mirrored ? g : mirror_grid(g);
}

GridDiagram mirror_grid(const GridDiagram& d) {
  GridDiagram g;
  g.size = d.size;
  g.x.assign(d.x.rbegin(), d.x.rend());
  g.o.assign(d.o.rbegin(), d.o.rend());
  return g;
}

std::vector<std::vector<int>> grid_components(const GridDiagram& d) {
  const std::vector<int> xcol = inverse_perm(d.x);
  std::vector<bool> used(d.size, false);
  std::vector<std::vector<int>> comps;
  for (int c = 1; c <= d.size; ++c) {
    if (used[c - 1]) continue;
    std::vector<int> cycle;
    for (int j = c; !used[j - 1]; j = xcol[d.o[j - 1] - 1]) {
      used[j - 1] = true;
      cycle.push_back(j);
    }
    comps.push_back(std::move(cycle));
  }
  return comps;
}

TBResult tb(const GridDiagram& d) {
  validate(d);
  const auto comps = grid_components(d);
  const auto of = column_components(d, comps);
  const std::vector<int> xcol = inverse_perm(d.x);
  const std::vector<int> ocol = inverse_perm(d.o);

  TBResult res;
  res.per_component.assign(comps.size(), 0);

  for (int c = 1; c <= d.size; ++c) {
    // NW corner: top of a vertical whose horizontal leaves eastward.
    const int top = std::max(d.x[c - 1], d.o[c - 1]);
    const int top_other = (xcol[top - 1] == c) ? ocol[top - 1] : xcol[top - 1];
    if (top_other > c) {
      res.total -= 1;
      res.per_component[of[c - 1]] -= 1;
    }
  }

  for (const auto& cr : grid_crossings(d)) {
    res.total += cr.sign;
    const int col_comp = of[cr.col - 1];
    const int row_comp = of[ocol[cr.row - 1] - 1];
    if (col_comp == row_comp) res.per_component[col_comp] += cr.sign;
  }
  return res;
}

GridDiagram positive_stabilization(const GridDiagram& d, int column) {
  validate(d);
  if (column < 1 || column > d.size)
    throw MalformedDiagram("stabilization column out of range");
  const int r = d.x[column - 1];
  const bool up = d.o[column - 1] > r;
  // New column slot (1-based) and the first shifted row.
  const int col_slot = up ? column : column + 1;
  const int row_shift = up ? r + 1 : r;

  GridDiagram g;
  g.size = d.size + 1;
  g.x.assign(g.size, 0);
  g.o.assign(g.size, 0);
  auto map_row = [&](int q) { return q >= row_shift ? q + 1 : q; };
  for (int c = 1; c <= d.size; ++c) {
    const int c2 = c >= col_slot ? c + 1 : c;
    g.x[c2 - 1] = map_row(d.x[c - 1]);
    g.o[c2 - 1] = map_row(d.o[c - 1]);
  }
  const int moved = column >= col_slot ? column + 1 : column;
  if (up) {
    g.x[moved - 1] = r + 1;
    g.x[col_slot - 1] = r;
    g.o[col_slot - 1] = r + 1;
  } else {
    g.x[moved - 1] = r;
    g.x[col_slot - 1] = r + 1;
    g.o[col_slot - 1] = r;
  }
  return g;
}

PlanarDiagram grid_to_diagram(const GridDiagram& d) {
  validate(d);
  const auto comps = grid_components(d);
  const std::vector<int> xcol = inverse_perm(d.x);
  const std::vector<int> ocol = inverse_perm(d.o);

  const auto crossings = grid_crossings(d);
  std::vector<int> at(static_cast<size_t>(d.size) * d.size, -1);
  auto slot = [&](int c, int r) -> int& {
    return at[static_cast<size_t>(c - 1) * d.size + (r - 1)];
  };
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
    slot(crossings[i].col, crossings[i].row) = i;

  PlanarDiagram pd;
  pd.crossings.resize(crossings.size());
  for (size_t i = 0; i < crossings.size(); ++i)
    pd.crossings[i].sign = crossings[i].sign;

  int next_arc = 1;
  for (const auto& cycle : comps) {
    // Passages: (crossing id, over?) in walk order along the component.
    std::vector<std::pair<int, bool>> events;
    for (int c : cycle) {
      const int xr = d.x[c - 1], orr = d.o[c - 1];
      const int step = sgn(orr - xr);
      for (int r = xr + step; r != orr; r += step)
        if (slot(c, r) >= 0) events.emplace_back(slot(c, r), true);
      const int target = xcol[orr - 1];
      const int hstep = sgn(target - c);
      for (int cc = c + hstep; cc != target; cc += hstep)
        if (slot(cc, orr) >= 0) events.emplace_back(slot(cc, orr), false);
    }
    if (events.empty()) {
      pd.free_loops += 1;
      continue;
    }
    const int k = static_cast<int>(events.size());
    for (int j = 0; j < k; ++j) {
      const int in = next_arc + j;
      const int out = next_arc + (j + 1) % k;
      Crossing& cr = pd.crossings[events[j].first];
      if (events[j].second) {
        cr.b = in;
        cr.d = out;
      } else {
        cr.a = in;
        cr.c = out;
      }
    }
    next_arc += k;
  }
  return pd;
}

GridDiagram component_subgrid(const GridDiagram& d, const std::vector<int>& columns) {
  std::vector<int> cols = columns;
  std::sort(cols.begin(), cols.end());
  std::vector<int> rows;
  for (int c : cols) rows.push_back(d.o[c - 1]);
  std::sort(rows.begin(), rows.end());
  auto rank = [](const std::vector<int>& v, int val) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), val) - v.begin()) + 1;
  };
  GridDiagram g;
  g.size = static_cast<int>(cols.size());
  for (int c : cols) {
    g.x.push_back(rank(rows, d.x[c - 1]));
    g.o.push_back(rank(rows, d.o[c - 1]));
  }
  return g;
}

nlohmann::json grid_to_json(const GridDiagram& d) {
  return nlohmann::json{{"size", d.size}, {"X", d.x}, {"O", d.o}};
}

GridDiagram grid_from_json(const nlohmann::json& j) {
  GridDiagram d;
  d.size = j.at("size").get<int>();
  d.x = j.at("X").get<std::vector<int>>();
  d.o = j.at("O").get<std::vector<int>>();
  validate(d);
  return d;
}

long long lambda_torus(int m, int n, bool mirrored) {
  const long long mn = static_cast<long long>(m) * n;
  return mirrored ? mn : -mn + m + n;
}

int arc_index_torus(int m, int n) { return m + n; }

bool tb_tuple_realizable(const TorusParams& tp, bool mirrored,
                         const std::vector<int>& t) {
  const int l = tp.l;
  if (static_cast<int>(t.size()) != l)
    throw LengthMismatch("one framing per component required");
  if (!mirrored) {
    const int alpha = (1 - tp.m / l) * (tp.n / l) + tp.m / l;
    return std::all_of(t.begin(), t.end(), [&](int ti) { return ti >= alpha; });
  }
  if (tp.m / l > 1) {
    const int gamma = (tp.m / l) * (tp.n / l);
    return std::all_of(t.begin(), t.end(), [&](int ti) { return ti >= gamma; });
  }
  const int k = tp.n / tp.m;
  if (std::all_of(t.begin(), t.end(), [&](int ti) { return ti >= k; })) return true;
  if (k <= 1) return false;
  int u = 0, below = 0;
  for (int ti : t)
    if (ti < k) {
      ++below;
      u = ti;
    }
  if (below != 1 || u < 1) return false;
  return std::all_of(t.begin(), t.end(),
                     [&](int ti) { return ti < k || ti >= 2 * k - u; });
}

std::set<std::vector<int>> corner_framings(const TorusParams& tp, bool mirrored) {
  const int l = tp.l;
  std::set<std::vector<int>> out;
  if (!mirrored) {
    const int alpha = (1 - tp.m / l) * (tp.n / l) + tp.m / l;
    out.insert(std::vector<int>(l, alpha));
    return out;
  }
  if (tp.m / l > 1) {
    out.insert(std::vector<int>(l, (tp.m / l) * (tp.n / l)));
    return out;
  }
  const int k = tp.n / tp.m;
  out.insert(std::vector<int>(l, k));
  for (int u = 1; u < k; ++u)
    for (int pos = 0; pos < l; ++pos) {
      std::vector<int> v(l, 2 * k - u);
      v[pos] = u;
      out.insert(std::move(v));
    }
  return out;
}

long long braid_index_cable(long long a, long long lambda, long long t) {
  if (t <= lambda - a) return lambda - t;
  if (t >= lambda) return t - lambda + a;
  return a;
}

long long braid_index_banded(const TorusParams& tp, bool mirrored,
                             const std::vector<int>& t) {
  if (!tb_tuple_realizable(tp, mirrored, t))
    throw NotRealizable("framing tuple admits no such banding");
  const int l = tp.l;
  const long long base = mirrored ? tp.m + tp.n : tp.n;
  const long long shift =
      mirrored ? (tp.m / l) * (tp.n / l) : (1 - tp.m / l) * (tp.n / l);
  long long b = base;
  for (int ti : t) b += ti - shift;
  return b;
}

long long banded_max_degree(const TorusParams& tp, const std::vector<int>& e) {
  if (static_cast<int>(e.size()) != tp.l)
    throw LengthMismatch("one corrected framing per component required");
  long long total = 0;
  for (int ei : e) {
    if (ei < 0)
      throw NegativeCorrectedFraming("corrected framings must be nonnegative");
    total += ei;
  }
  return 2LL * tp.n - 1 + 2 * total;
}

bool sqp_whitehead_predicate(const TorusParams& tp, bool mirrored,
                             const std::vector<int>& t,
                             const std::vector<int>& clasps) {
  if (clasps.size() != t.size())
    throw LengthMismatch("one clasp sign per component required");
  if (!std::all_of(clasps.begin(), clasps.end(), [](int s) { return s > 0; }))
    return false;
  return tb_tuple_realizable(tp, mirrored, t);
}

bool banding_sqp_predicate(const TorusParams& tp, bool mirrored,
                           const std::vector<int>& t) {
  return tb_tuple_realizable(tp, mirrored, t);
}

bool bennequin_sharp_predicate(const TorusParams& tp, bool mirrored,
                               const std::vector<int>& t) {
  return banding_sqp_predicate(tp, mirrored, t);
}

}  // namespace panhandle
