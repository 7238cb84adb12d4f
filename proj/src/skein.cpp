#include "panhandle/skein.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "panhandle/errors.hpp"

namespace panhandle {

namespace {

ZVPoly delta() {
  ZVPoly d;
  d.add_term(-1, -1, 1);
  d.add_term(-1, 1, -1);
  return d;
}

// Arc identifications accumulated while crossings are removed. Joining an
// arc to itself (directly or through earlier joins) closes a free loop.
class ArcJoins {
 public:
  int loops = 0;

  void join(int x, int y) {
    int fx = find(x), fy = find(y);
    if (fx == fy) {
      ++loops;
      return;
    }
    parent_[fy] = fx;
  }

  void apply(PlanarDiagram& d) {
    for (Crossing& x : d.crossings) {
      x.a = find(x.a);
      x.b = find(x.b);
      x.c = find(x.c);
      x.d = find(x.d);
    }
  }

 private:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) return x;
    int root = find(it->second);
    parent_[x] = root;
    return root;
  }

  std::map<int, int> parent_;
};

// Where each arc enters a crossing (slot 0 = under-in a, 1 = over-in b) and
// where it leaves one (slot 0 = under-out c, 1 = over-out d).
struct Incidence {
  std::map<int, std::pair<int, int>> into;
  std::map<int, std::pair<int, int>> outof;
};

Incidence incidence(const PlanarDiagram& d) {
  Incidence inc;
  for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
    const Crossing& x = d.crossings[i];
    if (x.sign != 1 && x.sign != -1) throw MalformedDiagram("crossing sign must be +1 or -1");
    if (!inc.into.emplace(x.a, std::make_pair(i, 0)).second)
      throw MalformedDiagram("arc " + std::to_string(x.a) + " enters two crossings");
    if (!inc.into.emplace(x.b, std::make_pair(i, 1)).second)
      throw MalformedDiagram("arc " + std::to_string(x.b) + " enters two crossings");
    if (!inc.outof.emplace(x.c, std::make_pair(i, 0)).second)
      throw MalformedDiagram("arc " + std::to_string(x.c) + " leaves two crossings");
    if (!inc.outof.emplace(x.d, std::make_pair(i, 1)).second)
      throw MalformedDiagram("arc " + std::to_string(x.d) + " leaves two crossings");
  }
  if (inc.into.size() != inc.outof.size())
    throw MalformedDiagram("open strand: arc counts disagree");
  for (const auto& [arc, where] : inc.into) {
    (void)where;
    if (!inc.outof.count(arc))
      throw MalformedDiagram("arc " + std::to_string(arc) + " has no source");
  }
  return inc;
}

// Traversal of all components in canonical order: components sorted by their
// smallest arc id, each walked from that arc.
struct Walk {
  std::map<int, int> comp_of_arc;
  int components = 0;
  // first_seen[i]: traversal rank and entry slot of crossing i's first visit
  std::vector<std::pair<int, int>> first_seen;
  std::vector<int> arc_order;  // arcs in traversal order
};

Walk walk(const PlanarDiagram& d, const Incidence& inc) {
  Walk w;
  w.first_seen.assign(d.crossings.size(), {-1, -1});
  int rank = 0;
  for (const auto& [start, ignored] : inc.into) {
    (void)ignored;
    if (w.comp_of_arc.count(start)) continue;
    int comp = w.components++;
    int cur = start;
    do {
      w.comp_of_arc[cur] = comp;
      w.arc_order.push_back(cur);
      auto [ci, slot] = inc.into.at(cur);
      if (w.first_seen[ci].first < 0) w.first_seen[ci] = {rank, slot};
      ++rank;
      cur = slot == 0 ? d.crossings[ci].c : d.crossings[ci].d;
    } while (cur != start);
  }
  return w;
}

// Remove curls: a crossing one of whose outputs feeds straight back into it.
bool reduce_curl(PlanarDiagram& d) {
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing x = d.crossings[i];
    if (x.b != x.c && x.a != x.d) continue;
    ArcJoins js;
    if (x.b == x.c)
      js.join(x.a, x.d);
    else
      js.join(x.b, x.c);
    d.crossings.erase(d.crossings.begin() + i);
    js.apply(d);
    d.free_loops += js.loops;
    return true;
  }
  return false;
}

// Remove pokes: two opposite-sign crossings joined by both an over-over arc
// and an under-under arc (either direction of the under strand).
bool reduce_poke(PlanarDiagram& d) {
  const size_t n = d.crossings.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Crossing& x = d.crossings[i];
      const Crossing& y = d.crossings[j];
      if (x.d != y.b || x.sign != -y.sign) continue;
      ArcJoins js;
      if (x.c == y.a) {
        js.join(x.b, y.d);
        js.join(x.a, y.c);
      } else if (y.c == x.a) {
        js.join(x.b, y.d);
        js.join(y.a, x.c);
      } else {
        continue;
      }
      PlanarDiagram next;
      next.free_loops = d.free_loops + js.loops;
      for (size_t k = 0; k < n; ++k)
        if (k != i && k != j) next.crossings.push_back(d.crossings[k]);
      js.apply(next);
      d = std::move(next);
      return true;
    }
  }
  return false;
}

void simplify(PlanarDiagram& d) {
  for (;;) {
    if (reduce_curl(d)) continue;
    if (reduce_poke(d)) continue;
    return;
  }
}

// Connected pieces of the crossing graph (crossings linked by shared arcs).
// Pieces never interleave in the plane without shared crossings, so each is
// a split factor.
std::vector<PlanarDiagram> split_parts(const PlanarDiagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  std::vector<int> part(n, -1);
  std::map<int, std::vector<int>> by_arc;
  for (int i = 0; i < n; ++i) {
    const Crossing& x = d.crossings[i];
    for (int arc : {x.a, x.b, x.c, x.d}) by_arc[arc].push_back(i);
  }
  int nparts = 0;
  for (int seed = 0; seed < n; ++seed) {
    if (part[seed] >= 0) continue;
    std::vector<int> stack{seed};
    part[seed] = nparts;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      const Crossing& x = d.crossings[i];
      for (int arc : {x.a, x.b, x.c, x.d})
        for (int j : by_arc[arc])
          if (part[j] < 0) {
            part[j] = nparts;
            stack.push_back(j);
          }
    }
    ++nparts;
  }
  std::vector<PlanarDiagram> parts(nparts);
  for (int i = 0; i < n; ++i) parts[part[i]].crossings.push_back(d.crossings[i]);
  return parts;
}

std::string canonical_code(const PlanarDiagram& d, const Incidence& inc) {
  Walk w = walk(d, inc);
  std::map<int, int> arc_id;
  for (int arc : w.arc_order) arc_id.emplace(arc, static_cast<int>(arc_id.size()));
  std::vector<int> order(d.crossings.size());
  for (size_t i = 0; i < d.crossings.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return w.first_seen[i] < w.first_seen[j]; });
  std::ostringstream os;
  for (int i : order) {
    const Crossing& x = d.crossings[i];
    os << arc_id[x.a] << ',' << arc_id[x.b] << ',' << arc_id[x.c] << ','
       << arc_id[x.d] << ',' << x.sign << ';';
  }
  return os.str();
}

}  // namespace

void validate(const PlanarDiagram& d) {
  if (d.free_loops < 0) throw MalformedDiagram("negative free loop count");
  incidence(d);
}

int component_count(const PlanarDiagram& d) {
  return walk(d, incidence(d)).components + d.free_loops;
}

std::vector<std::vector<long long>> linking_matrix(const PlanarDiagram& d) {
  Incidence inc = incidence(d);
  Walk w = walk(d, inc);
  int n = w.components + d.free_loops;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (const Crossing& x : d.crossings) {
    int i = w.comp_of_arc.at(x.a);
    int j = w.comp_of_arc.at(x.b);
    m[i][j] += x.sign;
    if (i != j) m[j][i] += x.sign;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] % 2 != 0) throw MalformedDiagram("odd inter-component crossing sum");
      m[i][j] /= 2;
    }
  return m;
}

namespace {

// Bottom-to-top sweep of a braid word over strands with given directions
// (+1 up, -1 down). For an up strand the current arc enters the next
// crossing from below; for a down strand the roles of its incoming and
// outgoing arcs swap.
struct Sweep {
  int next_arc = 1;
  std::vector<int> arc, ori, init_arc, init_ori;
  std::vector<Crossing> crossings;

  Sweep(int strands, const std::vector<int>& ups)
      : arc(strands + 1), ori(strands + 1), init_arc(strands + 1), init_ori(strands + 1) {
    for (int p = 1; p <= strands; ++p) {
      arc[p] = next_arc++;
      init_arc[p] = arc[p];
      ori[p] = ups[p - 1];
      init_ori[p] = ori[p];
    }
  }

  void letter(int l) {
    int j = std::abs(l);
    int h = l > 0 ? 1 : -1;  // positive: the strand at position j goes over
    int aL = arc[j], oL = ori[j];
    int aR = arc[j + 1], oR = ori[j + 1];
    int nL = next_arc++;
    int nR = next_arc++;
    Crossing x;
    x.sign = h * oL * oR;
    int ov_a = h > 0 ? aL : aR, ov_o = h > 0 ? oL : oR, ov_n = h > 0 ? nL : nR;
    int un_a = h > 0 ? aR : aL, un_o = h > 0 ? oR : oL, un_n = h > 0 ? nR : nL;
    x.b = ov_o > 0 ? ov_a : ov_n;
    x.d = ov_o > 0 ? ov_n : ov_a;
    x.a = un_o > 0 ? un_a : un_n;
    x.c = un_o > 0 ? un_n : un_a;
    crossings.push_back(x);
    arc[j] = nR;
    ori[j] = oR;
    arc[j + 1] = nL;
    ori[j + 1] = oL;
  }

  PlanarDiagram close() {
    PlanarDiagram d;
    d.crossings = crossings;
    ArcJoins js;
    for (size_t p = 1; p < arc.size(); ++p) {
      if (ori[p] != init_ori[p])
        throw MalformedDiagram("strand directions do not match up at closure");
      js.join(init_arc[p], arc[p]);
    }
    js.apply(d);
    d.free_loops += js.loops;
    return d;
  }
};

void validate_braid(const BraidWord& b) {
  if (b.strands < 1) throw MalformedDiagram("braid needs at least one strand");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) >= b.strands)
      throw MalformedDiagram("braid letter " + std::to_string(l) + " out of range");
}

}  // namespace

PlanarDiagram from_braid(const BraidWord& b) {
  validate_braid(b);
  Sweep s(b.strands, std::vector<int>(b.strands, 1));
  for (int l : b.letters) s.letter(l);
  return s.close();
}

std::vector<int> braid_permutation(const BraidWord& b) {
  validate_braid(b);
  std::vector<int> at(b.strands);  // at[pos] = strand currently there
  for (int p = 0; p < b.strands; ++p) at[p] = p;
  for (int l : b.letters) {
    int j = std::abs(l) - 1;
    std::swap(at[j], at[j + 1]);
  }
  std::vector<int> perm(b.strands);
  for (int p = 0; p < b.strands; ++p) perm[at[p]] = p;
  return perm;
}

int braid_component_count(const BraidWord& b) {
  std::vector<int> perm = braid_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

PlanarDiagram reverse_cable_braid(const BraidWord& b, const std::vector<int>& twists) {
  validate_braid(b);
  std::vector<int> perm = braid_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> cycle_min;  // smallest position of each component, in order
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    cycle_min.push_back(static_cast<int>(i) + 1);
    for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  if (twists.size() != cycle_min.size())
    throw LengthMismatch("need one twist count per component: " +
                         std::to_string(cycle_min.size()) + " components, " +
                         std::to_string(twists.size()) + " twists");

  std::vector<int> word;
  for (int l : b.letters) {
    int i = std::abs(l);
    if (l > 0)
      word.insert(word.end(), {2 * i, 2 * i + 1, 2 * i - 1, 2 * i});
    else
      word.insert(word.end(), {-2 * i, -(2 * i - 1), -(2 * i + 1), -2 * i});
  }
  for (size_t c = 0; c < cycle_min.size(); ++c) {
    int t = twists[c];
    if (t == 0) continue;
    int g = 2 * cycle_min[c] - 1;
    int letter = t > 0 ? -g : g;
    for (int k = 0; k < 2 * std::abs(t); ++k) word.push_back(letter);
  }

  std::vector<int> ups(2 * b.strands);
  for (int p = 1; p <= 2 * b.strands; ++p) ups[p - 1] = (p % 2 == 1) ? 1 : -1;
  Sweep s(2 * b.strands, ups);
  for (int l : word) s.letter(l);
  return s.close();
}

PlanarDiagram split_union(const PlanarDiagram& d1, const PlanarDiagram& d2) {
  int shift = 0;
  for (const Crossing& x : d1.crossings)
    shift = std::max({shift, x.a, x.b, x.c, x.d});
  PlanarDiagram d = d1;
  for (Crossing x : d2.crossings) {
    x.a += shift;
    x.b += shift;
    x.c += shift;
    x.d += shift;
    d.crossings.push_back(x);
  }
  d.free_loops += d2.free_loops;
  return d;
}

PlanarDiagram mirror_diagram(const PlanarDiagram& d) {
  PlanarDiagram m = d;
  for (Crossing& x : m.crossings) {
    std::swap(x.a, x.b);
    std::swap(x.c, x.d);
    x.sign = -x.sign;
  }
  return m;
}

BraidWord torus_braid(int m, int n) {
  if (m < 1) throw MalformedDiagram("torus braid needs at least one strand");
  BraidWord b;
  b.strands = m;
  for (int rep = 0; rep < std::abs(n); ++rep) {
    if (n > 0)
      for (int i = 1; i < m; ++i) b.letters.push_back(i);
    else
      for (int i = m - 1; i >= 1; --i) b.letters.push_back(-i);
  }
  return b;
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream is(cleaned);
  std::string tok;
  std::vector<int> letters;
  int max_gen = 0;
  while (is >> tok) {
    int sign = 1;
    size_t pos = 0;
    if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) {
      if (tok[pos] == '-') sign = -1;
      ++pos;
    }
    if (pos < tok.size() && (tok[pos] == 's' || tok[pos] == 'S')) ++pos;
    if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) {
      if (tok[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= tok.size()) throw MalformedDiagram("bad braid token: " + tok);
    int val = 0;
    for (; pos < tok.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(tok[pos])))
        throw MalformedDiagram("bad braid token: " + tok);
      val = val * 10 + (tok[pos] - '0');
    }
    if (val == 0) throw MalformedDiagram("bad braid token: " + tok);
    letters.push_back(sign * val);
    max_gen = std::max(max_gen, val);
  }
  BraidWord b;
  b.strands = std::max(strands, max_gen + 1);
  b.letters = letters;
  validate_braid(b);
  return b;
}

nlohmann::json pd_to_json(const PlanarDiagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const Crossing& x : d.crossings)
    j["crossings"].push_back({x.a, x.b, x.c, x.d, x.sign});
  if (d.free_loops > 0) j["free_loops"] = d.free_loops;
  return j;
}

PlanarDiagram pd_from_json(const nlohmann::json& j) {
  PlanarDiagram d;
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
    throw MalformedDiagram("expected an object with a crossings array");
  for (const auto& row : j["crossings"]) {
    if (!row.is_array() || row.size() != 5)
      throw MalformedDiagram("each crossing needs [a, b, c, d, sign]");
    Crossing x;
    x.a = row[0].get<int>();
    x.b = row[1].get<int>();
    x.c = row[2].get<int>();
    x.d = row[3].get<int>();
    x.sign = row[4].get<int>();
    d.crossings.push_back(x);
  }
  d.free_loops = j.value("free_loops", 0);
  validate(d);
  return d;
}

ZVPoly unlink_homfly(int components) {
  if (components < 1) throw MalformedDiagram("unlink needs at least one component");
  return pow(delta(), components - 1);
}

SkeinOracle::SkeinOracle(int max_crossings) : budget_(max_crossings) {}

ZVPoly SkeinOracle::homfly(const PlanarDiagram& d) {
  validate(d);
  if (static_cast<int>(d.crossings.size()) > budget_)
    throw BudgetExceeded("diagram has " + std::to_string(d.crossings.size()) +
                         " crossings, budget is " + std::to_string(budget_));
  return eval(d);
}

ZVPoly SkeinOracle::eval(PlanarDiagram d) {
  simplify(d);
  if (d.crossings.empty()) {
    if (d.free_loops == 0) throw MalformedDiagram("empty diagram");
    return unlink_homfly(d.free_loops);
  }
  int loops = d.free_loops;
  d.free_loops = 0;
  std::vector<PlanarDiagram> parts = split_parts(d);
  if (parts.size() > 1 || loops > 0) {
    ZVPoly r = pow(delta(), loops + static_cast<int>(parts.size()) - 1);
    for (const PlanarDiagram& part : parts) r = r * eval_connected(part);
    return r;
  }
  return eval_connected(d);
}

ZVPoly SkeinOracle::eval_connected(const PlanarDiagram& d) {
  Incidence inc = incidence(d);
  std::string key = canonical_code(d, inc);
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;

  Walk w = walk(d, inc);
  int bad = -1, bad_rank = -1;
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    if (w.first_seen[i].second != 0) continue;  // first reached on the over strand
    if (bad < 0 || w.first_seen[i].first < bad_rank) {
      bad = static_cast<int>(i);
      bad_rank = w.first_seen[i].first;
    }
  }

  ZVPoly result;
  if (bad < 0) {
    // Descending: each component lies entirely above the later ones and is
    // unknotted, so this is an unlink.
    result = unlink_homfly(w.components);
  } else {
    const Crossing x = d.crossings[bad];
    PlanarDiagram switched = d;
    switched.crossings[bad] = {x.b, x.a, x.d, x.c, -x.sign};
    PlanarDiagram smoothed = d;
    smoothed.crossings.erase(smoothed.crossings.begin() + bad);
    ArcJoins js;
    js.join(x.a, x.d);
    js.join(x.b, x.c);
    js.apply(smoothed);
    smoothed.free_loops += js.loops;
    ZVPoly ps = eval(std::move(switched));
    ZVPoly pz = eval(std::move(smoothed));
    if (x.sign > 0) {
      // 1/v P(this) - v P(switched) = z P(smoothed)
      ps.mul_monomial(1, 0, 2);
      pz.mul_monomial(1, 1, 1);
      result = ps + pz;
    } else {
      // 1/v P(switched) - v P(this) = z P(smoothed)
      ps.mul_monomial(1, 0, -2);
      pz.mul_monomial(-1, 1, -1);
      result = ps + pz;
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

ZVPoly homfly(const PlanarDiagram& d, int max_crossings) {
  SkeinOracle oracle(max_crossings);
  return oracle.homfly(d);
}

}  // namespace panhandle
