#include "panhandle/io.hpp"

#include <sstream>
#include <vector>

namespace panhandle {

using nlohmann::json;

json poly_to_json(const LaurentPoly2& p, int pole_order) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"e1", e.q}, {"e2", e.v}, {"c", c.get_str()}});
  return json{{"vars", {"q", "v"}}, {"pole_order", pole_order}, {"terms", terms}};
}

LaurentPoly2 poly_from_json(const json& j, int* pole_order) {
  if (j.at("vars") != json({"q", "v"}))
    throw Error("expected a polynomial in vars [q, v]");
  if (pole_order) *pole_order = j.at("pole_order").get<int>();
  LaurentPoly2 p;
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("e1").get<int>(), t.at("e2").get<int>(),
               Int(t.at("c").get<std::string>()));
  return p;
}

json zv_table_to_json(const ZVTable& t) {
  // canonical order: (v_exp, z_exp)
  std::map<std::pair<int, int>, Int> by_v;
  for (const auto& [e, c] : t.entries) by_v[{e.second, e.first}] = c;
  json terms = json::array();
  for (const auto& [e, c] : by_v)
    terms.push_back({{"e1", e.second}, {"e2", e.first}, {"c", c.get_str()}});
  return json{{"vars", {"z", "v"}}, {"pole_order", t.pole_order}, {"terms", terms}};
}

ZVTable zv_table_from_json(const json& j) {
  if (j.at("vars") != json({"z", "v"}))
    throw Error("expected a table in vars [z, v]");
  ZVTable t;
  t.pole_order = j.at("pole_order").get<int>();
  for (const auto& e : j.at("terms"))
    t.entries[{e.at("e1").get<int>(), e.at("e2").get<int>()}] =
        Int(e.at("c").get<std::string>());
  return t;
}

namespace {
struct TableRange {
  int zmin, zmax, vmin, vmax;
};

TableRange support_range(const ZVTable& t) {
  TableRange r{0, 0, 0, 0};
  bool first = true;
  for (const auto& [e, c] : t.entries) {
    if (first) {
      r = {e.first, e.first, e.second, e.second};
      first = false;
    } else {
      r.zmin = std::min(r.zmin, e.first);
      r.zmax = std::max(r.zmax, e.first);
      r.vmin = std::min(r.vmin, e.second);
      r.vmax = std::max(r.vmax, e.second);
    }
  }
  return r;
}
}  // namespace

std::string zv_table_to_csv(const ZVTable& t) {
  std::ostringstream os;
  if (t.entries.empty()) {
    os << "z\\v\n";
    return os.str();
  }
  TableRange r = support_range(t);
  os << "z\\v";
  for (int v = r.vmin; v <= r.vmax; v += 2) os << "," << v;
  os << "\n";
  for (int z = r.zmin; z <= r.zmax; z += 2) {
    os << z;
    for (int v = r.vmin; v <= r.vmax; v += 2) {
      os << ",";
      auto it = t.entries.find({z, v});
      if (it != t.entries.end()) os << it->second.get_str();
    }
    os << "\n";
  }
  return os.str();
}

std::string zv_table_to_latex(const ZVTable& t) {
  std::ostringstream os;
  if (t.entries.empty()) return "\\begin{array}{c}\n0\n\\end{array}\n";
  TableRange r = support_range(t);
  os << "\\begin{array}{r|";
  for (int v = r.vmin; v <= r.vmax; v += 2) os << "r";
  os << "}\n";
  os << "z\\backslash v";
  for (int v = r.vmin; v <= r.vmax; v += 2) os << " & " << v;
  os << " \\\\\\hline\n";
  for (int z = r.zmin; z <= r.zmax; z += 2) {
    os << z;
    for (int v = r.vmin; v <= r.vmax; v += 2) {
      os << " & ";
      auto it = t.entries.find({z, v});
      if (it != t.entries.end()) os << it->second.get_str();
    }
    os << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

}  // namespace panhandle
