#pragma once

// JSON and CSV forms of polynomial values.
//
// Polynomial JSON:  {"vars":["q","v"],"pole_order":r,"terms":[{"e1":..,"e2":..,"c":"<decimal>"},...]}
// Table JSON:       {"vars":["z","v"], ...} with e1 the true z-exponent.
// Terms are sorted by (e2, e1), the canonical order.
//
// Table CSV: header cell "z\v" then the v-exponents in steps of 2; one row
// per z-exponent in steps of 2 over the support range; zero cells are empty.

#include <string>

#include "json.hpp"
#include "panhandle/laurent.hpp"

namespace panhandle {

nlohmann::json poly_to_json(const LaurentPoly2& p, int pole_order = 0);
LaurentPoly2 poly_from_json(const nlohmann::json& j, int* pole_order = nullptr);

nlohmann::json zv_table_to_json(const ZVTable& t);
ZVTable zv_table_from_json(const nlohmann::json& j);

std::string zv_table_to_csv(const ZVTable& t);
std::string zv_table_to_latex(const ZVTable& t);

}  // namespace panhandle
