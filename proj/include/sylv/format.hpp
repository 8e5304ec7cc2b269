#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sylv/bipoly.hpp"
#include "sylv/verify.hpp"

namespace sylv {

using ordered_json = nlohmann::ordered_json;

/// Descending-power rendering, rationals as num/den: "2*x^2 - 10*x + 14".
std::string to_text(const UniPoly& p, std::string_view var = "x");

/// Ascending in T with parenthesized x-coefficients:
/// "(x - 2) + (-x + 3)*T".
std::string to_text(const BiPoly& p);

/// {"var":"x","coeffs":["14","-10","2"]}, ascending powers.
ordered_json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

/// {"vars":["x","T"],"t_coeffs":[<UniPoly>, ...]}, ascending T powers.
ordered_json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

/// {"m":..,"n":..,"seed":..,"checks":[{"name":..,"case":..,"pass":..}],"pass":..}
ordered_json to_json(const VerificationReport& report);

/// Comma-separated rational literals: "1,2,-3/4".
std::vector<Rat> parse_rat_list(std::string_view text);

} // namespace sylv
