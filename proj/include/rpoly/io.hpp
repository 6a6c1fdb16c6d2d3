#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "rpoly/periodic.hpp"

namespace rpoly {

/// Comma-separated 1-based simple indices ("" is the empty word). Returns 0-based indices.
std::vector<int> parse_word(std::string_view text, int rank, std::size_t offset = 0);
std::string format_word(const std::vector<int>& word);

/// `cl=<word>;wt=<c1,...,cl>` (either field may be omitted), or a bare word for an element of W.
AffineElem parse_element(std::string_view text, const AffineWeylGroup& aff);
std::string format_element(const AffineWeylGroup& aff, const AffineElem& w);
std::string format_weyl(const WeylGroup& group, WeylElem w);

/// Reduced word of w_0 (1-based, comma separated) or "default".
ReflectionOrder parse_order(std::string_view text, const WeylGroup& group);

/// Sorted [[exponent, coefficient], ...]; coefficients outside int64 are strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PeriodicEngine& engine, const SIPath& path);
SIPath sipath_from_json(const PeriodicEngine& engine, const nlohmann::json& j);
nlohmann::json to_json(const PeriodicEngine& engine, const DBPath& path);
DBPath dbpath_from_json(const PeriodicEngine& engine, const nlohmann::json& j);

std::string dbg_to_dot(const WeylGroup& group, const std::vector<DBGEdge>& edges);
nlohmann::json dbg_to_json(const WeylGroup& group, const std::vector<DBGEdge>& edges);

/// "(m, a1+a2)" style human rendering of a path.
std::string describe(const PeriodicEngine& engine, const SIPath& path);
std::string describe(const PeriodicEngine& engine, const DBPath& path);

}  // namespace rpoly
