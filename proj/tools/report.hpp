#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "favourlab/rational.hpp"
#include "favourlab/world.hpp"

namespace favourlab::cli {

using Json = nlohmann::ordered_json;

/// Exact value plus a 15-digit decimal for reading.
inline Json exact(const Rational& r) { return Json{{"exact", r.to_string()}, {"decimal", r.to_decimal()}}; }

inline Json exact(const std::optional<Rational>& r) { return r ? exact(*r) : Json("undefined"); }

inline Json verdict(const FavourVerdict& v) {
  return Json{{"verdict", to_string(v.verdict)}, {"conditional", exact(v.conditional)}, {"prior", exact(v.prior)}};
}

/// Indented "key: value" text; exact values print as "3/7 (0.428571428571429)".
std::string render_text(const Json& report);

}  // namespace favourlab::cli
