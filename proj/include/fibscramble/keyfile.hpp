#pragma once

#include "fibscramble/maps.hpp"
#include "fibscramble/scramble.hpp"

#include <filesystem>
#include <string>

#include <json.hpp>

namespace fibscramble {

inline constexpr int kKeyFileVersion = 1;

/// Key file (JSON):
///
///   {"version": 1, "family": <tag>, "params": {...}, "n": <N>, "iterations": <t>}
///
///   family         params
///   arnold         {}
///   fibonacci-q    {}
///   gat            {"k": int >= 0, "variant": 0..7}
///   gft            {"i": int >= 1}
///   flt            {"series": "fib11" | "fib32" | "fib31", "i": int >= 1}
///   triangular     {"k": int >= 0, "variant": 0..3}
///   raw            {"entries": [a, b, c, d]}
///
/// Unknown fields are rejected at both levels; "params" may be omitted for
/// families without parameters.
nlohmann::json key_to_json(const ScrambleKey& key);
ScrambleKey key_from_json(const nlohmann::json& j);

/// Family tag and params object for a map. Raw-family maps carry their entries.
nlohmann::json map_params(const TransformMap& map);
std::string family_tag(const TransformMap& map);

/// Builds a map from a family tag and params. Besides the canonical tags the
/// shorthands f11lt, f32lt, f31lt (flt with the series fixed) are accepted.
/// Throws KeyFormatError.
TransformMap map_from_tag(const std::string& tag, const nlohmann::json& params);

ScrambleKey load_key(const std::filesystem::path& path);
void save_key(const ScrambleKey& key, const std::filesystem::path& path);

}  // namespace fibscramble
