#pragma once

#include "fibscramble/analysis.hpp"
#include "fibscramble/attacks.hpp"
#include "fibscramble/scramble.hpp"

#include <string>

#include <json.hpp>

namespace fibscramble {

// Text tables are line oriented, columns separated by whitespace. JSON field
// names are stable; see README.md.

nlohmann::json to_json(const PeriodReport& r);
std::string to_table(const PeriodReport& r);

nlohmann::json to_json(const Survey& s);
/// Header row "family" + one column per parameter; failed cells print ERROR.
std::string to_table(const Survey& s);

nlohmann::json to_json(const EnumerationReport& r);
std::string to_table(const EnumerationReport& r);

nlohmann::json to_json(const std::vector<EquivalenceClass>& classes);
std::string to_table(const std::vector<EquivalenceClass>& classes);

nlohmann::json to_json(const RecoveryReport& r);
std::string to_table(const RecoveryReport& r);

}  // namespace fibscramble
