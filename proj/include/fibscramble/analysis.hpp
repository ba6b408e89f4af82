#pragma once

#include "fibscramble/image.hpp"
#include "fibscramble/maps.hpp"
#include "fibscramble/scramble.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fibscramble {

/// Grid states visited while iterating a map from a reference grid, for
/// 1 <= t < period. The return to the reference at t = period is excluded.
struct OrbitSignature {
    std::string label;
    std::int64_t modulus = 0;
    std::uint64_t period = 0;
    std::set<std::vector<std::uint8_t>> states;
};

OrbitSignature orbit_signature(const ValidatedMap& vm, const ImageGrid& reference);

/// The states in visiting order (t = 1 .. period - 1).
std::vector<ImageGrid> orbit(const ValidatedMap& vm, const ImageGrid& reference);

/// True iff both maps visit the same set of states from the reference.
bool pattern_equivalent(const ValidatedMap& a, const ValidatedMap& b, const ImageGrid& reference);

struct EquivalenceClass {
    std::vector<std::string> labels;
    std::uint64_t period = 0;
    /// More than one map shares the orbit: a scramble under one of them can be
    /// undone by iterating another.
    bool flagged = false;
};

/// Groups maps by orbit signature. Classes appear in order of their first
/// member in `maps`.
std::vector<EquivalenceClass> equivalence_classes(const std::vector<ValidatedMap>& maps, const ImageGrid& reference);

/// Every named family map with parameters in [lo, hi]: GFT, F(11)LT, F(32)LT,
/// F(31)LT by index, generalized Arnold (all 8 variants) and triangular (all 4
/// variants) by k, plus Arnold and Fibonacci-Q. Maps invalid mod N are skipped.
std::vector<ValidatedMap> family_catalog(std::int64_t lo, std::int64_t hi, std::int64_t modulus);

inline constexpr std::uint64_t kEnumerationWorkBound = 1'000'000'000ULL;

struct EnumerationReport {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::uint64_t count = 0;  ///< |det| == 1
    std::uint64_t det_plus_one = 0;
    std::uint64_t det_minus_one = 0;
    std::vector<Matrix2> matrices;  ///< filled only when collecting, in (a, b, c, d) lexicographic order
};

/// Exhaustive count of [[a, b], [c, d]] with entries in [lo, hi] and |ad - bc| = 1.
/// Throws RangeTooLarge when (hi - lo + 1)^4 exceeds kEnumerationWorkBound.
EnumerationReport enumerate_unimodular(std::int64_t lo, std::int64_t hi, bool collect);

/// Named row families for period surveys.
enum class SurveyFamily { GFT, GAT, F11LT, F32LT, F31LT, GATEq2, Triangular };

std::optional<SurveyFamily> parse_survey_family(const std::string& tag);
std::string survey_family_tag(SurveyFamily f);

/// Map for one survey cell: index/k = param. GAT uses variant 1, GATEq2
/// variant 0, Triangular variant 0.
TransformMap survey_map(SurveyFamily f, std::int64_t param);

struct SurveyCell {
    std::int64_t param = 0;
    std::optional<std::uint64_t> period;
    std::string error;  ///< set when period is empty
};

struct SurveyRow {
    SurveyFamily family;
    std::vector<SurveyCell> cells;
};

struct Survey {
    std::int64_t modulus = 0;
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::vector<SurveyRow> rows;

    std::size_t error_count() const;
};

/// One row per family, one cell per parameter in [lo, hi]. Cell errors
/// (invalid map, cap hit) are recorded in the cell. lo > hi gives empty rows.
Survey period_survey(const std::vector<SurveyFamily>& families, std::int64_t lo, std::int64_t hi, std::int64_t modulus,
                     std::optional<std::uint64_t> cap = std::nullopt);

}  // namespace fibscramble
