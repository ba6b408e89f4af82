#pragma once

#include "fibscramble/image.hpp"
#include "fibscramble/maps.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace fibscramble {

/// Everything needed to scramble and unscramble: map, modulus and the
/// iteration count t. t may exceed the period.
struct ScrambleKey {
    TransformMap map;
    std::int64_t modulus = 0;
    std::uint64_t iterations = 0;

    bool operator==(const ScrambleKey&) const = default;
};

struct PeriodReport {
    std::string label;
    std::int64_t modulus = 0;
    std::uint64_t period = 0;
    bool iteration_cap_hit = false;
};

/// Default iteration cap for period(): 6 N^2.
std::uint64_t default_period_cap(std::int64_t modulus);

/// (x', y') = (a x + b y, c x + d y) mod N.
std::pair<std::int64_t, std::int64_t> apply_point(const ValidatedMap& vm, std::int64_t x, std::int64_t y);

/// Smallest p >= 1 with M^p == I (mod N), by repeated multiplication. When the
/// cap is exhausted the report has iteration_cap_hit set and period 0.
PeriodReport period(const ValidatedMap& vm, std::uint64_t cap);
PeriodReport period(const ValidatedMap& vm);

/// Like period() but throws PeriodCapExceeded instead of returning a capped report.
std::uint64_t require_period(const ValidatedMap& vm);

/// Moves every pixel (x, y) to M^t (x, y). Throws DimensionMismatch or
/// InvalidScrambler.
ImageGrid scramble(const ImageGrid& img, const ScrambleKey& key);

/// One permutation pass with an already-reduced matrix.
ImageGrid permute(const ImageGrid& img, const Matrix2& reduced, std::int64_t modulus);

enum class Route { Forward, Inverse };

/// Cost of both decryption routes for a key, in map iterations.
struct DecryptionPlan {
    std::uint64_t period = 0;
    std::uint64_t forward_iterations = 0;  ///< (p - t mod p) mod p applications of M
    std::uint64_t inverse_iterations = 0;  ///< t mod p applications of M^-1
    Route chosen = Route::Inverse;
};

DecryptionPlan plan_decryption(const ScrambleKey& key);

/// Inverse of scramble(), using the cheaper route (inverse on ties).
ImageGrid unscramble(const ImageGrid& img, const ScrambleKey& key);

/// Inverse of scramble() along a forced route.
ImageGrid unscramble_via(const ImageGrid& img, const ScrambleKey& key, Route route);

}  // namespace fibscramble
