#pragma once

#include "fibscramble/image.hpp"
#include "fibscramble/scramble.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <variant>

namespace fibscramble {

/// Row/column rectangle: rows [row, row + height), columns [col, col + width).
struct Rect {
    std::int64_t row = 0, col = 0, height = 0, width = 0;
    bool operator==(const Rect&) const = default;
};

namespace attack {

/// ceil(density * N^2) distinct pixels set to 0 or 255 with equal probability.
struct SaltPepper {
    double density = 0.05;
    bool operator==(const SaltPepper&) const = default;
};
/// Additive N(mean, variance) per channel, on the 0..255 scale; rounded and clamped.
struct Gaussian {
    double mean = 0.0;
    double variance = 100.0;
    bool operator==(const Gaussian&) const = default;
};
/// v * (1 + n), n ~ N(0, variance) on the unit scale; rounded and clamped.
struct Speckle {
    double variance = 0.04;
    bool operator==(const Speckle&) const = default;
};
struct Crop {
    Rect rect;
    std::uint8_t fill = 0;
    bool operator==(const Crop&) const = default;
};
/// 8x8 blockwise DCT, quantized by the JPEG luminance table scaled for quality.
struct CompressSurrogate {
    int quality = 75;
    bool operator==(const CompressSurrogate&) const = default;
};

}  // namespace attack

using AttackKind = std::variant<attack::SaltPepper, attack::Gaussian, attack::Speckle, attack::Crop,
                                attack::CompressSurrogate>;

struct AttackSpec {
    AttackKind kind;
    std::uint64_t seed = 0;
    bool operator==(const AttackSpec&) const = default;
};

std::string attack_name(const AttackSpec& spec);

/// Deterministic in (img, spec). Throws std::invalid_argument for parameters
/// out of range, including a crop rectangle outside the image.
ImageGrid apply_attack(const ImageGrid& img, const AttackSpec& spec);

/// Quantization table for a quality in 1..100, using the IJG rule
/// scale = q < 50 ? 5000 / q : 200 - 2q, entry = clamp((base * scale + 50) / 100, 1, 255).
std::array<int, 64> quantization_table(int quality);

/// Sum of squared per-sample differences. Throws DimensionMismatch.
std::uint64_t squared_error(const ImageGrid& a, const ImageGrid& b);
double mse(const ImageGrid& a, const ImageGrid& b);
/// 10 log10(255^2 / MSE), +infinity for identical images.
double psnr(const ImageGrid& a, const ImageGrid& b);
/// Pixels (not samples) where any channel differs.
std::uint64_t changed_pixels(const ImageGrid& a, const ImageGrid& b);

struct RecoveryReport {
    AttackSpec spec;
    std::uint64_t sse_on_scrambled = 0;
    std::uint64_t sse_on_recovered = 0;
    double mse_on_scrambled = 0.0;  ///< scrambled vs attacked
    double mse_on_recovered = 0.0;  ///< original vs recovered
    double psnr_recovered = 0.0;
    std::uint64_t changed_on_scrambled = 0;
    std::uint64_t changed_on_recovered = 0;
};

struct RecoveryExperiment {
    RecoveryReport report;
    ImageGrid scrambled;
    ImageGrid attacked;
    ImageGrid recovered;
};

/// scramble -> attack -> unscramble, with metrics on both sides.
RecoveryExperiment recovery_experiment(const ImageGrid& img, const ScrambleKey& key, const AttackSpec& spec);

}  // namespace fibscramble
