#include "fibscramble/attacks.hpp"

#include "fibscramble/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fibscramble {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::uint8_t clamp_round(double v) { return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0)); }

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

ImageGrid salt_pepper(const ImageGrid& img, const attack::SaltPepper& a, std::mt19937_64& rng) {
    require(a.density >= 0.0 && a.density <= 1.0, "salt-and-pepper density must be in [0, 1]");
    ImageGrid out = img;
    const std::size_t total = img.pixel_count();
    const auto hits = std::min(total, static_cast<std::size_t>(std::ceil(a.density * static_cast<double>(total))));
    // Partial Fisher-Yates: the first `hits` entries are distinct random pixels.
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < hits; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, total - 1);
        std::swap(order[k], order[pick(rng)]);
        const std::uint8_t value = (rng() & 1U) ? 255 : 0;
        const auto n = static_cast<std::size_t>(img.side());
        auto px = out.pixel(static_cast<std::int64_t>(order[k] / n), static_cast<std::int64_t>(order[k] % n));
        std::fill(px.begin(), px.end(), value);
    }
    return out;
}

ImageGrid gaussian(const ImageGrid& img, const attack::Gaussian& a, std::mt19937_64& rng) {
    require(a.variance >= 0.0, "gaussian variance must be >= 0");
    ImageGrid out = img;
    std::normal_distribution<double> noise(a.mean, std::sqrt(a.variance));
    for (std::uint8_t& v : out.data()) v = clamp_round(v + noise(rng));
    return out;
}

ImageGrid speckle(const ImageGrid& img, const attack::Speckle& a, std::mt19937_64& rng) {
    require(a.variance >= 0.0, "speckle variance must be >= 0");
    ImageGrid out = img;
    std::normal_distribution<double> noise(0.0, std::sqrt(a.variance));
    for (std::uint8_t& v : out.data()) v = clamp_round(v * (1.0 + noise(rng)));
    return out;
}

ImageGrid crop(const ImageGrid& img, const attack::Crop& a) {
    const Rect& r = a.rect;
    const std::int64_t n = img.side();
    require(r.row >= 0 && r.col >= 0 && r.height >= 0 && r.width >= 0 && r.row + r.height <= n && r.col + r.width <= n,
            "crop rectangle rows [" + std::to_string(r.row) + ", " + std::to_string(r.row + r.height) + ") cols [" +
                std::to_string(r.col) + ", " + std::to_string(r.col + r.width) + ") lies outside the " +
                std::to_string(n) + "x" + std::to_string(n) + " image");
    ImageGrid out = img;
    for (std::int64_t x = r.row; x < r.row + r.height; ++x) {
        for (std::int64_t y = r.col; y < r.col + r.width; ++y) {
            auto px = out.pixel(x, y);
            std::fill(px.begin(), px.end(), a.fill);
        }
    }
    return out;
}

constexpr std::array<int, 64> kLuminanceTable{
    16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,  14, 13, 16, 24,  40,  57,
    69, 56, 14, 17, 22,  29,  51,  87,  80, 62, 18, 22, 37,  56,  68,  109, 103, 77, 24, 35, 55, 64,
    81, 104, 113, 92, 49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95,  98,  112, 100, 103, 99};

struct DctBasis {
    // cos_table[u][x] = C(u) cos((2x + 1) u pi / 16), orthonormal.
    double cos_table[8][8];

    DctBasis() {
        for (int u = 0; u < 8; ++u) {
            const double cu = u == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
            for (int x = 0; x < 8; ++x) cos_table[u][x] = cu * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
        }
    }
};

ImageGrid compress(const ImageGrid& img, const attack::CompressSurrogate& a) {
    require(a.quality >= 1 && a.quality <= 100, "compression quality must be in 1..100");
    static const DctBasis basis;
    const std::array<int, 64> q = quantization_table(a.quality);
    const std::int64_t n = img.side();
    const int channels = img.channels();
    ImageGrid out = img;

    double block[8][8], coeff[8][8], tmp[8][8];
    for (int ch = 0; ch < channels; ++ch) {
        for (std::int64_t bx = 0; bx < n; bx += 8) {
            for (std::int64_t by = 0; by < n; by += 8) {
                // Partial edge blocks replicate the last row/column.
                for (int i = 0; i < 8; ++i) {
                    for (int j = 0; j < 8; ++j) {
                        const std::int64_t x = std::min(bx + i, n - 1), y = std::min(by + j, n - 1);
                        block[i][j] = img.pixel(x, y)[static_cast<std::size_t>(ch)] - 128.0;
                    }
                }
                for (int u = 0; u < 8; ++u) {
                    for (int j = 0; j < 8; ++j) {
                        double s = 0;
                        for (int i = 0; i < 8; ++i) s += basis.cos_table[u][i] * block[i][j];
                        tmp[u][j] = s;
                    }
                }
                for (int u = 0; u < 8; ++u) {
                    for (int v = 0; v < 8; ++v) {
                        double s = 0;
                        for (int j = 0; j < 8; ++j) s += basis.cos_table[v][j] * tmp[u][j];
                        const double step = q[static_cast<std::size_t>(u * 8 + v)];
                        coeff[u][v] = std::round(s / step) * step;
                    }
                }
                for (int i = 0; i < 8; ++i) {
                    for (int v = 0; v < 8; ++v) {
                        double s = 0;
                        for (int u = 0; u < 8; ++u) s += basis.cos_table[u][i] * coeff[u][v];
                        tmp[i][v] = s;
                    }
                }
                for (int i = 0; i < 8 && bx + i < n; ++i) {
                    for (int j = 0; j < 8 && by + j < n; ++j) {
                        double s = 0;
                        for (int v = 0; v < 8; ++v) s += basis.cos_table[v][j] * tmp[i][v];
                        out.pixel(bx + i, by + j)[static_cast<std::size_t>(ch)] = clamp_round(s + 128.0);
                    }
                }
            }
        }
    }
    return out;
}

void require_same_shape(const ImageGrid& a, const ImageGrid& b) {
    if (a.side() != b.side() || a.channels() != b.channels()) {
        throw DimensionMismatch("images differ in shape: " + std::to_string(a.side()) + "x" + std::to_string(a.side()) +
                                "x" + std::to_string(a.channels()) + " vs " + std::to_string(b.side()) + "x" +
                                std::to_string(b.side()) + "x" + std::to_string(b.channels()));
    }
}

}  // namespace

std::array<int, 64> quantization_table(int quality) {
    require(quality >= 1 && quality <= 100, "compression quality must be in 1..100");
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    std::array<int, 64> out{};
    for (std::size_t i = 0; i < 64; ++i) out[i] = std::clamp((kLuminanceTable[i] * scale + 50) / 100, 1, 255);
    return out;
}

std::string attack_name(const AttackSpec& spec) {
    std::ostringstream s;
    std::visit(overloaded{
                   [&](const attack::SaltPepper& a) { s << "salt-pepper(density=" << a.density << ")"; },
                   [&](const attack::Gaussian& a) { s << "gaussian(mean=" << a.mean << ", variance=" << a.variance << ")"; },
                   [&](const attack::Speckle& a) { s << "speckle(variance=" << a.variance << ")"; },
                   [&](const attack::Crop& a) {
                       s << "crop(row=" << a.rect.row << ", col=" << a.rect.col << ", height=" << a.rect.height
                         << ", width=" << a.rect.width << ", fill=" << int(a.fill) << ")";
                   },
                   [&](const attack::CompressSurrogate& a) { s << "compress(quality=" << a.quality << ")"; },
               },
               spec.kind);
    return s.str();
}

ImageGrid apply_attack(const ImageGrid& img, const AttackSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    return std::visit(overloaded{
                          [&](const attack::SaltPepper& a) { return salt_pepper(img, a, rng); },
                          [&](const attack::Gaussian& a) { return gaussian(img, a, rng); },
                          [&](const attack::Speckle& a) { return speckle(img, a, rng); },
                          [&](const attack::Crop& a) { return crop(img, a); },
                          [&](const attack::CompressSurrogate& a) { return compress(img, a); },
                      },
                      spec.kind);
}

std::uint64_t squared_error(const ImageGrid& a, const ImageGrid& b) {
    require_same_shape(a, b);
    std::uint64_t sum = 0;
    const auto da = a.data(), db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(da[i]) - db[i];
        sum += static_cast<std::uint64_t>(d * d);
    }
    return sum;
}

double mse(const ImageGrid& a, const ImageGrid& b) {
    return static_cast<double>(squared_error(a, b)) / static_cast<double>(a.data().size());
}

double psnr(const ImageGrid& a, const ImageGrid& b) {
    const double e = mse(a, b);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / e);
}

std::uint64_t changed_pixels(const ImageGrid& a, const ImageGrid& b) {
    require_same_shape(a, b);
    std::uint64_t count = 0;
    for (std::int64_t x = 0; x < a.side(); ++x) {
        for (std::int64_t y = 0; y < a.side(); ++y) {
            const auto pa = a.pixel(x, y), pb = b.pixel(x, y);
            count += std::equal(pa.begin(), pa.end(), pb.begin()) ? 0 : 1;
        }
    }
    return count;
}

RecoveryExperiment recovery_experiment(const ImageGrid& img, const ScrambleKey& key, const AttackSpec& spec) {
    RecoveryExperiment e;
    e.scrambled = scramble(img, key);
    e.attacked = apply_attack(e.scrambled, spec);
    e.recovered = unscramble(e.attacked, key);

    RecoveryReport& r = e.report;
    r.spec = spec;
    r.sse_on_scrambled = squared_error(e.scrambled, e.attacked);
    r.sse_on_recovered = squared_error(img, e.recovered);
    r.mse_on_scrambled = mse(e.scrambled, e.attacked);
    r.mse_on_recovered = mse(img, e.recovered);
    r.psnr_recovered = psnr(img, e.recovered);
    r.changed_on_scrambled = changed_pixels(e.scrambled, e.attacked);
    r.changed_on_recovered = changed_pixels(img, e.recovered);
    return e;
}

}  // namespace fibscramble
