#pragma once

#include "fibscramble/analysis.hpp"
#include "fibscramble/image.hpp"
#include "fibscramble/maps.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace fibscramble::testing {

/// 3x3 grid 1..9 in row-major order.
inline ImageGrid grid_a() { return ImageGrid(3, 1, std::vector<std::uint8_t>{1, 2, 3, 4, 5, 6, 7, 8, 9}); }

inline ImageGrid grid_of(std::int64_t n, std::vector<std::uint8_t> values) { return ImageGrid(n, 1, std::move(values)); }

inline ImageGrid random_grid(std::int64_t n, int channels, std::mt19937_64& rng, int lo = 0, int hi = 255) {
    ImageGrid g(n, channels);
    std::uniform_int_distribution<int> v(lo, hi);
    for (std::uint8_t& p : g.data()) p = static_cast<std::uint8_t>(v(rng));
    return g;
}

/// Smooth gradient with texture, standing in for a natural photograph.
inline ImageGrid photo_like(std::int64_t n) {
    ImageGrid g(n, 1);
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
            g.pixel(x, y)[0] = static_cast<std::uint8_t>((x * 255 / n + ((x / 8 + y / 8) % 2) * 40 + y) % 256);
        }
    }
    return g;
}

/// Permutation of cell indices x * n + y, computed point by point from the
/// exact entries: perm[src] = dst.
inline std::vector<std::size_t> point_permutation(const Matrix2& m, std::int64_t n) {
    auto red = [n](std::int64_t v) { return ((v % n) + n) % n; };
    const std::int64_t a = red(m.a), b = red(m.b), c = red(m.c), d = red(m.d);
    std::vector<std::size_t> perm(static_cast<std::size_t>(n * n));
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
            perm[static_cast<std::size_t>(x * n + y)] = static_cast<std::size_t>(((a * x + b * y) % n) * n + (c * x + d * y) % n);
        }
    }
    return perm;
}

/// Applies the unit step `t` times, one point at a time.
inline ImageGrid naive_scramble(const ImageGrid& img, const Matrix2& m, std::uint64_t t) {
    const auto perm = point_permutation(m, img.side());
    const auto ch = static_cast<std::size_t>(img.channels());
    ImageGrid cur = img;
    for (std::uint64_t s = 0; s < t; ++s) {
        ImageGrid next(img.side(), img.channels());
        for (std::size_t src = 0; src < perm.size(); ++src) {
            for (std::size_t k = 0; k < ch; ++k) next.data()[perm[src] * ch + k] = cur.data()[src * ch + k];
        }
        cur = std::move(next);
    }
    return cur;
}

/// Smallest q >= 1 with perm^q = identity, by iterating the permutation.
inline std::uint64_t permutation_order(const std::vector<std::size_t>& perm, std::uint64_t cap) {
    std::vector<std::size_t> power = perm;
    for (std::uint64_t q = 1; q <= cap; ++q) {
        bool identity = true;
        for (std::size_t i = 0; i < power.size(); ++i) {
            if (power[i] != i) {
                identity = false;
                break;
            }
        }
        if (identity) return q;
        std::vector<std::size_t> next(power.size());
        for (std::size_t i = 0; i < power.size(); ++i) next[i] = perm[power[i]];
        power = std::move(next);
    }
    return 0;
}

/// All named family maps with parameters 1..8.
inline std::vector<TransformMap> family_maps_1_to_8() {
    std::vector<TransformMap> maps{make_arnold(), make_fibonacci_q()};
    for (std::int64_t p = 1; p <= 8; ++p) {
        maps.push_back(make_gft(p));
        maps.push_back(make_flt(Series::Fib11, p));
        maps.push_back(make_flt(Series::Fib32, p));
        maps.push_back(make_flt(Series::Fib31, p));
        for (int v = 0; v < 8; ++v) maps.push_back(make_generalized_arnold(p, v));
        for (int v = 0; v < 4; ++v) maps.push_back(make_triangular(p, v));
    }
    return maps;
}

}  // namespace fibscramble::testing
