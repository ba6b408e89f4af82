#include "fibscramble/errors.hpp"
#include "fibscramble/scramble.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace fibscramble;
using namespace fibscramble::testing;

namespace {

ScrambleKey key(TransformMap map, std::int64_t n, std::uint64_t t) { return {std::move(map), n, t}; }

std::vector<std::uint8_t> bytes(const ImageGrid& g) { return {g.data().begin(), g.data().end()}; }

}  // namespace

TEST_CASE("apply_point") {
    const ValidatedMap arnold3 = validate(make_arnold(), 3);
    CHECK(apply_point(arnold3, 1, 1) == std::pair<std::int64_t, std::int64_t>{0, 2});
    CHECK(apply_point(validate(make_flt(Series::Fib11, 1), 3), 1, 0) == std::pair<std::int64_t, std::int64_t>{1, 2});
    for (const TransformMap& m : family_maps_1_to_8()) {
        CHECK(apply_point(validate(m, 17), 0, 0) == std::pair<std::int64_t, std::int64_t>{0, 0});
    }
}

TEST_CASE("coordinate convention: only row/column source-to-destination reproduces the Arnold reference") {
    // The four natural readings of the map on the 3x3 grid 1..9, applied three times.
    const std::vector<std::uint8_t> expected{1, 5, 9, 8, 3, 4, 6, 7, 2};
    const ImageGrid a = grid_a();
    auto run = [&](bool x_is_row, bool push) {
        std::vector<std::uint8_t> cur(a.data().begin(), a.data().end());
        for (int s = 0; s < 3; ++s) {
            std::vector<std::uint8_t> next(9);
            for (int x = 0; x < 3; ++x) {
                for (int y = 0; y < 3; ++y) {
                    const int xp = (2 * x + y) % 3, yp = (x + y) % 3;
                    const int here = x_is_row ? x * 3 + y : y * 3 + x;
                    const int there = x_is_row ? xp * 3 + yp : yp * 3 + xp;
                    if (push) {
                        next[static_cast<std::size_t>(there)] = cur[static_cast<std::size_t>(here)];
                    } else {
                        next[static_cast<std::size_t>(here)] = cur[static_cast<std::size_t>(there)];
                    }
                }
            }
            cur = next;
        }
        return cur;
    };
    CHECK(run(true, true) == expected);
    CHECK_FALSE(run(true, false) == expected);
    CHECK_FALSE(run(false, true) == expected);
    CHECK_FALSE(run(false, false) == expected);
    CHECK(bytes(scramble(a, key(make_arnold(), 3, 3))) == expected);
}

TEST_CASE("scramble the 3x3 grid") {
    const ImageGrid a = grid_a();
    CHECK(bytes(scramble(a, key(make_arnold(), 3, 3))) == std::vector<std::uint8_t>{1, 5, 9, 8, 3, 4, 6, 7, 2});
    const ImageGrid once = scramble(a, key(make_arnold(), 3, 1));
    CHECK(bytes(once) == std::vector<std::uint8_t>{1, 9, 5, 6, 2, 7, 8, 4, 3});
    CHECK(scramble(once, key(make_arnold(), 3, 2)) == scramble(a, key(make_arnold(), 3, 3)));
    CHECK(bytes(scramble(a, key(make_flt(Series::Fib11, 1), 3, 3))) ==
          std::vector<std::uint8_t>{1, 9, 5, 8, 4, 3, 6, 2, 7});
    CHECK(scramble(a, key(make_fibonacci_q(), 3, 0)) == a);
}

TEST_CASE("scramble errors") {
    std::mt19937_64 rng(1);
    const ImageGrid g = random_grid(8, 1, rng);
    CHECK_THROWS_AS(scramble(g, key(make_arnold(), 9, 1)), DimensionMismatch);
    CHECK_THROWS_AS(scramble(g, key(make_raw(2, 0, 0, 2), 8, 1)), InvalidScrambler);
    CHECK_THROWS_AS(unscramble(g, key(make_raw(2, 0, 0, 2), 8, 1)), InvalidScrambler);
    CHECK_THROWS_AS(unscramble(g, key(make_arnold(), 7, 1)), DimensionMismatch);
}

TEST_CASE("collapsed iterations equal step-by-step iteration") {
    std::mt19937_64 rng(2);
    for (const TransformMap& m : {make_arnold(), make_flt(Series::Fib32, 4), make_generalized_arnold(3, 6)}) {
        for (std::int64_t n : {5, 12, 16}) {
            const ImageGrid g = random_grid(n, 1, rng);
            for (std::uint64_t t : {0, 1, 2, 7, 25}) {
                CHECK(scramble(g, key(m, n, t)) == naive_scramble(g, m.entries, t));
            }
        }
    }
}

TEST_CASE("RGB pixels move as whole units") {
    std::mt19937_64 rng(3);
    const ImageGrid rgb = random_grid(10, 3, rng);
    const ScrambleKey k = key(make_flt(Series::Fib11, 5), 10, 4);
    const ImageGrid out = scramble(rgb, k);
    CHECK(out == naive_scramble(rgb, k.map.entries, 4));
    const ValidatedMap vm = validate(k.map, 10);
    const Matrix2 m4 = power_mod(vm, 4);
    const ValidatedMap step = validate(make_raw(m4.a, m4.b, m4.c, m4.d), 10);
    for (std::int64_t x = 0; x < 10; ++x) {
        for (std::int64_t y = 0; y < 10; ++y) {
            const auto [tx, ty] = apply_point(step, x, y);
            const auto src = rgb.pixel(x, y), dst = out.pixel(tx, ty);
            CHECK(std::equal(src.begin(), src.end(), dst.begin()));
        }
    }
    CHECK(unscramble(out, k) == rgb);
}

TEST_CASE("period examples") {
    CHECK(period(validate(make_arnold(), 128)).period == 96);
    CHECK(period(validate(make_flt(Series::Fib11, 1), 128)).period == 128);
    CHECK(period(validate(make_gft(5), 128)).period == 16);
    CHECK(period(validate(make_flt(Series::Fib31, 12), 128)).period == 4);
    CHECK(period(validate(make_flt(Series::Fib11, 1), 3)).period == 8);
    for (std::int64_t n : {2, 7, 128, 1000}) CHECK(period(validate(make_raw(1, 0, 0, 1), n)).period == 1);

    const PeriodReport r = period(validate(make_arnold(), 128));
    CHECK(r.label == "Arnold");
    CHECK(r.modulus == 128);
    CHECK_FALSE(r.iteration_cap_hit);
}

TEST_CASE("period cap") {
    const PeriodReport capped = period(validate(make_arnold(), 128), 50);
    CHECK(capped.iteration_cap_hit);
    CHECK(capped.period == 0);
    CHECK(period(validate(make_arnold(), 128), 96).period == 96);
    CHECK(default_period_cap(128) == 6ULL * 128 * 128);
}

TEST_CASE("decryption plan and routes") {
    const ScrambleKey k = key(make_flt(Series::Fib11, 6), 128, 20);
    const DecryptionPlan plan = plan_decryption(k);
    CHECK(plan.period == 128);
    CHECK(plan.inverse_iterations == 20);
    CHECK(plan.forward_iterations == 108);
    CHECK(plan.chosen == Route::Inverse);

    const ImageGrid photo = photo_like(128);
    const ImageGrid s = scramble(photo, k);
    CHECK_FALSE(s == photo);
    CHECK(scramble(s, key(k.map, 128, 108)) == photo);
    CHECK(naive_scramble(s, k.map.entries, 108) == photo);
    const ValidatedMap inv = inverse_mod(validate(k.map, 128));
    CHECK(naive_scramble(s, inv.reduced(), 20) == photo);
    CHECK(unscramble_via(s, k, Route::Forward) == photo);
    CHECK(unscramble_via(s, k, Route::Inverse) == photo);

    // Forward is cheaper once t passes half the period; t beyond the period wraps.
    CHECK(plan_decryption(key(k.map, 128, 100)).chosen == Route::Forward);
    CHECK(plan_decryption(key(k.map, 128, 100)).forward_iterations == 28);
    CHECK(plan_decryption(key(k.map, 128, 128 * 3 + 5)).inverse_iterations == 5);
    CHECK(plan_decryption(key(k.map, 128, 256)).inverse_iterations == 0);
    CHECK(plan_decryption(key(k.map, 128, 256)).forward_iterations == 0);
}

TEST_CASE("round trip on random 64x64 images with random keys") {
    std::mt19937_64 rng(4);
    const auto maps = family_maps_1_to_8();
    for (int trial = 0; trial < 20; ++trial) {
        const ImageGrid g = random_grid(64, trial % 2 ? 3 : 1, rng);
        const ScrambleKey k = key(maps[rng() % maps.size()], 64, rng() % 5000);
        CAPTURE(k.map.label);
        CHECK(unscramble(scramble(g, k), k) == g);
    }
}

TEST_CASE("point map is a bijection for every modulus 2..64") {
    const auto maps = family_maps_1_to_8();
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> entry(-40, 40);
    for (std::int64_t n = 2; n <= 64; ++n) {
        std::vector<TransformMap> pool;
        for (int k = 0; k < 6; ++k) pool.push_back(maps[rng() % maps.size()]);
        while (pool.size() < 10) {
            TransformMap raw = make_raw(entry(rng), entry(rng), entry(rng), entry(rng));
            try {
                validate(raw, n);
                pool.push_back(raw);
            } catch (const InvalidScrambler&) {
            }
        }
        for (const TransformMap& m : pool) {
            const ValidatedMap vm = validate(m, n);
            std::vector<bool> hit(static_cast<std::size_t>(n * n), false);
            for (std::int64_t x = 0; x < n; ++x) {
                for (std::int64_t y = 0; y < n; ++y) {
                    const auto [tx, ty] = apply_point(vm, x, y);
                    REQUIRE(tx >= 0);
                    REQUIRE(tx < n);
                    REQUIRE(ty >= 0);
                    REQUIRE(ty < n);
                    const auto idx = static_cast<std::size_t>(tx * n + ty);
                    REQUIRE_FALSE(hit[idx]);
                    hit[idx] = true;
                }
            }
        }
    }
}

TEST_CASE("non-bijective maps are rejected, never silently applied") {
    // det 3 on N = 6: the point map collides.
    const auto perm = point_permutation({1, 0, 0, 3}, 6);
    CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() < perm.size());
    CHECK_THROWS_AS(validate(make_raw(1, 0, 0, 3), 6), InvalidScrambler);
}

TEST_CASE("permutation order equals matrix order for N in 2..16") {
    for (const TransformMap& m : family_maps_1_to_8()) {
        for (std::int64_t n = 2; n <= 16; ++n) {
            const std::uint64_t oracle = permutation_order(point_permutation(m.entries, n), default_period_cap(n));
            CAPTURE(m.label);
            CAPTURE(n);
            REQUIRE(oracle > 0);
            CHECK(period(validate(m, n)).period == oracle);
        }
    }
}

TEST_CASE("scrambling conserves the pixel multiset") {
    std::mt19937_64 rng(9);
    const auto maps = family_maps_1_to_8();
    for (int trial = 0; trial < 30; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 40);
        const ImageGrid g = random_grid(n, 1, rng);
        const ImageGrid s = scramble(g, key(maps[rng() % maps.size()], n, rng() % 100));
        auto before = bytes(g), after = bytes(s);
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
    }
}

TEST_CASE("forward and inverse decryption agree bit for bit") {
    std::mt19937_64 rng(10);
    const auto maps = family_maps_1_to_8();
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 60);
        const ScrambleKey k = key(maps[rng() % maps.size()], n, rng() % 1000);
        const ImageGrid s = scramble(random_grid(n, 1, rng), k);
        CHECK(unscramble_via(s, k, Route::Forward) == unscramble_via(s, k, Route::Inverse));
    }
}

TEST_CASE("scramble composes additively in t") {
    std::mt19937_64 rng(12);
    const auto maps = family_maps_1_to_8();
    for (int trial = 0; trial < 30; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 30);
        const TransformMap& m = maps[rng() % maps.size()];
        const std::uint64_t a = rng() % 500, b = rng() % 500;
        const ImageGrid g = random_grid(n, 1, rng);
        CHECK(scramble(scramble(g, key(m, n, a)), key(m, n, b)) == scramble(g, key(m, n, a + b)));
    }
}
