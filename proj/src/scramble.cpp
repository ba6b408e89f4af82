#include "fibscramble/scramble.hpp"

#include "fibscramble/errors.hpp"

#include <algorithm>
#include <cstring>

namespace fibscramble {

std::uint64_t default_period_cap(std::int64_t modulus) {
    return 6ULL * static_cast<std::uint64_t>(modulus) * static_cast<std::uint64_t>(modulus);
}

std::pair<std::int64_t, std::int64_t> apply_point(const ValidatedMap& vm, std::int64_t x, std::int64_t y) {
    const Matrix2& m = vm.reduced();
    const std::int64_t n = vm.modulus();
    const auto xx = static_cast<__int128>(x), yy = static_cast<__int128>(y);
    return {static_cast<std::int64_t>((m.a * xx + m.b * yy) % n), static_cast<std::int64_t>((m.c * xx + m.d * yy) % n)};
}

PeriodReport period(const ValidatedMap& vm, std::uint64_t cap) {
    PeriodReport report{vm.map().label, vm.modulus(), 0, false};
    const Matrix2 one = reduce(Matrix2::identity(), vm.modulus());
    Matrix2 acc = vm.reduced();
    for (std::uint64_t p = 1; p <= cap; ++p) {
        if (acc == one) {
            report.period = p;
            return report;
        }
        acc = multiply_mod(acc, vm.reduced(), vm.modulus());
    }
    report.iteration_cap_hit = true;
    return report;
}

PeriodReport period(const ValidatedMap& vm) { return period(vm, default_period_cap(vm.modulus())); }

std::uint64_t require_period(const ValidatedMap& vm) {
    const PeriodReport report = period(vm);
    if (report.iteration_cap_hit) {
        throw PeriodCapExceeded("period of " + report.label + " mod " + std::to_string(report.modulus) +
                                " exceeds the cap of " + std::to_string(default_period_cap(report.modulus)));
    }
    return report.period;
}

ImageGrid permute(const ImageGrid& img, const Matrix2& m, std::int64_t n) {
    ImageGrid out(img.side(), img.channels());
    const auto ch = static_cast<std::size_t>(img.channels());
    const std::uint8_t* src = img.data().data();
    std::uint8_t* dst = out.data().data();
    // Walk each row incrementally: moving y -> y + 1 adds (b, d) to the target.
    for (std::int64_t x = 0; x < n; ++x) {
        std::int64_t tx = static_cast<std::int64_t>(static_cast<__int128>(m.a) * x % n);
        std::int64_t ty = static_cast<std::int64_t>(static_cast<__int128>(m.c) * x % n);
        for (std::int64_t y = 0; y < n; ++y) {
            std::memcpy(dst + static_cast<std::size_t>(tx * n + ty) * ch, src + static_cast<std::size_t>(x * n + y) * ch,
                        ch);
            tx += m.b;
            if (tx >= n) tx -= n;
            ty += m.d;
            if (ty >= n) ty -= n;
        }
    }
    return out;
}

namespace {

ValidatedMap validated_for(const ImageGrid& img, const ScrambleKey& key) {
    if (img.side() != key.modulus) {
        throw DimensionMismatch("image side " + std::to_string(img.side()) + " does not match key modulus " +
                                std::to_string(key.modulus));
    }
    return validate(key.map, key.modulus);
}

}  // namespace

ImageGrid scramble(const ImageGrid& img, const ScrambleKey& key) {
    const ValidatedMap vm = validated_for(img, key);
    if (key.iterations == 0) return img;
    return permute(img, power_mod(vm, key.iterations), vm.modulus());
}

DecryptionPlan plan_decryption(const ScrambleKey& key) {
    const ValidatedMap vm = validate(key.map, key.modulus);
    DecryptionPlan plan;
    plan.period = require_period(vm);
    plan.inverse_iterations = key.iterations % plan.period;
    plan.forward_iterations = (plan.period - plan.inverse_iterations) % plan.period;
    plan.chosen = plan.forward_iterations < plan.inverse_iterations ? Route::Forward : Route::Inverse;
    return plan;
}

ImageGrid unscramble_via(const ImageGrid& img, const ScrambleKey& key, Route route) {
    const ValidatedMap vm = validated_for(img, key);
    const DecryptionPlan plan = plan_decryption(key);
    if (route == Route::Forward) {
        if (plan.forward_iterations == 0) return img;
        return permute(img, power_mod(vm, plan.forward_iterations), vm.modulus());
    }
    if (plan.inverse_iterations == 0) return img;
    const ValidatedMap inv = inverse_mod(vm);
    return permute(img, power_mod(inv, plan.inverse_iterations), inv.modulus());
}

ImageGrid unscramble(const ImageGrid& img, const ScrambleKey& key) {
    return unscramble_via(img, key, plan_decryption(key).chosen);
}

}  // namespace fibscramble
