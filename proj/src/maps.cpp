#include "fibscramble/maps.hpp"

#include "fibscramble/errors.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fibscramble {

namespace {

std::string series_tag(Series s) {
    switch (s) {
    case Series::Fib11: return "11";
    case Series::Fib32: return "32";
    case Series::Fib31: return "31";
    default: return std::string(series_name(s));
    }
}

void require_non_negative(std::int64_t k, const char* what) {
    if (k < 0) throw std::invalid_argument(std::string(what) + " must be >= 0, got " + std::to_string(k));
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t out;
    if (__builtin_add_overflow(x, y, &out)) throw OverflowError("matrix parameter overflows int64", 0);
    return out;
}

}  // namespace

TransformMap make_arnold() {
    return {{2, 1, 1, 1}, family::Arnold{}, "Arnold", std::nullopt};
}

TransformMap make_generalized_arnold(std::int64_t k, int variant) {
    require_non_negative(k, "generalized Arnold k");
    const std::int64_t k1 = checked_add(k, 1);
    Matrix2 m;
    switch (variant) {
    case 0: m = {k1, k, 1, 1}; break;
    case 1: m = {k, k1, 1, 1}; break;
    case 2: m = {k1, 1, k, 1}; break;
    case 3: m = {k, 1, k1, 1}; break;
    case 4: m = {1, 1, k1, k}; break;
    case 5: m = {1, 1, k, k1}; break;
    case 6: m = {1, k1, 1, k}; break;
    case 7: m = {1, k, 1, k1}; break;
    default:
        throw std::invalid_argument("generalized Arnold variant must be in 0..7, got " + std::to_string(variant));
    }
    return {m, family::GeneralizedArnold{k, variant},
            "GAT_" + std::to_string(k) + "/v" + std::to_string(variant), std::nullopt};
}

TransformMap make_fibonacci_q() {
    return {{1, 1, 1, 0}, family::FibonacciQ{}, "FibonacciQ", std::nullopt};
}

TransformMap make_gft(std::int64_t i) {
    if (i < 1) throw std::invalid_argument("GFT index must be >= 1, got " + std::to_string(i));
    const Matrix2 m{term(Series::Fib01, i), term(Series::Fib01, i + 1), term(Series::Fib01, i + 2),
                    term(Series::Fib01, i + 3)};
    return {m, family::GeneralizedFibonacci{i}, "GFT_" + std::to_string(i), std::nullopt};
}

TransformMap make_flt(Series series, std::int64_t i) {
    if (series != Series::Fib11 && series != Series::Fib32 && series != Series::Fib31) {
        throw std::invalid_argument("FLT series must be fib11, fib32 or fib31");
    }
    if (i < 1) throw std::invalid_argument("FLT index must be >= 1, got " + std::to_string(i));
    const Matrix2 m{term(series, i), term(series, i + 1), term(Series::Lucas, i), term(Series::Lucas, i + 1)};
    TransformMap map{m, family::FiboLucas{series, i}, "F(" + series_tag(series) + ")LT_" + std::to_string(i),
                     std::nullopt};
    if (i == 3) map.warning = "index 3 is excluded from the Fibonacci-Lucas family definition";
    return map;
}

TransformMap make_triangular(std::int64_t k, int variant) {
    require_non_negative(k, "triangular k");
    Matrix2 m;
    switch (variant) {
    case 0: m = {0, 1, 1, k}; break;
    case 1: m = {k, 1, 1, 0}; break;
    case 2: m = {1, k, 0, 1}; break;
    case 3: m = {1, 0, k, 1}; break;
    default: throw std::invalid_argument("triangular variant must be in 0..3, got " + std::to_string(variant));
    }
    return {m, family::Triangular{k, variant}, "TRI_" + std::to_string(k) + "/v" + std::to_string(variant),
            std::nullopt};
}

TransformMap make_raw(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::ostringstream label;
    label << "raw[" << a << ',' << b << ';' << c << ',' << d << ']';
    return {{a, b, c, d}, family::Raw{}, label.str(), std::nullopt};
}

std::int64_t determinant(const Matrix2& m) {
    std::int64_t ad, bc, det;
    if (__builtin_mul_overflow(m.a, m.d, &ad) || __builtin_mul_overflow(m.b, m.c, &bc) ||
        __builtin_sub_overflow(ad, bc, &det)) {
        throw OverflowError("determinant exceeds int64 range", 0);
    }
    return det;
}

std::int64_t determinant(const TransformMap& map) { return determinant(map.entries); }

std::int64_t reduce_mod(std::int64_t value, std::int64_t m) {
    const std::int64_t r = value % m;
    return r < 0 ? r + m : r;
}

Matrix2 reduce(const Matrix2& m, std::int64_t modulus) {
    return {reduce_mod(m.a, modulus), reduce_mod(m.b, modulus), reduce_mod(m.c, modulus), reduce_mod(m.d, modulus)};
}

namespace {

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(x) * y % m);
}

std::int64_t dot_mod(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s, std::int64_t m) {
    const __int128 pq = static_cast<__int128>(p) * q % m;
    const __int128 rs = static_cast<__int128>(r) * s % m;
    return static_cast<std::int64_t>((pq + rs) % m);
}

}  // namespace

Matrix2 multiply_mod(const Matrix2& x, const Matrix2& y, std::int64_t m) {
    return {dot_mod(x.a, y.a, x.b, y.c, m), dot_mod(x.a, y.b, x.b, y.d, m), dot_mod(x.c, y.a, x.d, y.c, m),
            dot_mod(x.c, y.b, x.d, y.d, m)};
}

Matrix2 power_mod(const Matrix2& m, std::uint64_t e, std::int64_t modulus) {
    Matrix2 acc = reduce(Matrix2::identity(), modulus);
    Matrix2 base = reduce(m, modulus);
    for (; e != 0; e >>= 1) {
        if (e & 1U) acc = multiply_mod(acc, base, modulus);
        base = multiply_mod(base, base, modulus);
    }
    return acc;
}

Matrix2 power_mod(const ValidatedMap& vm, std::uint64_t e) { return power_mod(vm.reduced(), e, vm.modulus()); }

std::int64_t inverse_of_unit(std::int64_t value, std::int64_t modulus) {
    // Extended Euclid on (value mod m, m).
    std::int64_t old_r = reduce_mod(value, modulus), r = modulus;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) {
        throw InvalidScrambler("value " + std::to_string(value) + " is not a unit mod " + std::to_string(modulus),
                               reduce_mod(value, modulus), old_r);
    }
    return reduce_mod(old_s, modulus);
}

ValidatedMap validate(const TransformMap& map, std::int64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(modulus));
    const Matrix2 r = reduce(map.entries, modulus);
    const std::int64_t det_mod = reduce_mod(mulmod(r.a, r.d, modulus) - mulmod(r.b, r.c, modulus), modulus);
    const std::int64_t g = std::gcd(det_mod, modulus);
    if (g != 1) {
        throw InvalidScrambler("map " + map.label + " is not a bijection mod " + std::to_string(modulus) +
                                   ": det mod N = " + std::to_string(det_mod) + ", gcd = " + std::to_string(g),
                               det_mod, g);
    }
    return ValidatedMap(map, modulus, r, det_mod);
}

ValidatedMap inverse_mod(const ValidatedMap& vm) {
    const std::int64_t n = vm.modulus();
    const std::int64_t inv_det = inverse_of_unit(vm.det_mod(), n);
    const Matrix2& r = vm.reduced();
    const Matrix2 inv{mulmod(r.d, inv_det, n), mulmod(reduce_mod(-r.b, n), inv_det, n),
                      mulmod(reduce_mod(-r.c, n), inv_det, n), mulmod(r.a, inv_det, n)};
    TransformMap map{inv, family::Raw{}, "inverse(" + vm.map().label + ")", std::nullopt};
    return ValidatedMap(std::move(map), n, inv, inverse_of_unit(vm.det_mod(), n));
}

}  // namespace fibscramble
