#include "fibscramble/sequences.hpp"

#include "fibscramble/errors.hpp"

#include <string>

namespace fibscramble {

std::pair<std::int64_t, std::int64_t> seeds(Series series) noexcept {
    switch (series) {
    case Series::Fib01: return {0, 1};
    case Series::Fib11: return {1, 1};
    case Series::Fib32: return {3, 2};
    case Series::Fib31: return {3, 1};
    case Series::Lucas: return {2, 1};
    }
    return {0, 0};
}

std::string_view series_name(Series series) noexcept {
    switch (series) {
    case Series::Fib01: return "fib01";
    case Series::Fib11: return "fib11";
    case Series::Fib32: return "fib32";
    case Series::Fib31: return "fib31";
    case Series::Lucas: return "lucas";
    }
    return "?";
}

std::int64_t max_exact_index(Series series) {
    auto [prev, cur] = seeds(series);
    std::int64_t n = 2;
    for (;;) {
        std::int64_t next;
        if (__builtin_add_overflow(prev, cur, &next)) return n;
        prev = cur;
        cur = next;
        ++n;
    }
}

std::int64_t term(Series series, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sequence index must be >= 1, got " + std::to_string(n));
    auto [prev, cur] = seeds(series);
    if (n == 1) return prev;
    for (std::int64_t k = 3; k <= n; ++k) {
        std::int64_t next;
        if (__builtin_add_overflow(prev, cur, &next)) {
            const std::int64_t largest = k - 1;
            throw OverflowError("term " + std::to_string(n) + " of " + std::string(series_name(series)) +
                                    " exceeds int64; largest representable index is " +
                                    std::to_string(largest),
                                largest);
        }
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

struct Step {
    // [[p, q], [r, s]] over Z_m
    std::int64_t p, q, r, s;
};

// (p q + r s) mod m without intermediate overflow.
std::int64_t dot_mod(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s, std::int64_t m) {
    const __int128 pq = static_cast<__int128>(p) * q % m;
    const __int128 rs = static_cast<__int128>(r) * s % m;
    return static_cast<std::int64_t>((pq + rs) % m);
}

Step compose(const Step& x, const Step& y, std::int64_t m) {
    return {dot_mod(x.p, y.p, x.q, y.r, m), dot_mod(x.p, y.q, x.q, y.s, m), dot_mod(x.r, y.p, x.s, y.r, m),
            dot_mod(x.r, y.q, x.s, y.s, m)};
}

}  // namespace

std::int64_t term_mod(Series series, std::uint64_t n, std::int64_t modulus) {
    if (n < 1) throw std::invalid_argument("sequence index must be >= 1");
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(modulus));
    auto [s1, s2] = seeds(series);
    s1 %= modulus;
    s2 %= modulus;
    if (n == 1) return s1;
    if (n == 2) return s2;

    // (t(k+1), t(k)) = Q (t(k), t(k-1)) with Q = [[1,1],[1,0]], all mod m.
    Step acc{1, 0, 0, 1};
    Step base{1, 1, 1, 0};
    for (std::uint64_t e = n - 2; e != 0; e >>= 1) {
        if (e & 1U) acc = compose(acc, base, modulus);
        base = compose(base, base, modulus);
    }
    return dot_mod(acc.p, s2, acc.q, s1, modulus);
}

}  // namespace fibscramble
