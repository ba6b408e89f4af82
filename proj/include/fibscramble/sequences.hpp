#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

namespace fibscramble {

/// The integer recurrences used to build transform matrices. All share
/// t(n) = t(n-1) + t(n-2) and differ only in their seeds.
enum class Series {
    Fib01,  ///< 0, 1, 1, 2, 3, ...
    Fib11,  ///< 1, 1, 2, 3, 5, ...
    Fib32,  ///< 3, 2, 5, 7, 12, ...
    Fib31,  ///< 3, 1, 4, 5, 9, ...
    Lucas,  ///< 2, 1, 3, 4, 7, ...
};

/// First two terms (t(1), t(2)).
std::pair<std::int64_t, std::int64_t> seeds(Series series) noexcept;

std::string_view series_name(Series series) noexcept;

/// Largest n for which term(series, n) fits in int64_t.
std::int64_t max_exact_index(Series series);

/// Exact n-th term, 1-indexed. Throws OverflowError past max_exact_index(),
/// std::invalid_argument for n < 1.
std::int64_t term(Series series, std::int64_t n);

/// term(series, n) mod modulus for any n >= 1, modulus >= 2.
std::int64_t term_mod(Series series, std::uint64_t n, std::int64_t modulus);

}  // namespace fibscramble
