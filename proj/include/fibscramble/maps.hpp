#pragma once

#include "fibscramble/sequences.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace fibscramble {

/// 2x2 integer matrix [[a, b], [c, d]] acting on column vectors (x, y).
struct Matrix2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    constexpr bool operator==(const Matrix2&) const = default;

    static constexpr Matrix2 identity() { return {1, 0, 0, 1}; }
};

namespace family {

struct Arnold {
    constexpr bool operator==(const Arnold&) const = default;
};
/// k >= 0, variant 0..7 (see make_generalized_arnold for the numbering).
struct GeneralizedArnold {
    std::int64_t k = 1;
    int variant = 0;
    constexpr bool operator==(const GeneralizedArnold&) const = default;
};
struct FibonacciQ {
    constexpr bool operator==(const FibonacciQ&) const = default;
};
struct GeneralizedFibonacci {
    std::int64_t i = 1;
    constexpr bool operator==(const GeneralizedFibonacci&) const = default;
};
/// series is one of Fib11, Fib32, Fib31.
struct FiboLucas {
    Series series = Series::Fib11;
    std::int64_t i = 1;
    constexpr bool operator==(const FiboLucas&) const = default;
};
/// k >= 0, variant 0..3.
struct Triangular {
    std::int64_t k = 0;
    int variant = 0;
    constexpr bool operator==(const Triangular&) const = default;
};
struct Raw {
    constexpr bool operator==(const Raw&) const = default;
};

}  // namespace family

using Family = std::variant<family::Arnold, family::GeneralizedArnold, family::FibonacciQ,
                            family::GeneralizedFibonacci, family::FiboLucas, family::Triangular, family::Raw>;

/// A transform matrix with exact (unreduced) entries and the parameters that
/// produced it. This is the key material of a scramble.
struct TransformMap {
    Matrix2 entries;
    Family family;
    std::string label;
    /// Set when the map is constructible but sits at an index the family
    /// definition excludes (FLT with i = 3).
    std::optional<std::string> warning;

    bool operator==(const TransformMap&) const = default;
};

TransformMap make_arnold();

/// Variant numbering, with k1 = k + 1:
///   0: [[k1, k ], [1,  1 ]]    1: [[k,  k1], [1,  1 ]]
///   2: [[k1, 1 ], [k,  1 ]]    3: [[k,  1 ], [k1, 1 ]]   (transposes of 0, 1)
///   4: [[1,  1 ], [k1, k ]]    5: [[1,  1 ], [k,  k1]]   (rows of 0, 1 swapped)
///   6: [[1,  k1], [1,  k ]]    7: [[1,  k ], [1,  k1]]   (transposes of 4, 5)
TransformMap make_generalized_arnold(std::int64_t k, int variant);

TransformMap make_fibonacci_q();

/// [[F(i), F(i+1)], [F(i+2), F(i+3)]] over the 0, 1, 1, 2, ... series.
TransformMap make_gft(std::int64_t i);

/// [[F(i), F(i+1)], [L(i), L(i+1)]] with F the chosen series and L Lucas.
TransformMap make_flt(Series series, std::int64_t i);

/// Variant numbering:
///   0: [[0, 1], [1, k]]    1: [[k, 1], [1, 0]]
///   2: [[1, k], [0, 1]]    3: [[1, 0], [k, 1]]
TransformMap make_triangular(std::int64_t k, int variant);

TransformMap make_raw(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Exact ad - bc; throws OverflowError if it does not fit.
std::int64_t determinant(const TransformMap& map);
std::int64_t determinant(const Matrix2& m);

/// A map checked to be a bijection on Z_N^2.
class ValidatedMap {
public:
    const TransformMap& map() const noexcept { return map_; }
    std::int64_t modulus() const noexcept { return modulus_; }
    /// Entries reduced into [0, N).
    const Matrix2& reduced() const noexcept { return reduced_; }
    std::int64_t det_mod() const noexcept { return det_mod_; }

private:
    ValidatedMap(TransformMap map, std::int64_t modulus, Matrix2 reduced, std::int64_t det_mod)
        : map_(std::move(map)), modulus_(modulus), reduced_(reduced), det_mod_(det_mod) {}

    friend ValidatedMap validate(const TransformMap& map, std::int64_t modulus);
    friend ValidatedMap inverse_mod(const ValidatedMap& vm);

    TransformMap map_;
    std::int64_t modulus_;
    Matrix2 reduced_;
    std::int64_t det_mod_;
};

/// Reduces the entries mod N and accepts the map iff gcd(det mod N, N) == 1.
/// Throws InvalidScrambler otherwise, std::invalid_argument for N < 2.
ValidatedMap validate(const TransformMap& map, std::int64_t modulus);

/// Matrix inverse over Z_N, labelled "inverse(<label>)", family Raw.
ValidatedMap inverse_mod(const ValidatedMap& vm);

/// Floor-style reduction into [0, m).
std::int64_t reduce_mod(std::int64_t value, std::int64_t m);

Matrix2 reduce(const Matrix2& m, std::int64_t modulus);
Matrix2 multiply_mod(const Matrix2& lhs, const Matrix2& rhs, std::int64_t modulus);

/// vm's reduced matrix raised to e, by square-and-multiply.
Matrix2 power_mod(const ValidatedMap& vm, std::uint64_t e);
Matrix2 power_mod(const Matrix2& m, std::uint64_t e, std::int64_t modulus);

/// Modular inverse of a unit; throws InvalidScrambler when gcd(value, m) != 1.
std::int64_t inverse_of_unit(std::int64_t value, std::int64_t modulus);

}  // namespace fibscramble
