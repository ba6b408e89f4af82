#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibscramble {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact integer result does not fit in 64-bit signed arithmetic.
class OverflowError : public Error {
public:
    OverflowError(const std::string& what, std::int64_t largest_index)
        : Error(what), largest_index_(largest_index) {}

    /// Largest index whose exact value is representable (0 when not index-based).
    std::int64_t largest_index() const noexcept { return largest_index_; }

private:
    std::int64_t largest_index_;
};

/// The map is not a bijection on Z_N x Z_N: gcd(det mod N, N) != 1.
class InvalidScrambler : public Error {
public:
    InvalidScrambler(const std::string& what, std::int64_t det_mod, std::int64_t gcd)
        : Error(what), det_mod_(det_mod), gcd_(gcd) {}

    std::int64_t det_mod() const noexcept { return det_mod_; }
    std::int64_t gcd() const noexcept { return gcd_; }

private:
    std::int64_t det_mod_;
    std::int64_t gcd_;
};

class PeriodCapExceeded : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class PnmError : public Error {
public:
    using Error::Error;
};

class RangeTooLarge : public Error {
public:
    using Error::Error;
};

class KeyFormatError : public Error {
public:
    using Error::Error;
};

}  // namespace fibscramble
