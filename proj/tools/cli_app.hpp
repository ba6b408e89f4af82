#pragma once

#include <iosfwd>

namespace fibscramble::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;  ///< unreadable/malformed image or key, size mismatch
inline constexpr int kMathError = 3;  ///< map not invertible mod N, period cap exceeded, overflow

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fibscramble::cli
