#pragma once

#include "fibscramble/image.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace fibscramble {

/// Binary PGM (P5) / PPM (P6) with maxval 255.
///
/// Reading accepts any whitespace between header fields and '#' comments
/// up to end of line; exactly one whitespace byte separates maxval from the
/// pixel data. Only square images are accepted.
///
/// Writing is canonical: "P5\n" or "P6\n", then "<width> <height>\n",
/// then "255\n", then the raw row-major pixel bytes. No comments.
struct PnmHeader {
    std::string magic;  ///< "P5" or "P6"
    std::int64_t width = 0;
    std::int64_t height = 0;
    int maxval = 255;
};

ImageGrid read_pnm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pnm(const ImageGrid& img);

ImageGrid load_pnm(const std::filesystem::path& path);
void save_pnm(const ImageGrid& img, const std::filesystem::path& path);

}  // namespace fibscramble
