#include "fibscramble/image.hpp"

#include <stdexcept>
#include <string>

namespace fibscramble {

namespace {

void check_shape(std::int64_t side, int channels) {
    if (side < 1) throw std::invalid_argument("image side must be >= 1, got " + std::to_string(side));
    if (channels != 1 && channels != 3) {
        throw std::invalid_argument("image must have 1 or 3 channels, got " + std::to_string(channels));
    }
}

}  // namespace

ImageGrid::ImageGrid(std::int64_t side, int channels, std::uint8_t fill) : side_(side), channels_(channels) {
    check_shape(side, channels);
    data_.assign(static_cast<std::size_t>(side * side * channels), fill);
}

ImageGrid::ImageGrid(std::int64_t side, int channels, std::vector<std::uint8_t> pixels)
    : side_(side), channels_(channels), data_(std::move(pixels)) {
    check_shape(side, channels);
    if (data_.size() != static_cast<std::size_t>(side * side * channels)) {
        throw std::invalid_argument("pixel buffer holds " + std::to_string(data_.size()) + " bytes, expected " +
                                    std::to_string(side * side * channels));
    }
}

}  // namespace fibscramble
