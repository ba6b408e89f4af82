#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fibscramble {

/// Square N x N image, 1 (gray) or 3 (RGB) channels of 8 bits, row-major.
/// Pixel (x, y) is row x, column y.
class ImageGrid {
public:
    ImageGrid() = default;
    ImageGrid(std::int64_t side, int channels, std::uint8_t fill = 0);
    ImageGrid(std::int64_t side, int channels, std::vector<std::uint8_t> pixels);

    std::int64_t side() const noexcept { return side_; }
    int channels() const noexcept { return channels_; }
    std::size_t pixel_count() const noexcept { return static_cast<std::size_t>(side_ * side_); }

    std::span<const std::uint8_t> data() const noexcept { return data_; }
    std::span<std::uint8_t> data() noexcept { return data_; }

    std::span<const std::uint8_t> pixel(std::int64_t x, std::int64_t y) const noexcept {
        return {data_.data() + offset(x, y), static_cast<std::size_t>(channels_)};
    }
    std::span<std::uint8_t> pixel(std::int64_t x, std::int64_t y) noexcept {
        return {data_.data() + offset(x, y), static_cast<std::size_t>(channels_)};
    }

    bool operator==(const ImageGrid&) const = default;

private:
    std::size_t offset(std::int64_t x, std::int64_t y) const noexcept {
        return static_cast<std::size_t>((x * side_ + y) * channels_);
    }

    std::int64_t side_ = 0;
    int channels_ = 1;
    std::vector<std::uint8_t> data_;
};

}  // namespace fibscramble
