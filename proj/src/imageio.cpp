#include "fibscramble/imageio.hpp"

#include "fibscramble/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

namespace fibscramble {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::string magic() {
        if (bytes_.size() < 2) throw PnmError("PNM stream too short for a magic number");
        std::string m{static_cast<char>(bytes_[0]), static_cast<char>(bytes_[1])};
        pos_ = 2;
        return m;
    }

    std::int64_t number(const char* field) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            throw PnmError(std::string("malformed PNM header: expected ") + field);
        }
        std::int64_t value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<std::int32_t>::max()) {
                throw PnmError(std::string("PNM ") + field + " is too large");
            }
            ++pos_;
        }
        return value;
    }

    /// Consumes the single whitespace byte that ends the header.
    std::size_t data_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw PnmError("malformed PNM header: missing whitespace after maxval");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

ImageGrid read_pnm(std::span<const std::uint8_t> bytes) {
    HeaderReader reader(bytes);
    PnmHeader h;
    h.magic = reader.magic();
    if (h.magic != "P5" && h.magic != "P6") {
        throw PnmError("unsupported PNM magic '" + h.magic + "' (only binary P5 and P6 are supported)");
    }
    h.width = reader.number("width");
    h.height = reader.number("height");
    const std::int64_t maxval = reader.number("maxval");
    if (h.width < 1 || h.height < 1) throw PnmError("PNM width and height must be >= 1");
    if (maxval != 255) throw PnmError("PNM maxval must be 255, got " + std::to_string(maxval));
    if (h.width != h.height) {
        throw PnmError("image is " + std::to_string(h.width) + "x" + std::to_string(h.height) +
                       " (width x height); only square images can be scrambled, crop or pad it to NxN first");
    }
    const int channels = h.magic == "P5" ? 1 : 3;
    const std::size_t offset = reader.data_offset();
    const auto expected = static_cast<std::size_t>(h.width * h.height * channels);
    if (bytes.size() - std::min(offset, bytes.size()) < expected) {
        throw PnmError("truncated PNM pixel data: expected " + std::to_string(expected) + " bytes, found " +
                       std::to_string(bytes.size() - std::min(offset, bytes.size())));
    }
    std::vector<std::uint8_t> pixels(bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                                     bytes.begin() + static_cast<std::ptrdiff_t>(offset + expected));
    return ImageGrid(h.width, channels, std::move(pixels));
}

std::vector<std::uint8_t> write_pnm(const ImageGrid& img) {
    const std::string header = std::string(img.channels() == 1 ? "P5" : "P6") + "\n" + std::to_string(img.side()) +
                               " " + std::to_string(img.side()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.data().begin(), img.data().end());
    return out;
}

ImageGrid load_pnm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PnmError("cannot open " + path.string());
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return read_pnm(bytes);
    } catch (const PnmError& e) {
        throw PnmError(path.string() + ": " + e.what());
    }
}

void save_pnm(const ImageGrid& img, const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = write_pnm(img);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PnmError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw PnmError("write failed for " + path.string());
}

}  // namespace fibscramble
