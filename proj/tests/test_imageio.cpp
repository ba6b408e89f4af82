#include "fibscramble/errors.hpp"
#include "fibscramble/imageio.hpp"
#include "fibscramble/scramble.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <string>

using namespace fibscramble;
using namespace fibscramble::testing;

namespace {

std::vector<std::uint8_t> raw(const std::string& header, std::vector<std::uint8_t> pixels = {}) {
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), pixels.begin(), pixels.end());
    return out;
}

std::string message_of(const std::vector<std::uint8_t>& bytes) {
    try {
        read_pnm(bytes);
    } catch (const PnmError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("read the 3x3 grid") {
    const ImageGrid g = read_pnm(raw("P5 3 3 255\n", {1, 2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK(g == grid_a());
    CHECK(g.channels() == 1);
}

TEST_CASE("canonical writer output") {
    const ImageGrid one(1, 1, std::uint8_t{0});
    CHECK(write_pnm(one) == std::vector<std::uint8_t>{'P', '5', '\n', '1', ' ', '1', '\n', '2', '5', '5', '\n', 0});
    const ImageGrid rgb(2, 3, std::uint8_t{7});
    const auto bytes = write_pnm(rgb);
    CHECK(std::string(bytes.begin(), bytes.begin() + 11) == "P6\n2 2\n255\n");
    CHECK(bytes.size() == 11 + 12);
}

TEST_CASE("header comments and whitespace are accepted") {
    const ImageGrid g = read_pnm(raw("P5\n# made by hand\n3   3\n# another\n255\n", {1, 2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK(g == grid_a());
    CHECK(write_pnm(g) == raw("P5\n3 3\n255\n", {1, 2, 3, 4, 5, 6, 7, 8, 9}));
    // Pixel bytes that look like whitespace or '#' are data, not header.
    const ImageGrid tricky = read_pnm(raw("P5 2 2 255\n", {'\n', '#', ' ', '9'}));
    CHECK(tricky.data()[1] == '#');
}

TEST_CASE("round trip") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const ImageGrid g = random_grid(1 + static_cast<std::int64_t>(rng() % 40), trial % 3 == 0 ? 3 : 1, rng);
        const auto bytes = write_pnm(g);
        CHECK(read_pnm(bytes) == g);
        CHECK(write_pnm(read_pnm(bytes)) == bytes);
        CHECK(write_pnm(g) == bytes);
    }
}

TEST_CASE("rejections") {
    const std::string non_square = message_of(raw("P6 2 3 255\n", std::vector<std::uint8_t>(18, 0)));
    CHECK(non_square.find("2x3") != std::string::npos);
    CHECK(non_square.find("square") != std::string::npos);
    CHECK(message_of(raw("P5 2 2 65535\n", std::vector<std::uint8_t>(8, 0))).find("maxval") != std::string::npos);
    CHECK(message_of(raw("P5 2 2 255\n", {1, 2, 3})).find("truncated") != std::string::npos);
    CHECK_FALSE(message_of(raw("P2 2 2 255\n1 2 3 4\n")).empty());
    CHECK_FALSE(message_of(raw("P5 x 2 255\n")).empty());
    CHECK_FALSE(message_of(raw("P5 2 2 255")).empty());
    CHECK_FALSE(message_of(raw("P")).empty());
    CHECK_FALSE(message_of(raw("P5 0 0 255\n")).empty());
    CHECK_FALSE(message_of(raw("P5 99999999999 99999999999 255\n")).empty());
}

TEST_CASE("lossless save and load between scramble and unscramble") {
    const auto dir = std::filesystem::temp_directory_path() / "fibscramble_imageio_test";
    std::filesystem::create_directories(dir);
    std::mt19937_64 rng(22);
    for (int channels : {1, 3}) {
        const ImageGrid g = random_grid(48, channels, rng);
        const ScrambleKey key{make_flt(Series::Fib31, 5), 48, 30};
        const auto path = dir / (channels == 1 ? "s.pgm" : "s.ppm");
        save_pnm(scramble(g, key), path);
        CHECK(unscramble(load_pnm(path), key) == g);
    }
    CHECK_THROWS_AS(load_pnm(dir / "missing.pgm"), PnmError);
    std::filesystem::remove_all(dir);
}
