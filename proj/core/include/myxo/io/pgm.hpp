#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace myxo::io {

/// 8-bit grayscale raster, row-major, top row first.
struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(std::size_t w, std::size_t h, std::uint8_t fill = 255)
        : width(w), height(h), pixels(w * h, fill) {}

    std::uint8_t& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }
    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

/// Writes binary PGM (P5, maxval 255). Throws RuntimeError on I/O failure.
void write_pgm(const std::filesystem::path& path, const GrayImage& image);

/// Serializes to the exact bytes write_pgm would produce.
std::vector<std::uint8_t> encode_pgm(const GrayImage& image);

} // namespace myxo::io
