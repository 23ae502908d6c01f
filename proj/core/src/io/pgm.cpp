#include "myxo/io/pgm.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "myxo/errors.hpp"

namespace myxo::io {

std::vector<std::uint8_t> encode_pgm(const GrayImage& image) {
    const std::string header = "P5\n" + std::to_string(image.width) + " " +
                               std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + image.pixels.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), image.pixels.begin(), image.pixels.end());
    return out;
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw RuntimeError("cannot open " + path.string() + " for writing");
    const auto bytes = encode_pgm(image);
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw RuntimeError("short write to " + path.string());
}

} // namespace myxo::io
