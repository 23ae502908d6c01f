#include "myxo/io/checksum.hpp"

#include <fstream>
#include <vector>

#include <openssl/evp.h>

#include "myxo/errors.hpp"

namespace myxo::io {

namespace {

std::string to_hex(const unsigned char* digest, unsigned len) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

struct Hasher {
    EVP_MD_CTX* ctx;
    Hasher() : ctx(EVP_MD_CTX_new()) {
        if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
            throw RuntimeError("sha256 init failed");
        }
    }
    ~Hasher() { EVP_MD_CTX_free(ctx); }
    void update(const void* data, std::size_t len) {
        if (EVP_DigestUpdate(ctx, data, len) != 1) throw RuntimeError("sha256 update failed");
    }
    std::string finish() {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned len = 0;
        if (EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
            throw RuntimeError("sha256 final failed");
        }
        return to_hex(digest, len);
    }
};

} // namespace

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
    Hasher h;
    h.update(bytes.data(), bytes.size());
    return h.finish();
}

std::string sha256_hex(const std::string& text) {
    Hasher h;
    h.update(text.data(), text.size());
    return h.finish();
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw RuntimeError("cannot open " + path.string() + " for hashing");
    Hasher h;
    std::vector<char> buf(1 << 16);
    while (f) {
        f.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        const auto got = f.gcount();
        if (got > 0) h.update(buf.data(), static_cast<std::size_t>(got));
    }
    if (f.bad()) throw RuntimeError("read error hashing " + path.string());
    return h.finish();
}

} // namespace myxo::io
