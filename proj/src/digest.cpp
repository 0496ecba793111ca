#include "devrank/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace devrank {

namespace {

struct DigestContext {
    EVP_MD_CTX* ctx;

    DigestContext() : ctx(EVP_MD_CTX_new()) {
        if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256 init failed");
    }
    ~DigestContext() { EVP_MD_CTX_free(ctx); }
    DigestContext(const DigestContext&) = delete;
    DigestContext& operator=(const DigestContext&) = delete;

    void update(const void* data, std::size_t size) {
        if (EVP_DigestUpdate(ctx, data, size) != 1)
            throw std::runtime_error("sha256 update failed");
    }

    std::string hex() {
        std::array<unsigned char, EVP_MAX_MD_SIZE> raw{};
        unsigned int size = 0;
        if (EVP_DigestFinal_ex(ctx, raw.data(), &size) != 1)
            throw std::runtime_error("sha256 final failed");
        static constexpr char digits[] = "0123456789abcdef";
        std::string out(size * 2, '0');
        for (unsigned int i = 0; i < size; ++i) {
            out[2 * i] = digits[raw[i] >> 4];
            out[2 * i + 1] = digits[raw[i] & 0xf];
        }
        return out;
    }
};

}  // namespace

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    DigestContext digest;
    std::array<char, 1 << 16> buffer;
    while (in) {
        in.read(buffer.data(), buffer.size());
        digest.update(buffer.data(), static_cast<std::size_t>(in.gcount()));
    }
    return digest.hex();
}

std::string sha256_bytes(std::string_view data) {
    DigestContext digest;
    digest.update(data.data(), data.size());
    return digest.hex();
}

}  // namespace devrank
