#include "spectrum/address.hpp"

#include <openssl/evp.h>

#include <algorithm>

namespace spectrum {

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

constexpr char hex_digits[] = "0123456789abcdef";

}  // namespace

std::optional<address> address::parse(std::string_view text) {
    if (text.size() != 2 + 2 * byte_size) return std::nullopt;
    if (text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) return std::nullopt;
    std::array<unsigned char, byte_size> out{};
    for (std::size_t i = 0; i < byte_size; ++i) {
        int hi = hex_nibble(text[2 + 2 * i]);
        int lo = hex_nibble(text[3 + 2 * i]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out[i] = static_cast<unsigned char>(hi << 4 | lo);
    }
    return address(out);
}

address address::from_name(std::string_view name) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    EVP_Digest(name.data(), name.size(), digest, &digest_len, EVP_sha256(), nullptr);
    std::array<unsigned char, byte_size> out{};
    std::copy_n(digest, byte_size, out.begin());
    return address(out);
}

std::string address::render() const {
    std::string out;
    out.reserve(2 + 2 * byte_size);
    out += "0x";
    for (unsigned char b : bytes_) {
        out += hex_digits[b >> 4];
        out += hex_digits[b & 0x0f];
    }
    return out;
}

bool address::is_zero() const {
    return std::ranges::all_of(bytes_, [](unsigned char b) { return b == 0; });
}

}  // namespace spectrum
