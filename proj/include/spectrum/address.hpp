#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spectrum {

/// 20-byte account identifier. The default-constructed value is the zero
/// address, which is reserved as the mint/burn endpoint: it never holds a
/// balance and is never registered as an account.
class address {
public:
    static constexpr std::size_t byte_size = 20;

    constexpr address() = default;
    explicit address(const std::array<unsigned char, byte_size>& bytes) : bytes_(bytes) {}

    /// Accepts "0x" + 40 hex digits (either case). Returns nullopt on any
    /// other shape.
    static std::optional<address> parse(std::string_view text);

    /// Deterministic address for a human-readable account name: SHA-256 of
    /// the name truncated to 20 bytes.
    static address from_name(std::string_view name);

    /// 0x-prefixed lowercase hex, always 42 characters.
    std::string render() const;

    bool is_zero() const;

    const std::array<unsigned char, byte_size>& bytes() const { return bytes_; }

    auto operator<=>(const address&) const = default;

private:
    std::array<unsigned char, byte_size> bytes_{};
};

}  // namespace spectrum
