#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spectrum/ledger.hpp"

namespace spectrum::test {

// Fully spelled owner account used across fixtures.
inline constexpr const char* pu_hex = "0x0aa7652b45d957b9d2de60afbbd90b2dad3d1f60";

inline address pu() { return *address::parse(pu_hex); }

inline address addr(std::string_view name) { return address::from_name(name); }

inline const std::string zero_hex = address{}.render();

/// Owner-funded ledger with one uploaded channel per minted whole unit, the
/// stance every scenario takes before moving FT to non-exempt accounts.
inline ledger funded_ledger(const address& owner, std::uint64_t units,
                            const std::string& channel_prefix = "Channel",
                            const std::string& location_prefix = "Location") {
    ledger led(owner);
    led.mint_ft(owner, owner, units);
    for (std::uint64_t i = 1; i <= units; ++i) {
        led.upload_channel(owner, channel_prefix + std::to_string(i),
                           location_prefix + std::to_string(i));
    }
    return led;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string source_path(const std::string& relative) {
    return std::string(SPECTRUM_SOURCE_DIR) + "/" + relative;
}

}  // namespace spectrum::test
