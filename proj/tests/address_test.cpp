#include "spectrum/address.hpp"

#include <gtest/gtest.h>

#include <random>

namespace spectrum {
namespace {

TEST(address, renders_42_char_lowercase_hex) {
    std::array<unsigned char, address::byte_size> bytes{};
    bytes[0] = 0xAB;
    bytes[19] = 0x01;
    const address a(bytes);
    EXPECT_EQ(a.render().size(), 42u);
    EXPECT_EQ(a.render(), "0xab00000000000000000000000000000000000001");
}

TEST(address, zero_address_default) {
    const address zero;
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.render(), "0x0000000000000000000000000000000000000000");
    EXPECT_EQ(address::parse(zero.render()), zero);
}

TEST(address, parse_render_round_trip) {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 500; ++i) {
        std::array<unsigned char, address::byte_size> bytes{};
        for (auto& b : bytes) b = static_cast<unsigned char>(rng());
        const address a(bytes);
        auto back = address::parse(a.render());
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, a);
    }
}

TEST(address, parse_accepts_mixed_case_renders_lowercase) {
    auto a = address::parse("0x0aa7652B45d957B9d2dE60AFbbD90b2DaD3d1f60");
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(a->render(), "0x0aa7652b45d957b9d2de60afbbd90b2dad3d1f60");
}

TEST(address, parse_rejects_bad_shapes) {
    EXPECT_FALSE(address::parse(""));
    EXPECT_FALSE(address::parse("0x"));
    EXPECT_FALSE(address::parse("0x1234"));                                      // short
    EXPECT_FALSE(address::parse("1234567890123456789012345678901234567890xx"));  // no prefix
    EXPECT_FALSE(address::parse("0x12345678901234567890123456789012345678gg"));  // bad digit
    EXPECT_FALSE(address::parse("0x123456789012345678901234567890123456789"));   // 39 digits
    EXPECT_FALSE(address::parse("0x12345678901234567890123456789012345678901")); // 41 digits
}

TEST(address, from_name_is_stable_and_distinct) {
    const address pu = address::from_name("PU");
    EXPECT_EQ(pu, address::from_name("PU"));
    EXPECT_FALSE(pu.is_zero());
    const std::array<std::string, 4> sus{"SU1", "SU2", "SU3", "SU4"};
    for (const auto& name : sus) {
        EXPECT_NE(address::from_name(name), pu);
        EXPECT_FALSE(address::from_name(name).is_zero());
    }
    EXPECT_NE(address::from_name("SU1"), address::from_name("SU2"));
}

}  // namespace
}  // namespace spectrum
