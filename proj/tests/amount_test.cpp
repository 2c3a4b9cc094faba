#include "spectrum/amount.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "spectrum/errors.hpp"

namespace spectrum {
namespace {

TEST(amount, one_ft_is_ten_to_eighteen_wei) {
    EXPECT_EQ(ft_unit().str(), "1000000000000000000");
    EXPECT_EQ(amount::from_units(1).str(), "1000000000000000000");
    EXPECT_EQ(amount::from_units(10).str(), "10000000000000000000");
}

TEST(amount, whole_units_floor) {
    EXPECT_EQ(amount(u256("7900000000000000000")).whole_units(), 7u);
    EXPECT_EQ(amount(u256("100000000000000000")).whole_units(), 0u);
    EXPECT_EQ(amount(u256("2000000000000000000")).whole_units(), 2u);
    EXPECT_EQ(amount().whole_units(), 0u);
}

TEST(amount, checked_addition_overflow) {
    const amount max(std::numeric_limits<u256>::max());
    try {
        (void)(max + amount(u256(1)));
        FAIL() << "expected overflow";
    } catch (const ledger_error& e) {
        EXPECT_EQ(e.code(), errc::overflow);
    }
}

TEST(amount, checked_subtraction_below_zero) {
    try {
        (void)(amount(u256(1)) - amount(u256(2)));
        FAIL() << "expected overflow";
    } catch (const ledger_error& e) {
        EXPECT_EQ(e.code(), errc::overflow);
    }
}

TEST(amount, ordering) {
    const amount small(u256(5));
    const amount large(u256(6));
    EXPECT_LT(small, large);
    EXPECT_EQ(small, amount(u256(5)));
    EXPECT_TRUE(amount().is_zero());
    EXPECT_EQ((large - small).str(), "1");
    EXPECT_EQ((small + large).str(), "11");
}

TEST(amount, from_units_overflow) {
    // 2^64-1 whole units still fits 256 bits comfortably.
    EXPECT_NO_THROW(amount::from_units(std::numeric_limits<std::uint64_t>::max()));
}

}  // namespace
}  // namespace spectrum
