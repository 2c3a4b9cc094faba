#include "spectrum/ledger.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "spectrum/scenario.hpp"
#include "test_util.hpp"

namespace spectrum {
namespace {

using test::addr;
using test::funded_ledger;
using test::pu;

TEST(ledger, create_records_owner_at_time_zero) {
    const ledger led(pu());
    EXPECT_EQ(led.owner().render(), test::pu_hex);
    EXPECT_EQ(led.now(), 0u);
    EXPECT_TRUE(led.events().empty());
    EXPECT_TRUE(led.is_exempt(pu()));
    EXPECT_FALSE(led.is_exempt(addr("SU1")));
}

TEST(ledger, create_rejects_zero_owner) {
    try {
        ledger led((address()));
        FAIL() << "expected ZeroAddress";
    } catch (const ledger_error& e) {
        EXPECT_EQ(e.code(), errc::zero_address);
    }
}

TEST(ledger, advance_time_accumulates) {
    ledger led(pu());
    EXPECT_EQ(led.advance_time(86400), 86400u);
    EXPECT_EQ(led.advance_time(0), 86400u);
    ledger led2(pu());
    led2.advance_time(100);
    EXPECT_EQ(led2.advance_time(50), 150u);
}

TEST(ledger, advance_time_overflow) {
    ledger led(pu());
    led.advance_time(std::numeric_limits<std::uint64_t>::max());
    try {
        led.advance_time(1);
        FAIL() << "expected Overflow";
    } catch (const ledger_error& e) {
        EXPECT_EQ(e.code(), errc::overflow);
    }
}

TEST(ledger, mint_event_shape) {
    ledger led(pu());
    led.mint_ft(pu(), pu(), 10);
    ASSERT_EQ(led.events().size(), 1u);
    const ledger_event& ev = led.events().front();
    EXPECT_EQ(ev.seq, 0u);
    EXPECT_EQ(ev.at, 0u);
    EXPECT_EQ(event_name(ev.kind), "TransferFT");
    const std::vector<std::pair<std::string, std::string>> expected{
        {"_from", test::zero_hex},
        {"_to", test::pu_hex},
        {"_amount", "10000000000000000000"},
    };
    EXPECT_EQ(ev.args, expected);
}

// Independent count model: each operation's emission count is predicted from
// plain rules, never by consulting the ledger's own log.
TEST(ledger, event_count_matches_counting_model) {
    ledger led(pu());
    std::size_t predicted = 0;
    auto expect_emitted = [&](std::size_t n) {
        predicted += n;
        ASSERT_EQ(led.events().size(), predicted);
    };

    led.mint_ft(pu(), pu(), 10);
    expect_emitted(1);  // TransferFT
    led.upload_channel(pu(), "C1", "L1");
    expect_emitted(1);  // UploadChannelInfo
    led.upload_channel(pu(), "C1", "elsewhere");
    expect_emitted(0);  // duplicate: silent
    led.upload_channel(pu(), "C2", "L2");
    expect_emitted(1);
    led.transfer(pu(), addr("SU1"), amount(u256("1500000000000000000")));
    expect_emitted(2);  // TransferFT + 1 mint (floor 0 -> 1)
    led.mint_nfst(pu(), "C1", "L1");
    expect_emitted(1);  // TransferNFST
    led.list_nfst(pu(), 2, amount(u256("100000000000000000")), 86400);
    expect_emitted(1);  // RentNFSTByOwner
    led.rent_nfst_by_user(2, addr("SU1"), led.now());
    expect_emitted(2);  // payment TransferFT (1.5 -> 1.4, no burn) + RentNFSTByUser

    // Gapless 0-based sequence, monotone timestamps.
    std::uint64_t seq = 0;
    std::uint64_t at = 0;
    for (const ledger_event& ev : led.events()) {
        EXPECT_EQ(ev.seq, seq++);
        EXPECT_GE(ev.at, at);
        at = ev.at;
    }
}

TEST(ledger, fresh_snapshot_is_empty) {
    const ledger led(pu());
    const auto doc = led.snapshot();
    EXPECT_EQ(doc["owner"], test::pu_hex);
    EXPECT_EQ(doc["time"], 0);
    EXPECT_TRUE(doc["ft_balances"].empty());
    EXPECT_TRUE(doc["nft_holdings"].empty());
    EXPECT_TRUE(doc["channels"].empty());
    EXPECT_TRUE(doc["nfst_records"].empty());
    EXPECT_EQ(doc["totalSupply_FT"], "0");
    EXPECT_EQ(doc["totalSupply_NFT"], 0);
}

TEST(ledger, snapshot_after_initial_allocation) {
    // Owner keeps 8 FT, SU3 buys 2 FT and thereby holds 2 NFTs.
    ledger led = funded_ledger(pu(), 10);
    led.transfer(pu(), addr("SU3"), amount::from_units(2));

    const auto doc = led.snapshot();
    EXPECT_EQ(doc["ft_balances"][test::pu_hex], "8000000000000000000");
    EXPECT_EQ(doc["ft_balances"][addr("SU3").render()], "2000000000000000000");
    EXPECT_EQ(doc["nft_holdings"][addr("SU3").render()].size(), 2u);
    EXPECT_FALSE(doc["nft_holdings"].contains(test::pu_hex));
    EXPECT_EQ(doc["totalSupply_FT"], "10000000000000000000");
    EXPECT_EQ(doc["totalSupply_NFT"], 10);
}

TEST(ledger, zero_address_never_appears_in_snapshots) {
    ledger led = funded_ledger(pu(), 4);
    led.transfer(pu(), addr("SU1"), amount::from_units(2));
    led.mint_nfst(pu(), "Channel1", "Location1");
    const auto doc = led.snapshot();
    EXPECT_FALSE(doc["ft_balances"].contains(test::zero_hex));
    EXPECT_FALSE(doc["nft_holdings"].contains(test::zero_hex));
    for (const auto& record : doc["nfst_records"]) {
        EXPECT_NE(record["owner"], test::zero_hex);
    }
}

// Replay oracle: feeding the same operations to a second instance must
// reproduce the snapshot and the rendered event log byte for byte.
TEST(ledger, replay_reproduces_snapshot_bytes) {
    auto script = [](ledger& led) {
        led.mint_ft(pu(), pu(), 5);
        for (int i = 1; i <= 5; ++i) {
            led.upload_channel(pu(), "C" + std::to_string(i), "L" + std::to_string(i));
        }
        led.transfer(pu(), addr("SU1"), amount(u256("2300000000000000000")));
        led.advance_time(37);
        led.mint_nfst(pu(), "C3", "L3");
        led.list_nfst(pu(), 3, amount(u256("250000000000000000")), 600);
        led.rent_nfst_by_user(3, addr("SU1"), led.now());
        led.advance_time(601);
        led.transfer(addr("SU1"), addr("SU2"), amount(u256("1050000000000000000")));
    };
    ledger first(pu());
    ledger second(pu());
    script(first);
    script(second);
    EXPECT_EQ(first.snapshot_text(), second.snapshot_text());
    EXPECT_EQ(render_events(first.events()), render_events(second.events()));
}

}  // namespace
}  // namespace spectrum
