#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spectrum/address.hpp"
#include "spectrum/amount.hpp"

namespace spectrum {

/// An uploaded spectrum asset. Channel ids are unique; a record backs at
/// most one live NFT at a time.
struct channel_record {
    std::string channel;
    std::string location;
    std::uint64_t upload_index{0};
    std::optional<std::uint64_t> bound_nft;

    bool occupied() const { return bound_nft.has_value(); }
};

/// ERC404-side NFT: one per whole FT held by a non-exempt account, bound to
/// exactly one channel.
struct spectrum_nft {
    std::uint64_t token_id{0};
    address holder;
    std::string channel;
    std::string location;
};

/// Row of channel_list(): registry order with current occupancy.
struct channel_view {
    std::string channel;
    std::string location;
    bool occupied{false};

    bool operator==(const channel_view&) const = default;
};

/// Dual-token state. totalSupply_NFT counts whole units ever minted and acts
/// as the live-NFT cap; it is never decremented on burn.
struct token_state {
    std::map<address, amount> balances;
    std::set<address> exempt;
    amount total_supply_ft;
    std::uint64_t total_supply_nft{0};
    std::map<std::uint64_t, spectrum_nft> nfts;
    std::vector<channel_record> channels;
    std::map<std::string, std::size_t> channel_index;
    std::uint64_t next_token_id{1};
};

}  // namespace spectrum
