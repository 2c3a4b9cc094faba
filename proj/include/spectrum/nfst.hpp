#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spectrum/address.hpp"
#include "spectrum/amount.hpp"

namespace spectrum {

/// Rentable spectrum token. price/duration stay unset until the owner lists
/// it; user is the zero address and expire_time 0 while unrented. A record
/// is rented at time t iff user != zero and expire_time >= t.
struct nfst_record {
    std::uint64_t token_id{0};
    address owner;
    std::string channel;
    std::string location;
    std::optional<amount> price;
    std::optional<std::uint64_t> duration;
    address user;
    std::uint64_t expire_time{0};

    bool listed() const { return price.has_value() && duration.has_value(); }
    bool rented_at(std::uint64_t now) const { return !user.is_zero() && expire_time >= now; }
};

}  // namespace spectrum
