#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectrum {

enum class event_kind {
    transfer_ft,
    transfer_nft,
    upload_channel_info,
    transfer_nfst,
    rent_nfst_by_owner,
    rent_nfst_by_user,
};

std::string_view event_name(event_kind kind);

/// One entry of the ordered event log. `seq` values are contiguous from 0 in
/// emission order; `at` is the ledger time at emission. Args keep their
/// emission order (underscore-prefixed keys, amounts as decimal wei strings,
/// addresses as 0x-hex).
struct ledger_event {
    std::uint64_t seq{0};
    std::uint64_t at{0};
    event_kind kind{event_kind::transfer_ft};
    std::vector<std::pair<std::string, std::string>> args;
};

/// {"event": ..., "args": {...}} with args in emission order.
nlohmann::ordered_json event_record(const ledger_event& ev);

}  // namespace spectrum
