#include "spectrum/event.hpp"

#include "spectrum/errors.hpp"

namespace spectrum {

std::string_view errc_name(errc code) {
    switch (code) {
        case errc::zero_address: return "ZeroAddress";
        case errc::not_owner: return "NotOwner";
        case errc::zero_amount: return "ZeroAmount";
        case errc::insufficient_balance: return "InsufficientBalance";
        case errc::no_free_channel: return "NoFreeChannel";
        case errc::empty_channel_id: return "EmptyChannelId";
        case errc::unknown_channel: return "UnknownChannel";
        case errc::unknown_token: return "UnknownToken";
        case errc::not_nfst_owner: return "NotNfstOwner";
        case errc::zero_price: return "ZeroPrice";
        case errc::zero_duration: return "ZeroDuration";
        case errc::already_rented: return "AlreadyRented";
        case errc::not_listed: return "NotListed";
        case errc::self_rental: return "SelfRental";
        case errc::overflow: return "Overflow";
        case errc::malformed_amount: return "MalformedAmount";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

std::string_view event_name(event_kind kind) {
    switch (kind) {
        case event_kind::transfer_ft: return "TransferFT";
        case event_kind::transfer_nft: return "TransferNFT";
        case event_kind::upload_channel_info: return "UploadChannelInfo";
        case event_kind::transfer_nfst: return "TransferNFST";
        case event_kind::rent_nfst_by_owner: return "RentNFSTByOwner";
        case event_kind::rent_nfst_by_user: return "RentNFSTByUser";
    }
    return "UnknownEvent";
}

nlohmann::ordered_json event_record(const ledger_event& ev) {
    nlohmann::ordered_json record;
    record["event"] = event_name(ev.kind);
    auto args = nlohmann::ordered_json::object();
    for (const auto& [key, value] : ev.args) args[key] = value;
    record["args"] = std::move(args);
    return record;
}

}  // namespace spectrum
