#include <limits>

#include "spectrum/ledger.hpp"

namespace spectrum {

namespace {

const std::string zero_address_hex = address{}.render();

}  // namespace

std::uint64_t ledger::mint_nfst(const address& caller, const std::string& channel,
                                const std::string& location) {
    if (caller != owner_) {
        throw ledger_error(errc::not_owner, "mint_nfst: caller is not the contract owner");
    }
    if (!tokens_.channel_index.contains(channel)) {
        throw ledger_error(errc::unknown_channel,
                           "mint_nfst: channel '" + channel + "' was never uploaded");
    }
    const std::uint64_t token_id = tokens_.next_token_id++;
    nfsts_[token_id] = nfst_record{
        .token_id = token_id,
        .owner = caller,
        .channel = channel,
        .location = location,
        .price = std::nullopt,
        .duration = std::nullopt,
        .user = address{},
        .expire_time = 0,
    };
    emit(event_kind::transfer_nfst, {{"_from", zero_address_hex},
                                     {"_to", caller.render()},
                                     {"_tokenIdOfNFST", std::to_string(token_id)}});
    return token_id;
}

void ledger::list_nfst(const address& caller, std::uint64_t token_id, const amount& price,
                       std::uint64_t duration) {
    auto it = nfsts_.find(token_id);
    if (it == nfsts_.end()) {
        throw ledger_error(errc::unknown_token,
                           "list_nfst: no NFST with token id " + std::to_string(token_id));
    }
    if (caller != it->second.owner) {
        throw ledger_error(errc::not_nfst_owner, "list_nfst: caller does not own the NFST");
    }
    if (price.is_zero()) {
        throw ledger_error(errc::zero_price, "list_nfst: price must be positive");
    }
    if (duration == 0) {
        throw ledger_error(errc::zero_duration, "list_nfst: duration must be positive");
    }
    it->second.price = price;
    it->second.duration = duration;
    emit(event_kind::rent_nfst_by_owner, {{"_tokenIdOfNFST", std::to_string(token_id)},
                                          {"_price", price.str()},
                                          {"_duration", std::to_string(duration)}});
}

void ledger::rent_nfst_by_user(std::uint64_t token_id, const address& renter, timestamp now) {
    auto it = nfsts_.find(token_id);
    if (it == nfsts_.end()) {
        throw ledger_error(errc::unknown_token,
                           "rent_nfst_by_user: no NFST with token id " + std::to_string(token_id));
    }
    nfst_record& record = it->second;
    if (renter.is_zero()) {
        throw ledger_error(errc::zero_address, "rent_nfst_by_user: renter is the zero address");
    }
    if (!record.listed()) {
        throw ledger_error(errc::not_listed,
                           "rent_nfst_by_user: token " + std::to_string(token_id) +
                               " has no price/duration listing");
    }
    if (renter == record.owner) {
        throw ledger_error(errc::self_rental, "rent_nfst_by_user: owner cannot rent its own NFST");
    }
    if (record.rented_at(now)) {
        throw ledger_error(errc::already_rented,
                           "rent_nfst_by_user: token " + std::to_string(token_id) +
                               " is rented through time " + std::to_string(record.expire_time));
    }
    if (balance_of(renter) < *record.price) {
        throw ledger_error(errc::insufficient_balance,
                           "rent_nfst_by_user: renter balance is below the listed price");
    }
    if (*record.duration > std::numeric_limits<std::uint64_t>::max() - now) {
        throw ledger_error(errc::overflow, "rent_nfst_by_user: expiry timestamp overflow");
    }
    // Payment first (with its usual NFT mint/burn effects), then the grant;
    // transfer() either completes or throws, so the pair stays atomic.
    transfer(renter, record.owner, *record.price);
    record.user = renter;
    record.expire_time = *record.duration + now;
    emit(event_kind::rent_nfst_by_user, {{"_tokenIdOfNFST", std::to_string(token_id)},
                                         {"_renter", renter.render()}});
}

address ledger::user_of(std::uint64_t token_id, timestamp now) const {
    auto it = nfsts_.find(token_id);
    if (it == nfsts_.end()) {
        throw ledger_error(errc::unknown_token,
                           "user_of: no NFST with token id " + std::to_string(token_id));
    }
    return it->second.rented_at(now) ? it->second.user : address{};
}

std::uint64_t ledger::reset_expired(timestamp now) {
    std::uint64_t reset = 0;
    for (auto& [id, record] : nfsts_) {
        if (!record.user.is_zero() && record.expire_time < now) {
            record.user = address{};
            record.expire_time = 0;
            ++reset;
        }
    }
    return reset;
}

std::vector<nfst_record> ledger::available_nfsts(timestamp now) const {
    std::vector<nfst_record> available;
    for (const auto& [id, record] : nfsts_) {
        if (record.listed() && !record.rented_at(now)) available.push_back(record);
    }
    return available;
}

}  // namespace spectrum
