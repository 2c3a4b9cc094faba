#include <algorithm>
#include <limits>

#include "spectrum/ledger.hpp"

namespace spectrum {

namespace {

const std::string zero_address_hex = address{}.render();

}  // namespace

void ledger::mint_ft(const address& caller, const address& recipient,
                     std::uint64_t whole_units) {
    if (caller != owner_) {
        throw ledger_error(errc::not_owner, "mint_ft: caller is not the contract owner");
    }
    if (recipient.is_zero()) {
        throw ledger_error(errc::zero_address, "mint_ft: recipient is the zero address");
    }
    if (whole_units == 0) {
        throw ledger_error(errc::zero_amount, "mint_ft: whole_units must be at least 1");
    }
    if (whole_units > std::numeric_limits<std::uint64_t>::max() - tokens_.total_supply_nft) {
        throw ledger_error(errc::overflow, "mint_ft: NFT supply overflow");
    }
    const amount minted = amount::from_units(whole_units);
    const amount new_balance = balance_of(recipient) + minted;
    const amount new_supply = tokens_.total_supply_ft + minted;

    set_balance(recipient, new_balance);
    tokens_.total_supply_ft = new_supply;
    tokens_.total_supply_nft += whole_units;
    emit(event_kind::transfer_ft, {{"_from", zero_address_hex},
                                   {"_to", recipient.render()},
                                   {"_amount", minted.str()}});
}

bool ledger::upload_channel(const address& caller, const std::string& channel,
                            const std::string& location) {
    if (caller != owner_) {
        throw ledger_error(errc::not_owner, "upload_channel: caller is not the contract owner");
    }
    if (channel.empty()) {
        throw ledger_error(errc::empty_channel_id, "upload_channel: channel id is empty");
    }
    if (tokens_.channel_index.contains(channel)) return false;

    tokens_.channel_index[channel] = tokens_.channels.size();
    tokens_.channels.push_back(channel_record{
        .channel = channel,
        .location = location,
        .upload_index = static_cast<std::uint64_t>(tokens_.channels.size()),
        .bound_nft = std::nullopt,
    });
    emit(event_kind::upload_channel_info, {{"_channel", channel}, {"_location", location}});
    return true;
}

void ledger::transfer(const address& sender, const address& recipient, const amount& value) {
    if (sender.is_zero() || recipient.is_zero()) {
        throw ledger_error(errc::zero_address, "transfer: sender and recipient must be non-zero");
    }
    const amount sender_before = balance_of(sender);
    if (sender_before < value) {
        throw ledger_error(errc::insufficient_balance,
                           "transfer: balance " + sender_before.str() + " wei is less than " +
                               value.str() + " wei");
    }
    const bool self = sender == recipient;
    const amount recipient_before = self ? sender_before : balance_of(recipient);
    const amount sender_after = self ? sender_before : sender_before - value;
    const amount recipient_after = self ? recipient_before : recipient_before + value;

    const std::uint64_t burn_count =
        is_exempt(sender) ? 0 : sender_before.whole_units() - sender_after.whole_units();
    const std::uint64_t mint_count =
        is_exempt(recipient) ? 0 : recipient_after.whole_units() - recipient_before.whole_units();

    // Burned NFTs free their channels first, so the worst case still needs
    // mint_count slots out of (currently free + about to be freed).
    if (mint_count > free_channel_count() + burn_count) {
        throw ledger_error(errc::no_free_channel,
                           "transfer: " + std::to_string(mint_count) +
                               " NFT mint(s) requested but only " +
                               std::to_string(free_channel_count() + burn_count) +
                               " channel(s) available");
    }

    set_balance(sender, sender_after);
    set_balance(recipient, recipient_after);
    emit(event_kind::transfer_ft, {{"_from", sender.render()},
                                   {"_to", recipient.render()},
                                   {"_amount", value.str()}});
    burn_nfts(sender, burn_count);
    mint_nfts(recipient, mint_count);
}

void ledger::burn_nfts(const address& holder, std::uint64_t count) {
    // LIFO: highest token id among the holder's NFTs burns first.
    for (std::uint64_t burned = 0; burned < count; ++burned) {
        auto it = tokens_.nfts.rbegin();
        while (it != tokens_.nfts.rend() && it->second.holder != holder) ++it;
        if (it == tokens_.nfts.rend()) {
            throw std::logic_error("burn_nfts: holder owns fewer NFTs than the floor law implies");
        }
        const spectrum_nft nft = it->second;
        tokens_.channels[tokens_.channel_index.at(nft.channel)].bound_nft.reset();
        tokens_.nfts.erase(nft.token_id);
        emit(event_kind::transfer_nft, {{"_from", holder.render()},
                                        {"_to", zero_address_hex},
                                        {"_tokenId", std::to_string(nft.token_id)}});
    }
}

void ledger::mint_nfts(const address& recipient, std::uint64_t count) {
    for (std::uint64_t minted = 0; minted < count; ++minted) {
        // Lowest upload index wins among unoccupied channels.
        auto slot = std::ranges::find_if(tokens_.channels,
                                         [](const channel_record& r) { return !r.occupied(); });
        if (slot == tokens_.channels.end()) {
            throw std::logic_error("mint_nfts: no unoccupied channel despite availability check");
        }
        const std::uint64_t token_id = tokens_.next_token_id++;
        slot->bound_nft = token_id;
        tokens_.nfts[token_id] = spectrum_nft{
            .token_id = token_id,
            .holder = recipient,
            .channel = slot->channel,
            .location = slot->location,
        };
        emit(event_kind::transfer_nft, {{"_from", zero_address_hex},
                                        {"_to", recipient.render()},
                                        {"_tokenId", std::to_string(token_id)}});
    }
}

std::uint64_t ledger::free_channel_count() const {
    return tokens_.channels.size() - tokens_.nfts.size();
}

amount ledger::balance_of(const address& account) const {
    auto it = tokens_.balances.find(account);
    return it == tokens_.balances.end() ? amount{} : it->second;
}

std::vector<spectrum_nft> ledger::nfts_of(const address& account) const {
    std::vector<spectrum_nft> owned;
    for (const auto& [id, nft] : tokens_.nfts) {
        if (nft.holder == account) owned.push_back(nft);
    }
    return owned;
}

std::vector<channel_view> ledger::channel_list() const {
    std::vector<channel_view> rows;
    rows.reserve(tokens_.channels.size());
    for (const auto& record : tokens_.channels) {
        rows.push_back(channel_view{record.channel, record.location, record.occupied()});
    }
    return rows;
}

}  // namespace spectrum
