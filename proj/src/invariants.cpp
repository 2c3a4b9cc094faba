#include "spectrum/invariants.hpp"

#include <charconv>
#include <set>

namespace spectrum {

namespace {

const std::vector<std::string>& expected_arg_keys(event_kind kind) {
    static const std::vector<std::string> transfer_ft{"_from", "_to", "_amount"};
    static const std::vector<std::string> transfer_nft{"_from", "_to", "_tokenId"};
    static const std::vector<std::string> upload{"_channel", "_location"};
    static const std::vector<std::string> transfer_nfst{"_from", "_to", "_tokenIdOfNFST"};
    static const std::vector<std::string> rent_by_owner{"_tokenIdOfNFST", "_price", "_duration"};
    static const std::vector<std::string> rent_by_user{"_tokenIdOfNFST", "_renter"};
    switch (kind) {
        case event_kind::transfer_ft: return transfer_ft;
        case event_kind::transfer_nft: return transfer_nft;
        case event_kind::upload_channel_info: return upload;
        case event_kind::transfer_nfst: return transfer_nfst;
        case event_kind::rent_nfst_by_owner: return rent_by_owner;
        case event_kind::rent_nfst_by_user: return rent_by_user;
    }
    return transfer_ft;
}

std::optional<std::string> event_arg(const ledger_event& ev, std::string_view key) {
    for (const auto& [k, v] : ev.args) {
        if (k == key) return v;
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::string> check_invariants(const ledger& led) {
    std::vector<std::string> violations;
    auto fail = [&violations](std::string message) { violations.push_back(std::move(message)); };

    const token_state& tokens = led.tokens();
    const address zero{};

    // Conservation and supply lockstep.
    amount balance_sum;
    for (const auto& [account, value] : tokens.balances) {
        balance_sum = balance_sum + value;
        if (account.is_zero()) fail("zero address holds a balance");
        if (value.is_zero()) fail("zero-valued balance entry for " + account.render());
    }
    if (balance_sum != tokens.total_supply_ft) {
        fail("balance sum " + balance_sum.str() + " != totalSupply_FT " +
             tokens.total_supply_ft.str());
    }
    if (tokens.total_supply_ft != amount::from_units(tokens.total_supply_nft)) {
        fail("totalSupply_FT is not totalSupply_NFT whole units");
    }

    // Floor law over every account that holds FT or NFTs.
    std::map<address, std::uint64_t> nft_counts;
    for (const auto& [id, nft] : tokens.nfts) ++nft_counts[nft.holder];
    std::set<address> accounts;
    for (const auto& [account, value] : tokens.balances) accounts.insert(account);
    for (const auto& [holder, n] : nft_counts) accounts.insert(holder);
    for (const address& account : accounts) {
        const std::uint64_t held = nft_counts.contains(account) ? nft_counts.at(account) : 0;
        const std::uint64_t expected =
            led.is_exempt(account) ? 0 : led.balance_of(account).whole_units();
        if (held != expected) {
            fail("floor law: " + account.render() + " holds " + std::to_string(held) +
                 " NFT(s), expected " + std::to_string(expected));
        }
    }

    // NFT and channel binding consistency.
    std::set<std::string> bound_channels;
    for (const auto& [id, nft] : tokens.nfts) {
        if (id != nft.token_id) fail("NFT map key does not match token id");
        if (id >= tokens.next_token_id) fail("live NFT id beyond the allocation counter");
        if (nft.holder.is_zero()) fail("NFT " + std::to_string(id) + " held by the zero address");
        if (led.is_exempt(nft.holder)) {
            fail("NFT " + std::to_string(id) + " held by an exempt address");
        }
        if (!bound_channels.insert(nft.channel).second) {
            fail("two live NFTs share channel " + nft.channel);
        }
        auto idx = tokens.channel_index.find(nft.channel);
        if (idx == tokens.channel_index.end()) {
            fail("NFT " + std::to_string(id) + " bound to unregistered channel " + nft.channel);
        } else if (tokens.channels[idx->second].bound_nft != id) {
            fail("channel " + nft.channel + " does not record NFT " + std::to_string(id));
        }
    }
    std::uint64_t occupied = 0;
    for (const auto& record : tokens.channels) {
        if (record.occupied()) {
            ++occupied;
            if (!tokens.nfts.contains(*record.bound_nft)) {
                fail("channel " + record.channel + " bound to a dead NFT");
            }
        }
    }
    if (occupied != tokens.nfts.size()) fail("occupied channel count != live NFT count");
    if (tokens.nfts.size() > tokens.channels.size()) fail("more live NFTs than channels");
    if (tokens.nfts.size() > tokens.total_supply_nft) fail("live NFT count exceeds supply cap");

    // NFST records.
    for (const auto& [id, record] : led.nfsts()) {
        const std::string tag = "NFST " + std::to_string(id);
        if (id != record.token_id) fail(tag + ": map key does not match token id");
        if (id >= tokens.next_token_id) fail(tag + ": id beyond the allocation counter");
        if (record.owner.is_zero()) fail(tag + ": owned by the zero address");
        if (record.price.has_value() != record.duration.has_value()) {
            fail(tag + ": half-listed (price without duration or vice versa)");
        }
        if (record.price && record.price->is_zero()) fail(tag + ": listed at zero price");
        if (record.duration && *record.duration == 0) fail(tag + ": listed with zero duration");
        if (!record.user.is_zero()) {
            if (record.expire_time == 0) fail(tag + ": user set without an expiry");
            if (!record.listed()) fail(tag + ": rented while never listed");
            if (record.user == record.owner) fail(tag + ": rented to its own owner");
        } else if (record.expire_time != 0) {
            fail(tag + ": expiry set without a user");
        }
    }

    // Event log: gapless sequence, monotone time, per-kind arg schema, and
    // strictly increasing token ids across all mint events.
    std::uint64_t expected_seq = 0;
    std::uint64_t previous_at = 0;
    std::uint64_t last_minted_id = 0;
    for (const ledger_event& ev : led.events()) {
        if (ev.seq != expected_seq) {
            fail("event seq " + std::to_string(ev.seq) + " breaks the gapless sequence");
        }
        ++expected_seq;
        if (ev.at < previous_at) fail("event timestamps decrease");
        previous_at = ev.at;

        const auto& keys = expected_arg_keys(ev.kind);
        bool keys_ok = ev.args.size() == keys.size();
        for (std::size_t i = 0; keys_ok && i < keys.size(); ++i) {
            keys_ok = ev.args[i].first == keys[i];
        }
        if (!keys_ok) {
            fail(std::string(event_name(ev.kind)) + " event with unexpected arg keys");
            continue;
        }

        if (ev.kind == event_kind::transfer_nft || ev.kind == event_kind::transfer_nfst) {
            if (event_arg(ev, "_from") == zero.render()) {
                const std::string id_text =
                    *event_arg(ev, ev.kind == event_kind::transfer_nft ? "_tokenId"
                                                                       : "_tokenIdOfNFST");
                std::uint64_t id = 0;
                std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
                if (id <= last_minted_id) {
                    fail("minted token id " + id_text + " is not strictly increasing");
                }
                last_minted_id = id;
            }
        }
    }

    return violations;
}

}  // namespace spectrum
