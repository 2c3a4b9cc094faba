#include "spectrum/ledger.hpp"

#include <limits>

namespace spectrum {

ledger::ledger(const address& owner) : owner_(owner) {
    if (owner.is_zero()) {
        throw ledger_error(errc::zero_address, "the contract owner cannot be the zero address");
    }
    tokens_.exempt.insert(owner);
}

timestamp ledger::advance_time(std::uint64_t delta) {
    if (delta > std::numeric_limits<std::uint64_t>::max() - time_) {
        throw ledger_error(errc::overflow, "timestamp overflow");
    }
    time_ += delta;
    reset_expired(time_);
    return time_;
}

void ledger::emit(event_kind kind, std::vector<std::pair<std::string, std::string>> args) {
    events_.push_back(ledger_event{
        .seq = static_cast<std::uint64_t>(events_.size()),
        .at = time_,
        .kind = kind,
        .args = std::move(args),
    });
}

void ledger::set_balance(const address& account, const amount& value) {
    if (value.is_zero()) {
        tokens_.balances.erase(account);
    } else {
        tokens_.balances[account] = value;
    }
}

nlohmann::ordered_json ledger::snapshot() const {
    nlohmann::ordered_json doc;
    doc["owner"] = owner_.render();
    doc["time"] = time_;

    auto balances = nlohmann::ordered_json::object();
    for (const auto& [account, value] : tokens_.balances) {
        balances[account.render()] = value.str();
    }
    doc["ft_balances"] = std::move(balances);

    auto holdings = nlohmann::ordered_json::object();
    std::map<address, std::vector<const spectrum_nft*>> by_holder;
    for (const auto& [id, nft] : tokens_.nfts) by_holder[nft.holder].push_back(&nft);
    for (const auto& [holder, owned] : by_holder) {
        auto list = nlohmann::ordered_json::array();
        for (const spectrum_nft* nft : owned) {
            list.push_back({{"token_id", nft->token_id},
                            {"channel", nft->channel},
                            {"location", nft->location}});
        }
        holdings[holder.render()] = std::move(list);
    }
    doc["nft_holdings"] = std::move(holdings);

    auto channels = nlohmann::ordered_json::array();
    for (const auto& record : tokens_.channels) {
        channels.push_back({{"channel", record.channel},
                            {"location", record.location},
                            {"occupied", record.occupied()}});
    }
    doc["channels"] = std::move(channels);

    auto rentals = nlohmann::ordered_json::array();
    for (const auto& [id, record] : nfsts_) {
        nlohmann::ordered_json row;
        row["token_id"] = record.token_id;
        row["owner"] = record.owner.render();
        row["channel"] = record.channel;
        row["location"] = record.location;
        row["price"] = record.price ? nlohmann::ordered_json(record.price->str())
                                    : nlohmann::ordered_json(nullptr);
        row["duration"] = record.duration ? nlohmann::ordered_json(*record.duration)
                                          : nlohmann::ordered_json(nullptr);
        row["user"] = record.user.render();
        row["expire_time"] = record.expire_time;
        rentals.push_back(std::move(row));
    }
    doc["nfst_records"] = std::move(rentals);

    doc["totalSupply_FT"] = tokens_.total_supply_ft.str();
    doc["totalSupply_NFT"] = tokens_.total_supply_nft;
    return doc;
}

std::string ledger::snapshot_text() const { return snapshot().dump(2) + "\n"; }

}  // namespace spectrum
