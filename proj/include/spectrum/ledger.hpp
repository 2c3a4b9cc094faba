#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "spectrum/address.hpp"
#include "spectrum/amount.hpp"
#include "spectrum/errors.hpp"
#include "spectrum/event.hpp"
#include "spectrum/nfst.hpp"
#include "spectrum/token.hpp"

namespace spectrum {

using timestamp = std::uint64_t;

/// The whole state machine: accounts, simulated time, the ordered event log,
/// the FT/NFT dual token with its channel registry, and the rentable NFSTs.
///
/// All mutating operations are externally serialized (no internal locking);
/// every mutation either completes fully or throws ledger_error leaving the
/// state untouched. Two ledgers fed the same operations in the same order
/// hold byte-identical snapshots and event logs.
class ledger {
public:
    /// Creates a fresh ledger at time 0 with `owner` as the contract owner.
    /// The owner is the sole exempt account: FT transfers never mint or burn
    /// NFTs on its side. Throws ZeroAddress for the zero address.
    explicit ledger(const address& owner);

    // --- time and log ---

    /// Advances simulated time by `delta` seconds and sweeps expired NFST
    /// rentals ("system" expiry reset). Returns the new time. Throws
    /// Overflow if the clock would wrap.
    timestamp advance_time(std::uint64_t delta);

    timestamp now() const { return time_; }
    const address& owner() const { return owner_; }
    const std::vector<ledger_event>& events() const { return events_; }

    /// Complete deterministic description of the state: owner, time,
    /// ft_balances, nft_holdings, channels, nfst_records, totalSupply_FT,
    /// totalSupply_NFT. Field order is fixed so snapshots are diffable.
    nlohmann::ordered_json snapshot() const;

    /// snapshot() serialized with a stable layout, newline-terminated.
    std::string snapshot_text() const;

    // --- fungible/non-fungible dual token ---

    /// Owner-only. Credits recipient with whole_units FT and raises both
    /// supplies in lockstep. Mints no NFTs, regardless of the recipient's
    /// exemption status.
    void mint_ft(const address& caller, const address& recipient, std::uint64_t whole_units);

    /// Owner-only. Registers a spectrum asset; duplicate channel ids are a
    /// silent no-op returning false.
    bool upload_channel(const address& caller, const std::string& channel,
                        const std::string& location);

    /// Moves `value` wei from sender to recipient, then settles NFTs from
    /// whole-unit balance deltas: the sender burns floor(old/UNIT) -
    /// floor(new/UNIT) (LIFO by token id), the recipient mints the analogous
    /// gain, each mint binding the lowest-index unoccupied channel. Exempt
    /// accounts never mint or burn. Burns run before mints so channels freed
    /// by this transfer are reusable in the same call. Self-transfers move
    /// nothing and touch no NFTs.
    void transfer(const address& sender, const address& recipient, const amount& value);

    amount balance_of(const address& account) const;

    /// The account's live NFTs, token id ascending.
    std::vector<spectrum_nft> nfts_of(const address& account) const;

    /// Registry rows in upload order with current occupancy.
    std::vector<channel_view> channel_list() const;

    const amount& total_supply_ft() const { return tokens_.total_supply_ft; }
    std::uint64_t total_supply_nft() const { return tokens_.total_supply_nft; }

    // --- rentable spectrum tokens ---

    /// Owner-only; the channel must already be uploaded. Returns the new
    /// token id (NFTs and NFSTs share one monotonic counter).
    std::uint64_t mint_nfst(const address& caller, const std::string& channel,
                            const std::string& location);

    /// Sets the rental terms. Only the NFST's owner may list; re-listing
    /// while rented is allowed and affects only the next rental.
    void list_nfst(const address& caller, std::uint64_t token_id, const amount& price,
                   std::uint64_t duration);

    /// Pays the listed price from renter to the NFST owner via transfer()
    /// (with its full NFT mint/burn semantics), then grants usage until
    /// duration + now inclusive. Payment and assignment are atomic.
    void rent_nfst_by_user(std::uint64_t token_id, const address& renter, timestamp now);

    /// Current user, resolved lazily: the stored user while expire_time >=
    /// now, the zero address otherwise.
    address user_of(std::uint64_t token_id, timestamp now) const;

    /// Clears user/expiry on every record whose rental has lapsed
    /// (expire_time < now). Returns the number reset. Emits nothing.
    std::uint64_t reset_expired(timestamp now);

    /// Listed records with no current user, token id ascending.
    std::vector<nfst_record> available_nfsts(timestamp now) const;

    // --- raw state reads (snapshots, invariant checks) ---

    const token_state& tokens() const { return tokens_; }
    const std::map<std::uint64_t, nfst_record>& nfsts() const { return nfsts_; }
    bool is_exempt(const address& account) const { return tokens_.exempt.contains(account); }

private:
    void emit(event_kind kind, std::vector<std::pair<std::string, std::string>> args);
    void set_balance(const address& account, const amount& value);
    std::uint64_t free_channel_count() const;
    void burn_nfts(const address& holder, std::uint64_t count);
    void mint_nfts(const address& recipient, std::uint64_t count);

    address owner_;
    timestamp time_{0};
    std::vector<ledger_event> events_;
    token_state tokens_;
    std::map<std::uint64_t, nfst_record> nfsts_;
};

}  // namespace spectrum
