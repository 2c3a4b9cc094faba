#include "spectrum/fuzz.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "spectrum/scenario.hpp"

namespace spectrum {

namespace {

using wide_uint = boost::multiprecision::uint512_t;

// mt19937_64 output is pinned by the standard; modulo keeps the stream
// independent of any library's distribution implementation.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

u256 pick_wei(std::mt19937_64& rng, const u256& bound_inclusive) {
    wide_uint scratch = 0;
    for (int chunk = 0; chunk < 4; ++chunk) scratch = (scratch << 64) | rng();
    const wide_uint modulus = wide_uint(bound_inclusive) + 1;
    return u256(scratch % modulus);
}

class generator {
public:
    generator(std::uint64_t seed, std::uint64_t steps, std::uint64_t accounts)
        : rng_(seed), steps_(steps) {
        names_.emplace_back("PU");
        for (std::uint64_t i = 1; i < accounts; ++i) {
            names_.push_back("SU" + std::to_string(i));
        }
        for (const std::string& name : names_) addrs_.push_back(address::from_name(name));
        led_.emplace(addrs_.front());
    }

    std::string run(std::uint64_t seed, std::uint64_t accounts) {
        out_ += "# fuzz scenario: seed " + std::to_string(seed) + ", " + std::to_string(steps_) +
                " steps, " + std::to_string(accounts) + " accounts\n";
        out_ += "# regenerate: spectrum-ledger fuzz --seed " + std::to_string(seed) +
                " --steps " + std::to_string(steps_) + " --accounts " + std::to_string(accounts) +
                " --out <path>\n";
        setup();
        while (emitted_ < steps_) step();
        return std::move(out_);
    }

private:
    void apply(const std::string& line, command_payload payload) {
        out_ += line;
        out_ += '\n';
        const scenario_command cmd{0, std::move(payload)};
        apply_command(*led_, cmd, nullptr);
    }

    void setup() {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            apply("account " + names_[i], cmd_account{names_[i], addrs_[i]});
        }
        mint_block(2 * names_.size());
        apply("assert channels_match_supply",
              cmd_assert{.kind = assert_kind::channels_match_supply,
                         .text = "assert channels_match_supply"});
    }

    // Every FT mint comes with matching channel uploads, so NFT mints can
    // never outrun the registry.
    void mint_block(std::uint64_t units) {
        apply("mint_ft PU " + std::to_string(units),
              cmd_mint_ft{addrs_.front(), units});
        for (std::uint64_t i = 0; i < units; ++i) {
            const std::string id = std::to_string(led_->channel_list().size() + 1);
            apply("upload_channel C" + id + " L" + id, cmd_upload_channel{"C" + id, "L" + id});
        }
    }

    void step() {
        const std::uint64_t w = pick(rng_, 100);
        if (w < 52 && try_transfer()) return;
        if (w >= 52 && w < 62) return advance();
        if (w >= 62 && w < 65 && try_mint_block()) return;
        if (w >= 65 && w < 72) return mint_nfst();
        if (w >= 72 && w < 80 && try_list()) return;
        if (w >= 80 && w < 92 && try_rent()) return;
        if (w >= 92 && emit_assert()) return;
        if (try_transfer()) return;
        advance();
    }

    void advance() {
        const std::uint64_t delta = pick(rng_, 5000);
        apply("advance_time " + std::to_string(delta), cmd_advance_time{delta});
        ++emitted_;
    }

    bool try_transfer() {
        std::vector<std::size_t> senders;
        for (std::size_t i = 0; i < addrs_.size(); ++i) {
            if (!led_->balance_of(addrs_[i]).is_zero()) senders.push_back(i);
        }
        if (senders.empty()) return false;
        const std::size_t from = senders[pick(rng_, senders.size())];
        const std::size_t to = pick(rng_, addrs_.size());
        const amount balance = led_->balance_of(addrs_[from]);

        amount value;
        switch (pick(rng_, 5)) {
            case 0: {  // whole units
                const std::uint64_t units = balance.whole_units();
                if (units > 0) value = amount::from_units(1 + pick(rng_, units));
                else value = amount(pick_wei(rng_, balance.wei()));
                break;
            }
            case 1:  // the entire balance
                value = balance;
                break;
            case 2: {  // sub-unit fraction
                const u256 cap = balance.wei() < ft_unit() ? balance.wei() : ft_unit();
                value = amount(pick_wei(rng_, cap));
                break;
            }
            default:  // anything up to the balance, zero included
                value = amount(pick_wei(rng_, balance.wei()));
                break;
        }
        apply("transfer " + names_[from] + " " + names_[to] + " " + render_ft(value),
              cmd_transfer{addrs_[from], addrs_[to], value});
        ++emitted_;
        return true;
    }

    bool try_mint_block() {
        const std::uint64_t units = 1 + pick(rng_, 3);
        if (emitted_ + units + 1 > steps_) return false;
        mint_block(units);
        emitted_ += units + 1;
        return true;
    }

    void mint_nfst() {
        const auto channels = led_->channel_list();
        const auto& slot = channels[pick(rng_, channels.size())];
        apply("mint_nfst " + slot.channel + " " + slot.location,
              cmd_mint_nfst{slot.channel, slot.location});
        ++emitted_;
    }

    bool try_list() {
        if (led_->nfsts().empty()) return false;
        std::vector<std::uint64_t> ids;
        for (const auto& [id, record] : led_->nfsts()) ids.push_back(id);
        const std::uint64_t token_id = ids[pick(rng_, ids.size())];
        const amount price(u256(1 + pick(rng_, 3000)) * u256("1000000000000000"));
        const std::uint64_t duration = 60 + pick(rng_, 100000);
        apply("list_nfst " + std::to_string(token_id) + " " + render_ft(price) + " " +
                  std::to_string(duration),
              cmd_list_nfst{token_id, price, duration});
        ++emitted_;
        return true;
    }

    bool try_rent() {
        std::vector<std::uint64_t> open;
        for (const auto& record : led_->available_nfsts(led_->now())) {
            open.push_back(record.token_id);
        }
        if (open.empty()) return false;
        const std::uint64_t token_id = open[pick(rng_, open.size())];
        const amount& price = *led_->nfsts().at(token_id).price;
        std::vector<std::size_t> renters;
        for (std::size_t i = 1; i < addrs_.size(); ++i) {
            if (led_->balance_of(addrs_[i]) >= price) renters.push_back(i);
        }
        if (renters.empty()) return false;
        const std::size_t renter = renters[pick(rng_, renters.size())];
        apply("rent_nfst " + std::to_string(token_id) + " " + names_[renter],
              cmd_rent_nfst{token_id, addrs_[renter]});
        ++emitted_;
        return true;
    }

    bool emit_assert() {
        const std::size_t who = pick(rng_, addrs_.size());
        cmd_assert check;
        std::string line;
        switch (pick(rng_, 4)) {
            case 0: {
                const amount balance = led_->balance_of(addrs_[who]);
                line = "assert balance " + names_[who] + " " + render_ft(balance);
                check.kind = assert_kind::balance;
                check.account = addrs_[who];
                check.expected_amount = balance;
                break;
            }
            case 1: {
                const std::uint64_t count = led_->nfts_of(addrs_[who]).size();
                line = "assert nft_count " + names_[who] + " " + std::to_string(count);
                check.kind = assert_kind::nft_count;
                check.account = addrs_[who];
                check.expected_count = count;
                break;
            }
            case 2: {
                const std::uint64_t count = led_->available_nfsts(led_->now()).size();
                line = "assert available_count " + std::to_string(count);
                check.kind = assert_kind::available_count;
                check.expected_count = count;
                break;
            }
            default:
                line = "assert channels_match_supply";
                check.kind = assert_kind::channels_match_supply;
                break;
        }
        check.text = line;
        apply(line, std::move(check));
        ++emitted_;
        return true;
    }

    std::mt19937_64 rng_;
    std::uint64_t steps_;
    std::vector<std::string> names_;
    std::vector<address> addrs_;
    std::optional<ledger> led_;
    std::string out_;
    std::uint64_t emitted_{0};
};

}  // namespace

std::string generate_scenario(std::uint64_t seed, std::uint64_t steps, std::uint64_t accounts) {
    if (accounts < 2) {
        throw std::invalid_argument("generate_scenario: need the owner plus at least one SU");
    }
    return generator(seed, steps, accounts).run(seed, accounts);
}

}  // namespace spectrum
