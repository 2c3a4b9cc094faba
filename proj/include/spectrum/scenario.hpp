#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectrum/ledger.hpp"

namespace spectrum {

/// Exact FT-decimal parsing: "integer" or "integer.fraction" with 1 to 18
/// fraction digits, no floating point anywhere. "1" -> 10^18 wei,
/// "0.1" -> 10^17 wei. Throws ledger_error(errc::malformed_amount).
amount parse_amount(std::string_view text);

/// Inverse of parse_amount: wei rendered as a minimal FT-decimal string
/// (trailing fraction zeros trimmed). parse_amount(render_ft(a)) == a.
std::string render_ft(const amount& value);

class parse_failure : public std::runtime_error {
public:
    parse_failure(std::uint64_t line_no, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + reason),
          line_no_(line_no) {}

    std::uint64_t line_no() const noexcept { return line_no_; }

private:
    std::uint64_t line_no_;
};

// Per-verb parsed arguments. Account names are resolved to addresses at
// parse time.
struct cmd_account {
    std::string name;
    address addr;
};
struct cmd_mint_ft {
    address recipient;
    std::uint64_t whole_units{0};
};
struct cmd_upload_channel {
    std::string channel;
    std::string location;
};
struct cmd_transfer {
    address from;
    address to;
    amount value;
};
struct cmd_mint_nfst {
    std::string channel;
    std::string location;
};
struct cmd_list_nfst {
    std::uint64_t token_id{0};
    amount price;
    std::uint64_t duration{0};
};
struct cmd_rent_nfst {
    std::uint64_t token_id{0};
    address renter;
};
struct cmd_advance_time {
    std::uint64_t delta{0};
};

enum class assert_kind {
    balance,
    nft_count,
    user_of,
    channel_of_nft,
    available_count,
    channels_match_supply,
};

struct cmd_assert {
    assert_kind kind{assert_kind::balance};
    address account;           // balance, nft_count
    std::uint64_t token_id{0}; // user_of, channel_of_nft
    amount expected_amount;    // balance
    std::uint64_t expected_count{0}; // nft_count, available_count
    address expected_user;     // user_of ("zero" allowed)
    std::string expected_channel; // channel_of_nft
    std::string text;          // source line, for reporting
};
struct cmd_dump {};

using command_payload =
    std::variant<cmd_account, cmd_mint_ft, cmd_upload_channel, cmd_transfer, cmd_mint_nfst,
                 cmd_list_nfst, cmd_rent_nfst, cmd_advance_time, cmd_assert, cmd_dump>;

struct scenario_command {
    std::uint64_t line_no{0};
    command_payload payload;
};

/// A parsed scenario: the account table in declaration order (the first
/// account is the ledger owner) plus the command list.
struct scenario {
    address owner;
    std::vector<std::pair<std::string, address>> accounts;
    std::vector<scenario_command> commands;
};

/// Line-oriented parse. '#' starts a comment, blank lines are ignored,
/// tokens are whitespace-separated. Named accounts resolve to deterministic
/// addresses (SHA-256 of the name, truncated) unless `account NAME 0x...`
/// pins one explicitly; the first account named becomes the ledger owner.
/// Throws parse_failure with the offending line.
scenario parse_scenario(std::string_view text);

struct assertion_result {
    std::uint64_t line_no{0};
    bool passed{false};
    std::string check;
    std::string expected;
    std::string actual;
};

struct command_failure {
    std::uint64_t line_no{0};
    std::string error;   // errc name, or "InvariantViolation"
    std::string message;
};

struct run_report {
    std::uint64_t commands_executed{0};
    std::vector<assertion_result> assertions;
    std::vector<std::pair<std::uint64_t, nlohmann::ordered_json>> dumps;
    std::optional<command_failure> failure;
    nlohmann::ordered_json final_snapshot;
    std::vector<ledger_event> events;

    bool ok() const;
    /// Line of the aborting command error or the first failed assertion.
    std::optional<std::uint64_t> first_failing_line() const;
    nlohmann::ordered_json to_json() const;
};

struct run_options {
    /// Audit every invariant after every command; a violation aborts the run
    /// at the offending line.
    bool check_invariants{false};
};

/// Runs the commands in order against one fresh ledger. The first command
/// error aborts the run (recorded in report.failure); failed assertions are
/// recorded and execution continues. Deterministic across runs.
run_report execute(const scenario& scn, const run_options& options = {});

/// Applies a single command. Assert/dump results land in `report` when
/// given; errors propagate as ledger_error.
void apply_command(ledger& led, const scenario_command& cmd, run_report* report);

/// One JSON record per line per event, stable key order, each line
/// newline-terminated: {"event": ..., "args": {...}}.
std::string render_events(std::span<const ledger_event> events);

}  // namespace spectrum
