#include "spectrum/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "spectrum/invariants.hpp"

namespace spectrum {

namespace {

bool all_digits(std::string_view text) {
    return !text.empty() && std::ranges::all_of(text, [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

bool valid_name(std::string_view text) {
    if (text.empty()) return false;
    if (std::isalpha(static_cast<unsigned char>(text[0])) == 0 && text[0] != '_') return false;
    return std::ranges::all_of(text, [](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_';
    });
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& token : tokens) {
        if (!out.empty()) out += ' ';
        out += token;
    }
    return out;
}

}  // namespace

amount parse_amount(std::string_view text) {
    const auto malformed = [&text](const std::string& reason) -> ledger_error {
        return ledger_error(errc::malformed_amount,
                            "'" + std::string(text) + "': " + reason);
    };
    if (text.empty()) throw malformed("empty amount");

    const std::size_t dot = text.find('.');
    const std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
    const std::string_view frac_part =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);

    if (!all_digits(int_part)) throw malformed("integer part must be decimal digits");
    if (dot != std::string_view::npos) {
        if (frac_part.empty()) throw malformed("empty fraction");
        if (frac_part.size() > 18) throw malformed("more than 18 fraction digits");
        if (!all_digits(frac_part)) throw malformed("fraction must be decimal digits");
    }

    try {
        u256 wei = u256(std::string(int_part)) * ft_unit();
        if (!frac_part.empty()) {
            std::string padded(frac_part);
            padded.append(18 - frac_part.size(), '0');
            wei = wei + u256(padded);
        }
        return amount(wei);
    } catch (const std::exception&) {
        throw malformed("amount exceeds 256 bits");
    }
}

std::string render_ft(const amount& value) {
    const u256 whole = value.wei() / ft_unit();
    const u256 rest = value.wei() % ft_unit();
    if (rest.is_zero()) return whole.str();
    std::string frac = rest.str();
    frac.insert(0, 18 - frac.size(), '0');
    frac.erase(frac.find_last_not_of('0') + 1);
    return whole.str() + "." + frac;
}

namespace {

class scenario_parser {
public:
    scenario parse(std::string_view text) {
        std::uint64_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = text.find('\n', pos);
            std::string_view line = text.substr(
                pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
            ++line_no;
            parse_line(line_no, line);
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
        finish();
        return std::move(result_);
    }

private:
    void parse_line(std::uint64_t line_no, std::string_view line) {
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) return;

        line_ = line_no;
        const std::string& verb = tokens[0];
        if (verb == "account") return parse_account(tokens);
        if (verb == "mint_ft") return parse_mint_ft(tokens);
        if (verb == "upload_channel") return parse_upload_channel(tokens);
        if (verb == "transfer") return parse_transfer(tokens);
        if (verb == "mint_nfst") return parse_mint_nfst(tokens);
        if (verb == "list_nfst") return parse_list_nfst(tokens);
        if (verb == "rent_nfst") return parse_rent_nfst(tokens);
        if (verb == "advance_time") return parse_advance_time(tokens);
        if (verb == "assert") return parse_assert(tokens);
        if (verb == "dump") return parse_dump(tokens);
        error("unknown verb '" + verb + "'");
    }

    [[noreturn]] void error(const std::string& reason) const {
        throw parse_failure(line_, reason);
    }

    void expect_argc(const std::vector<std::string>& tokens, std::size_t argc) const {
        if (tokens.size() != argc + 1) {
            error("'" + tokens[0] + "' takes " + std::to_string(argc) + " argument(s), got " +
                  std::to_string(tokens.size() - 1));
        }
    }

    std::uint64_t parse_u64(const std::string& token, const char* what) const {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            error(std::string("invalid ") + what + " '" + token + "'");
        }
        return value;
    }

    amount parse_ft(const std::string& token) const {
        try {
            return parse_amount(token);
        } catch (const ledger_error& e) {
            error(e.what());
        }
    }

    address register_account(const std::string& name, const address& addr) {
        for (const auto& [existing_name, existing_addr] : result_.accounts) {
            if (existing_name == name) error("account '" + name + "' redeclared");
            if (existing_addr == addr) {
                error("address " + addr.render() + " already belongs to account '" +
                      existing_name + "'");
            }
        }
        result_.accounts.emplace_back(name, addr);
        return addr;
    }

    // An account argument is a declared or implicitly derived name, or a raw
    // 0x-hex address literal.
    address resolve_account(const std::string& token) {
        if (auto literal = address::parse(token)) {
            if (literal->is_zero()) error("the zero address cannot act as an account");
            if (!first_literal_) first_literal_ = *literal;
            return *literal;
        }
        if (!valid_name(token) || token == "zero") {
            error("invalid account '" + token + "'");
        }
        for (const auto& [name, addr] : result_.accounts) {
            if (name == token) return addr;
        }
        return register_account(token, address::from_name(token));
    }

    void parse_account(const std::vector<std::string>& tokens) {
        if (tokens.size() != 2 && tokens.size() != 3) {
            error("'account' takes a name and an optional 0x address");
        }
        const std::string& name = tokens[1];
        if (!valid_name(name) || name == "zero") error("invalid account name '" + name + "'");
        address addr = address::from_name(name);
        if (tokens.size() == 3) {
            auto explicit_addr = address::parse(tokens[2]);
            if (!explicit_addr) error("invalid address '" + tokens[2] + "'");
            if (explicit_addr->is_zero()) error("the zero address cannot be assigned");
            addr = *explicit_addr;
        }
        register_account(name, addr);
        push(cmd_account{name, addr});
    }

    void parse_mint_ft(const std::vector<std::string>& tokens) {
        expect_argc(tokens, 2);
        push(cmd_mint_ft{resolve_account(tokens[1]), parse_u64(tokens[2], "whole-unit count")});
    }

    void parse_upload_channel(const std::vector<std::string>& tokens) {
        expect_argc(tokens, 2);
        push(cmd_upload_channel{tokens[1], tokens[2]});
    }

    void parse_transfer(const std::vector<std::string>& tokens) {
        expect_argc(tokens, 3);
        push(cmd_transfer{resolve_account(tokens[1]), resolve_account(tokens[2]),
                          parse_ft(tokens[3])});
    }

    void parse_mint_nfst(const std::vector<std::string>& tokens) {
        expect_argc(tokens, 2);
        push(cmd_mint_nfst{tokens[1], tokens[2]});
    }

    void parse_list_nfst(const std::vector<std::string>& tokens) {
        expect_argc(tokens, 3);
        push(cmd_list_nfst{parse_u64(tokens[1], "token id"), parse_ft(tokens[2]),
                           parse_u64(tokens[3], "duration")});
    }

    void parse_rent_nfst(const std::vector<std::string>& tokens) {
        expect_argc(tokens, 2);
        push(cmd_rent_nfst{parse_u64(tokens[1], "token id"), resolve_account(tokens[2])});
    }

    void parse_advance_time(const std::vector<std::string>& tokens) {
        expect_argc(tokens, 1);
        push(cmd_advance_time{parse_u64(tokens[1], "delta")});
    }

    void parse_dump(const std::vector<std::string>& tokens) {
        expect_argc(tokens, 0);
        push(cmd_dump{});
    }

    void parse_assert(const std::vector<std::string>& tokens) {
        if (tokens.size() < 2) error("'assert' needs a check kind");
        cmd_assert check;
        check.text = join(tokens);
        const std::string& kind = tokens[1];
        if (kind == "balance") {
            expect_argc(tokens, 3);
            check.kind = assert_kind::balance;
            check.account = resolve_account(tokens[2]);
            check.expected_amount = parse_ft(tokens[3]);
        } else if (kind == "nft_count") {
            expect_argc(tokens, 3);
            check.kind = assert_kind::nft_count;
            check.account = resolve_account(tokens[2]);
            check.expected_count = parse_u64(tokens[3], "count");
        } else if (kind == "user_of") {
            expect_argc(tokens, 3);
            check.kind = assert_kind::user_of;
            check.token_id = parse_u64(tokens[2], "token id");
            check.expected_user = tokens[3] == "zero" ? address{} : resolve_account(tokens[3]);
        } else if (kind == "channel_of_nft") {
            expect_argc(tokens, 3);
            check.kind = assert_kind::channel_of_nft;
            check.token_id = parse_u64(tokens[2], "token id");
            check.expected_channel = tokens[3];
        } else if (kind == "available_count") {
            expect_argc(tokens, 2);
            check.kind = assert_kind::available_count;
            check.expected_count = parse_u64(tokens[2], "count");
        } else if (kind == "channels_match_supply") {
            expect_argc(tokens, 1);
            check.kind = assert_kind::channels_match_supply;
        } else {
            error("unknown assert kind '" + kind + "'");
        }
        push(std::move(check));
    }

    void push(command_payload payload) {
        result_.commands.push_back(scenario_command{line_, std::move(payload)});
    }

    void finish() {
        if (!result_.accounts.empty()) {
            result_.owner = result_.accounts.front().second;
        } else if (first_literal_) {
            result_.owner = *first_literal_;
        } else {
            // A scenario can avoid naming accounts entirely; the ledger
            // still needs an owner.
            result_.owner = address::from_name("owner");
        }
    }

    scenario result_;
    std::uint64_t line_{0};
    std::optional<address> first_literal_;
};

struct assert_outcome {
    std::string expected;
    std::string actual;
};

assert_outcome evaluate_assert(const ledger& led, const cmd_assert& check) {
    switch (check.kind) {
        case assert_kind::balance:
            return {check.expected_amount.str(), led.balance_of(check.account).str()};
        case assert_kind::nft_count:
            return {std::to_string(check.expected_count),
                    std::to_string(led.nfts_of(check.account).size())};
        case assert_kind::user_of:
            return {check.expected_user.render(),
                    led.user_of(check.token_id, led.now()).render()};
        case assert_kind::channel_of_nft: {
            auto it = led.tokens().nfts.find(check.token_id);
            return {check.expected_channel,
                    it == led.tokens().nfts.end() ? "<none>" : it->second.channel};
        }
        case assert_kind::available_count:
            return {std::to_string(check.expected_count),
                    std::to_string(led.available_nfsts(led.now()).size())};
        case assert_kind::channels_match_supply:
            return {std::to_string(led.total_supply_nft()),
                    std::to_string(led.channel_list().size())};
    }
    return {"", ""};
}

}  // namespace

scenario parse_scenario(std::string_view text) { return scenario_parser{}.parse(text); }

void apply_command(ledger& led, const scenario_command& cmd, run_report* report) {
    std::visit(
        [&](const auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, cmd_account>) {
                // Registration happened at parse time.
            } else if constexpr (std::is_same_v<T, cmd_mint_ft>) {
                led.mint_ft(led.owner(), payload.recipient, payload.whole_units);
            } else if constexpr (std::is_same_v<T, cmd_upload_channel>) {
                led.upload_channel(led.owner(), payload.channel, payload.location);
            } else if constexpr (std::is_same_v<T, cmd_transfer>) {
                led.transfer(payload.from, payload.to, payload.value);
            } else if constexpr (std::is_same_v<T, cmd_mint_nfst>) {
                led.mint_nfst(led.owner(), payload.channel, payload.location);
            } else if constexpr (std::is_same_v<T, cmd_list_nfst>) {
                led.list_nfst(led.owner(), payload.token_id, payload.price, payload.duration);
            } else if constexpr (std::is_same_v<T, cmd_rent_nfst>) {
                led.rent_nfst_by_user(payload.token_id, payload.renter, led.now());
            } else if constexpr (std::is_same_v<T, cmd_advance_time>) {
                led.advance_time(payload.delta);
            } else if constexpr (std::is_same_v<T, cmd_dump>) {
                if (report) report->dumps.emplace_back(cmd.line_no, led.snapshot());
            } else if constexpr (std::is_same_v<T, cmd_assert>) {
                if (!report) return;
                assertion_result result;
                result.line_no = cmd.line_no;
                result.check = payload.text;
                try {
                    auto outcome = evaluate_assert(led, payload);
                    result.expected = std::move(outcome.expected);
                    result.actual = std::move(outcome.actual);
                } catch (const ledger_error& e) {
                    result.expected = "<evaluates>";
                    result.actual = std::string(errc_name(e.code()));
                }
                result.passed = result.expected == result.actual;
                report->assertions.push_back(std::move(result));
            }
        },
        cmd.payload);
}

run_report execute(const scenario& scn, const run_options& options) {
    run_report report;
    ledger led(scn.owner);
    for (const scenario_command& cmd : scn.commands) {
        try {
            apply_command(led, cmd, &report);
        } catch (const ledger_error& e) {
            report.failure =
                command_failure{cmd.line_no, std::string(errc_name(e.code())), e.what()};
            break;
        }
        ++report.commands_executed;
        if (options.check_invariants) {
            std::vector<std::string> violations = check_invariants(led);
            if (!violations.empty()) {
                std::string combined;
                for (const auto& violation : violations) {
                    if (!combined.empty()) combined += "; ";
                    combined += violation;
                }
                report.failure = command_failure{cmd.line_no, "InvariantViolation", combined};
                break;
            }
        }
    }
    report.final_snapshot = led.snapshot();
    report.events = led.events();
    return report;
}

bool run_report::ok() const {
    return !failure && std::ranges::all_of(assertions, &assertion_result::passed);
}

std::optional<std::uint64_t> run_report::first_failing_line() const {
    for (const assertion_result& result : assertions) {
        if (!result.passed) return result.line_no;
    }
    if (failure) return failure->line_no;
    return std::nullopt;
}

nlohmann::ordered_json run_report::to_json() const {
    nlohmann::ordered_json doc;
    doc["commands_executed"] = commands_executed;
    auto assertion_rows = nlohmann::ordered_json::array();
    for (const assertion_result& result : assertions) {
        assertion_rows.push_back({{"line", result.line_no},
                                  {"passed", result.passed},
                                  {"check", result.check},
                                  {"expected", result.expected},
                                  {"actual", result.actual}});
    }
    doc["assertions"] = std::move(assertion_rows);
    auto dump_rows = nlohmann::ordered_json::array();
    for (const auto& [line, state] : dumps) {
        dump_rows.push_back({{"line", line}, {"state", state}});
    }
    doc["dumps"] = std::move(dump_rows);
    doc["failure"] = failure ? nlohmann::ordered_json({{"line", failure->line_no},
                                                       {"error", failure->error},
                                                       {"message", failure->message}})
                             : nlohmann::ordered_json(nullptr);
    auto event_rows = nlohmann::ordered_json::array();
    for (const ledger_event& ev : events) {
        nlohmann::ordered_json row;
        row["seq"] = ev.seq;
        row["at"] = ev.at;
        row.update(event_record(ev));
        event_rows.push_back(std::move(row));
    }
    doc["events"] = std::move(event_rows);
    doc["final_snapshot"] = final_snapshot;
    return doc;
}

std::string render_events(std::span<const ledger_event> events) {
    std::string out;
    for (const ledger_event& ev : events) {
        out += event_record(ev).dump();
        out += '\n';
    }
    return out;
}

}  // namespace spectrum
