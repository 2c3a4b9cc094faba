#pragma once

#include <stdexcept>
#include <string>

namespace spectrum {

enum class errc {
    zero_address,
    not_owner,
    zero_amount,
    insufficient_balance,
    no_free_channel,
    empty_channel_id,
    unknown_channel,
    unknown_token,
    not_nfst_owner,
    zero_price,
    zero_duration,
    already_rented,
    not_listed,
    self_rental,
    overflow,
    malformed_amount,
    parse_error,
};

std::string_view errc_name(errc code);

/// Thrown by every failing ledger operation. `code()` identifies the
/// condition; what() carries the operation-specific detail.
class ledger_error : public std::runtime_error {
public:
    ledger_error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace spectrum
