#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace spectrum {

/// Unsigned 256-bit integer with checked arithmetic: overflow and negative
/// results throw instead of wrapping.
using u256 = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    256, 256, boost::multiprecision::unsigned_magnitude, boost::multiprecision::checked, void>>;

/// Wei per whole FT (10^18).
const u256& ft_unit();

/// Token quantity in wei. All arithmetic is checked; violations surface as
/// ledger_error(errc::overflow).
class amount {
public:
    amount() = default;
    explicit amount(u256 wei) : wei_(std::move(wei)) {}

    /// whole_units * 10^18 wei, checked.
    static amount from_units(std::uint64_t whole_units);

    const u256& wei() const { return wei_; }
    bool is_zero() const { return wei_.is_zero(); }

    /// floor(wei / 10^18). Callers only apply this to balances bounded by
    /// the FT supply, whose whole-unit count is tracked as a uint64.
    std::uint64_t whole_units() const;

    /// Decimal wei string, no separators.
    std::string str() const;

    amount operator+(const amount& other) const;
    amount operator-(const amount& other) const;

    bool operator==(const amount& other) const { return wei_ == other.wei_; }
    std::strong_ordering operator<=>(const amount& other) const {
        int c = wei_.compare(other.wei_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    u256 wei_{0};
};

}  // namespace spectrum
