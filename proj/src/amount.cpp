#include "spectrum/amount.hpp"

#include "spectrum/errors.hpp"

namespace spectrum {

const u256& ft_unit() {
    static const u256 unit("1000000000000000000");
    return unit;
}

amount amount::from_units(std::uint64_t whole_units) {
    try {
        return amount(u256(whole_units) * ft_unit());
    } catch (const std::exception&) {
        throw ledger_error(errc::overflow, "whole-unit amount exceeds 256 bits");
    }
}

std::uint64_t amount::whole_units() const {
    return (wei_ / ft_unit()).convert_to<std::uint64_t>();
}

std::string amount::str() const { return wei_.str(); }

amount amount::operator+(const amount& other) const {
    try {
        return amount(wei_ + other.wei_);
    } catch (const std::exception&) {
        throw ledger_error(errc::overflow, "amount addition exceeds 256 bits");
    }
}

amount amount::operator-(const amount& other) const {
    try {
        return amount(wei_ - other.wei_);
    } catch (const std::exception&) {
        throw ledger_error(errc::overflow, "amount subtraction below zero");
    }
}

}  // namespace spectrum
