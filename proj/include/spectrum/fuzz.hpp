#pragma once

#include <cstdint>
#include <string>

namespace spectrum {

/// Deterministically generates a scenario: a setup block (owner, secondary
/// accounts, FT mint with matching channel uploads) followed by `steps`
/// randomized commands (transfers, rentals, time advances, listings,
/// occasional asserts), every one valid against the evolving state. The
/// same (seed, steps, accounts) always yields byte-identical text.
/// `accounts` must be >= 2 (owner plus at least one secondary user).
std::string generate_scenario(std::uint64_t seed, std::uint64_t steps, std::uint64_t accounts);

}  // namespace spectrum
