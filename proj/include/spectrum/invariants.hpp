#pragma once

#include <string>
#include <vector>

#include "spectrum/ledger.hpp"

namespace spectrum {

/// Full structural audit of a ledger: balance conservation, supply lockstep,
/// the floor law, channel binding consistency, token-id monotonicity (from
/// the event log), zero-address exclusion, NFST listing/rental consistency,
/// and event-log sequencing. Returns one message per violation; empty means
/// the state is sound.
std::vector<std::string> check_invariants(const ledger& led);

}  // namespace spectrum
