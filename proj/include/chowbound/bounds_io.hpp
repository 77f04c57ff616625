#pragma once

#include <string>

#include "chowbound/bounds.hpp"

namespace chowbound {

// Deterministic serializations of a ledger. JSON round-trips losslessly;
// text is the human-readable default. With `published_comparison` the text
// form appends the worked example's printed pairings next to the strict
// values (only meaningful for the g = 13 context, harmless otherwise).
std::string ledger_to_json(const Ledger& ledger);
Ledger ledger_from_json(const std::string& json_text);
std::string ledger_to_text(const Ledger& ledger, bool published_comparison = false);

}  // namespace chowbound
