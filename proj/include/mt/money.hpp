#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mt {

// Currency amounts are exact integers in minor units (cents). All arithmetic
// on prices, collateral and welfare metrics stays in this domain so that
// accounting identities hold to the cent.
using Money = std::int64_t;

// Parses a decimal string ("35", "35.2", "-6.49") into cents. At most two
// fractional digits are accepted; anything else (exponents, stray characters,
// overflow, a bare sign or dot) yields nullopt.
std::optional<Money> parse_money(std::string_view text);

// Renders cents as a decimal string with exactly two fractional digits.
std::string format_money(Money cents);

// Rounds a real-valued amount of cents to an integer, ties to even.
Money round_half_even(double cents);

} // namespace mt
