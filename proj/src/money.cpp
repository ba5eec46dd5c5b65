#include "mt/money.hpp"

#include <cfenv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace mt {

std::optional<Money> parse_money(std::string_view text) {
    if (text.empty()) return std::nullopt;

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = (text[i] == '-');
        ++i;
    }

    bool any_digit = false;
    Money units = 0;
    constexpr Money kMax = std::numeric_limits<Money>::max();
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        any_digit = true;
        int d = text[i] - '0';
        if (units > (kMax - d) / 10) return std::nullopt;
        units = units * 10 + d;
    }

    Money frac = 0;
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
            if (++frac_digits > 2) return std::nullopt;
            frac = frac * 10 + (text[i] - '0');
        }
        if (frac_digits == 0) return std::nullopt;
        any_digit = true;
    }

    if (!any_digit || i != text.size()) return std::nullopt;
    if (frac_digits == 1) frac *= 10;

    if (units > (kMax - frac) / 100) return std::nullopt;
    Money cents = units * 100 + frac;
    return negative ? -cents : cents;
}

std::string format_money(Money cents) {
    bool negative = cents < 0;
    // Avoid overflow on INT64_MIN by peeling digits as unsigned.
    std::uint64_t mag = negative
        ? ~static_cast<std::uint64_t>(cents) + 1
        : static_cast<std::uint64_t>(cents);
    std::uint64_t whole = mag / 100;
    std::uint64_t frac = mag % 100;
    std::string out = negative ? "-" : "";
    out += std::to_string(whole);
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
}

Money round_half_even(double cents) {
    // nearbyint honours the current rounding mode; the default
    // (FE_TONEAREST) is round-half-to-even on every mainstream target.
    return static_cast<Money>(std::nearbyint(cents));
}

} // namespace mt
