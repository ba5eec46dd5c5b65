#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mt/auction.hpp"
#include "mt/money.hpp"

namespace mt {

// One row of a bids CSV: header `bidder_id,amount[,valuation]`, one bid per
// line, submission order taken from row order.
struct BidFileRow {
    std::string bidder_id;
    Money amount = 0;
    std::optional<Money> valuation;
};

// Throws std::invalid_argument with a message naming the offending row
// (1-based, counting the header as row 1).
std::vector<BidFileRow> parse_bid_rows(const std::string& csv_text);

BidBook build_book(const std::vector<BidFileRow>& rows, Money floor,
                   std::int64_t capacity);

// Entry point for the `mticket` binary. Exit codes: 0 success, 2 a verifier
// found violations, 3 a verifier refused an infeasible enumeration, any
// other nonzero value is an input or runtime error.
int run_cli(int argc, char** argv);

} // namespace mt
