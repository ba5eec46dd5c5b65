#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mt/auction.hpp"
#include "mt/money.hpp"

namespace mt {

// Secondary market reselling at a markup over the primary clearing price.
struct ScalperMarket {
    double markup = 1.0;      // >= 1
    Money clearing_price = 0; // must match the outcome it is checked against
};

struct LoserReport {
    std::string bidder_id;
    Money valuation = 0;
    Money surplus_at_scalper = 0; // valuation - markup * price
    bool buys = false;            // true only on strictly positive surplus
};

// Price a scalper charges: markup applied to the primary price.
Money scalper_price(const ScalperMarket& market);

// For every losing bidder (assumed to have bid truthfully), the surplus of
// buying from the scalper instead. Population is (bidder_id, valuation) in
// book order; losers are those not in outcome.winners. Throws
// std::invalid_argument if the market price disagrees with the outcome or
// markup < 1.
std::vector<LoserReport> check_scalper_rationality(
    const AuctionOutcome& outcome,
    const std::vector<std::pair<std::string, Money>>& population,
    const ScalperMarket& market);

} // namespace mt
