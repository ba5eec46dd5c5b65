#pragma once

#include <string>
#include <unordered_map>

#include "mt/auction.hpp"
#include "mt/money.hpp"

namespace mt {

// bidder_id -> private valuation
using ValuationMap = std::unordered_map<std::string, Money>;

struct WelfareReport {
    Money rents = 0;                // revenue collected from winners
    Money winner_valuation_sum = 0; // allocative value of the allocation
    Money consumer_surplus = 0;     // winner_valuation_sum - rents
    std::int64_t units_sold = 0;
};

// Uniform-price minus baseline, metric by metric. By construction
// excess_consumer_surplus == excess_valuation - excess_rents.
struct ExcessReport {
    Money excess_rents = 0;
    Money excess_valuation = 0;
    Money excess_consumer_surplus = 0;
};

// Revenue of an outcome: price times number of winners.
Money economic_rents(const AuctionOutcome& outcome);

// Sum of winners' valuations. Throws std::out_of_range for a winner id
// missing from the map.
Money total_winner_valuation(const AuctionOutcome& outcome, const ValuationMap& valuations);

// Winners' total surplus: valuation sum minus rents.
Money consumer_surplus(const AuctionOutcome& outcome, const ValuationMap& valuations);

WelfareReport welfare_report(const AuctionOutcome& outcome, const ValuationMap& valuations);

ExcessReport excess_metrics(const AuctionOutcome& marginal_price,
                            const AuctionOutcome& fcfs,
                            const ValuationMap& valuations);

// Returns the report after paying each winner `rebate_per_ticket` back.
// Requires 0 <= rebate <= price - floor (price inferred from the report);
// throws std::invalid_argument otherwise. Total welfare is unchanged.
WelfareReport apply_rebate(const WelfareReport& report, Money rebate_per_ticket, Money floor);

} // namespace mt
