#include "mt/welfare.hpp"

#include <stdexcept>

namespace mt {

Money economic_rents(const AuctionOutcome& outcome) {
    return outcome.price * static_cast<Money>(outcome.winners.size());
}

Money total_winner_valuation(const AuctionOutcome& outcome, const ValuationMap& valuations) {
    Money sum = 0;
    for (const std::string& id : outcome.winners) {
        auto it = valuations.find(id);
        if (it == valuations.end())
            throw std::out_of_range("no valuation for winner: " + id);
        sum += it->second;
    }
    return sum;
}

Money consumer_surplus(const AuctionOutcome& outcome, const ValuationMap& valuations) {
    return total_winner_valuation(outcome, valuations) - economic_rents(outcome);
}

WelfareReport welfare_report(const AuctionOutcome& outcome, const ValuationMap& valuations) {
    WelfareReport r;
    r.rents = economic_rents(outcome);
    r.winner_valuation_sum = total_winner_valuation(outcome, valuations);
    r.consumer_surplus = r.winner_valuation_sum - r.rents;
    r.units_sold = static_cast<std::int64_t>(outcome.winners.size());
    return r;
}

ExcessReport excess_metrics(const AuctionOutcome& marginal_price,
                            const AuctionOutcome& fcfs,
                            const ValuationMap& valuations) {
    WelfareReport a = welfare_report(marginal_price, valuations);
    WelfareReport b = welfare_report(fcfs, valuations);
    ExcessReport e;
    e.excess_rents = a.rents - b.rents;
    e.excess_valuation = a.winner_valuation_sum - b.winner_valuation_sum;
    e.excess_consumer_surplus = a.consumer_surplus - b.consumer_surplus;
    return e;
}

WelfareReport apply_rebate(const WelfareReport& report, Money rebate_per_ticket, Money floor) {
    if (rebate_per_ticket < 0)
        throw std::invalid_argument("rebate must be >= 0");
    if (report.units_sold == 0) {
        if (rebate_per_ticket != 0)
            throw std::invalid_argument("rebate requires sold units");
        return report;
    }
    Money price = report.rents / report.units_sold;
    if (rebate_per_ticket > price - floor)
        throw std::invalid_argument("rebate exceeds price minus floor");
    WelfareReport r = report;
    Money total = rebate_per_ticket * report.units_sold;
    r.rents -= total;
    r.consumer_surplus += total;
    return r;
}

} // namespace mt
