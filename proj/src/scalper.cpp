#include "mt/scalper.hpp"

#include <stdexcept>
#include <unordered_set>

namespace mt {

Money scalper_price(const ScalperMarket& market) {
    if (market.markup < 1.0) throw std::invalid_argument("markup must be >= 1");
    return round_half_even(market.markup * static_cast<double>(market.clearing_price));
}

std::vector<LoserReport> check_scalper_rationality(
    const AuctionOutcome& outcome,
    const std::vector<std::pair<std::string, Money>>& population,
    const ScalperMarket& market) {
    if (market.clearing_price != outcome.price)
        throw std::invalid_argument("market price does not match the outcome");
    Money resale = scalper_price(market);

    std::unordered_set<std::string> winners(outcome.winners.begin(), outcome.winners.end());
    std::vector<LoserReport> out;
    for (const auto& [id, valuation] : population) {
        if (winners.count(id)) continue;
        LoserReport r;
        r.bidder_id = id;
        r.valuation = valuation;
        r.surplus_at_scalper = valuation - resale;
        r.buys = r.surplus_at_scalper > 0;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace mt
