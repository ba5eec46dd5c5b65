#include "mt/auction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "mt/rng.hpp"

namespace mt {

void validate_book(const BidBook& book) {
    if (book.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (book.floor < 0) throw std::invalid_argument("floor must be >= 0");
    std::unordered_set<std::string> ids;
    ids.reserve(book.bids.size());
    bool first = true;
    std::uint64_t prev_seq = 0;
    for (const Bid& b : book.bids) {
        if (b.amount < 0) throw std::invalid_argument("bid amount must be >= 0");
        if (!first && b.seq <= prev_seq)
            throw std::invalid_argument("bid seq must strictly increase");
        prev_seq = b.seq;
        first = false;
        if (!ids.insert(b.bidder_id).second)
            throw std::invalid_argument("duplicate bidder id: " + b.bidder_id);
    }
}

std::vector<Bid> rank_descending(const BidBook& book) {
    std::vector<Bid> ranked = book.bids;
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Bid& a, const Bid& b) { return a.amount > b.amount; });
    return ranked;
}

namespace {

std::vector<Bid> eligible_bids(const BidBook& book) {
    std::vector<Bid> out;
    out.reserve(book.bids.size());
    for (const Bid& b : book.bids)
        if (b.amount >= book.floor) out.push_back(b);
    return out;
}

} // namespace

// Clearing is total: malformed books are the caller's concern (see
// validate_book), and sub-floor amounts — including negative sampled
// valuations bid truthfully — simply fail eligibility.
AuctionOutcome clear_marginal_price(const BidBook& book, const TieBreak& tie_break) {
    AuctionOutcome out;
    out.method = AllocationMethod::MarginalPrice;
    out.tie_break = tie_break;

    std::vector<Bid> eligible = eligible_bids(book);
    const std::int64_t k = book.capacity;

    if (static_cast<std::int64_t>(eligible.size()) <= k) {
        // Demand does not fill capacity: everyone eligible wins at the floor.
        out.price = book.floor;
        for (const Bid& b : eligible) out.winners.push_back(b.bidder_id);
        out.units_unsold = k - static_cast<std::int64_t>(eligible.size());
        return out;
    }

    std::vector<Bid> ranked{eligible};
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Bid& a, const Bid& b) { return a.amount > b.amount; });
    const Money price = ranked[static_cast<std::size_t>(k - 1)].amount;
    out.price = price;
    out.units_unsold = 0;

    // Everything strictly above the marginal amount wins outright; the
    // remaining units go to the bids tied at that amount.
    std::vector<Bid> tied;
    for (const Bid& b : ranked) {
        if (b.amount > price) {
            out.winners.push_back(b.bidder_id);
        } else if (b.amount == price) {
            tied.push_back(b);
        }
    }
    std::size_t remaining = static_cast<std::size_t>(k) - out.winners.size();
    if (tie_break.kind == TieBreak::Kind::Lottery && tied.size() > remaining) {
        Rng rng(tie_break.seed);
        shuffle_in_place(tied, rng);
    }
    for (std::size_t i = 0; i < remaining; ++i) out.winners.push_back(tied[i].bidder_id);
    return out;
}

AuctionOutcome clear_fcfs(const BidBook& book) {
    AuctionOutcome out;
    out.method = AllocationMethod::FirstComeFirstServe;
    out.price = book.floor;
    for (const Bid& b : book.bids) {
        if (static_cast<std::int64_t>(out.winners.size()) == book.capacity) break;
        if (b.amount >= book.floor) out.winners.push_back(b.bidder_id);
    }
    out.units_unsold = book.capacity - static_cast<std::int64_t>(out.winners.size());
    return out;
}

Money indicative_price(const BidBook& book) {
    return clear_marginal_price(book, TieBreak::chronological()).price;
}

} // namespace mt
