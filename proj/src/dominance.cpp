#include "mt/dominance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mt/auction.hpp"

namespace mt {

ProfileEnumerator::ProfileEnumerator(std::vector<Money> grid, int slots)
    : grid_(std::move(grid)), index_(static_cast<std::size_t>(slots), 0) {
    if (grid_.empty() || slots < 0) done_ = true;
}

bool ProfileEnumerator::next(std::vector<Money>& out) {
    if (done_) return false;
    if (started_) {
        // Advance the rightmost slot, carrying like an odometer.
        std::size_t pos = index_.size();
        while (pos > 0) {
            --pos;
            if (++index_[pos] < grid_.size()) break;
            index_[pos] = 0;
            if (pos == 0) {
                done_ = true;
                return false;
            }
        }
        if (index_.empty()) { // a single empty profile, already emitted
            done_ = true;
            return false;
        }
    }
    started_ = true;
    out.resize(index_.size());
    for (std::size_t i = 0; i < index_.size(); ++i) out[i] = grid_[index_[i]];
    return true;
}

void validate_scenario(const DominanceScenario& s) {
    if (s.n_bidders < 2) throw std::invalid_argument("need at least two bidders");
    if (s.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (s.capacity >= s.n_bidders)
        throw std::invalid_argument("capacity must be below the bidder count");
    if (s.floor < 0) throw std::invalid_argument("floor must be >= 0");
    if (s.grid.empty()) throw std::invalid_argument("grid must be nonempty");
    for (std::size_t i = 0; i + 1 < s.grid.size(); ++i)
        if (s.grid[i] >= s.grid[i + 1])
            throw std::invalid_argument("grid must strictly increase");
    if (std::find(s.grid.begin(), s.grid.end(), s.focal_valuation) == s.grid.end())
        throw std::invalid_argument("focal valuation must lie on the grid");
}

namespace {

// Clearing price when the focal bidder bids `focal_bid` against `opponents`.
// The focal bidder is placed last in submission order, so chronological
// tie-breaking favours opponents — the adversarial arrangement.
Money price_against(const DominanceScenario& s, const std::vector<Money>& opponents,
                    Money focal_bid) {
    BidBook book;
    book.floor = s.floor;
    book.capacity = s.capacity;
    book.bids.reserve(opponents.size() + 1);
    std::uint64_t seq = 0;
    for (Money amount : opponents)
        book.bids.push_back({"o" + std::to_string(seq), amount, seq}), ++seq;
    book.bids.push_back({"focal", focal_bid, seq});
    return clear_marginal_price(book, TieBreak::chronological()).price;
}

// Surplus accrues only on a bid strictly above the clearing price. A bid
// exactly at the price nets zero either way for the truthful bidder, and
// treating it as unfilled keeps the comparison well-defined when a shaded
// bid becomes the price-setter.
Money focal_payoff(const DominanceScenario& s, const std::vector<Money>& opponents,
                   Money focal_bid) {
    Money price = price_against(s, opponents, focal_bid);
    return focal_bid > price ? s.focal_valuation - price : 0;
}

} // namespace

bool check_profile(const DominanceScenario& s, const std::vector<Money>& opponents,
                   std::vector<DominanceViolation>& violations) {
    Money truthful = focal_payoff(s, opponents, s.focal_valuation);
    bool strict = false;
    for (Money deviant : s.grid) {
        Money dev = focal_payoff(s, opponents, deviant);
        if (dev > truthful)
            violations.push_back({opponents, deviant, truthful, dev});
        else if (dev < truthful)
            strict = true;
    }
    return strict;
}

DominanceVerdict check_weak_dominance(const DominanceScenario& s) {
    validate_scenario(s);
    DominanceVerdict verdict;
    ProfileEnumerator stream(s.grid, s.n_bidders - 1);
    std::vector<Money> opponents;
    while (stream.next(opponents)) {
        if (check_profile(s, opponents, verdict.violations))
            verdict.has_strict_witness = true;
        verdict.profiles_checked += s.grid.size();
    }
    verdict.truthful_dominates = verdict.violations.empty();
    return verdict;
}

} // namespace mt
