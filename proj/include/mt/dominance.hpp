#pragma once

#include <cstdint>
#include <vector>

#include "mt/money.hpp"

namespace mt {

// Exhaustive check that bidding one's true valuation weakly dominates every
// alternative bid on a discrete grid, for one focal bidder against all
// opponent profiles drawn from the same grid.
struct DominanceScenario {
    int n_bidders = 2;        // >= 2, focal included
    std::int64_t capacity = 1; // < n_bidders (scarcity, else bidding is moot)
    Money floor = 0;
    std::vector<Money> grid;  // strictly increasing candidate bids
    Money focal_valuation = 0; // must lie on the grid
};

struct DominanceViolation {
    std::vector<Money> opponents;
    Money deviant_bid = 0;
    Money truthful_payoff = 0;
    Money deviant_payoff = 0;
};

struct DominanceVerdict {
    bool truthful_dominates = false; // <=> violations.empty()
    std::vector<DominanceViolation> violations;
    std::uint64_t profiles_checked = 0; // |grid|^(n-1) * |grid|
    // True when some profile exists where a deviation does strictly worse
    // than truth-telling, i.e. the dominance is not vacuous equality.
    bool has_strict_witness = false;
};

// Lexicographic stream over opponent profiles (|grid|^(n-1) tuples) without
// materializing them.
class ProfileEnumerator {
  public:
    ProfileEnumerator(std::vector<Money> grid, int slots);
    // Writes the next profile into `out`; returns false when exhausted.
    bool next(std::vector<Money>& out);

  private:
    std::vector<Money> grid_;
    std::vector<std::size_t> index_;
    bool done_ = false;
    bool started_ = false;
};

// Throws std::invalid_argument on a malformed scenario (capacity >=
// n_bidders, off-grid valuation, non-increasing grid, ...).
void validate_scenario(const DominanceScenario& scenario);

// Evaluates every deviant bid against the truthful bid on one opponent
// profile, appending violations; returns true if some deviation did strictly
// worse than truth-telling on this profile.
bool check_profile(const DominanceScenario& scenario,
                   const std::vector<Money>& opponents,
                   std::vector<DominanceViolation>& violations);

DominanceVerdict check_weak_dominance(const DominanceScenario& scenario);

} // namespace mt
