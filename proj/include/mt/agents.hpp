#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mt/money.hpp"

namespace mt {

// Bidding strategies. Factors apply to the bidder's private valuation.
struct Truthful {};
struct Shade {
    double factor = 1.0; // in (0, 1]
};
struct Overbid {
    double factor = 1.0; // >= 1
};
struct Fixed {
    Money amount = 0; // >= 0
};
using Strategy = std::variant<Truthful, Shade, Overbid, Fixed>;

struct BidderProfile {
    std::string bidder_id;
    Money valuation = 0;
    Strategy strategy = Truthful{};
};

struct NormalDist {
    Money mean = 0;
    Money stddev = 0; // > 0
};
struct UniformDist {
    Money lo = 0;
    Money hi = 0; // lo <= hi
};
struct EmpiricalDist {
    std::vector<Money> values; // nonempty; sampled in order, cyclically
};
using ValuationDistribution = std::variant<NormalDist, UniformDist, EmpiricalDist>;

// Throws std::invalid_argument on an ill-formed distribution.
void validate_distribution(const ValuationDistribution& dist);

// Draws n valuations; identical inputs give an identical sequence. Negative
// normal draws are kept as-is (the floor filters them during clearing).
std::vector<Money> sample_population(const ValuationDistribution& dist,
                                     std::size_t n, std::uint64_t seed);

// The amount this profile puts on the book.
Money strategy_bid(const BidderProfile& profile);

// Realized surplus: valuation minus price if the bidder won, else zero.
Money payoff(Money valuation, bool won, Money price);

} // namespace mt
