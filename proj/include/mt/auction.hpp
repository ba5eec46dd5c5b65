#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mt/money.hpp"

namespace mt {

// How ties among bids at the marginal price are resolved.
struct TieBreak {
    enum class Kind { Chronological, Lottery };
    Kind kind = Kind::Chronological;
    std::uint64_t seed = 0; // only meaningful for Lottery

    static TieBreak chronological() { return {Kind::Chronological, 0}; }
    static TieBreak lottery(std::uint64_t seed) { return {Kind::Lottery, seed}; }
};

enum class AllocationMethod { MarginalPrice, FirstComeFirstServe };

struct Bid {
    std::string bidder_id; // opaque token, unique within a book
    Money amount = 0;      // >= 0
    std::uint64_t seq = 0; // submission order, strictly increasing
};

struct BidBook {
    std::vector<Bid> bids; // ordered by seq
    Money floor = 0;       // reserve price, >= 0
    std::int64_t capacity = 0; // tickets for sale, >= 1
};

struct AuctionOutcome {
    Money price = 0;                  // what every winner pays
    std::vector<std::string> winners; // bidder ids in allocation order
    AllocationMethod method = AllocationMethod::MarginalPrice;
    std::int64_t units_unsold = 0;
    TieBreak tie_break = TieBreak::chronological();
};

// Throws std::invalid_argument unless capacity >= 1, floor >= 0, amounts
// >= 0, seqs strictly increase and bidder ids are distinct.
void validate_book(const BidBook& book);

// Bids sorted by amount descending; equal amounts keep submission order.
std::vector<Bid> rank_descending(const BidBook& book);

// Uniform-price clearing: the top `capacity` eligible bids win and all pay
// the lowest winning amount (the floor when demand does not fill capacity).
AuctionOutcome clear_marginal_price(const BidBook& book, const TieBreak& tie_break);

// Baseline: first-come first-served at the floor price.
AuctionOutcome clear_fcfs(const BidBook& book);

// The would-be clearing price if the book closed right now.
Money indicative_price(const BidBook& book);

} // namespace mt
