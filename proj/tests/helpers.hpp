#pragma once

// Shared fixtures for the test binaries.

#include <string>
#include <vector>

#include "mt/auction.hpp"
#include "mt/welfare.hpp"

namespace mt::testing {

// Six chronological bids (35, 15, 40, 20, 25, 20) in whole currency units;
// bidder ids b1..b6 follow submission order.
inline BidBook six_bid_book(Money floor, std::int64_t capacity) {
    BidBook book;
    book.floor = floor;
    book.capacity = capacity;
    const Money amounts[] = {3500, 1500, 4000, 2000, 2500, 2000};
    for (std::uint64_t i = 0; i < 6; ++i)
        book.bids.push_back({"b" + std::to_string(i + 1), amounts[i], i});
    return book;
}

// Truthful valuations for the six-bid book.
inline ValuationMap six_bid_valuations() {
    ValuationMap v;
    const Money amounts[] = {3500, 1500, 4000, 2000, 2500, 2000};
    for (int i = 0; i < 6; ++i) v["b" + std::to_string(i + 1)] = amounts[i];
    return v;
}

inline std::vector<std::string> ids(std::initializer_list<int> indices) {
    std::vector<std::string> out;
    for (int i : indices) out.push_back("b" + std::to_string(i));
    return out;
}

} // namespace mt::testing
