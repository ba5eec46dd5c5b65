#include "mt/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "mt/rng.hpp"
#include "mt/welfare.hpp"

namespace mt {

void validate_config(const ScenarioConfig& config) {
    if (config.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (config.floor < 0) throw std::invalid_argument("floor must be >= 0");
    if (config.runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (!(config.demand_ratio > 0.0))
        throw std::invalid_argument("demand_ratio must be > 0");
    validate_distribution(config.dist);
    if (population_size(config) < 1)
        throw std::invalid_argument("demand_ratio yields an empty population");
}

std::int64_t population_size(const ScenarioConfig& config) {
    return std::llround(config.demand_ratio * static_cast<double>(config.capacity));
}

RunMetrics run_once(const ScenarioConfig& config, std::uint64_t run_index) {
    validate_config(config);
    const std::int64_t n = population_size(config);
    const std::uint64_t run_seed = mix_seed(config.base_seed, run_index);

    std::vector<Money> valuations =
        sample_population(config.dist, static_cast<std::size_t>(n), mix_seed(run_seed, 1));

    // Arrival order is a fresh permutation each run; bidder ids follow the
    // population index so valuations stay attached to their bidders.
    std::vector<std::size_t> arrival(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < arrival.size(); ++i) arrival[i] = i;
    Rng order_rng(mix_seed(run_seed, 2));
    shuffle_in_place(arrival, order_rng);

    BidBook book;
    book.floor = config.floor;
    book.capacity = config.capacity;
    book.bids.reserve(arrival.size());
    ValuationMap lookup;
    lookup.reserve(arrival.size());
    std::uint64_t seq = 0;
    for (std::size_t idx : arrival) {
        std::string id = "b" + std::to_string(idx);
        book.bids.push_back({id, valuations[idx], seq});
        lookup.emplace(std::move(id), valuations[idx]);
        ++seq;
    }

    AuctionOutcome mpa = clear_marginal_price(book, config.tie_break);
    AuctionOutcome base = clear_fcfs(book);
    ExcessReport excess = excess_metrics(mpa, base, lookup);

    RunMetrics m;
    m.ticket_price = mpa.price;
    m.excess_rents = excess.excess_rents;
    m.excess_valuation = excess.excess_valuation;
    m.excess_consumer_surplus = excess.excess_consumer_surplus;
    return m;
}

namespace {

struct Accumulator {
    std::int64_t total = 0;
    Money min = std::numeric_limits<Money>::max();
    Money max = std::numeric_limits<Money>::min();

    void add(Money v) {
        total += v;
        min = std::min(min, v);
        max = std::max(max, v);
    }
    void merge(const Accumulator& o) {
        total += o.total;
        min = std::min(min, o.min);
        max = std::max(max, o.max);
    }
    MetricSummary summary(std::int64_t runs, std::int64_t divisor) const {
        MetricSummary s;
        s.min = min;
        s.max = max;
        s.mean = static_cast<double>(total) / static_cast<double>(runs);
        s.per_person_mean = s.mean / static_cast<double>(divisor);
        return s;
    }
};

struct WorkerState {
    Accumulator price, rents, valuation, surplus;
    void add(const RunMetrics& m) {
        price.add(m.ticket_price);
        rents.add(m.excess_rents);
        valuation.add(m.excess_valuation);
        surplus.add(m.excess_consumer_surplus);
    }
    void merge(const WorkerState& o) {
        price.merge(o.price);
        rents.merge(o.rents);
        valuation.merge(o.valuation);
        surplus.merge(o.surplus);
    }
};

} // namespace

SummaryStats run_many(const ScenarioConfig& config, unsigned workers) {
    validate_config(config);
    const std::uint64_t runs = static_cast<std::uint64_t>(config.runs);
    if (workers == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : std::min(hw, 8u);
    }
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, runs));

    std::vector<WorkerState> states(workers);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < runs; ++i) states[0].add(run_once(config, i));
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t i = w; i < runs; i += workers)
                    states[w].add(run_once(config, i));
            });
        }
        for (auto& t : pool) t.join();
    }

    WorkerState all;
    for (const WorkerState& s : states) all.merge(s);

    SummaryStats out;
    out.runs = config.runs;
    // Price is already a per-ticket quantity; the excess metrics are run
    // totals, so their per-person figures divide by capacity.
    out.ticket_price = all.price.summary(config.runs, 1);
    out.excess_rents = all.rents.summary(config.runs, config.capacity);
    out.excess_valuation = all.valuation.summary(config.runs, config.capacity);
    out.excess_consumer_surplus = all.surplus.summary(config.runs, config.capacity);
    return out;
}

} // namespace mt
