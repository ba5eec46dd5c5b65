#pragma once

#include <cstdint>
#include <vector>

#include "mt/agents.hpp"
#include "mt/auction.hpp"
#include "mt/money.hpp"

namespace mt {

// One Monte Carlo scenario: a population of truthful bidders drawn from
// `dist` arrives in random order; the same book is cleared both ways.
struct ScenarioConfig {
    std::int64_t capacity = 1;   // tickets per run (K)
    double demand_ratio = 1.0;   // bidders N = round(ratio * K)
    Money floor = 0;
    ValuationDistribution dist = NormalDist{0, 1};
    std::int64_t runs = 1;
    std::uint64_t base_seed = 0;
    TieBreak tie_break = TieBreak::chronological();
};

// Per-run observables, all in exact cents. By construction
// excess_consumer_surplus == excess_valuation - excess_rents.
struct RunMetrics {
    Money ticket_price = 0;
    Money excess_rents = 0;
    Money excess_valuation = 0;
    Money excess_consumer_surplus = 0;
};

struct MetricSummary {
    Money min = 0;
    Money max = 0;
    double mean = 0.0;            // cents
    double per_person_mean = 0.0; // cents; totals divided by capacity
};

struct SummaryStats {
    std::int64_t runs = 0;
    MetricSummary ticket_price;
    MetricSummary excess_rents;
    MetricSummary excess_valuation;
    MetricSummary excess_consumer_surplus;
};

// Throws std::invalid_argument on a malformed scenario.
void validate_config(const ScenarioConfig& config);

std::int64_t population_size(const ScenarioConfig& config);

// One fully deterministic run: the seed derives from (base_seed, run_index)
// alone, so any subset of runs can be replayed in isolation.
RunMetrics run_once(const ScenarioConfig& config, std::uint64_t run_index);

// Aggregates `config.runs` runs. `workers` = 0 picks a machine-dependent
// worker count; results are bit-identical for every choice because
// aggregation happens in integer cents, order-insensitively.
SummaryStats run_many(const ScenarioConfig& config, unsigned workers = 0);

} // namespace mt
