#include "mt/agents.hpp"

#include <stdexcept>

#include "mt/rng.hpp"

namespace mt {

void validate_distribution(const ValuationDistribution& dist) {
    if (const auto* n = std::get_if<NormalDist>(&dist)) {
        if (n->stddev <= 0) throw std::invalid_argument("normal stddev must be > 0");
    } else if (const auto* u = std::get_if<UniformDist>(&dist)) {
        if (u->lo > u->hi) throw std::invalid_argument("uniform bounds must satisfy lo <= hi");
    } else if (const auto* e = std::get_if<EmpiricalDist>(&dist)) {
        if (e->values.empty()) throw std::invalid_argument("empirical values must be nonempty");
    }
}

std::vector<Money> sample_population(const ValuationDistribution& dist,
                                     std::size_t n, std::uint64_t seed) {
    validate_distribution(dist);
    if (n < 1) throw std::invalid_argument("population size must be >= 1");

    std::vector<Money> out;
    out.reserve(n);
    if (const auto* nd = std::get_if<NormalDist>(&dist)) {
        Rng rng(seed);
        double mean = static_cast<double>(nd->mean);
        double sd = static_cast<double>(nd->stddev);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(round_half_even(mean + sd * rng.next_normal()));
    } else if (const auto* ud = std::get_if<UniformDist>(&dist)) {
        Rng rng(seed);
        std::uint64_t span = static_cast<std::uint64_t>(ud->hi - ud->lo) + 1;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(ud->lo + static_cast<Money>(rng.next_below(span)));
    } else {
        const auto& vals = std::get<EmpiricalDist>(dist).values;
        for (std::size_t i = 0; i < n; ++i) out.push_back(vals[i % vals.size()]);
    }
    return out;
}

Money strategy_bid(const BidderProfile& profile) {
    if (std::holds_alternative<Truthful>(profile.strategy)) return profile.valuation;
    if (const auto* s = std::get_if<Shade>(&profile.strategy)) {
        if (s->factor <= 0.0 || s->factor > 1.0)
            throw std::invalid_argument("shade factor must be in (0, 1]");
        return round_half_even(s->factor * static_cast<double>(profile.valuation));
    }
    if (const auto* o = std::get_if<Overbid>(&profile.strategy)) {
        if (o->factor < 1.0) throw std::invalid_argument("overbid factor must be >= 1");
        return round_half_even(o->factor * static_cast<double>(profile.valuation));
    }
    const auto& f = std::get<Fixed>(profile.strategy);
    if (f.amount < 0) throw std::invalid_argument("fixed bid must be >= 0");
    return f.amount;
}

Money payoff(Money valuation, bool won, Money price) {
    return won ? valuation - price : 0;
}

} // namespace mt
