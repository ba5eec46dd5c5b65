#include "mt/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mt {

json money_to_json(Money cents) { return format_money(cents); }

Money money_from_json(const json& j, const std::string& field) {
    if (j.is_string()) {
        auto parsed = parse_money(j.get<std::string>());
        if (!parsed) throw std::invalid_argument("invalid field: " + field);
        return *parsed;
    }
    if (j.is_number_integer() || j.is_number_unsigned()) {
        return j.get<std::int64_t>() * 100;
    }
    if (j.is_number_float()) {
        double cents = j.get<double>() * 100.0;
        double rounded = std::nearbyint(cents);
        if (std::fabs(cents - rounded) > 1e-6)
            throw std::invalid_argument("invalid field: " + field +
                                        " (more than two decimals)");
        return static_cast<Money>(rounded);
    }
    throw std::invalid_argument("invalid field: " + field);
}

void to_json(json& j, const TieBreak& t) {
    if (t.kind == TieBreak::Kind::Chronological) {
        j = json{{"kind", "chronological"}};
    } else {
        j = json{{"kind", "lottery"}, {"seed", t.seed}};
    }
}

void from_json(const json& j, TieBreak& t) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "chronological") {
        t = TieBreak::chronological();
    } else if (kind == "lottery") {
        t = TieBreak::lottery(j.value("seed", std::uint64_t{0}));
    } else {
        throw std::invalid_argument("invalid field: tie_break.kind");
    }
}

namespace {
const char* method_name(AllocationMethod m) {
    return m == AllocationMethod::MarginalPrice ? "marginal_price" : "fcfs";
}
AllocationMethod method_from(const std::string& name) {
    if (name == "marginal_price") return AllocationMethod::MarginalPrice;
    if (name == "fcfs") return AllocationMethod::FirstComeFirstServe;
    throw std::invalid_argument("invalid field: method");
}
} // namespace

void to_json(json& j, const AuctionOutcome& o) {
    j = json{{"price", money_to_json(o.price)},
             {"winners", o.winners},
             {"method", method_name(o.method)},
             {"units_unsold", o.units_unsold},
             {"tie_break", o.tie_break}};
}

void from_json(const json& j, AuctionOutcome& o) {
    o.price = money_from_json(j.at("price"), "price");
    o.winners = j.at("winners").get<std::vector<std::string>>();
    o.method = method_from(j.at("method").get<std::string>());
    o.units_unsold = j.at("units_unsold").get<std::int64_t>();
    o.tie_break = j.at("tie_break").get<TieBreak>();
}

void to_json(json& j, const WelfareReport& r) {
    j = json{{"rents", money_to_json(r.rents)},
             {"winner_valuation_sum", money_to_json(r.winner_valuation_sum)},
             {"consumer_surplus", money_to_json(r.consumer_surplus)},
             {"units_sold", r.units_sold}};
}

void to_json(json& j, const ExcessReport& r) {
    j = json{{"excess_rents", money_to_json(r.excess_rents)},
             {"excess_valuation", money_to_json(r.excess_valuation)},
             {"excess_consumer_surplus", money_to_json(r.excess_consumer_surplus)}};
}

void to_json(json& j, const ValuationDistribution& d) {
    if (const auto* n = std::get_if<NormalDist>(&d)) {
        j = json{{"type", "normal"},
                 {"mean", money_to_json(n->mean)},
                 {"stddev", money_to_json(n->stddev)}};
    } else if (const auto* u = std::get_if<UniformDist>(&d)) {
        j = json{{"type", "uniform"},
                 {"lo", money_to_json(u->lo)},
                 {"hi", money_to_json(u->hi)}};
    } else {
        const auto& e = std::get<EmpiricalDist>(d);
        json values = json::array();
        for (Money v : e.values) values.push_back(money_to_json(v));
        j = json{{"type", "empirical"}, {"values", values}};
    }
}

void from_json(const json& j, ValuationDistribution& d) {
    std::string type = j.at("type").get<std::string>();
    if (type == "normal") {
        NormalDist n;
        n.mean = money_from_json(j.at("mean"), "dist.mean");
        n.stddev = money_from_json(j.at("stddev"), "dist.stddev");
        d = n;
    } else if (type == "uniform") {
        UniformDist u;
        u.lo = money_from_json(j.at("lo"), "dist.lo");
        u.hi = money_from_json(j.at("hi"), "dist.hi");
        d = u;
    } else if (type == "empirical") {
        EmpiricalDist e;
        for (const json& v : j.at("values"))
            e.values.push_back(money_from_json(v, "dist.values"));
        d = e;
    } else {
        throw std::invalid_argument("invalid field: dist.type");
    }
    validate_distribution(d);
}

namespace {
// Means are cents internally; report them in whole currency for readability.
double to_currency(double cents) { return cents / 100.0; }
} // namespace

void to_json(json& j, const MetricSummary& s) {
    j = json{{"min", money_to_json(s.min)},
             {"mean", to_currency(s.mean)},
             {"max", money_to_json(s.max)},
             {"per_person_mean", to_currency(s.per_person_mean)}};
}

void to_json(json& j, const SummaryStats& s) {
    j = json{{"runs", s.runs},
             {"ticket_price", s.ticket_price},
             {"excess_rents", s.excess_rents},
             {"excess_valuation", s.excess_valuation},
             {"excess_consumer_surplus", s.excess_consumer_surplus}};
}

void to_json(json& j, const DominanceViolation& v) {
    json opponents = json::array();
    for (Money o : v.opponents) opponents.push_back(money_to_json(o));
    j = json{{"opponents", opponents},
             {"deviant_bid", money_to_json(v.deviant_bid)},
             {"truthful_payoff", money_to_json(v.truthful_payoff)},
             {"deviant_payoff", money_to_json(v.deviant_payoff)}};
}

void to_json(json& j, const DominanceVerdict& v) {
    j = json{{"truthful_dominates", v.truthful_dominates},
             {"violations", v.violations},
             {"profiles_checked", v.profiles_checked},
             {"has_strict_witness", v.has_strict_witness}};
}

void to_json(json& j, const LoserReport& r) {
    j = json{{"bidder_id", r.bidder_id},
             {"valuation", money_to_json(r.valuation)},
             {"surplus_at_scalper", money_to_json(r.surplus_at_scalper)},
             {"buys", r.buys}};
}

void to_json(json& j, const ProtocolParams& p) {
    j = json{{"floor", money_to_json(p.floor)},
             {"capacity", p.capacity},
             {"collateral_ratio", p.collateral_ratio},
             {"settlement_deadline", p.settlement_deadline},
             {"disclosure_enabled", p.disclosure_enabled},
             {"rebate_per_ticket", money_to_json(p.rebate_per_ticket)}};
}

void from_json(const json& j, ProtocolParams& p) {
    p.floor = money_from_json(j.at("floor"), "floor");
    p.capacity = j.at("capacity").get<std::int64_t>();
    p.collateral_ratio = j.value("collateral_ratio", 1.0);
    p.settlement_deadline = j.value("settlement_deadline", std::uint64_t{0});
    p.disclosure_enabled = j.value("disclosure_enabled", true);
    if (j.contains("rebate_per_ticket"))
        p.rebate_per_ticket = money_from_json(j.at("rebate_per_ticket"), "rebate_per_ticket");
    else
        p.rebate_per_ticket = 0;
}

void to_json(json& j, const JournalEntry& e) {
    j = json{{"seq", e.seq},
             {"t", e.t},
             {"kind", to_string(e.kind)},
             {"token", e.token},
             {"amount", money_to_json(e.amount)}};
}

void from_json(const json& j, JournalEntry& e) {
    e.seq = j.at("seq").get<std::uint64_t>();
    e.t = j.at("t").get<std::uint64_t>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "deposit") {
        e.kind = JournalEntry::Kind::Deposit;
    } else if (kind == "refund") {
        e.kind = JournalEntry::Kind::Refund;
    } else if (kind == "payment") {
        e.kind = JournalEntry::Kind::Payment;
    } else {
        throw std::invalid_argument("invalid field: kind");
    }
    e.token = j.at("token").get<std::string>();
    e.amount = money_from_json(j.at("amount"), "amount");
}

void to_json(json& j, const WinnerSettlement& w) {
    j = json{{"token", w.token},
             {"refund", money_to_json(w.refund)},
             {"payment", money_to_json(w.payment)},
             {"amount_due", money_to_json(w.amount_due)},
             {"deadline", w.deadline}};
}

void to_json(json& j, const LoserSettlement& l) {
    j = json{{"token", l.token}, {"refund", money_to_json(l.refund)}};
}

void to_json(json& j, const SettlementReport& r) {
    j = json{{"price", money_to_json(r.price)},
             {"rebate_per_ticket", money_to_json(r.rebate_per_ticket)},
             {"winners", r.winners},
             {"losers", r.losers}};
}

void to_json(json& j, const ForfeitureEvent& e) {
    j = json{{"token", e.token},
             {"amount_due_forfeited", money_to_json(e.amount_due_forfeited)},
             {"collateral_retained", money_to_json(e.collateral_retained)}};
}

void to_json(json& j, const ForfeitureReport& r) {
    j = json{{"forfeited", r.forfeited}, {"units_returned", r.units_returned}};
}

ScenarioConfig parse_scenario_config(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    static const std::vector<std::string> known = {
        "capacity", "demand_ratio", "floor", "dist", "runs", "base_seed", "tie_break"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("unknown field: " + key);
    }
    for (const char* req : {"capacity", "demand_ratio", "floor", "dist", "runs", "base_seed"})
        if (!j.contains(req)) throw std::invalid_argument(std::string("missing field: ") + req);

    ScenarioConfig c;
    try {
        c.capacity = j.at("capacity").get<std::int64_t>();
    } catch (const json::exception&) {
        throw std::invalid_argument("invalid field: capacity");
    }
    try {
        c.demand_ratio = j.at("demand_ratio").get<double>();
    } catch (const json::exception&) {
        throw std::invalid_argument("invalid field: demand_ratio");
    }
    c.floor = money_from_json(j.at("floor"), "floor");
    c.dist = j.at("dist").get<ValuationDistribution>();
    try {
        c.runs = j.at("runs").get<std::int64_t>();
    } catch (const json::exception&) {
        throw std::invalid_argument("invalid field: runs");
    }
    try {
        c.base_seed = j.at("base_seed").get<std::uint64_t>();
    } catch (const json::exception&) {
        throw std::invalid_argument("invalid field: base_seed");
    }
    if (j.contains("tie_break")) c.tie_break = j.at("tie_break").get<TieBreak>();
    validate_config(c);
    return c;
}

json ledger_to_json(const CollateralLedger& ledger) {
    std::vector<std::pair<std::string, Money>> sorted(ledger.balances.begin(),
                                                      ledger.balances.end());
    std::sort(sorted.begin(), sorted.end());
    json balances = json::object();
    for (const auto& [token, bal] : sorted) balances[token] = money_to_json(bal);
    return json{{"balances", balances}, {"journal", ledger.journal}};
}

std::string journal_to_ndjson(const std::vector<JournalEntry>& journal) {
    std::string out;
    for (const JournalEntry& e : journal) {
        out += json(e).dump();
        out += '\n';
    }
    return out;
}

std::vector<JournalEntry> journal_from_ndjson(const std::string& text) {
    std::vector<JournalEntry> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(json::parse(line).get<JournalEntry>());
    }
    return out;
}

} // namespace mt
