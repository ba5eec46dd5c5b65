#include "mt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mt/dominance.hpp"
#include "mt/json_io.hpp"
#include "mt/protocol.hpp"
#include "mt/rng.hpp"
#include "mt/scalper.hpp"
#include "mt/service.hpp"
#include "mt/simulation.hpp"
#include "mt/welfare.hpp"

namespace mt {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 2;
constexpr int kExitRefused = 3;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        // Trim surrounding whitespace; quoting is not supported.
        std::size_t b = field.find_first_not_of(" \t\r");
        std::size_t e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

Money parse_money_or_throw(const std::string& text, const std::string& what) {
    auto parsed = parse_money(text);
    if (!parsed) throw std::invalid_argument(what + ": bad amount '" + text + "'");
    return *parsed;
}

std::string format_currency(double cents) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", cents / 100.0);
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

} // namespace

std::vector<BidFileRow> parse_bid_rows(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    int row = 0;
    bool has_valuation = false;
    std::vector<BidFileRow> rows;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (row == 1) {
            if (fields.size() < 2 || fields[0] != "bidder_id" || fields[1] != "amount" ||
                (fields.size() == 3 && fields[2] != "valuation") || fields.size() > 3)
                throw std::invalid_argument(
                    "row 1: header must be bidder_id,amount[,valuation]");
            has_valuation = fields.size() == 3;
            continue;
        }
        std::string where = "row " + std::to_string(row);
        if (fields.size() != (has_valuation ? 3u : 2u))
            throw std::invalid_argument(where + ": wrong number of fields");
        if (fields[0].empty())
            throw std::invalid_argument(where + ": empty bidder_id");
        BidFileRow r;
        r.bidder_id = fields[0];
        r.amount = parse_money_or_throw(fields[1], where);
        if (r.amount < 0) throw std::invalid_argument(where + ": negative amount");
        if (has_valuation) r.valuation = parse_money_or_throw(fields[2], where);
        rows.push_back(std::move(r));
    }
    return rows;
}

BidBook build_book(const std::vector<BidFileRow>& rows, Money floor,
                   std::int64_t capacity) {
    BidBook book;
    book.floor = floor;
    book.capacity = capacity;
    std::uint64_t seq = 0;
    for (const BidFileRow& r : rows) book.bids.push_back({r.bidder_id, r.amount, seq++});
    validate_book(book);
    return book;
}

namespace {

// ---------------------------------------------------------------- auction

struct AuctionOpts {
    std::string bids_path;
    std::string floor_text = "0";
    std::int64_t capacity = 1;
    std::string tie_break = "chrono";
    std::uint64_t seed = 0;
    std::string format = "table";
    std::string out_path;
};

TieBreak make_tie_break(const std::string& name, std::uint64_t seed) {
    if (name == "chrono") return TieBreak::chronological();
    if (name == "lottery") return TieBreak::lottery(seed);
    throw std::invalid_argument("tie-break must be chrono or lottery");
}

std::uint64_t seq_of(const BidBook& book, const std::string& id) {
    for (const Bid& b : book.bids)
        if (b.bidder_id == id) return b.seq;
    throw std::logic_error("winner not in book: " + id);
}

std::string winners_with_seq(const BidBook& book, const AuctionOutcome& o,
                             const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < o.winners.size(); ++i) {
        if (i) out += sep;
        out += o.winners[i] + "@" + std::to_string(seq_of(book, o.winners[i]));
    }
    return out;
}

int run_auction(const AuctionOpts& opts) {
    std::vector<BidFileRow> rows = parse_bid_rows(read_file(opts.bids_path));
    Money floor = parse_money_or_throw(opts.floor_text, "--floor");
    BidBook book = build_book(rows, floor, opts.capacity);

    bool have_valuations =
        !rows.empty() && std::all_of(rows.begin(), rows.end(),
                                     [](const BidFileRow& r) { return r.valuation.has_value(); });
    ValuationMap valuations;
    for (const BidFileRow& r : rows)
        if (r.valuation) valuations[r.bidder_id] = *r.valuation;

    AuctionOutcome mpa =
        clear_marginal_price(book, make_tie_break(opts.tie_break, opts.seed));
    AuctionOutcome base = clear_fcfs(book);

    std::optional<WelfareReport> mpa_w, base_w;
    std::optional<ExcessReport> excess;
    if (have_valuations) {
        mpa_w = welfare_report(mpa, valuations);
        base_w = welfare_report(base, valuations);
        excess = excess_metrics(mpa, base, valuations);
    }

    std::string text;
    if (opts.format == "json") {
        auto side = [&](const AuctionOutcome& o, const std::optional<WelfareReport>& w) {
            json detail = json::array();
            for (const std::string& id : o.winners)
                detail.push_back(json{{"bidder_id", id}, {"seq", seq_of(book, id)}});
            json s{{"outcome", o}, {"winners_detail", detail}};
            if (w) s["welfare"] = *w;
            return s;
        };
        json j{{"marginal_price", side(mpa, mpa_w)}, {"fcfs", side(base, base_w)}};
        if (excess) j["excess"] = *excess;
        text = j.dump(2);
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "section,field,value\n";
        auto side = [&](const char* name, const AuctionOutcome& o,
                        const std::optional<WelfareReport>& w) {
            out << name << ",price," << format_money(o.price) << "\n";
            out << name << ",winners," << winners_with_seq(book, o, "|") << "\n";
            out << name << ",units_unsold," << o.units_unsold << "\n";
            out << name << ",rents," << format_money(economic_rents(o)) << "\n";
            if (w) {
                out << name << ",winner_valuation_sum,"
                    << format_money(w->winner_valuation_sum) << "\n";
                out << name << ",consumer_surplus," << format_money(w->consumer_surplus)
                    << "\n";
            }
        };
        side("marginal_price", mpa, mpa_w);
        side("fcfs", base, base_w);
        if (excess) {
            out << "excess,excess_rents," << format_money(excess->excess_rents) << "\n";
            out << "excess,excess_valuation," << format_money(excess->excess_valuation)
                << "\n";
            out << "excess,excess_consumer_surplus,"
                << format_money(excess->excess_consumer_surplus) << "\n";
        }
        text = out.str();
    } else {
        std::ostringstream out;
        auto side = [&](const char* name, const AuctionOutcome& o,
                        const std::optional<WelfareReport>& w) {
            out << name << ":\n";
            out << "  price          " << format_money(o.price) << "\n";
            out << "  winners        "
                << (o.winners.empty() ? "(none)" : winners_with_seq(book, o, ", ")) << "\n";
            out << "  units unsold   " << o.units_unsold << "\n";
            out << "  rents          " << format_money(economic_rents(o)) << "\n";
            if (w) {
                out << "  valuation sum  " << format_money(w->winner_valuation_sum) << "\n";
                out << "  cons. surplus  " << format_money(w->consumer_surplus) << "\n";
            }
        };
        side("marginal_price", mpa, mpa_w);
        side("fcfs", base, base_w);
        if (excess) {
            out << "excess (marginal_price - fcfs):\n";
            out << "  rents          " << format_money(excess->excess_rents) << "\n";
            out << "  valuation      " << format_money(excess->excess_valuation) << "\n";
            out << "  cons. surplus  " << format_money(excess->excess_consumer_surplus)
                << "\n";
        }
        text = out.str();
    }
    write_output(text, opts.out_path);
    return kExitOk;
}

// --------------------------------------------------------------- simulate

struct SimulateOpts {
    std::string config_path;
    std::string format = "table";
    std::string out_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

ScenarioConfig default_scenario() {
    ScenarioConfig c;
    c.capacity = 1000;
    c.demand_ratio = 1.5;
    c.floor = 100 * 100;
    c.dist = NormalDist{125 * 100, 25 * 100};
    c.runs = 1000;
    c.base_seed = 42;
    return c;
}

std::string summary_rows_csv(const SummaryStats& s) {
    std::ostringstream out;
    out << "metric,min,mean,max,per_person_mean\n";
    auto row = [&](const char* name, const MetricSummary& m) {
        out << name << ',' << format_money(m.min) << ',' << format_currency(m.mean) << ','
            << format_money(m.max) << ',' << format_currency(m.per_person_mean) << "\n";
    };
    row("ticket_price", s.ticket_price);
    row("excess_rents", s.excess_rents);
    row("excess_valuation", s.excess_valuation);
    row("excess_consumer_surplus", s.excess_consumer_surplus);
    return out.str();
}

std::string summary_rows_table(const SummaryStats& s) {
    std::ostringstream out;
    out << "runs: " << s.runs << "\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-26s %12s %12s %12s %12s\n", "metric", "min", "mean",
                  "max", "per_person");
    out << buf;
    auto row = [&](const char* name, const MetricSummary& m) {
        std::snprintf(buf, sizeof buf, "%-26s %12s %12s %12s %12s\n", name,
                      format_money(m.min).c_str(), format_currency(m.mean).c_str(),
                      format_money(m.max).c_str(), format_currency(m.per_person_mean).c_str());
        out << buf;
    };
    row("ticket_price", s.ticket_price);
    row("excess_rents", s.excess_rents);
    row("excess_valuation", s.excess_valuation);
    row("excess_consumer_surplus", s.excess_consumer_surplus);
    return out.str();
}

int run_simulate(const SimulateOpts& opts) {
    ScenarioConfig config;
    if (opts.config_path.empty()) {
        config = default_scenario();
    } else {
        json j = json::parse(read_file(opts.config_path));
        config = parse_scenario_config(j);
    }
    if (opts.seed_set) config.base_seed = opts.seed;

    SummaryStats stats = run_many(config);
    std::string text;
    if (opts.format == "json") {
        text = json(stats).dump(2);
    } else if (opts.format == "csv") {
        text = summary_rows_csv(stats);
    } else {
        text = summary_rows_table(stats);
    }
    write_output(text, opts.out_path);
    return kExitOk;
}

// ----------------------------------------------------------------- verify

struct DominanceOpts {
    int bidders = 2;
    std::int64_t capacity = 1;
    std::string floor_text = "0";
    std::string grid_spec = "0:10:1"; // lo:hi:step, whole currency units
    std::string valuation_text;      // empty -> sweep the whole grid
    std::string format = "table";
};

std::vector<Money> parse_grid(const std::string& spec) {
    std::istringstream in(spec);
    std::string lo_s, hi_s, step_s;
    if (!std::getline(in, lo_s, ':') || !std::getline(in, hi_s, ':') ||
        !std::getline(in, step_s))
        throw std::invalid_argument("--grid must be LO:HI:STEP");
    Money lo = parse_money_or_throw(lo_s, "--grid lo");
    Money hi = parse_money_or_throw(hi_s, "--grid hi");
    Money step = parse_money_or_throw(step_s, "--grid step");
    if (step <= 0 || hi < lo) throw std::invalid_argument("--grid must be LO:HI:STEP with step > 0");
    std::vector<Money> grid;
    for (Money v = lo; v <= hi; v += step) grid.push_back(v);
    return grid;
}

int run_verify_dominance(const DominanceOpts& opts) {
    DominanceScenario scenario;
    scenario.n_bidders = opts.bidders;
    scenario.capacity = opts.capacity;
    scenario.floor = parse_money_or_throw(opts.floor_text, "--floor");
    scenario.grid = parse_grid(opts.grid_spec);

    std::vector<Money> focal_values;
    if (opts.valuation_text.empty()) {
        focal_values = scenario.grid;
    } else {
        focal_values.push_back(parse_money_or_throw(opts.valuation_text, "--valuation"));
    }

    // Refuse enumerations that cannot finish in reasonable time.
    double estimate = static_cast<double>(focal_values.size()) *
                      std::pow(static_cast<double>(scenario.grid.size()),
                               scenario.n_bidders - 1) *
                      static_cast<double>(scenario.grid.size());
    if (estimate > 2e8) {
        std::fprintf(stderr,
                     "refusing: %.3g (profile, bid) evaluations exceed the 2e8 cap\n",
                     estimate);
        return kExitRefused;
    }

    std::uint64_t profiles = 0, violations = 0;
    bool witness = false;
    json verdicts = json::array();
    for (Money v : focal_values) {
        scenario.focal_valuation = v;
        DominanceVerdict verdict = check_weak_dominance(scenario);
        profiles += verdict.profiles_checked;
        violations += verdict.violations.size();
        witness = witness || verdict.has_strict_witness;
        if (opts.format == "json") verdicts.push_back(verdict);
    }

    if (opts.format == "json") {
        std::cout << json{{"profiles_checked", profiles},
                          {"violations", violations},
                          {"has_strict_witness", witness},
                          {"verdicts", verdicts}}
                         .dump(2)
                  << "\n";
    } else {
        std::printf("bidders=%d capacity=%lld grid=%zu values: %llu checks, %llu violations%s\n",
                    opts.bidders, static_cast<long long>(opts.capacity),
                    scenario.grid.size(), static_cast<unsigned long long>(profiles),
                    static_cast<unsigned long long>(violations),
                    witness ? ", strict witness found" : "");
    }
    return violations == 0 ? kExitOk : kExitViolations;
}

struct SweepOpts {
    std::int64_t instances = 10000;
    std::uint64_t seed = 42;
    int max_bidders = 50;
};

struct SweepInstance {
    BidBook book;
    ValuationMap valuations;
    std::vector<std::pair<std::string, Money>> population;
};

// Random truthful market: everyone bids their valuation.
SweepInstance random_instance(Rng& rng, int max_bidders) {
    SweepInstance inst;
    std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(
                             static_cast<std::uint64_t>(max_bidders - 1)));
    inst.book.capacity = 1 + static_cast<std::int64_t>(
                                 rng.next_below(static_cast<std::uint64_t>(n - 1)));
    inst.book.floor = static_cast<Money>(rng.next_below(20001));

    ValuationDistribution dist;
    if (rng.next_below(2) == 0) {
        Money mean = 5000 + static_cast<Money>(rng.next_below(25001));
        Money sd = 100 + static_cast<Money>(rng.next_below(10001));
        dist = NormalDist{mean, sd};
    } else {
        Money lo = static_cast<Money>(rng.next_below(15001));
        Money hi = lo + static_cast<Money>(rng.next_below(20001));
        dist = UniformDist{lo, hi};
    }
    std::vector<Money> vals =
        sample_population(dist, static_cast<std::size_t>(n), rng.next_u64());
    for (std::int64_t i = 0; i < n; ++i) {
        std::string id = "b" + std::to_string(i);
        Money v = vals[static_cast<std::size_t>(i)];
        inst.book.bids.push_back({id, v, static_cast<std::uint64_t>(i)});
        inst.valuations[id] = v;
        inst.population.emplace_back(id, v);
    }
    return inst;
}

int run_verify_theorems(const SweepOpts& opts) {
    Rng rng(opts.seed);
    std::int64_t rent_violations = 0, valuation_violations = 0, identity_violations = 0;
    for (std::int64_t i = 0; i < opts.instances; ++i) {
        SweepInstance inst = random_instance(rng, opts.max_bidders);
        AuctionOutcome mpa = clear_marginal_price(inst.book, TieBreak::chronological());
        AuctionOutcome base = clear_fcfs(inst.book);
        ExcessReport e = excess_metrics(mpa, base, inst.valuations);
        if (e.excess_rents < 0) ++rent_violations;
        if (e.excess_valuation < 0) ++valuation_violations;
        if (e.excess_consumer_surplus != e.excess_valuation - e.excess_rents)
            ++identity_violations;
    }
    std::printf("instances=%lld rent_violations=%lld valuation_violations=%lld "
                "identity_violations=%lld\n",
                static_cast<long long>(opts.instances),
                static_cast<long long>(rent_violations),
                static_cast<long long>(valuation_violations),
                static_cast<long long>(identity_violations));
    return (rent_violations + valuation_violations + identity_violations) == 0
               ? kExitOk
               : kExitViolations;
}

int run_verify_scalper(const SweepOpts& opts) {
    Rng rng(opts.seed);
    const double markups[] = {1.0, 1.1, 1.5};
    std::int64_t buyers = 0;
    for (std::int64_t i = 0; i < opts.instances; ++i) {
        SweepInstance inst = random_instance(rng, opts.max_bidders);
        AuctionOutcome mpa = clear_marginal_price(inst.book, TieBreak::chronological());
        for (double markup : markups) {
            ScalperMarket market{markup, mpa.price};
            for (const LoserReport& r :
                 check_scalper_rationality(mpa, inst.population, market))
                if (r.buys) ++buyers;
        }
    }
    std::printf("instances=%lld markups=3 losers_buying=%lld\n",
                static_cast<long long>(opts.instances), static_cast<long long>(buyers));
    return buyers == 0 ? kExitOk : kExitViolations;
}

// ----------------------------------------------------------- demo-protocol

const char* kDefaultScript = R"JSON({
  "params": {
    "floor": "20", "capacity": 3, "collateral_ratio": 1.0,
    "settlement_deadline": 10, "disclosure_enabled": true,
    "rebate_per_ticket": "0"
  },
  "actions": [
    {"op": "register", "token": "t1"}, {"op": "register", "token": "t2"},
    {"op": "register", "token": "t3"}, {"op": "register", "token": "t4"},
    {"op": "register", "token": "t5"}, {"op": "register", "token": "t6"},
    {"op": "open"},
    {"op": "bid", "token": "t1", "amount": "35", "collateral": "35"},
    {"op": "bid", "token": "t2", "amount": "15", "collateral": "15", "expect": "BelowFloor"},
    {"op": "bid", "token": "t3", "amount": "40", "collateral": "40"},
    {"op": "bid", "token": "t4", "amount": "20", "collateral": "20"},
    {"op": "bid", "token": "t5", "amount": "25", "collateral": "25"},
    {"op": "bid", "token": "t6", "amount": "20", "collateral": "20"},
    {"op": "indicative"},
    {"op": "close"},
    {"op": "settle"}
  ]
})JSON";

struct DemoOpts {
    std::string script_path;
};

// Applies one scripted action; returns the error (None on success) and a
// human-readable description of what happened.
ProtoError apply_action(ProtocolEngine& engine, const json& action, std::string& text) {
    std::string op = action.at("op").get<std::string>();
    if (op == "register") {
        std::string token = action.at("token").get<std::string>();
        auto r = engine.register_identity(token, action.value("units", std::int64_t{1}));
        text = "register " + token;
        if (r.ok()) text += r.value->verified ? " -> verified" : " -> unverified";
        return r.error;
    }
    if (op == "open") {
        auto r = engine.open_window();
        text = "open";
        if (r.ok()) text += " -> phase=open";
        return r.error;
    }
    if (op == "bid") {
        std::string token = action.at("token").get<std::string>();
        Money amount = money_from_json(action.at("amount"), "amount");
        Money collateral = money_from_json(action.at("collateral"), "collateral");
        auto r = engine.submit_bid(token, amount, collateral);
        text = "bid " + token + " amount=" + format_money(amount) +
               " collateral=" + format_money(collateral);
        if (r.ok()) text += " -> seq=" + std::to_string(*r.value);
        return r.error;
    }
    if (op == "indicative") {
        auto r = engine.disclose_indicative();
        text = "indicative";
        if (r.ok()) text += " -> " + format_money(*r.value);
        return r.error;
    }
    if (op == "close") {
        TieBreak tb = TieBreak::chronological();
        if (action.contains("tie_break")) tb = action.at("tie_break").get<TieBreak>();
        auto r = engine.close_and_clear(tb);
        text = "close";
        if (r.ok()) {
            text += " -> price=" + format_money(r.value->price) + " winners=[";
            for (std::size_t i = 0; i < r.value->winners.size(); ++i)
                text += (i ? "," : "") + r.value->winners[i];
            text += "] units_unsold=" + std::to_string(r.value->units_unsold);
        }
        return r.error;
    }
    if (op == "settle") {
        auto r = engine.settle();
        text = "settle";
        if (r.ok()) {
            for (const WinnerSettlement& w : r.value->winners) {
                text += "\n    winner " + w.token + ": refund " + format_money(w.refund) +
                        ", payment " + format_money(w.payment);
                if (w.amount_due > 0)
                    text += ", due " + format_money(w.amount_due) + " by t=" +
                            std::to_string(w.deadline);
            }
            for (const LoserSettlement& l : r.value->losers)
                text += "\n    loser " + l.token + ": refund " + format_money(l.refund);
        }
        return r.error;
    }
    if (op == "pay_due") {
        std::string token = action.at("token").get<std::string>();
        auto r = engine.post_due_payment(token);
        text = "pay_due " + token;
        if (r.ok()) text += " -> paid " + format_money(*r.value);
        return r.error;
    }
    if (op == "expire") {
        auto r = engine.expire_defaults(action.value("now", engine.now()));
        text = "expire";
        if (r.ok()) {
            text += " -> forfeited " + std::to_string(r.value->units_returned);
            for (const ForfeitureEvent& e : r.value->forfeited)
                text += "\n    " + e.token + ": due " + format_money(e.amount_due_forfeited) +
                        " dropped, retained " + format_money(e.collateral_retained);
        }
        return r.error;
    }
    throw std::invalid_argument("unknown action op: " + op);
}

int run_demo(const DemoOpts& opts) {
    json script = opts.script_path.empty() ? json::parse(kDefaultScript)
                                           : json::parse(read_file(opts.script_path));
    ProtocolParams params = script.at("params").get<ProtocolParams>();
    ProtocolEngine engine(params);

    int step = 0;
    for (const json& action : script.at("actions")) {
        ++step;
        std::string text;
        ProtoError err = apply_action(engine, action, text);
        std::string expected = action.value("expect", "");
        if (err == ProtoError::None) {
            if (!expected.empty()) {
                std::fprintf(stderr, "step %d: expected %s but the action succeeded\n",
                             step, expected.c_str());
                return kExitError;
            }
            std::printf("[%d] %s\n", step, text.c_str());
        } else {
            const char* code = to_string(err);
            if (expected == code) {
                std::printf("[%d] %s -> rejected: %s (expected)\n", step, text.c_str(), code);
            } else {
                std::fprintf(stderr, "step %d: %s -> unexpected error %s\n", step,
                             text.c_str(), code);
                return kExitError;
            }
        }
    }

    std::printf("phase: %s\n", to_string(engine.phase()));
    if (engine.outcome())
        std::printf("outcome: %s\n", json(*engine.outcome()).dump().c_str());
    std::printf("ledger:\n%s", journal_to_ndjson(engine.ledger().journal).c_str());
    std::printf("balances: %s\n", ledger_to_json(engine.ledger())["balances"].dump().c_str());
    return kExitOk;
}

// ------------------------------------------------------------------ serve

struct ServeOpts {
    std::string addr;
    int port = 0;
};

int run_serve(const ServeOpts& opts) {
    std::string addr = opts.addr;
    int port = opts.port;
    if (addr.empty()) {
        const char* env = std::getenv("MT_ADDR");
        addr = env ? env : "127.0.0.1";
    }
    if (port == 0) {
        const char* env = std::getenv("MT_PORT");
        port = env ? std::atoi(env) : 8787;
    }
    ServiceHost host;
    std::printf("listening on %s:%d\n", addr.c_str(), port);
    std::fflush(stdout);
    if (!host.run_blocking(addr, port)) {
        std::fprintf(stderr, "failed to bind %s:%d\n", addr.c_str(), port);
        return kExitError;
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"marginal-price ticket auction toolkit"};
    app.require_subcommand(1);

    int rc = kExitOk;

    AuctionOpts auction_opts;
    CLI::App* auction = app.add_subcommand("auction", "clear a bids CSV both ways");
    auction->add_option("bids", auction_opts.bids_path, "CSV: bidder_id,amount[,valuation]")
        ->required();
    auction->add_option("--floor", auction_opts.floor_text, "reserve price");
    auction->add_option("--capacity", auction_opts.capacity, "tickets for sale")
        ->check(CLI::PositiveNumber);
    auction->add_option("--tie-break", auction_opts.tie_break, "chrono|lottery")
        ->check(CLI::IsMember({"chrono", "lottery"}));
    auction->add_option("--seed", auction_opts.seed, "lottery seed");
    auction->add_option("--format", auction_opts.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    auction->add_option("--out", auction_opts.out_path, "write output to a file");
    auction->callback([&] { rc = run_auction(auction_opts); });

    SimulateOpts sim_opts;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo scenario summary");
    simulate->add_option("config", sim_opts.config_path, "scenario config JSON");
    simulate->add_option("--format", sim_opts.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    simulate->add_option("--out", sim_opts.out_path, "write output to a file");
    simulate->add_option("--seed", sim_opts.seed, "override base_seed")
        ->each([&](const std::string&) { sim_opts.seed_set = true; });
    simulate->callback([&] { rc = run_simulate(sim_opts); });

    CLI::App* verify = app.add_subcommand("verify", "game-theoretic property checks");
    verify->require_subcommand(1);

    DominanceOpts dom_opts;
    CLI::App* dominance = verify->add_subcommand(
        "dominance", "exhaustive truthful-bidding dominance check");
    dominance->add_option("--bidders", dom_opts.bidders, "bidder count (focal included)")
        ->check(CLI::Range(2, 16));
    dominance->add_option("--capacity", dom_opts.capacity, "tickets for sale")
        ->check(CLI::PositiveNumber);
    dominance->add_option("--floor", dom_opts.floor_text, "reserve price");
    dominance->add_option("--grid", dom_opts.grid_spec, "bid grid LO:HI:STEP");
    dominance->add_option("--valuation", dom_opts.valuation_text,
                          "focal valuation (default: sweep the grid)");
    dominance->add_option("--format", dom_opts.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    dominance->callback([&] { rc = run_verify_dominance(dom_opts); });

    SweepOpts theorem_opts;
    CLI::App* theorems = verify->add_subcommand(
        "theorems", "revenue/valuation ordering on random truthful markets");
    theorems->add_option("--instances", theorem_opts.instances)->check(CLI::PositiveNumber);
    theorems->add_option("--seed", theorem_opts.seed);
    theorems->add_option("--max-bidders", theorem_opts.max_bidders)->check(CLI::Range(2, 1000));
    theorems->callback([&] { rc = run_verify_theorems(theorem_opts); });

    SweepOpts scalper_opts;
    CLI::App* scalper = verify->add_subcommand(
        "scalper", "losers never profit from a marked-up resale");
    scalper->add_option("--instances", scalper_opts.instances)->check(CLI::PositiveNumber);
    scalper->add_option("--seed", scalper_opts.seed);
    scalper->add_option("--max-bidders", scalper_opts.max_bidders)->check(CLI::Range(2, 1000));
    scalper->callback([&] { rc = run_verify_scalper(scalper_opts); });

    DemoOpts demo_opts;
    CLI::App* demo = app.add_subcommand("demo-protocol", "scripted protocol session");
    demo->add_option("script", demo_opts.script_path, "action script JSON");
    demo->callback([&] { rc = run_demo(demo_opts); });

    ServeOpts serve_opts;
    CLI::App* serve = app.add_subcommand("serve", "JSON-over-HTTP service");
    serve->add_option("--addr", serve_opts.addr, "bind address (default MT_ADDR or 127.0.0.1)");
    serve->add_option("--port", serve_opts.port, "bind port (default MT_PORT or 8787)");
    serve->callback([&] { rc = run_serve(serve_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return rc;
}

} // namespace mt
