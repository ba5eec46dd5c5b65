// Acceptance gate: every release criterion in one binary. Each criterion
// prints exactly one [PASS]/[FAIL] line (indented [info] lines carry
// diagnostics); the exit code is the number of failed criteria.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "mt/dominance.hpp"
#include "mt/json_io.hpp"
#include "mt/protocol.hpp"
#include "mt/rng.hpp"
#include "mt/scalper.hpp"
#include "mt/service.hpp"
#include "mt/simulation.hpp"
#include "mt/welfare.hpp"

using namespace mt;

namespace {

struct CriterionResult {
    bool pass = false;
    std::string detail;             // appended to the verdict line
    std::vector<std::string> notes; // printed as [info] lines
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

BidBook six_bid_book(Money floor, std::int64_t capacity) {
    BidBook book;
    book.floor = floor;
    book.capacity = capacity;
    const Money amounts[] = {3500, 1500, 4000, 2000, 2500, 2000};
    for (std::uint64_t i = 0; i < 6; ++i)
        book.bids.push_back({"b" + std::to_string(i + 1), amounts[i], i});
    return book;
}

ValuationMap six_bid_valuations() {
    ValuationMap v;
    const Money amounts[] = {3500, 1500, 4000, 2000, 2500, 2000};
    for (int i = 0; i < 6; ++i) v["b" + std::to_string(i + 1)] = amounts[i];
    return v;
}

// ---------------------------------------------------------------------
// 1. Six-bid golden comparison at floor 20.00.

CriterionResult criterion_six_bid_golden() {
    CriterionResult r;
    BidBook book = six_bid_book(2000, 3);
    ValuationMap vals = six_bid_valuations();

    auto t0 = std::chrono::steady_clock::now();
    AuctionOutcome mpa = clear_marginal_price(book, TieBreak::chronological());
    AuctionOutcome base = clear_fcfs(book);
    double elapsed_ms = seconds_since(t0) * 1000.0;

    ExcessReport excess = excess_metrics(mpa, base, vals);
    bool ok = mpa.price == 2500 &&
              mpa.winners == std::vector<std::string>{"b3", "b1", "b5"} &&
              economic_rents(mpa) == 7500 &&
              base.winners == std::vector<std::string>{"b1", "b3", "b4"} &&
              economic_rents(base) == 6000 && excess.excess_rents == 1500 &&
              elapsed_ms < 1.0;
    r.pass = ok;
    r.detail = fmt("price %s, winners {b3,b1,b5}, rents %s vs %s, rent gap %s, %.3fms",
                   format_money(mpa.price).c_str(), format_money(economic_rents(mpa)).c_str(),
                   format_money(economic_rents(base)).c_str(),
                   format_money(excess.excess_rents).c_str(), elapsed_ms);
    return r;
}

// ---------------------------------------------------------------------
// 2. Same book at floor 30.00: both methods converge, one unit unsold.

CriterionResult criterion_high_floor_golden() {
    CriterionResult r;
    BidBook book = six_bid_book(3000, 3);
    AuctionOutcome mpa = clear_marginal_price(book, TieBreak::chronological());
    AuctionOutcome base = clear_fcfs(book);
    r.pass = mpa.price == 3000 && base.price == 3000 &&
             mpa.winners == std::vector<std::string>{"b1", "b3"} &&
             base.winners == std::vector<std::string>{"b1", "b3"} &&
             economic_rents(mpa) == 6000 && economic_rents(base) == 6000 &&
             mpa.units_unsold == 1;
    r.detail = fmt("price %s both, winners {b1,b3}, rents %s each, %lld unsold",
                   format_money(mpa.price).c_str(), format_money(economic_rents(mpa)).c_str(),
                   static_cast<long long>(mpa.units_unsold));
    return r;
}

// ---------------------------------------------------------------------
// 3. Monte Carlo benchmark means.

struct Band {
    double target; // whole currency units
    double tol;
};

struct BenchmarkCase {
    std::int64_t capacity;
    Band price, rents_pp, valuation_pp, surplus_pp;
    double time_limit_s;
};

struct BenchmarkOutcome {
    bool pass;
    std::string text;
};

BenchmarkOutcome run_benchmark(const BenchmarkCase& spec, Money stddev) {
    ScenarioConfig config;
    config.capacity = spec.capacity;
    config.demand_ratio = 1.5;
    config.floor = 10000;
    config.dist = NormalDist{12500, stddev};
    config.runs = 1000;
    config.base_seed = 1849;

    auto t0 = std::chrono::steady_clock::now();
    SummaryStats s = run_many(config);
    double elapsed = seconds_since(t0);

    struct Row {
        const char* name;
        double got;
        Band band;
    } rows[] = {
        {"price", s.ticket_price.mean / 100.0, spec.price},
        {"rents/person", s.excess_rents.per_person_mean / 100.0, spec.rents_pp},
        {"valuation/person", s.excess_valuation.per_person_mean / 100.0, spec.valuation_pp},
        {"surplus/person", s.excess_consumer_surplus.per_person_mean / 100.0,
         spec.surplus_pp},
    };

    bool pass = elapsed < spec.time_limit_s;
    std::ostringstream out;
    for (const Row& row : rows) {
        bool in_band = std::fabs(row.got - row.band.target) <= row.band.tol;
        pass = pass && in_band;
        out << fmt("%s %.2f %s %.2f±%.2f; ", row.name, row.got,
                   in_band ? "within" : "OUTSIDE", row.band.target, row.band.tol);
    }
    out << fmt("%.1fs/%.0fs", elapsed, spec.time_limit_s);
    return {pass, out.str()};
}

CriterionResult criterion_benchmark_means() {
    CriterionResult r;
    const BenchmarkCase cases[] = {
        {100, {111.91, 0.50}, {11.91, 0.50}, {5.42, 0.50}, {-6.49, 0.70}, 10.0},
        {1000, {111.57, 0.30}, {11.57, 0.30}, {5.54, 0.30}, {-6.03, 0.40}, 10.0},
        {10000, {111.53, 0.15}, {11.53, 0.15}, {5.56, 0.15}, {-5.98, 0.20}, 120.0},
    };

    bool all_pass = true;
    std::vector<std::string> notes;
    for (const BenchmarkCase& c : cases) {
        BenchmarkOutcome documented = run_benchmark(c, 2500);
        all_pass = all_pass && documented.pass;
        notes.push_back(fmt("K=%lld, stated dispersion 25.00: %s",
                            static_cast<long long>(c.capacity), documented.text.c_str()));
        BenchmarkOutcome corrected = run_benchmark(c, 3125);
        notes.push_back(fmt("K=%lld, diagnostic dispersion 31.25 (25%% of mean): %s -> %s",
                            static_cast<long long>(c.capacity), corrected.text.c_str(),
                            corrected.pass ? "pass" : "fail"));
    }
    r.pass = all_pass;
    r.detail = all_pass ? "all scenarios within their bands"
                        : "stated-dispersion means sit outside every band; the engine "
                          "reproduces the published table once dispersion is 25% of the "
                          "mean (see diagnostics)";
    r.notes = notes;
    return r;
}

// ---------------------------------------------------------------------
// 4. Exhaustive dominance scenarios.

CriterionResult criterion_dominance() {
    CriterionResult r;
    auto t0 = std::chrono::steady_clock::now();

    std::uint64_t checks = 0, violations = 0;
    bool witness = false;

    DominanceScenario pair;
    pair.n_bidders = 2;
    pair.capacity = 1;
    pair.floor = 0;
    for (Money v = 0; v <= 1000; v += 100) pair.grid.push_back(v);
    for (Money v : pair.grid) {
        pair.focal_valuation = v;
        DominanceVerdict verdict = check_weak_dominance(pair);
        checks += verdict.profiles_checked;
        violations += verdict.violations.size();
        witness = witness || verdict.has_strict_witness;
    }

    DominanceScenario quad;
    quad.n_bidders = 4;
    quad.capacity = 2;
    quad.floor = 0;
    quad.grid = {0, 500, 1000, 1500, 2000};
    for (Money v : quad.grid) {
        quad.focal_valuation = v;
        DominanceVerdict verdict = check_weak_dominance(quad);
        checks += verdict.profiles_checked;
        violations += verdict.violations.size();
        witness = witness || verdict.has_strict_witness;
    }

    double elapsed = seconds_since(t0);
    r.pass = violations == 0 && witness && elapsed < 30.0;
    r.detail = fmt("%llu (profile, bid) checks, %llu violations, strict witness %s, %.2fs/30s",
                   static_cast<unsigned long long>(checks),
                   static_cast<unsigned long long>(violations), witness ? "yes" : "no",
                   elapsed);
    return r;
}

// ---------------------------------------------------------------------
// 5/6/7. Random truthful market sweep: revenue/valuation ordering, scalper
// rationality, and the exact accounting identity.

struct SweepReport {
    std::int64_t instances = 0;
    std::int64_t rent_violations = 0;
    std::int64_t valuation_violations = 0;
    std::int64_t identity_violations = 0;
    std::int64_t scalper_buyers = 0;
    double elapsed_ordering = 0;
    double elapsed_scalper = 0;
};

SweepReport run_sweep(std::int64_t instances, std::uint64_t seed) {
    SweepReport report;
    report.instances = instances;
    Rng rng(seed);
    const double markups[] = {1.0, 1.1, 1.5};

    for (std::int64_t i = 0; i < instances; ++i) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(49)); // N <= 50
        std::int64_t k = 1 + static_cast<std::int64_t>(
                                 rng.next_below(static_cast<std::uint64_t>(n - 1)));
        Money floor = static_cast<Money>(rng.next_below(20001));

        ValuationDistribution dist;
        if (rng.next_below(2) == 0) {
            dist = NormalDist{5000 + static_cast<Money>(rng.next_below(25001)),
                              100 + static_cast<Money>(rng.next_below(10001))};
        } else {
            Money lo = static_cast<Money>(rng.next_below(15001));
            dist = UniformDist{lo, lo + static_cast<Money>(rng.next_below(20001))};
        }
        std::vector<Money> vals =
            sample_population(dist, static_cast<std::size_t>(n), rng.next_u64());

        BidBook book;
        book.floor = floor;
        book.capacity = k;
        ValuationMap lookup;
        std::vector<std::pair<std::string, Money>> population;
        for (std::int64_t b = 0; b < n; ++b) {
            std::string id = "b" + std::to_string(b);
            Money v = vals[static_cast<std::size_t>(b)];
            book.bids.push_back({id, v, static_cast<std::uint64_t>(b)});
            lookup[id] = v;
            population.emplace_back(id, v);
        }

        auto t0 = std::chrono::steady_clock::now();
        AuctionOutcome mpa = clear_marginal_price(book, TieBreak::chronological());
        AuctionOutcome base = clear_fcfs(book);
        ExcessReport e = excess_metrics(mpa, base, lookup);
        if (e.excess_rents < 0) ++report.rent_violations;
        if (e.excess_valuation < 0) ++report.valuation_violations;
        if (e.excess_consumer_surplus != e.excess_valuation - e.excess_rents)
            ++report.identity_violations;
        report.elapsed_ordering += seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        for (double markup : markups) {
            ScalperMarket market{markup, mpa.price};
            for (const LoserReport& lr : check_scalper_rationality(mpa, population, market))
                if (lr.buys) ++report.scalper_buyers;
        }
        report.elapsed_scalper += seconds_since(t0);
    }
    return report;
}

CriterionResult criterion_ordering(const SweepReport& sweep) {
    CriterionResult r;
    r.pass = sweep.rent_violations == 0 && sweep.valuation_violations == 0 &&
             sweep.elapsed_ordering < 10.0;
    r.detail = fmt("%lld instances, %lld rent and %lld valuation violations, %.2fs/10s",
                   static_cast<long long>(sweep.instances),
                   static_cast<long long>(sweep.rent_violations),
                   static_cast<long long>(sweep.valuation_violations),
                   sweep.elapsed_ordering);
    return r;
}

CriterionResult criterion_scalper(const SweepReport& sweep) {
    CriterionResult r;
    r.pass = sweep.scalper_buyers == 0;
    r.detail = fmt("%lld instances x markups {1.0,1.1,1.5}: %lld losers would buy, %.2fs",
                   static_cast<long long>(sweep.instances),
                   static_cast<long long>(sweep.scalper_buyers), sweep.elapsed_scalper);
    return r;
}

CriterionResult criterion_identity(const SweepReport& sweep) {
    CriterionResult r;

    // Aggregate side: a moderate scenario's summary must satisfy the same
    // identity to the cent per person.
    ScenarioConfig config;
    config.capacity = 100;
    config.demand_ratio = 1.5;
    config.floor = 10000;
    config.dist = NormalDist{12500, 3125};
    config.runs = 400;
    config.base_seed = 31337;
    SummaryStats s = run_many(config);
    double aggregate_gap =
        std::fabs(s.excess_consumer_surplus.per_person_mean -
                  (s.excess_valuation.per_person_mean - s.excess_rents.per_person_mean)) /
        100.0;

    r.pass = sweep.identity_violations == 0 && aggregate_gap <= 0.01;
    r.detail = fmt("%lld per-run identity violations; aggregate per-person gap %.6f <= 0.01",
                   static_cast<long long>(sweep.identity_violations), aggregate_gap);
    return r;
}

// ---------------------------------------------------------------------
// 8. Fuzzed protocol sessions.

CriterionResult criterion_protocol_fuzz() {
    CriterionResult r;
    Rng rng(777);
    std::int64_t sessions = 1000;
    std::int64_t violations = 0;
    std::string first_violation;

    auto note = [&](const std::string& what, int session, int step) {
        ++violations;
        if (first_violation.empty())
            first_violation = fmt("session %d step %d: %s", session, step, what.c_str());
    };

    for (int session = 0; session < sessions; ++session) {
        ProtocolParams params;
        params.floor = static_cast<Money>(rng.next_below(3000));
        params.capacity = 1 + static_cast<std::int64_t>(rng.next_below(6));
        const double ratios[] = {0.3, 0.5, 1.0};
        params.collateral_ratio = ratios[rng.next_below(3)];
        params.settlement_deadline = rng.next_below(15);
        params.disclosure_enabled = rng.next_below(2) == 0;
        params.rebate_per_ticket =
            rng.next_below(4) == 0 ? static_cast<Money>(rng.next_below(301)) : 0;
        ProtocolEngine engine(params);

        Phase prev_phase = engine.phase();
        std::optional<AuctionOutcome> frozen;
        std::optional<SettlementReport> settled;

        for (int step = 0; step < 80; ++step) {
            std::string token = "t" + std::to_string(rng.next_below(10));
            switch (rng.next_below(9)) {
                case 0:
                    engine.register_identity(token, 1 + rng.next_below(3));
                    break;
                case 1:
                    engine.open_window();
                    break;
                case 2: {
                    Money amount = static_cast<Money>(rng.next_below(6000));
                    Money collateral =
                        rng.next_below(3) == 0
                            ? engine.required_collateral(amount) // exactly enough
                            : static_cast<Money>(rng.next_below(6500));
                    auto res = engine.submit_bid(token, amount, collateral);
                    if (engine.phase() != Phase::Open && res.ok())
                        note("bid accepted outside the window", session, step);
                    break;
                }
                case 3:
                    engine.disclose_indicative();
                    break;
                case 4:
                    engine.close_and_clear(rng.next_below(2) ? TieBreak::chronological()
                                                             : TieBreak::lottery(step));
                    break;
                case 5: {
                    auto res = engine.settle();
                    if (res.ok()) settled = res.value;
                    break;
                }
                case 6:
                    engine.post_due_payment(token);
                    break;
                case 7:
                    engine.expire_defaults(engine.now() + rng.next_below(25));
                    break;
                case 8: { // a submission after closing must always bounce
                    if (engine.phase() == Phase::Cleared || engine.phase() == Phase::Settled) {
                        auto res = engine.submit_bid(token, 99999, 99999);
                        if (res.ok()) note("post-close bid accepted", session, step);
                    }
                    break;
                }
            }

            if (static_cast<int>(engine.phase()) < static_cast<int>(prev_phase))
                note("phase moved backwards", session, step);
            prev_phase = engine.phase();

            if (engine.outcome()) {
                if (!frozen) frozen = engine.outcome();
                if (frozen->price != engine.outcome()->price ||
                    frozen->winners != engine.outcome()->winners ||
                    frozen->units_unsold != engine.outcome()->units_unsold)
                    note("outcome changed after clearing", session, step);
            }

            const CollateralLedger& ledger = engine.ledger();
            if (ledger.total_deposits() != ledger.total_refunds() +
                                               ledger.total_payments() +
                                               ledger.total_balances())
                note("collateral conservation broken", session, step);
            if (ledger.replay() != ledger.balances)
                note("journal replay mismatch", session, step);
        }

        if (settled) {
            // Every fully collateralized winner paid price - rebate; losers
            // ended flat.
            Money charge = settled->price - settled->rebate_per_ticket;
            for (const WinnerSettlement& w : settled->winners) {
                if (w.amount_due == 0 && w.payment != charge)
                    note("winner payment differs from price - rebate", session, -1);
            }
            for (const LoserSettlement& l : settled->losers) {
                if (engine.ledger().balance(l.token) != 0)
                    note("loser ended with a nonzero balance", session, -1);
            }
        }
    }

    r.pass = violations == 0;
    r.detail = fmt("%lld sessions fuzzed, %lld invariant violations%s%s",
                   static_cast<long long>(sessions), static_cast<long long>(violations),
                   first_violation.empty() ? "" : "; first: ", first_violation.c_str());
    return r;
}

// ---------------------------------------------------------------------
// 9. HTTP service equivalence and concurrent bidding.

json wire_post(httplib::Client& client, const std::string& path, const json& body) {
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res) throw std::runtime_error("no response from service");
    return json::parse(res->body);
}

json wire_get(httplib::Client& client, const std::string& path) {
    auto res = client.Get(path);
    if (!res) throw std::runtime_error("no response from service");
    return json::parse(res->body);
}

CriterionResult criterion_service() {
    CriterionResult r;
    ServiceHost host;
    int port = host.start_any_port("127.0.0.1");
    if (port <= 0) {
        r.pass = false;
        r.detail = "could not bind a local port";
        return r;
    }

    bool equivalent = false;
    std::string equivalence_note;
    {
        httplib::Client client("127.0.0.1", port);
        ProtocolParams params;
        params.floor = 2000;
        params.capacity = 3;
        params.collateral_ratio = 1.0;
        params.settlement_deadline = 10;

        ProtocolEngine reference(params);
        const Money amounts[] = {3500, 1500, 4000, 2000, 2500, 2000};
        for (int i = 1; i <= 6; ++i)
            reference.register_identity("t" + std::to_string(i), 1);
        reference.open_window();
        for (int i = 0; i < 6; ++i)
            reference.submit_bid("t" + std::to_string(i + 1), amounts[i], amounts[i]);
        reference.close_and_clear(TieBreak::chronological());
        reference.settle();

        json created = wire_post(client, "/auctions", json(params));
        std::string base =
            "/auctions/" + created.at("payload").at("auction_id").get<std::string>();
        for (int i = 1; i <= 6; ++i)
            wire_post(client, base + "/identities",
                      json{{"token", "t" + std::to_string(i)}, {"units", 1}});
        wire_post(client, base + "/open", json::object());
        for (int i = 0; i < 6; ++i)
            wire_post(client, base + "/bids",
                      json{{"token", "t" + std::to_string(i + 1)},
                           {"amount", format_money(amounts[i])},
                           {"collateral", format_money(amounts[i])}});
        wire_post(client, base + "/close", json{{"tie_break", TieBreak::chronological()}});
        wire_post(client, base + "/settle", json::object());

        std::string wire_outcome = wire_get(client, base + "/outcome").at("payload").dump();
        std::string wire_ledger = wire_get(client, base + "/ledger").at("payload").dump();
        equivalent = wire_outcome == json(*reference.outcome()).dump() &&
                     wire_ledger == ledger_to_json(reference.ledger()).dump();
        equivalence_note = equivalent ? "wire outcome+ledger identical to library bytes"
                                      : "wire bytes DIVERGE from the library run";
    }

    // Concurrent flood: 1000 distinct bidders, 20 client threads.
    const int n = 1000;
    std::string base;
    {
        httplib::Client client("127.0.0.1", port);
        json created =
            wire_post(client, "/auctions", json{{"floor", "10"}, {"capacity", 100}});
        base = "/auctions/" + created.at("payload").at("auction_id").get<std::string>();
        for (int i = 0; i < n; ++i)
            wire_post(client, base + "/identities",
                      json{{"token", "c" + std::to_string(i)}, {"units", 1}});
        wire_post(client, base + "/open", json::object());
    }

    std::vector<long long> seqs(n, -1);
    std::vector<std::thread> threads;
    const int thread_count = 20;
    std::atomic<int> failures{0};
    std::atomic<int> lost_acks{0}; // bid landed, response lost on a socket race
    for (int t = 0; t < thread_count; ++t) {
        threads.emplace_back([&, t] {
            httplib::Client client("127.0.0.1", port);
            for (int i = t; i < n; i += thread_count) {
                json body{{"token", "c" + std::to_string(i)},
                          {"amount", "25.00"},
                          {"collateral", "25.00"}};
                auto res = client.Post(base + "/bids", body.dump(), "application/json");
                if (!res) // connection-reuse race: retry once on a fresh socket
                    res = client.Post(base + "/bids", body.dump(), "application/json");
                if (!res) {
                    ++failures;
                    continue;
                }
                try {
                    json parsed = json::parse(res->body);
                    if (parsed.at("status") == "ok") {
                        seqs[static_cast<std::size_t>(i)] =
                            parsed.at("payload").at("seq").get<long long>();
                    } else if (parsed.at("error_code") == "DuplicateBid") {
                        ++lost_acks; // first attempt was accepted, ack got lost
                    } else {
                        ++failures;
                    }
                } catch (const std::exception&) {
                    ++failures;
                }
            }
        });
    }
    for (auto& t : threads) t.join();

    std::set<long long> unique_seqs;
    for (long long s : seqs)
        if (s >= 0) unique_seqs.insert(s);
    std::size_t acked = 0;
    for (long long s : seqs) acked += s >= 0;
    bool seqs_ok = failures == 0 &&
                   unique_seqs.size() == acked && // every observed seq distinct
                   acked + static_cast<std::size_t>(lost_acks) ==
                       static_cast<std::size_t>(n) &&
                   (unique_seqs.empty() || *unique_seqs.rbegin() < n);

    // The ledger is the authority for exactly-once acceptance: 1000 bids of
    // 25.00 must be held in escrow, no more, no less.
    Money held = 0;
    {
        httplib::Client client("127.0.0.1", port);
        json ledger = wire_get(client, base + "/ledger").at("payload");
        for (const auto& [token, bal] : ledger.at("balances").items()) {
            (void)token;
            held += *parse_money(bal.get<std::string>());
        }
    }
    bool conserved = held == Money{2500} * n;

    host.stop();
    r.pass = equivalent && seqs_ok && conserved;
    r.detail = fmt("%s; %d concurrent bids -> %zu distinct seqs, %d transport losses, "
                   "%d failures, held %s",
                   equivalence_note.c_str(), n, unique_seqs.size(), lost_acks.load(),
                   failures.load(), format_money(held).c_str());
    return r;
}

} // namespace

int main() {
    int failures = 0;
    int index = 0;
    auto run = [&](const char* name, const std::function<CriterionResult()>& fn) {
        ++index;
        CriterionResult result;
        try {
            result = fn();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %d %s: %s\n", result.pass ? "PASS" : "FAIL", index, name,
                    result.detail.c_str());
        for (const std::string& note : result.notes)
            std::printf("[info]    %s\n", note.c_str());
        if (!result.pass) ++failures;
    };

    SweepReport sweep = run_sweep(10000, 90210);

    run("six-bid golden comparison", criterion_six_bid_golden);
    run("high-floor golden comparison", criterion_high_floor_golden);
    run("benchmark means, 1000 seeded runs", criterion_benchmark_means);
    run("exhaustive truthful dominance", criterion_dominance);
    run("revenue/valuation ordering on 10k random markets",
        [&] { return criterion_ordering(sweep); });
    run("no loser buys from a scalper", [&] { return criterion_scalper(sweep); });
    run("surplus identity holds to the cent", [&] { return criterion_identity(sweep); });
    run("fuzzed protocol sessions stay sound", criterion_protocol_fuzz);
    run("HTTP service equivalence and concurrency", criterion_service);

    std::printf("acceptance: %d/%d criteria passed\n", index - failures, index);
    return failures;
}
