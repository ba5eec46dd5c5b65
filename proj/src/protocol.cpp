#include "mt/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace mt {

const char* to_string(Phase phase) {
    switch (phase) {
        case Phase::Announced: return "announced";
        case Phase::Open: return "open";
        case Phase::Closed: return "closed";
        case Phase::Cleared: return "cleared";
        case Phase::Settled: return "settled";
    }
    return "?";
}

const char* to_string(ProtoError error) {
    switch (error) {
        case ProtoError::None: return "None";
        case ProtoError::WrongPhase: return "WrongPhase";
        case ProtoError::DuplicateIdentity: return "DuplicateIdentity";
        case ProtoError::InvalidUnits: return "InvalidUnits";
        case ProtoError::UnverifiedIdentity: return "UnverifiedIdentity";
        case ProtoError::WindowClosed: return "WindowClosed";
        case ProtoError::BelowFloor: return "BelowFloor";
        case ProtoError::InsufficientCollateral: return "InsufficientCollateral";
        case ProtoError::DuplicateBid: return "DuplicateBid";
        case ProtoError::DisclosureDisabled: return "DisclosureDisabled";
        case ProtoError::RebateOutOfRange: return "RebateOutOfRange";
        case ProtoError::UnknownToken: return "UnknownToken";
        case ProtoError::NothingDue: return "NothingDue";
    }
    return "?";
}

const char* to_string(JournalEntry::Kind kind) {
    switch (kind) {
        case JournalEntry::Kind::Deposit: return "deposit";
        case JournalEntry::Kind::Refund: return "refund";
        case JournalEntry::Kind::Payment: return "payment";
    }
    return "?";
}

void CollateralLedger::post(JournalEntry::Kind kind, const std::string& token,
                            Money amount, std::uint64_t t) {
    if (amount < 0) throw std::invalid_argument("journal amounts must be >= 0");
    JournalEntry e;
    e.seq = journal.size();
    e.t = t;
    e.kind = kind;
    e.token = token;
    e.amount = amount;
    Money& bal = balances[token];
    if (kind == JournalEntry::Kind::Deposit) {
        bal += amount;
    } else {
        if (bal < amount) throw std::logic_error("ledger balance would go negative");
        bal -= amount;
    }
    journal.push_back(std::move(e));
}

Money CollateralLedger::balance(const std::string& token) const {
    auto it = balances.find(token);
    return it == balances.end() ? 0 : it->second;
}

namespace {
Money sum_kind(const std::vector<JournalEntry>& journal, JournalEntry::Kind kind) {
    Money sum = 0;
    for (const JournalEntry& e : journal)
        if (e.kind == kind) sum += e.amount;
    return sum;
}
} // namespace

Money CollateralLedger::total_deposits() const {
    return sum_kind(journal, JournalEntry::Kind::Deposit);
}
Money CollateralLedger::total_refunds() const {
    return sum_kind(journal, JournalEntry::Kind::Refund);
}
Money CollateralLedger::total_payments() const {
    return sum_kind(journal, JournalEntry::Kind::Payment);
}
Money CollateralLedger::total_balances() const {
    Money sum = 0;
    for (const auto& [token, bal] : balances) sum += bal;
    return sum;
}

std::unordered_map<std::string, Money> CollateralLedger::replay() const {
    std::unordered_map<std::string, Money> out;
    for (const JournalEntry& e : journal) {
        Money& bal = out[e.token];
        bal += e.kind == JournalEntry::Kind::Deposit ? e.amount : -e.amount;
    }
    return out;
}

ProtocolEngine::ProtocolEngine(ProtocolParams params, IdentityVerifier verifier)
    : params_(params), verifier_(std::move(verifier)) {
    if (params_.floor < 0) throw std::invalid_argument("floor must be >= 0");
    if (params_.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (!(params_.collateral_ratio > 0.0) || params_.collateral_ratio > 1.0)
        throw std::invalid_argument("collateral_ratio must be in (0, 1]");
    if (params_.rebate_per_ticket < 0)
        throw std::invalid_argument("rebate must be >= 0");
    book_.floor = params_.floor;
    book_.capacity = params_.capacity;
}

std::int64_t ProtocolEngine::unsold_after_defaults() const {
    if (!outcome_) return 0;
    return outcome_->units_unsold + forfeited_units_;
}

Money ProtocolEngine::required_collateral(Money amount) const {
    // Smallest integer amount of cents covering ratio * amount. The epsilon
    // absorbs binary representation error in exact products such as
    // 0.4 * 12000.
    double exact = params_.collateral_ratio * static_cast<double>(amount);
    return static_cast<Money>(std::ceil(exact - 1e-7));
}

Result<IdentityRecord> ProtocolEngine::register_identity(const std::string& token,
                                                         std::int64_t requested_units) {
    using R = Result<IdentityRecord>;
    if (phase_ != Phase::Announced && phase_ != Phase::Open)
        return R::failure(ProtoError::WrongPhase);
    if (requested_units < 1) return R::failure(ProtoError::InvalidUnits);
    if (registry_.count(token)) return R::failure(ProtoError::DuplicateIdentity);

    IdentityRecord rec;
    rec.verified = verifier_ ? verifier_(token) : true;
    rec.max_units = requested_units;
    registry_.emplace(token, rec);
    tick();
    return R::success(rec);
}

Result<Phase> ProtocolEngine::open_window() {
    using R = Result<Phase>;
    if (phase_ != Phase::Announced) return R::failure(ProtoError::WrongPhase);
    phase_ = Phase::Open;
    tick();
    return R::success(phase_);
}

Result<std::uint64_t> ProtocolEngine::submit_bid(const std::string& token,
                                                 Money amount, Money collateral) {
    using R = Result<std::uint64_t>;
    if (phase_ != Phase::Open) return R::failure(ProtoError::WindowClosed);
    auto it = registry_.find(token);
    if (it == registry_.end() || !it->second.verified)
        return R::failure(ProtoError::UnverifiedIdentity);
    if (it->second.has_active_bid) return R::failure(ProtoError::DuplicateBid);
    if (amount < params_.floor) return R::failure(ProtoError::BelowFloor);
    if (collateral < required_collateral(amount))
        return R::failure(ProtoError::InsufficientCollateral);

    std::uint64_t seq = book_.bids.size();
    std::uint64_t t = tick();
    book_.bids.push_back({token, amount, seq});
    it->second.has_active_bid = true;
    ledger_.post(JournalEntry::Kind::Deposit, token, collateral, t);
    return R::success(seq);
}

Result<Money> ProtocolEngine::disclose_indicative() const {
    using R = Result<Money>;
    if (phase_ != Phase::Open) return R::failure(ProtoError::WrongPhase);
    if (!params_.disclosure_enabled) return R::failure(ProtoError::DisclosureDisabled);
    return R::success(indicative_price(book_));
}

Result<AuctionOutcome> ProtocolEngine::close_and_clear(const TieBreak& tie_break) {
    using R = Result<AuctionOutcome>;
    if (phase_ != Phase::Open) return R::failure(ProtoError::WrongPhase);
    phase_ = Phase::Closed;
    outcome_ = clear_marginal_price(book_, tie_break);
    phase_ = Phase::Cleared;
    tick();
    return R::success(*outcome_);
}

Result<SettlementReport> ProtocolEngine::settle() {
    using R = Result<SettlementReport>;
    if (phase_ != Phase::Cleared) return R::failure(ProtoError::WrongPhase);
    const Money price = outcome_->price;
    const Money rebate = params_.rebate_per_ticket;
    // price >= floor always holds, so a zero rebate always passes.
    if (rebate > price - params_.floor)
        return R::failure(ProtoError::RebateOutOfRange);

    std::uint64_t t = tick();
    SettlementReport report;
    report.price = price;
    report.rebate_per_ticket = rebate;

    // Winners are charged price - rebate against their collateral.
    const Money charge = price - rebate;
    for (const std::string& token : outcome_->winners) {
        WinnerSettlement w;
        w.token = token;
        Money posted = ledger_.balance(token);
        if (posted >= charge) {
            w.refund = posted - charge;
            w.payment = charge;
            if (w.refund > 0) ledger_.post(JournalEntry::Kind::Refund, token, w.refund, t);
            if (w.payment > 0) ledger_.post(JournalEntry::Kind::Payment, token, w.payment, t);
        } else {
            w.payment = posted;
            w.amount_due = charge - posted;
            w.deadline = t + params_.settlement_deadline;
            if (w.payment > 0) ledger_.post(JournalEntry::Kind::Payment, token, w.payment, t);
            dues_[token] = DueRecord{w.amount_due, w.deadline, posted, false};
        }
        report.winners.push_back(std::move(w));
    }

    // Losers get their full collateral back, in submission order.
    std::unordered_set<std::string> winner_set(outcome_->winners.begin(),
                                               outcome_->winners.end());
    for (const Bid& b : book_.bids) {
        if (winner_set.count(b.bidder_id)) continue;
        LoserSettlement l;
        l.token = b.bidder_id;
        l.refund = ledger_.balance(b.bidder_id);
        if (l.refund > 0)
            ledger_.post(JournalEntry::Kind::Refund, b.bidder_id, l.refund, t);
        report.losers.push_back(std::move(l));
    }

    settlement_ = report;
    phase_ = Phase::Settled;
    return R::success(*settlement_);
}

Result<Money> ProtocolEngine::post_due_payment(const std::string& token) {
    using R = Result<Money>;
    if (phase_ != Phase::Settled) return R::failure(ProtoError::WrongPhase);
    auto it = dues_.find(token);
    if (it == dues_.end()) return R::failure(ProtoError::UnknownToken);
    if (it->second.defaulted || it->second.amount == 0)
        return R::failure(ProtoError::NothingDue);

    Money due = it->second.amount;
    std::uint64_t t = tick();
    // New funds arrive and are applied immediately.
    ledger_.post(JournalEntry::Kind::Deposit, token, due, t);
    ledger_.post(JournalEntry::Kind::Payment, token, due, t);
    it->second.amount = 0;
    return R::success(due);
}

Result<ForfeitureReport> ProtocolEngine::expire_defaults(std::uint64_t now) {
    using R = Result<ForfeitureReport>;
    if (phase_ != Phase::Settled) return R::failure(ProtoError::WrongPhase);

    ForfeitureReport report;
    // Deterministic order: walk winners as allocated, not the hash map.
    for (const std::string& token : outcome_->winners) {
        auto it = dues_.find(token);
        if (it == dues_.end()) continue;
        DueRecord& due = it->second;
        if (due.defaulted || due.amount == 0 || now <= due.deadline) continue;
        due.defaulted = true;
        ++forfeited_units_;
        report.forfeited.push_back({token, due.amount, due.collected});
        due.amount = 0;
    }
    report.units_returned = static_cast<std::int64_t>(report.forfeited.size());
    if (!report.forfeited.empty()) tick();
    return R::success(report);
}

} // namespace mt
